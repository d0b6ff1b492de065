#pragma once

#include "zipchow/intpoly.hpp"
#include "zipchow/weyl.hpp"
#include "zipchow/zlinalg.hpp"

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace zipchow {

using intpoly::Integer;
using intpoly::Poly;
using weyl::GroupSpec;
using weyl::LeviSpec;
using weyl::ZipDatum;
using zlinalg::AbelianGroup;

struct ComputeOptions {
  std::size_t matrix_cap = zlinalg::kDefaultMatrixCap;
};

/// Per-degree abelian groups A^0 .. A^max_degree.
struct GradedAbelianGroup {
  std::vector<AbelianGroup> degrees;

  int max_degree() const { return static_cast<int>(degrees.size()) - 1; }
  const AbelianGroup &at(int d) const { return degrees.at(static_cast<std::size_t>(d)); }

  friend bool operator==(const GradedAbelianGroup &,
                         const GradedAbelianGroup &) = default;
};

struct Relation {
  Poly poly;
  int degree = 0;
  /// q^e - 1
  Integer coefficient;
  /// Name of the W_G generator f, e.g. "c2" or "c1(t^2)".
  std::string generator;

  friend bool operator==(const Relation &, const Relation &) = default;
};

/// A consecutive run of torus variables permuted by one factor of W_L.
struct LeviBlock {
  std::size_t first_variable = 0; // 0-based
  int size = 0;
  /// Degrees of the block's invariant generators (elementary symmetric
  /// functions of the block's variables).
  std::vector<int> generator_degrees;
  /// Bundle whose Chern roots are the block's variables, when one is named.
  std::string chern_label;

  friend bool operator==(const LeviBlock &, const LeviBlock &) = default;
};

struct ChowPresentation {
  std::size_t variable_count = 0;
  std::vector<LeviBlock> blocks;
  std::vector<Relation> relations;
  std::vector<std::string> notes;

  /// "Z[t1,t2]^(S1 x S1) / (2*t1 + 2*t2, 8*t1*t2)"
  std::string summary() const;

  friend bool operator==(const ChowPresentation &,
                         const ChowPresentation &) = default;
};

struct CheckResult {
  std::string name;
  bool passed = false;
  std::string detail;

  friend bool operator==(const CheckResult &, const CheckResult &) = default;
};

struct ChowReport {
  ZipDatum datum;
  ChowPresentation presentation;
  GradedAbelianGroup graded;
  AbelianGroup picard;
  /// Absent when q = 1 (the rational quotient is infinite-dimensional).
  std::optional<Integer> rational_dimension;
  Integer orbit_count;
  int top_degree_bound = 0;
  std::vector<CheckResult> checks;

  friend bool operator==(const ChowReport &, const ChowReport &) = default;
};

/// (q^e - 1) * f for each W_G invariant generator f of degree e; empty when
/// q = 1.
std::vector<Relation> relations(const ZipDatum &z);

ChowPresentation present(const ZipDatum &z);

/// A^d = S^{W_L}_d / I_d for d = 0..max_degree, with I_d spanned by b * g for
/// relations g and orbit-sum basis elements b of complementary degree.
GradedAbelianGroup graded_chow(const ZipDatum &z, int max_degree,
                               const ComputeOptions &opts = {});

/// Same computation for an explicit list of homogeneous W_L-invariant
/// relations.
GradedAbelianGroup graded_chow(const GroupSpec &g, const LeviSpec &l,
                               const std::vector<Poly> &relations,
                               int max_degree, const ComputeOptions &opts = {});

AbelianGroup picard(const ZipDatum &z, const ComputeOptions &opts = {});

/// Total rational dimension. Throws std::domain_error for q = 1.
Integer q_dimension(const ZipDatum &z, const ComputeOptions &opts = {});

/// max_degree < 0 selects the top degree bound.
ChowReport chow_report(const ZipDatum &z, int max_degree = -1,
                       const ComputeOptions &opts = {});

/// F-zip type: support label i -> tau(i) > 0. Blocks are ordered by label.
using FZipType = std::map<int, int>;

/// Report for GL(h) with the composition of tau and q = p, including checks
/// on the Picard group, the rational dimension and, for support {0,1}, the
/// comparison with the display report of type (h, tau(1)).
ChowReport fzip_report(const FZipType &tau, std::int64_t p, int max_degree = -1,
                       const ComputeOptions &opts = {});

/// Truncated display datum of height h and dimension d: GL(h), composition
/// (d, h-d), q = p.
ZipDatum display_datum(int h, int d, std::int64_t p);

struct LocalizedReport {
  std::int64_t prime = 0;
  GradedAbelianGroup degrees;

  friend bool operator==(const LocalizedReport &,
                         const LocalizedReport &) = default;
};

/// Removes every p-power factor from the torsion; free ranks are unchanged.
AbelianGroup localize(const AbelianGroup &g, std::int64_t p);
LocalizedReport localize(const GradedAbelianGroup &g, std::int64_t p);

struct BtReport {
  int height = 0;
  int dimension = 0;
  int level = 1;
  LocalizedReport localized;
};

/// A^*(BT_n^{h,d}) with p inverted. The level only appears as metadata.
BtReport bt_report(int h, int d, int level, std::int64_t p, int max_degree = -1,
                   const ComputeOptions &opts = {});

struct M11Image {
  std::string relation;
  /// Image under t1 -> -t, t2 -> t.
  std::string image;
  /// Image reduced modulo the ideal (12t).
  std::string reduced;
  bool in_ideal = false;
};

struct M11Certificate {
  std::int64_t prime = 0;
  bool compatible = false;
  std::vector<M11Image> images;
};

/// Whether Z[t1,t2]/((p-1)c1, (p^2-1)c2) -> Z[t]/(12t), t1 -> -t, t2 -> t,
/// is well defined.
M11Certificate m11_compatibility(std::int64_t p);

} // namespace zipchow
