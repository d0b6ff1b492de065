#pragma once

#include "zipchow/intpoly.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <variant>
#include <vector>

namespace zipchow::weyl {

using intpoly::Integer;
using intpoly::Monomial;
using intpoly::Poly;

enum class GroupKind { GL, Sp };

/// GL(h) has rank h; Sp(2n) has rank n.
struct GroupSpec {
  GroupKind kind = GroupKind::GL;
  int rank = 1;

  static GroupSpec gl(int h) { return {GroupKind::GL, h}; }
  static GroupSpec sp(int n) { return {GroupKind::Sp, n}; }

  friend bool operator==(const GroupSpec &, const GroupSpec &) = default;
};

/// Ordered block sizes (n1, ..., nr) of a standard Levi in GL(h).
struct Composition {
  std::vector<int> blocks;
  friend bool operator==(const Composition &, const Composition &) = default;
};

enum class SpParabolic { Borel, Siegel };

using LeviSpec = std::variant<Composition, SpParabolic>;

struct ZipDatum {
  GroupSpec group;
  LeviSpec levi;
  std::int64_t q = 1;
  std::optional<std::int64_t> p;

  friend bool operator==(const ZipDatum &, const ZipDatum &) = default;
};

/// Throws std::invalid_argument describing the first violated constraint.
void validate(const GroupSpec &g);
void validate(const GroupSpec &g, const LeviSpec &l);
void validate(const ZipDatum &z);

bool is_prime(std::int64_t n);

/// The GL(h) datum of a truncated display of dimension d: composition
/// (d, h-d) with empty blocks dropped.
Composition display_composition(int h, int d);

std::string to_string(GroupKind k);
std::string to_string(SpParabolic sp);
std::string describe(const GroupSpec &g);
std::string describe(const LeviSpec &l);

/// Sizes of the consecutive variable blocks permuted by W_L. Both supported
/// groups have W_L a product of symmetric groups acting on t1..tn.
std::vector<int> levi_blocks(const GroupSpec &g, const LeviSpec &l);

struct InvariantGenerator {
  Poly poly;
  int degree = 0;
  std::string label;
};

/// Generators of S^{W_G}: c_1..c_h for GL(h); c_1(t^2)..c_n(t^2) for Sp(2n).
std::vector<InvariantGenerator> invariant_generators(const GroupSpec &g);

/// Orbit-sum basis of the degree-d part of S^{W_L}, ordered by descending
/// canonical order of each orbit's leading monomial.
std::vector<Poly> invariant_basis(const GroupSpec &g, const LeviSpec &l,
                                  int degree);

/// Leading monomials of the invariant_basis orbits, same order.
std::vector<Monomial> orbit_representatives(const GroupSpec &g,
                                            const LeviSpec &l, int degree);

/// Sorts exponents within each W_L block into nonincreasing order, giving the
/// leading monomial of the orbit of m.
Monomial orbit_leader(const Monomial &m, const std::vector<int> &blocks);

/// Number of W_L-orbits of degree-d monomials, by partition counting.
std::uint64_t invariant_basis_size(const GroupSpec &g, const LeviSpec &l,
                                   int degree);

/// |W_G| / |W_L|.
Integer coset_count(const GroupSpec &g, const LeviSpec &l);

/// dim G/P: top degree of the rational coinvariant quotient.
int top_degree_bound(const GroupSpec &g, const LeviSpec &l);

/// Degrees of the fundamental invariants of W_G and W_L.
std::vector<int> weyl_degrees(const GroupSpec &g);
std::vector<int> levi_degrees(const GroupSpec &g, const LeviSpec &l);

/// Poincare polynomial of W_L \ W_G, coefficients a_0..a_N.
std::vector<std::int64_t> rational_rank_series(const GroupSpec &g,
                                               const LeviSpec &l);

/// A Coxeter-style generator of a Weyl group action on S: a variable
/// permutation, optionally followed by a sign flip of one variable.
struct WeylGenerator {
  std::vector<std::size_t> permutation;
  std::optional<std::size_t> sign_flip;
};

Poly act(const WeylGenerator &w, const Poly &p);

/// Adjacent transpositions inside each Levi block.
std::vector<WeylGenerator> levi_weyl_generators(const GroupSpec &g,
                                                const LeviSpec &l);
/// Adjacent transpositions of all variables, plus t_n -> -t_n for Sp.
std::vector<WeylGenerator> weyl_generators(const GroupSpec &g);

} // namespace zipchow::weyl
