#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <initializer_list>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace zipchow::zlinalg {

using Integer = mpz_class;

inline constexpr std::size_t kDefaultMatrixCap = 2000;

/// Dense row-major integer matrix.
class IntMatrix {
public:
  IntMatrix() = default;
  IntMatrix(std::size_t rows, std::size_t cols)
      : rows_(rows), cols_(cols), data_(rows * cols) {}
  IntMatrix(std::initializer_list<std::initializer_list<long>> rows);

  static IntMatrix identity(std::size_t n);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool empty() const { return rows_ == 0 || cols_ == 0; }

  Integer &operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const Integer &operator()(std::size_t r, std::size_t c) const {
    return data_[r * cols_ + c];
  }

  /// Appends a row; the first row of a 0x0 matrix fixes the column count.
  void append_row(const std::vector<Integer> &row);

  void swap_rows(std::size_t a, std::size_t b);
  void swap_cols(std::size_t a, std::size_t b);
  /// row[dst] += k * row[src]
  void add_row_multiple(std::size_t dst, std::size_t src, const Integer &k);
  /// col[dst] += k * col[src]
  void add_col_multiple(std::size_t dst, std::size_t src, const Integer &k);
  void negate_row(std::size_t r);

  friend bool operator==(const IntMatrix &, const IntMatrix &) = default;

  std::string to_string() const;

private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Integer> data_;
};

IntMatrix operator*(const IntMatrix &a, const IntMatrix &b);

class MatrixCapExceeded : public std::runtime_error {
public:
  MatrixCapExceeded(std::size_t rows, std::size_t cols, std::size_t cap);
};

struct SmithCertificate {
  IntMatrix left;  // U, rows x rows
  IntMatrix right; // V, cols x cols
};

struct SmithForm {
  /// d_1 | d_2 | ... | d_k, all positive.
  std::vector<Integer> invariants;
  std::optional<SmithCertificate> certificate;

  std::size_t rank() const { return invariants.size(); }
};

/// Invariant factors of m. With want_certificate, also returns unimodular U, V
/// with U * m * V = diag(invariants) (padded with zeros).
SmithForm smith_normal_form(const IntMatrix &m, bool want_certificate = false,
                            std::size_t cap = kDefaultMatrixCap);

struct AbelianGroup {
  std::size_t free_rank = 0;
  /// Divisibility chain, entries >= 2.
  std::vector<Integer> torsion;

  friend bool operator==(const AbelianGroup &, const AbelianGroup &) = default;
};

/// Z^ambient_rank modulo the row lattice of m.
AbelianGroup cokernel(const IntMatrix &m, std::size_t ambient_rank,
                      std::size_t cap = kDefaultMatrixCap);

/// Rank over Q, by integer row echelon reduction.
std::size_t rational_rank(const IntMatrix &m);

/// "Z^2 + Z/2 + Z/8"; the trivial group prints as "0".
std::string to_string(const AbelianGroup &g);

} // namespace zipchow::zlinalg
