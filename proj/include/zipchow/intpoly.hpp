#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <cstdint>
#include <functional>
#include <map>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace zipchow::intpoly {

using Integer = mpz_class;

/// Exponent vector over the torus variables t1..tn. The length is the
/// variable count and never changes after construction.
class Monomial {
public:
  Monomial() = default;
  explicit Monomial(std::size_t nvars) : exps_(nvars, 0) {}
  explicit Monomial(std::vector<std::uint32_t> exps) : exps_(std::move(exps)) {}

  std::size_t nvars() const { return exps_.size(); }
  std::uint32_t degree() const;
  std::uint32_t operator[](std::size_t i) const { return exps_[i]; }
  std::uint32_t &operator[](std::size_t i) { return exps_[i]; }
  std::span<const std::uint32_t> exponents() const { return exps_; }

  Monomial operator*(const Monomial &other) const;

  friend bool operator==(const Monomial &, const Monomial &) = default;

  std::string to_string() const;

private:
  std::vector<std::uint32_t> exps_;
};

/// Graded reverse lexicographic comparison: true iff a > b.
bool grevlex_greater(const Monomial &a, const Monomial &b);

struct GrevlexDescending {
  bool operator()(const Monomial &a, const Monomial &b) const {
    return grevlex_greater(a, b);
  }
};

class VariableCountMismatch : public std::invalid_argument {
public:
  VariableCountMismatch(std::size_t lhs, std::size_t rhs);
};

/// Polynomial in Z[t1..tn]. Terms are kept in descending grevlex order with
/// no zero coefficients, so equality of Polys is equality of term maps.
class Poly {
public:
  using TermMap = std::map<Monomial, Integer, GrevlexDescending>;

  Poly() = default;
  explicit Poly(std::size_t nvars) : nvars_(nvars) {}

  static Poly constant(const Integer &c, std::size_t nvars);
  /// The variable t_{index+1}.
  static Poly variable(std::size_t index, std::size_t nvars);
  static Poly monomial(const Monomial &m, const Integer &c = 1);

  std::size_t nvars() const { return nvars_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t term_count() const { return terms_.size(); }
  const TermMap &terms() const { return terms_; }

  /// Maximal total degree; -1 for the zero polynomial.
  int degree() const;
  bool is_homogeneous() const;
  Integer coefficient(const Monomial &m) const;
  /// Leading (grevlex-greatest) term. Requires a nonzero Poly.
  const TermMap::value_type &leading_term() const;

  void add_term(const Monomial &m, const Integer &c);

  Poly operator-() const;
  Poly &operator+=(const Poly &other);
  Poly &operator-=(const Poly &other);
  Poly &operator*=(const Integer &c);

  friend bool operator==(const Poly &a, const Poly &b) {
    return a.nvars_ == b.nvars_ && a.terms_ == b.terms_;
  }

  /// Canonical text form, e.g. "2*t1^2 + 2*t1*t2". Zero prints as "0".
  /// With index_variables=false every variable prints as the bare prefix,
  /// which is only meaningful in one variable ("12*t").
  std::string to_string(std::string_view var_prefix = "t",
                        bool index_variables = true) const;

private:
  std::size_t nvars_ = 0;
  TermMap terms_;
};

Poly add(const Poly &p, const Poly &q);
Poly subtract(const Poly &p, const Poly &q);
Poly multiply(const Poly &p, const Poly &q);
Poly scale(const Poly &p, const Integer &c);

inline Poly operator+(const Poly &p, const Poly &q) { return add(p, q); }
inline Poly operator-(const Poly &p, const Poly &q) { return subtract(p, q); }
inline Poly operator*(const Poly &p, const Poly &q) { return multiply(p, q); }
inline Poly operator*(const Integer &c, const Poly &p) { return scale(p, c); }

/// e_k(t1..tn). Throws std::out_of_range unless 0 <= k <= n.
Poly elementary_symmetric(int k, int n);

/// e_k(t1^2..tn^2), homogeneous of degree 2k.
Poly elementary_symmetric_squares(int k, int n);

/// Substitution t_i -> q*t_i: a degree-d term is scaled by q^d.
Poly frobenius_twist(const Poly &p, const Integer &q);

/// t_i -> t_{perm[i]}; perm must be a permutation of 0..n-1.
Poly permute_variables(const Poly &p, std::span<const std::size_t> perm);

/// t_i -> -t_i for the given variable index.
Poly negate_variable(const Poly &p, std::size_t index);

/// Substitutes t_i -> images[i] (images all in the same target ring).
Poly substitute(const Poly &p, std::span<const Poly> images);

/// Parses the canonical text form back into a Poly over nvars variables.
/// Accepts any term order and whitespace; throws std::invalid_argument.
Poly parse_poly(std::string_view text, std::size_t nvars,
                std::string_view var_prefix = "t");

Integer ipow(const Integer &base, unsigned long exp);

} // namespace zipchow::intpoly
