#include "zipchow/intpoly.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>
#include <sstream>

namespace zipchow::intpoly {

std::uint32_t Monomial::degree() const {
  return std::accumulate(exps_.begin(), exps_.end(), std::uint32_t{0});
}

Monomial Monomial::operator*(const Monomial &other) const {
  if (nvars() != other.nvars())
    throw VariableCountMismatch(nvars(), other.nvars());
  Monomial out(*this);
  for (std::size_t i = 0; i < exps_.size(); ++i)
    out.exps_[i] += other.exps_[i];
  return out;
}

std::string Monomial::to_string() const {
  std::ostringstream os;
  bool first = true;
  for (std::size_t i = 0; i < exps_.size(); ++i) {
    if (exps_[i] == 0)
      continue;
    if (!first)
      os << '*';
    first = false;
    os << 't' << (i + 1);
    if (exps_[i] > 1)
      os << '^' << exps_[i];
  }
  return first ? std::string("1") : os.str();
}

bool grevlex_greater(const Monomial &a, const Monomial &b) {
  auto da = a.degree(), db = b.degree();
  if (da != db)
    return da > db;
  // Same degree: a > b iff the last nonzero entry of a - b is negative.
  for (std::size_t i = a.nvars(); i-- > 0;) {
    if (a[i] != b[i])
      return a[i] < b[i];
  }
  return false;
}

VariableCountMismatch::VariableCountMismatch(std::size_t lhs, std::size_t rhs)
    : std::invalid_argument("variable count mismatch: " + std::to_string(lhs) +
                            " vs " + std::to_string(rhs)) {}

Poly Poly::constant(const Integer &c, std::size_t nvars) {
  Poly p(nvars);
  p.add_term(Monomial(nvars), c);
  return p;
}

Poly Poly::variable(std::size_t index, std::size_t nvars) {
  if (index >= nvars)
    throw std::out_of_range("variable index out of range");
  Monomial m(nvars);
  m[index] = 1;
  return monomial(m);
}

Poly Poly::monomial(const Monomial &m, const Integer &c) {
  Poly p(m.nvars());
  p.add_term(m, c);
  return p;
}

int Poly::degree() const {
  if (terms_.empty())
    return -1;
  // Grevlex is degree-compatible, so the first term has maximal degree.
  return static_cast<int>(terms_.begin()->first.degree());
}

bool Poly::is_homogeneous() const {
  if (terms_.empty())
    return true;
  auto d = terms_.begin()->first.degree();
  return std::all_of(terms_.begin(), terms_.end(),
                     [d](const auto &t) { return t.first.degree() == d; });
}

Integer Poly::coefficient(const Monomial &m) const {
  auto it = terms_.find(m);
  return it == terms_.end() ? Integer(0) : it->second;
}

const Poly::TermMap::value_type &Poly::leading_term() const {
  if (terms_.empty())
    throw std::logic_error("leading term of zero polynomial");
  return *terms_.begin();
}

void Poly::add_term(const Monomial &m, const Integer &c) {
  if (m.nvars() != nvars_)
    throw VariableCountMismatch(nvars_, m.nvars());
  if (c == 0)
    return;
  auto [it, inserted] = terms_.try_emplace(m, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0)
      terms_.erase(it);
  }
}

Poly Poly::operator-() const {
  Poly out(*this);
  for (auto &[m, c] : out.terms_)
    c = -c;
  return out;
}

Poly &Poly::operator+=(const Poly &other) {
  if (nvars_ != other.nvars_)
    throw VariableCountMismatch(nvars_, other.nvars_);
  for (const auto &[m, c] : other.terms_)
    add_term(m, c);
  return *this;
}

Poly &Poly::operator-=(const Poly &other) {
  if (nvars_ != other.nvars_)
    throw VariableCountMismatch(nvars_, other.nvars_);
  for (const auto &[m, c] : other.terms_)
    add_term(m, -c);
  return *this;
}

Poly &Poly::operator*=(const Integer &c) {
  if (c == 0) {
    terms_.clear();
    return *this;
  }
  for (auto &[m, coeff] : terms_)
    coeff *= c;
  return *this;
}

std::string Poly::to_string(std::string_view var_prefix,
                            bool index_variables) const {
  if (terms_.empty())
    return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto &[m, c] : terms_) {
    Integer mag = abs(c);
    if (first) {
      if (c < 0)
        os << '-';
    } else {
      os << (c < 0 ? " - " : " + ");
    }
    first = false;
    bool constant = m.degree() == 0;
    if (constant || mag != 1) {
      os << mag.get_str();
      if (!constant)
        os << '*';
    }
    if (!constant) {
      bool first_var = true;
      for (std::size_t i = 0; i < m.nvars(); ++i) {
        if (m[i] == 0)
          continue;
        if (!first_var)
          os << '*';
        first_var = false;
        os << var_prefix;
        if (index_variables)
          os << (i + 1);
        if (m[i] > 1)
          os << '^' << m[i];
      }
    }
  }
  return os.str();
}

Poly add(const Poly &p, const Poly &q) {
  Poly out(p);
  out += q;
  return out;
}

Poly subtract(const Poly &p, const Poly &q) {
  Poly out(p);
  out -= q;
  return out;
}

Poly multiply(const Poly &p, const Poly &q) {
  if (p.nvars() != q.nvars())
    throw VariableCountMismatch(p.nvars(), q.nvars());
  Poly out(p.nvars());
  for (const auto &[mp, cp] : p.terms())
    for (const auto &[mq, cq] : q.terms())
      out.add_term(mp * mq, cp * cq);
  return out;
}

Poly scale(const Poly &p, const Integer &c) {
  Poly out(p);
  out *= c;
  return out;
}

namespace {

Poly elementary_in_powers(int k, int n, std::uint32_t power) {
  if (n < 0 || k < 0 || k > n)
    throw std::out_of_range("elementary symmetric index out of range: k=" +
                            std::to_string(k) + ", n=" + std::to_string(n));
  const auto nvars = static_cast<std::size_t>(n);
  Poly out(nvars);
  // Walk all k-subsets of {0..n-1} via a selection mask.
  std::vector<bool> chosen(nvars, false);
  std::fill(chosen.begin(), chosen.begin() + k, true);
  do {
    Monomial m(nvars);
    for (std::size_t i = 0; i < nvars; ++i)
      if (chosen[i])
        m[i] = power;
    out.add_term(m, 1);
  } while (std::prev_permutation(chosen.begin(), chosen.end()));
  return out;
}

} // namespace

Poly elementary_symmetric(int k, int n) { return elementary_in_powers(k, n, 1); }

Poly elementary_symmetric_squares(int k, int n) {
  return elementary_in_powers(k, n, 2);
}

Integer ipow(const Integer &base, unsigned long exp) {
  Integer out;
  mpz_pow_ui(out.get_mpz_t(), base.get_mpz_t(), exp);
  return out;
}

Poly frobenius_twist(const Poly &p, const Integer &q) {
  if (q < 1)
    throw std::invalid_argument("frobenius_twist: q must be >= 1");
  Poly out(p.nvars());
  for (const auto &[m, c] : p.terms())
    out.add_term(m, c * ipow(q, m.degree()));
  return out;
}

Poly permute_variables(const Poly &p, std::span<const std::size_t> perm) {
  const auto n = p.nvars();
  if (perm.size() != n)
    throw VariableCountMismatch(n, perm.size());
  std::vector<bool> seen(n, false);
  for (auto target : perm) {
    if (target >= n || seen[target])
      throw std::invalid_argument("permute_variables: not a permutation");
    seen[target] = true;
  }
  Poly out(n);
  for (const auto &[m, c] : p.terms()) {
    Monomial image(n);
    for (std::size_t i = 0; i < n; ++i)
      image[perm[i]] = m[i];
    out.add_term(image, c);
  }
  return out;
}

Poly negate_variable(const Poly &p, std::size_t index) {
  if (index >= p.nvars())
    throw std::out_of_range("negate_variable: index out of range");
  Poly out(p.nvars());
  for (const auto &[m, c] : p.terms())
    out.add_term(m, m[index] % 2 == 0 ? c : Integer(-c));
  return out;
}

Poly substitute(const Poly &p, std::span<const Poly> images) {
  if (images.size() != p.nvars())
    throw VariableCountMismatch(p.nvars(), images.size());
  if (images.empty())
    return p;
  const auto target = images.front().nvars();
  for (const auto &img : images)
    if (img.nvars() != target)
      throw VariableCountMismatch(target, img.nvars());

  Poly out(target);
  for (const auto &[m, c] : p.terms()) {
    Poly term = Poly::constant(c, target);
    for (std::size_t i = 0; i < m.nvars(); ++i)
      for (std::uint32_t e = 0; e < m[i]; ++e)
        term = multiply(term, images[i]);
    out += term;
  }
  return out;
}

namespace {

class PolyParser {
public:
  PolyParser(std::string_view text, std::size_t nvars, std::string_view prefix)
      : text_(text), nvars_(nvars), prefix_(prefix) {}

  Poly parse() {
    Poly out(nvars_);
    skip_ws();
    if (at_end())
      fail("empty input");
    bool first = true;
    while (!at_end()) {
      int sign = 1;
      if (peek() == '+' || peek() == '-') {
        sign = get() == '-' ? -1 : 1;
        skip_ws();
      } else if (!first) {
        fail("expected '+' or '-'");
      }
      first = false;
      auto [m, c] = parse_term();
      out.add_term(m, sign < 0 ? Integer(-c) : c);
      skip_ws();
    }
    return out;
  }

private:
  std::pair<Monomial, Integer> parse_term() {
    Monomial m(nvars_);
    Integer c = 1;
    bool have_factor = false;
    while (true) {
      skip_ws();
      if (!at_end() && std::isdigit(static_cast<unsigned char>(peek()))) {
        c *= Integer(parse_digits());
      } else if (text_.substr(pos_).starts_with(prefix_)) {
        pos_ += prefix_.size();
        std::size_t index = 1;
        if (!at_end() && std::isdigit(static_cast<unsigned char>(peek())))
          index = std::stoul(parse_digits());
        else if (nvars_ != 1)
          fail("variable index required");
        if (index == 0 || index > nvars_)
          fail("variable index out of range");
        std::uint32_t e = 1;
        if (!at_end() && peek() == '^') {
          ++pos_;
          e = static_cast<std::uint32_t>(std::stoul(parse_digits()));
        }
        m[index - 1] += e;
      } else {
        fail("expected coefficient or variable");
      }
      have_factor = true;
      skip_ws();
      if (!at_end() && peek() == '*') {
        ++pos_;
        continue;
      }
      break;
    }
    if (!have_factor)
      fail("empty term");
    return {m, c};
  }

  std::string parse_digits() {
    auto start = pos_;
    while (!at_end() && std::isdigit(static_cast<unsigned char>(peek())))
      ++pos_;
    if (start == pos_)
      fail("expected digits");
    return std::string(text_.substr(start, pos_ - start));
  }

  void skip_ws() {
    while (!at_end() && std::isspace(static_cast<unsigned char>(peek())))
      ++pos_;
  }
  bool at_end() const { return pos_ >= text_.size(); }
  char peek() const { return text_[pos_]; }
  char get() { return text_[pos_++]; }

  [[noreturn]] void fail(const std::string &what) const {
    throw std::invalid_argument("parse_poly: " + what + " at offset " +
                                std::to_string(pos_) + " in \"" +
                                std::string(text_) + "\"");
  }

  std::string_view text_;
  std::size_t nvars_;
  std::string_view prefix_;
  std::size_t pos_ = 0;
};

} // namespace

Poly parse_poly(std::string_view text, std::size_t nvars,
                std::string_view var_prefix) {
  return PolyParser(text, nvars, var_prefix).parse();
}

} // namespace zipchow::intpoly
