#include "zipchow/weyl.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace zipchow::weyl {

bool is_prime(std::int64_t n) {
  if (n < 2)
    return false;
  for (std::int64_t d = 2; d * d <= n; ++d)
    if (n % d == 0)
      return false;
  return true;
}

void validate(const GroupSpec &g) {
  if (g.rank < 1)
    throw std::invalid_argument("group rank must be >= 1, got " +
                                std::to_string(g.rank));
}

void validate(const GroupSpec &g, const LeviSpec &l) {
  validate(g);
  if (const auto *c = std::get_if<Composition>(&l)) {
    if (g.kind != GroupKind::GL)
      throw std::invalid_argument("a block composition applies only to GL");
    if (c->blocks.empty())
      throw std::invalid_argument("composition must have at least one block");
    int sum = 0;
    for (int b : c->blocks) {
      if (b <= 0)
        throw std::invalid_argument("composition entries must be positive");
      sum += b;
    }
    if (sum != g.rank)
      throw std::invalid_argument("composition sums to " +
                                  std::to_string(sum) + ", expected h = " +
                                  std::to_string(g.rank));
  } else if (g.kind != GroupKind::Sp) {
    throw std::invalid_argument("a Borel/Siegel parabolic applies only to Sp");
  }
}

void validate(const ZipDatum &z) {
  validate(z.group, z.levi);
  if (z.q < 1)
    throw std::invalid_argument("q must be >= 1");
  if (z.p) {
    if (!is_prime(*z.p))
      throw std::invalid_argument("p = " + std::to_string(*z.p) +
                                  " is not prime");
    std::int64_t r = z.q;
    while (r > 1 && r % *z.p == 0)
      r /= *z.p;
    if (r != 1 || z.q == 1)
      throw std::invalid_argument("q = " + std::to_string(z.q) +
                                  " is not a positive power of p = " +
                                  std::to_string(*z.p));
  }
}

Composition display_composition(int h, int d) {
  if (h < 1 || d < 0 || d > h)
    throw std::invalid_argument("display type requires 0 <= d <= h, h >= 1");
  Composition c;
  if (d > 0)
    c.blocks.push_back(d);
  if (h - d > 0)
    c.blocks.push_back(h - d);
  return c;
}

std::string to_string(GroupKind k) { return k == GroupKind::GL ? "gl" : "sp"; }

std::string to_string(SpParabolic sp) {
  return sp == SpParabolic::Borel ? "borel" : "siegel";
}

std::string describe(const GroupSpec &g) {
  return g.kind == GroupKind::GL ? "GL(" + std::to_string(g.rank) + ")"
                                 : "Sp(" + std::to_string(2 * g.rank) + ")";
}

std::string describe(const LeviSpec &l) {
  if (const auto *c = std::get_if<Composition>(&l)) {
    std::string s = "(";
    for (std::size_t i = 0; i < c->blocks.size(); ++i)
      s += (i ? "," : "") + std::to_string(c->blocks[i]);
    return s + ")";
  }
  return to_string(std::get<SpParabolic>(l));
}

std::vector<int> levi_blocks(const GroupSpec &g, const LeviSpec &l) {
  validate(g, l);
  if (const auto *c = std::get_if<Composition>(&l))
    return c->blocks;
  if (std::get<SpParabolic>(l) == SpParabolic::Borel)
    return std::vector<int>(static_cast<std::size_t>(g.rank), 1);
  return {g.rank};
}

std::vector<InvariantGenerator> invariant_generators(const GroupSpec &g) {
  validate(g);
  std::vector<InvariantGenerator> out;
  for (int k = 1; k <= g.rank; ++k) {
    if (g.kind == GroupKind::GL)
      out.push_back({intpoly::elementary_symmetric(k, g.rank), k,
                     "c" + std::to_string(k)});
    else
      out.push_back({intpoly::elementary_symmetric_squares(k, g.rank), 2 * k,
                     "c" + std::to_string(k) + "(t^2)"});
  }
  return out;
}

Monomial orbit_leader(const Monomial &m, const std::vector<int> &blocks) {
  std::vector<std::uint32_t> exps(m.exponents().begin(), m.exponents().end());
  auto it = exps.begin();
  for (int b : blocks) {
    std::sort(it, it + b, std::greater<>());
    it += b;
  }
  return Monomial(std::move(exps));
}

namespace {

// Calls visit(exps) for every exponent vector of length n summing to degree,
// where each block's slice is nonincreasing.
template <class Visit>
void for_each_block_partition(const std::vector<int> &blocks, int degree,
                              Visit &&visit) {
  const auto n =
      static_cast<std::size_t>(std::accumulate(blocks.begin(), blocks.end(), 0));
  std::vector<bool> starts_block(n, false);
  std::size_t pos = 0;
  for (int b : blocks) {
    starts_block[pos] = true;
    pos += static_cast<std::size_t>(b);
  }
  std::vector<std::uint32_t> exps(n, 0);
  auto rec = [&](auto &&self, std::size_t i, std::uint32_t remaining) -> void {
    if (i == n) {
      if (remaining == 0)
        visit(exps);
      return;
    }
    std::uint32_t cap = remaining;
    if (!starts_block[i])
      cap = std::min(cap, exps[i - 1]);
    for (std::uint32_t e = 0; e <= cap; ++e) {
      exps[i] = e;
      self(self, i + 1, remaining - e);
    }
    exps[i] = 0;
  };
  rec(rec, 0, static_cast<std::uint32_t>(degree));
}

} // namespace

std::vector<Monomial> orbit_representatives(const GroupSpec &g,
                                            const LeviSpec &l, int degree) {
  if (degree < 0)
    throw std::invalid_argument("degree must be >= 0");
  auto blocks = levi_blocks(g, l);
  std::vector<Monomial> reps;
  for_each_block_partition(blocks, degree, [&](const auto &exps) {
    reps.emplace_back(std::vector<std::uint32_t>(exps));
  });
  std::sort(reps.begin(), reps.end(), intpoly::grevlex_greater);
  return reps;
}

std::vector<Poly> invariant_basis(const GroupSpec &g, const LeviSpec &l,
                                  int degree) {
  auto blocks = levi_blocks(g, l);
  const auto n = static_cast<std::size_t>(g.rank);
  std::vector<Poly> basis;
  for (const auto &rep : orbit_representatives(g, l, degree)) {
    Poly orbit(n);
    // Enumerate the distinct rearrangements of each block independently;
    // the block slices start sorted ascending so next_permutation covers all.
    std::vector<std::uint32_t> exps(rep.exponents().begin(),
                                    rep.exponents().end());
    std::vector<std::pair<std::size_t, std::size_t>> ranges;
    std::size_t start = 0;
    for (int b : blocks) {
      ranges.emplace_back(start, start + static_cast<std::size_t>(b));
      std::sort(exps.begin() + start, exps.begin() + start + b);
      start += static_cast<std::size_t>(b);
    }
    while (true) {
      orbit.add_term(Monomial(exps), 1);
      std::size_t k = 0;
      for (; k < ranges.size(); ++k) {
        auto [lo, hi] = ranges[k];
        if (std::next_permutation(exps.begin() + lo, exps.begin() + hi))
          break;
        // wrapped around to sorted: carry into the next block
      }
      if (k == ranges.size())
        break;
    }
    basis.push_back(std::move(orbit));
  }
  return basis;
}

std::uint64_t invariant_basis_size(const GroupSpec &g, const LeviSpec &l,
                                   int degree) {
  if (degree < 0)
    throw std::invalid_argument("degree must be >= 0");
  const auto d = static_cast<std::size_t>(degree);
  // parts[m][k]: partitions of k into at most m parts.
  auto partitions_at_most = [d](int m) {
    std::vector<std::uint64_t> row(d + 1, 0);
    row[0] = 1;
    // Partitions into parts of size <= m (conjugate count).
    for (int part = 1; part <= m; ++part)
      for (std::size_t k = static_cast<std::size_t>(part); k <= d; ++k)
        row[k] += row[k - static_cast<std::size_t>(part)];
    return row;
  };
  std::vector<std::uint64_t> total(d + 1, 0);
  total[0] = 1;
  for (int b : levi_blocks(g, l)) {
    auto row = partitions_at_most(b);
    std::vector<std::uint64_t> next(d + 1, 0);
    for (std::size_t i = 0; i <= d; ++i)
      for (std::size_t j = 0; i + j <= d; ++j)
        next[i + j] += total[i] * row[j];
    total = std::move(next);
  }
  return total[d];
}

namespace {

Integer factorial(int n) {
  Integer out;
  mpz_fac_ui(out.get_mpz_t(), static_cast<unsigned long>(n));
  return out;
}

Integer weyl_order(const GroupSpec &g) {
  Integer out = factorial(g.rank);
  if (g.kind == GroupKind::Sp)
    out *= intpoly::ipow(2, static_cast<unsigned long>(g.rank));
  return out;
}

} // namespace

Integer coset_count(const GroupSpec &g, const LeviSpec &l) {
  Integer levi = 1;
  for (int b : levi_blocks(g, l))
    levi *= factorial(b);
  return weyl_order(g) / levi;
}

int top_degree_bound(const GroupSpec &g, const LeviSpec &l) {
  auto blocks = levi_blocks(g, l);
  int positive_roots =
      g.kind == GroupKind::GL ? g.rank * (g.rank - 1) / 2 : g.rank * g.rank;
  for (int b : blocks)
    positive_roots -= b * (b - 1) / 2;
  return positive_roots;
}

std::vector<int> weyl_degrees(const GroupSpec &g) {
  validate(g);
  std::vector<int> out;
  for (int k = 1; k <= g.rank; ++k)
    out.push_back(g.kind == GroupKind::GL ? k : 2 * k);
  return out;
}

std::vector<int> levi_degrees(const GroupSpec &g, const LeviSpec &l) {
  std::vector<int> out;
  for (int b : levi_blocks(g, l))
    for (int k = 1; k <= b; ++k)
      out.push_back(k);
  return out;
}

namespace {

using Series = std::vector<std::int64_t>;

Series multiply_series(const Series &a, const Series &b) {
  Series out(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j)
      out[i + j] += a[i] * b[j];
  return out;
}

// [d]_x = 1 + x + ... + x^{d-1}
Series q_integer(int d) { return Series(static_cast<std::size_t>(d), 1); }

} // namespace

std::vector<std::int64_t> rational_rank_series(const GroupSpec &g,
                                               const LeviSpec &l) {
  Series num{1}, den{1};
  for (int d : weyl_degrees(g))
    num = multiply_series(num, q_integer(d));
  for (int d : levi_degrees(g, l))
    den = multiply_series(den, q_integer(d));

  // Exact long division; den is monic with constant term 1.
  if (den.size() > num.size())
    throw std::logic_error("rational_rank_series: division not exact");
  Series quot(num.size() - den.size() + 1, 0);
  Series rem = num;
  for (std::size_t i = quot.size(); i-- > 0;) {
    std::int64_t c = rem[i + den.size() - 1] / den.back();
    if (c * den.back() != rem[i + den.size() - 1])
      throw std::logic_error("rational_rank_series: division not exact");
    quot[i] = c;
    for (std::size_t j = 0; j < den.size(); ++j)
      rem[i + j] -= c * den[j];
  }
  if (std::any_of(rem.begin(), rem.end(), [](auto v) { return v != 0; }))
    throw std::logic_error("rational_rank_series: division not exact");
  if (static_cast<int>(quot.size()) - 1 != top_degree_bound(g, l))
    throw std::logic_error("rational_rank_series: degree mismatch");
  return quot;
}

Poly act(const WeylGenerator &w, const Poly &p) {
  Poly out = intpoly::permute_variables(p, w.permutation);
  if (w.sign_flip)
    out = intpoly::negate_variable(out, *w.sign_flip);
  return out;
}

namespace {

std::vector<std::size_t> identity_perm(std::size_t n) {
  std::vector<std::size_t> perm(n);
  std::iota(perm.begin(), perm.end(), std::size_t{0});
  return perm;
}

} // namespace

std::vector<WeylGenerator> levi_weyl_generators(const GroupSpec &g,
                                                const LeviSpec &l) {
  const auto n = static_cast<std::size_t>(g.rank);
  std::vector<WeylGenerator> out;
  std::size_t start = 0;
  for (int b : levi_blocks(g, l)) {
    for (std::size_t i = start; i + 1 < start + static_cast<std::size_t>(b);
         ++i) {
      auto perm = identity_perm(n);
      std::swap(perm[i], perm[i + 1]);
      out.push_back({std::move(perm), std::nullopt});
    }
    start += static_cast<std::size_t>(b);
  }
  return out;
}

std::vector<WeylGenerator> weyl_generators(const GroupSpec &g) {
  validate(g);
  const auto n = static_cast<std::size_t>(g.rank);
  std::vector<WeylGenerator> out;
  for (std::size_t i = 0; i + 1 < n; ++i) {
    auto perm = identity_perm(n);
    std::swap(perm[i], perm[i + 1]);
    out.push_back({std::move(perm), std::nullopt});
  }
  if (g.kind == GroupKind::Sp)
    out.push_back({identity_perm(n), n - 1});
  return out;
}

} // namespace zipchow::weyl
