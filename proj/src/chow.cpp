#include "zipchow/chow.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace zipchow {

using intpoly::Monomial;

std::vector<Relation> relations(const ZipDatum &z) {
  weyl::validate(z);
  std::vector<Relation> out;
  const Integer q = static_cast<long>(z.q);
  for (auto &gen : weyl::invariant_generators(z.group)) {
    // f - twist(f) = (1 - q^e) f; stored with the sign flipped so the
    // coefficient reads q^e - 1.
    Poly rel = intpoly::frobenius_twist(gen.poly, q) - gen.poly;
    if (rel.is_zero())
      continue;
    Integer coeff = intpoly::ipow(q, static_cast<unsigned long>(gen.degree)) - 1;
    out.push_back({std::move(rel), gen.degree, std::move(coeff),
                   std::move(gen.label)});
  }
  return out;
}

namespace {

std::string block_label(const ZipDatum &z, std::size_t index,
                        std::size_t count) {
  if (z.group.kind != weyl::GroupKind::GL || count != 2)
    return {};
  return index == 0 ? "Lie" : "tLie^vee";
}

std::vector<std::string> presentation_notes(const ZipDatum &z) {
  std::vector<std::string> notes;
  notes.push_back("relations normalized as (q^e - 1)*f for each W_G invariant "
                  "generator f of degree e; q = " +
                  std::to_string(z.q));
  if (z.p)
    notes.push_back("p = " + std::to_string(*z.p));
  if (z.group.kind == weyl::GroupKind::GL) {
    notes.push_back("first block carries the Chern roots of Lie (dimension "
                    "d); blocks swapped relative to the S_(h-d) x S_d form, "
                    "the rings are canonically isomorphic");
    notes.push_back("c_i = e_i(t1..th)");
  } else {
    notes.push_back("c_i(t^2) = e_i(t1^2..tn^2)");
  }
  return notes;
}

} // namespace

ChowPresentation present(const ZipDatum &z) {
  weyl::validate(z);
  ChowPresentation out;
  out.variable_count = static_cast<std::size_t>(z.group.rank);
  auto blocks = weyl::levi_blocks(z.group, z.levi);
  std::size_t start = 0;
  for (std::size_t i = 0; i < blocks.size(); ++i) {
    LeviBlock b;
    b.first_variable = start;
    b.size = blocks[i];
    b.generator_degrees.resize(static_cast<std::size_t>(blocks[i]));
    std::iota(b.generator_degrees.begin(), b.generator_degrees.end(), 1);
    b.chern_label = block_label(z, i, blocks.size());
    out.blocks.push_back(std::move(b));
    start += static_cast<std::size_t>(blocks[i]);
  }
  out.relations = relations(z);
  out.notes = presentation_notes(z);
  return out;
}

std::string ChowPresentation::summary() const {
  std::string s = "Z[";
  for (std::size_t i = 0; i < variable_count; ++i)
    s += (i ? ",t" : "t") + std::to_string(i + 1);
  s += "]";
  bool trivial_levi = std::all_of(blocks.begin(), blocks.end(),
                                  [](const auto &b) { return b.size == 1; });
  if (!trivial_levi) {
    s += "^(";
    for (std::size_t i = 0; i < blocks.size(); ++i)
      s += (i ? " x S" : "S") + std::to_string(blocks[i].size);
    s += ")";
  }
  s += " / (";
  for (std::size_t i = 0; i < relations.size(); ++i)
    s += (i ? ", " : "") + relations[i].poly.to_string();
  return s + ")";
}

namespace {

struct DegreeBasis {
  std::vector<Poly> basis;
  std::map<Monomial, std::size_t, intpoly::GrevlexDescending> index;
};

DegreeBasis make_degree_basis(const GroupSpec &g, const LeviSpec &l, int d) {
  DegreeBasis out;
  out.basis = weyl::invariant_basis(g, l, d);
  for (std::size_t i = 0; i < out.basis.size(); ++i)
    out.index.emplace(out.basis[i].leading_term().first, i);
  return out;
}

// Coordinates of a W_L-invariant Poly over the orbit-sum basis: the
// coefficient of each orbit's leading monomial.
std::vector<Integer> decompose(const Poly &p, const DegreeBasis &b,
                               const std::vector<int> &blocks) {
  std::vector<Integer> coords(b.basis.size());
  std::vector<std::size_t> term_orbit;
  term_orbit.reserve(p.term_count());
  for (const auto &[m, c] : p.terms()) {
    auto it = b.index.find(weyl::orbit_leader(m, blocks));
    if (it == b.index.end())
      throw std::logic_error("decomposition failure: monomial " +
                             m.to_string() + " has no basis orbit");
    term_orbit.push_back(it->second);
    if (m == it->first)
      coords[it->second] = c;
  }
  std::size_t k = 0;
  std::size_t covered = 0;
  for (const auto &[m, c] : p.terms()) {
    if (coords[term_orbit[k++]] != c)
      throw std::logic_error("decomposition failure: " + p.to_string() +
                             " is not constant on W_L-orbits");
  }
  for (std::size_t i = 0; i < coords.size(); ++i)
    if (coords[i] != 0)
      covered += b.basis[i].term_count();
  if (covered != p.term_count())
    throw std::logic_error("decomposition failure: " + p.to_string() +
                           " does not contain full W_L-orbits");
  return coords;
}

} // namespace

GradedAbelianGroup graded_chow(const GroupSpec &g, const LeviSpec &l,
                               const std::vector<Poly> &rels, int max_degree,
                               const ComputeOptions &opts) {
  if (max_degree < 0)
    throw std::invalid_argument("max_degree must be >= 0");
  auto blocks = weyl::levi_blocks(g, l);
  const auto n = static_cast<std::size_t>(g.rank);
  for (const auto &r : rels) {
    if (r.nvars() != n)
      throw intpoly::VariableCountMismatch(n, r.nvars());
    if (r.is_zero() || !r.is_homogeneous())
      throw std::invalid_argument("relations must be nonzero and homogeneous");
  }

  std::vector<DegreeBasis> bases;
  bases.reserve(static_cast<std::size_t>(max_degree) + 1);
  for (int d = 0; d <= max_degree; ++d)
    bases.push_back(make_degree_basis(g, l, d));

  GradedAbelianGroup out;
  for (int d = 0; d <= max_degree; ++d) {
    const auto &target = bases[static_cast<std::size_t>(d)];
    zlinalg::IntMatrix m(0, target.basis.size());
    for (const auto &r : rels) {
      int e = r.degree();
      if (e > d)
        continue;
      for (const auto &b : bases[static_cast<std::size_t>(d - e)].basis)
        m.append_row(decompose(b * r, target, blocks));
    }
    out.degrees.push_back(
        zlinalg::cokernel(m, target.basis.size(), opts.matrix_cap));
  }
  return out;
}

GradedAbelianGroup graded_chow(const ZipDatum &z, int max_degree,
                               const ComputeOptions &opts) {
  std::vector<Poly> rels;
  for (auto &r : relations(z))
    rels.push_back(std::move(r.poly));
  return graded_chow(z.group, z.levi, rels, max_degree, opts);
}

AbelianGroup picard(const ZipDatum &z, const ComputeOptions &opts) {
  return graded_chow(z, 1, opts).at(1);
}

namespace {

Integer free_rank_sum(const GradedAbelianGroup &g, int up_to) {
  Integer total = 0;
  for (int d = 0; d <= up_to && d <= g.max_degree(); ++d)
    total += static_cast<unsigned long>(g.at(d).free_rank);
  return total;
}

} // namespace

Integer q_dimension(const ZipDatum &z, const ComputeOptions &opts) {
  weyl::validate(z);
  if (z.q < 2)
    throw std::domain_error("quotient not finite-dimensional (q = 1)");
  int top = weyl::top_degree_bound(z.group, z.levi);
  return free_rank_sum(graded_chow(z, top, opts), top);
}

ChowReport chow_report(const ZipDatum &z, int max_degree,
                       const ComputeOptions &opts) {
  weyl::validate(z);
  ChowReport out;
  out.datum = z;
  out.presentation = present(z);
  out.top_degree_bound = weyl::top_degree_bound(z.group, z.levi);
  out.orbit_count = weyl::coset_count(z.group, z.levi);

  const int requested = max_degree < 0 ? out.top_degree_bound : max_degree;
  const int computed = std::max({requested, out.top_degree_bound, 1});
  GradedAbelianGroup full = graded_chow(z, computed, opts);
  out.picard = full.at(1);

  if (z.q >= 2) {
    out.rational_dimension = free_rank_sum(full, out.top_degree_bound);
    out.checks.push_back(
        {"rational_dimension_equals_orbit_count",
         *out.rational_dimension == out.orbit_count,
         out.rational_dimension->get_str() + " vs " + out.orbit_count.get_str()});

    auto series = weyl::rational_rank_series(z.group, z.levi);
    bool match = true;
    for (int d = 0; d <= computed; ++d) {
      std::int64_t expected =
          d < static_cast<int>(series.size()) ? series[static_cast<std::size_t>(d)] : 0;
      if (static_cast<std::int64_t>(full.at(d).free_rank) != expected)
        match = false;
    }
    out.checks.push_back({"free_ranks_match_poincare_series", match,
                          "degrees 0.." + std::to_string(computed)});
  }

  full.degrees.resize(static_cast<std::size_t>(requested) + 1);
  out.graded = std::move(full);
  return out;
}

ZipDatum display_datum(int h, int d, std::int64_t p) {
  ZipDatum z{GroupSpec::gl(h), weyl::display_composition(h, d), p, p};
  weyl::validate(z);
  return z;
}

ChowReport fzip_report(const FZipType &tau, std::int64_t p, int max_degree,
                       const ComputeOptions &opts) {
  if (tau.empty())
    throw std::invalid_argument("F-zip type must have nonempty support");
  if (!weyl::is_prime(p))
    throw std::invalid_argument("p = " + std::to_string(p) + " is not prime");
  weyl::Composition comp;
  for (const auto &[label, mult] : tau) {
    if (mult <= 0)
      throw std::invalid_argument("F-zip type multiplicities must be positive");
    comp.blocks.push_back(mult);
  }
  const int h = std::accumulate(comp.blocks.begin(), comp.blocks.end(), 0);
  const auto r = comp.blocks.size();
  ZipDatum z{GroupSpec::gl(h), comp, p, p};
  ChowReport report = chow_report(z, max_degree, opts);

  AbelianGroup expected_pic{r - 1, {}};
  if (p - 1 >= 2)
    expected_pic.torsion.emplace_back(static_cast<long>(p - 1));
  report.checks.push_back({"picard_is_Z^(r-1)+Z/(p-1)",
                           report.picard == expected_pic,
                           zlinalg::to_string(report.picard)});
  report.checks.push_back(
      {"rational_dimension_is_multinomial",
       report.rational_dimension == weyl::coset_count(z.group, z.levi),
       report.rational_dimension ? report.rational_dimension->get_str() : "-"});

  bool in_01 = std::all_of(tau.begin(), tau.end(), [](const auto &kv) {
    return kv.first == 0 || kv.first == 1;
  });
  if (in_01) {
    int d = tau.contains(1) ? tau.at(1) : 0;
    ChowReport disp = chow_report(display_datum(h, d, p), max_degree, opts);
    bool same = disp.graded == report.graded && disp.picard == report.picard &&
                disp.rational_dimension == report.rational_dimension;
    report.checks.push_back({"matches_display_report", same,
                             "display (h,d) = (" + std::to_string(h) + "," +
                                 std::to_string(d) + ")"});
  }
  return report;
}

AbelianGroup localize(const AbelianGroup &g, std::int64_t p) {
  if (!weyl::is_prime(p))
    throw std::invalid_argument("p = " + std::to_string(p) + " is not prime");
  const Integer prime = static_cast<long>(p);
  AbelianGroup out{g.free_rank, {}};
  for (const auto &d : g.torsion) {
    Integer stripped;
    mpz_remove(stripped.get_mpz_t(), d.get_mpz_t(), prime.get_mpz_t());
    if (stripped > 1)
      out.torsion.push_back(std::move(stripped));
  }
  std::sort(out.torsion.begin(), out.torsion.end());
  return out;
}

LocalizedReport localize(const GradedAbelianGroup &g, std::int64_t p) {
  LocalizedReport out{p, {}};
  for (const auto &entry : g.degrees)
    out.degrees.degrees.push_back(localize(entry, p));
  return out;
}

BtReport bt_report(int h, int d, int level, std::int64_t p, int max_degree,
                   const ComputeOptions &opts) {
  if (h < 1 || d < 0 || d > h)
    throw std::invalid_argument("invalid (h,d) = (" + std::to_string(h) + "," +
                                std::to_string(d) + "): need 0 <= d <= h");
  if (level < 1)
    throw std::invalid_argument("level must be >= 1");
  ZipDatum z = display_datum(h, d, p);
  int md = max_degree < 0 ? weyl::top_degree_bound(z.group, z.levi) : max_degree;
  return {h, d, level, localize(graded_chow(z, md, opts), p)};
}

M11Certificate m11_compatibility(std::int64_t p) {
  ZipDatum z = display_datum(2, 1, p);
  const Poly t = Poly::variable(0, 1);
  const std::vector<Poly> images{-t, t};
  const Integer twelve = 12;

  M11Certificate cert{p, true, {}};
  for (const auto &rel : relations(z)) {
    Poly image = intpoly::substitute(rel.poly, images);
    Poly reduced(1);
    bool in_ideal = true;
    for (const auto &[m, c] : image.terms()) {
      if (m.degree() == 0) {
        in_ideal = false;
        reduced.add_term(m, c);
        continue;
      }
      Integer r;
      mpz_fdiv_r(r.get_mpz_t(), c.get_mpz_t(), twelve.get_mpz_t());
      if (r != 0)
        in_ideal = false;
      reduced.add_term(m, r);
    }
    cert.compatible = cert.compatible && in_ideal;
    cert.images.push_back({rel.poly.to_string(), image.to_string("t", false),
                           reduced.to_string("t", false), in_ideal});
  }
  return cert;
}

} // namespace zipchow
