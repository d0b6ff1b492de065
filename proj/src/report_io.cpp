#include "zipchow/report_io.hpp"

#include <sstream>
#include <stdexcept>

namespace zipchow::io {

Json integer_to_json(const Integer &v) {
  if (v.fits_slong_p())
    return Json(static_cast<std::int64_t>(v.get_si()));
  return Json(v.get_str());
}

Integer integer_from_json(const Json &j) {
  if (j.is_number_integer())
    return Integer(static_cast<long>(j.get<std::int64_t>()));
  if (j.is_string())
    return Integer(j.get<std::string>());
  throw std::invalid_argument("expected an integer, got " + j.dump());
}

Json to_json(const ZipDatum &z) {
  Json levi;
  if (const auto *c = std::get_if<weyl::Composition>(&z.levi))
    levi["composition"] = c->blocks;
  else
    levi["parabolic"] = weyl::to_string(std::get<weyl::SpParabolic>(z.levi));
  Json out;
  out["group"] = weyl::to_string(z.group.kind);
  out["rank"] = z.group.rank;
  out["levi"] = std::move(levi);
  out["q"] = z.q;
  out["p"] = z.p ? Json(*z.p) : Json(nullptr);
  return out;
}

ZipDatum datum_from_json(const Json &j) {
  ZipDatum z;
  const auto group = j.at("group").get<std::string>();
  if (group == "gl")
    z.group = GroupSpec::gl(j.at("rank").get<int>());
  else if (group == "sp")
    z.group = GroupSpec::sp(j.at("rank").get<int>());
  else
    throw std::invalid_argument("unknown group kind: " + group);
  const auto &levi = j.at("levi");
  if (levi.contains("composition")) {
    z.levi = weyl::Composition{levi.at("composition").get<std::vector<int>>()};
  } else {
    const auto par = levi.at("parabolic").get<std::string>();
    if (par == "borel")
      z.levi = weyl::SpParabolic::Borel;
    else if (par == "siegel")
      z.levi = weyl::SpParabolic::Siegel;
    else
      throw std::invalid_argument("unknown parabolic: " + par);
  }
  z.q = j.at("q").get<std::int64_t>();
  if (!j.at("p").is_null())
    z.p = j.at("p").get<std::int64_t>();
  return z;
}

Json to_json(const AbelianGroup &g) {
  Json torsion = Json::array();
  for (const auto &d : g.torsion)
    torsion.push_back(integer_to_json(d));
  Json out;
  out["free_rank"] = g.free_rank;
  out["torsion"] = std::move(torsion);
  return out;
}

AbelianGroup group_from_json(const Json &j) {
  AbelianGroup g;
  g.free_rank = j.at("free_rank").get<std::size_t>();
  for (const auto &d : j.at("torsion"))
    g.torsion.push_back(integer_from_json(d));
  return g;
}

Json to_json(const GradedAbelianGroup &g) {
  Json out = Json::array();
  for (int d = 0; d <= g.max_degree(); ++d) {
    Json entry;
    entry["degree"] = d;
    Json group = to_json(g.at(d));
    entry["free_rank"] = std::move(group["free_rank"]);
    entry["torsion"] = std::move(group["torsion"]);
    out.push_back(std::move(entry));
  }
  return out;
}

GradedAbelianGroup graded_from_json(const Json &j) {
  GradedAbelianGroup g;
  for (const auto &entry : j) {
    if (entry.at("degree").get<int>() != g.max_degree() + 1)
      throw std::invalid_argument("graded entries must be contiguous from 0");
    g.degrees.push_back(group_from_json(entry));
  }
  return g;
}

Json to_json(const ChowPresentation &p) {
  Json out;
  out["variables"] = p.variable_count;
  out["summary"] = p.summary();
  Json blocks = Json::array();
  for (const auto &b : p.blocks) {
    Json jb;
    jb["first_variable"] = b.first_variable;
    jb["size"] = b.size;
    jb["generator_degrees"] = b.generator_degrees;
    jb["chern_label"] = b.chern_label;
    blocks.push_back(std::move(jb));
  }
  out["blocks"] = std::move(blocks);
  Json rels = Json::array();
  for (const auto &r : p.relations) {
    Json jr;
    jr["generator"] = r.generator;
    jr["degree"] = r.degree;
    jr["coefficient"] = integer_to_json(r.coefficient);
    jr["poly"] = r.poly.to_string();
    rels.push_back(std::move(jr));
  }
  out["relations"] = std::move(rels);
  out["notes"] = p.notes;
  return out;
}

ChowPresentation presentation_from_json(const Json &j) {
  ChowPresentation p;
  p.variable_count = j.at("variables").get<std::size_t>();
  for (const auto &jb : j.at("blocks")) {
    LeviBlock b;
    b.first_variable = jb.at("first_variable").get<std::size_t>();
    b.size = jb.at("size").get<int>();
    b.generator_degrees = jb.at("generator_degrees").get<std::vector<int>>();
    b.chern_label = jb.at("chern_label").get<std::string>();
    p.blocks.push_back(std::move(b));
  }
  for (const auto &jr : j.at("relations")) {
    Relation r;
    r.generator = jr.at("generator").get<std::string>();
    r.degree = jr.at("degree").get<int>();
    r.coefficient = integer_from_json(jr.at("coefficient"));
    r.poly = intpoly::parse_poly(jr.at("poly").get<std::string>(),
                                 p.variable_count);
    p.relations.push_back(std::move(r));
  }
  p.notes = j.at("notes").get<std::vector<std::string>>();
  return p;
}

Json to_json(const ChowReport &r) {
  Json out;
  out["datum"] = to_json(r.datum);
  out["presentation"] = to_json(r.presentation);
  out["graded"] = to_json(r.graded);
  out["picard"] = to_json(r.picard);
  out["rational_dimension"] = r.rational_dimension
                                  ? integer_to_json(*r.rational_dimension)
                                  : Json(nullptr);
  out["orbit_count"] = integer_to_json(r.orbit_count);
  Json meta;
  meta["top_degree_bound"] = r.top_degree_bound;
  meta["max_degree"] = r.graded.max_degree();
  Json checks = Json::array();
  for (const auto &c : r.checks) {
    Json jc;
    jc["name"] = c.name;
    jc["passed"] = c.passed;
    jc["detail"] = c.detail;
    checks.push_back(std::move(jc));
  }
  meta["checks"] = std::move(checks);
  out["metadata"] = std::move(meta);
  return out;
}

ChowReport report_from_json(const Json &j) {
  ChowReport r;
  r.datum = datum_from_json(j.at("datum"));
  r.presentation = presentation_from_json(j.at("presentation"));
  r.graded = graded_from_json(j.at("graded"));
  r.picard = group_from_json(j.at("picard"));
  if (!j.at("rational_dimension").is_null())
    r.rational_dimension = integer_from_json(j.at("rational_dimension"));
  r.orbit_count = integer_from_json(j.at("orbit_count"));
  const auto &meta = j.at("metadata");
  r.top_degree_bound = meta.at("top_degree_bound").get<int>();
  for (const auto &jc : meta.at("checks"))
    r.checks.push_back({jc.at("name").get<std::string>(),
                        jc.at("passed").get<bool>(),
                        jc.at("detail").get<std::string>()});
  return r;
}

Json to_json(const LocalizedReport &r) {
  Json out;
  out["prime"] = r.prime;
  out["graded"] = to_json(r.degrees);
  return out;
}

Json to_json(const BtReport &r) {
  Json datum;
  datum["h"] = r.height;
  datum["d"] = r.dimension;
  datum["level"] = r.level;
  datum["p"] = r.localized.prime;
  Json out;
  out["datum"] = std::move(datum);
  out["localized"] = to_json(r.localized);
  return out;
}

Json to_json(const M11Certificate &c) {
  Json images = Json::array();
  for (const auto &im : c.images) {
    Json ji;
    ji["relation"] = im.relation;
    ji["image"] = im.image;
    ji["reduced"] = im.reduced;
    ji["in_ideal"] = im.in_ideal;
    images.push_back(std::move(ji));
  }
  Json out;
  out["prime"] = c.prime;
  out["compatible"] = c.compatible;
  out["images"] = std::move(images);
  return out;
}

std::string describe(const ZipDatum &z) {
  std::string s = weyl::describe(z.group) + ", levi " + weyl::describe(z.levi) +
                  ", q = " + std::to_string(z.q);
  if (z.p)
    s += ", p = " + std::to_string(*z.p);
  return s;
}

std::string render_text(const ChowPresentation &p) {
  std::ostringstream os;
  os << "ring: " << p.summary() << '\n';
  os << "blocks:\n";
  for (const auto &b : p.blocks) {
    os << "  t" << b.first_variable + 1;
    if (b.size > 1)
      os << "..t" << b.first_variable + static_cast<std::size_t>(b.size);
    if (!b.chern_label.empty())
      os << " (Chern roots of " << b.chern_label << ")";
    os << ": generator degrees";
    for (int d : b.generator_degrees)
      os << ' ' << d;
    os << '\n';
  }
  os << "relations:\n";
  for (const auto &r : p.relations)
    os << "  " << r.generator << " (degree " << r.degree
       << ", coefficient " << r.coefficient.get_str() << "): "
       << r.poly.to_string() << '\n';
  if (p.relations.empty())
    os << "  (none)\n";
  os << "notes:\n";
  for (const auto &n : p.notes)
    os << "  " << n << '\n';
  return os.str();
}

std::string render_text(const GradedAbelianGroup &g, std::string_view symbol) {
  std::ostringstream os;
  for (int d = 0; d <= g.max_degree(); ++d)
    os << symbol << '^' << d << " = " << zlinalg::to_string(g.at(d)) << '\n';
  return os.str();
}

std::string render_text(const ChowReport &r) {
  std::ostringstream os;
  os << "datum: " << describe(r.datum) << '\n';
  os << render_text(r.presentation);
  os << "graded:\n" << render_text(r.graded);
  os << "Pic = " << zlinalg::to_string(r.picard) << '\n';
  os << "rational dimension = "
     << (r.rational_dimension ? r.rational_dimension->get_str() : "infinite")
     << '\n';
  os << "orbit count = " << r.orbit_count.get_str() << '\n';
  os << "top degree bound = " << r.top_degree_bound << '\n';
  if (!r.checks.empty()) {
    os << "checks:\n";
    for (const auto &c : r.checks)
      os << "  [" << (c.passed ? "pass" : "FAIL") << "] " << c.name << ": "
         << c.detail << '\n';
  }
  return os.str();
}

std::string render_text(const BtReport &r) {
  std::ostringstream os;
  os << "BT_" << r.level << " of height " << r.height << ", dimension "
     << r.dimension << ", with p = " << r.localized.prime << " inverted\n";
  std::ostringstream sym;
  sym << "A[1/" << r.localized.prime << "]";
  os << render_text(r.localized.degrees, sym.str());
  return os.str();
}

std::string render_text(const M11Certificate &c) {
  std::ostringstream os;
  os << "p = " << c.prime << ": "
     << (c.compatible ? "compatible" : "incompatible")
     << " with Z[t]/(12t) under t1 -> -t, t2 -> t\n";
  for (const auto &im : c.images)
    os << "  " << im.relation << "  ->  " << im.image << "  =  " << im.reduced
       << " mod 12t" << (im.in_ideal ? "" : "  (not in ideal)") << '\n';
  return os.str();
}

} // namespace zipchow::io
