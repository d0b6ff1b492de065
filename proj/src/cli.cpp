#include "zipchow/cli.hpp"

#include "zipchow/chow.hpp"
#include "zipchow/report_io.hpp"

#include <CLI11.hpp>

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

namespace zipchow::cli {
namespace {

class UsageError : public std::runtime_error {
public:
  UsageError(const std::string &flag, const std::string &what)
      : std::runtime_error(flag + ": " + what) {}
};

struct Request {
  std::string command;
  std::optional<std::string> group;
  std::optional<int> h;
  std::optional<int> d;
  std::optional<int> n;
  std::optional<std::string> composition;
  std::optional<std::string> parabolic;
  std::optional<std::string> tau;
  std::optional<std::int64_t> q;
  std::optional<std::int64_t> p;
  int level = 1;
  std::optional<int> max_degree;
  std::string format = "text";
  std::optional<std::string> output;
};

std::vector<int> parse_int_list(const std::string &flag, const std::string &s) {
  std::vector<int> out;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, ',')) {
    try {
      std::size_t used = 0;
      int v = std::stoi(item, &used);
      if (used != item.size())
        throw std::invalid_argument(item);
      out.push_back(v);
    } catch (const std::exception &) {
      throw UsageError(flag, "expected comma-separated integers, got \"" + s +
                                 "\"");
    }
  }
  if (out.empty())
    throw UsageError(flag, "must not be empty");
  return out;
}

void check_prime(const std::string &flag, std::int64_t p) {
  if (!weyl::is_prime(p))
    throw UsageError(flag, std::to_string(p) + " is not prime");
}

void check_max_degree(const Request &r) {
  if (r.max_degree && *r.max_degree < 0)
    throw UsageError("--max-degree", "must be >= 0");
}

ZipDatum build_datum(const Request &r, bool need_q) {
  if (!r.group)
    throw UsageError("--group", "required (gl or sp)");
  ZipDatum z;
  if (*r.group == "gl") {
    if (r.n)
      throw UsageError("--n", "not valid with --group gl (use --h)");
    if (r.parabolic)
      throw UsageError("--parabolic", "not valid with --group gl");
    if (!r.h)
      throw UsageError("--h", "required for --group gl");
    if (*r.h < 1)
      throw UsageError("--h", "must be >= 1");
    z.group = GroupSpec::gl(*r.h);
    if (r.composition && r.d)
      throw UsageError("--composition", "give either --d or --composition");
    if (r.composition) {
      weyl::Composition c{parse_int_list("--composition", *r.composition)};
      try {
        weyl::validate(z.group, c);
      } catch (const std::invalid_argument &e) {
        throw UsageError("--composition", e.what());
      }
      z.levi = c;
    } else if (r.d) {
      if (*r.d < 0 || *r.d > *r.h)
        throw UsageError("--d", "must satisfy 0 <= d <= h");
      z.levi = weyl::display_composition(*r.h, *r.d);
    } else {
      throw UsageError("--d", "required for --group gl (or --composition)");
    }
  } else {
    if (r.h || r.d || r.composition)
      throw UsageError(r.h ? "--h" : r.d ? "--d" : "--composition",
                       "not valid with --group sp (use --n, --parabolic)");
    if (!r.n)
      throw UsageError("--n", "required for --group sp");
    if (*r.n < 1)
      throw UsageError("--n", "must be >= 1");
    if (!r.parabolic)
      throw UsageError("--parabolic", "required for --group sp");
    z.group = GroupSpec::sp(*r.n);
    z.levi = *r.parabolic == "borel" ? weyl::SpParabolic::Borel
                                     : weyl::SpParabolic::Siegel;
  }

  if (r.p) {
    check_prime("--p", *r.p);
    z.p = *r.p;
  }
  if (r.q) {
    if (*r.q < 1)
      throw UsageError("--q", "must be >= 1");
    z.q = *r.q;
    if (r.p) {
      try {
        weyl::validate(z);
      } catch (const std::invalid_argument &) {
        throw UsageError("--q", "must be a positive power of --p");
      }
    }
  } else if (r.p) {
    z.q = *r.p;
  } else if (need_q) {
    throw UsageError("--q", "required (or --p)");
  }
  return z;
}

weyl::ZipDatum datum_for(const Request &r) { return build_datum(r, true); }

FZipType build_tau(const Request &r) {
  if (r.tau && r.composition)
    throw UsageError("--tau", "give either --tau or --composition");
  FZipType tau;
  if (r.composition) {
    auto blocks = parse_int_list("--composition", *r.composition);
    for (std::size_t i = 0; i < blocks.size(); ++i)
      tau[static_cast<int>(i)] = blocks[i];
  } else if (r.tau) {
    std::stringstream ss(*r.tau);
    std::string item;
    while (std::getline(ss, item, ',')) {
      auto colon = item.find(':');
      if (colon == std::string::npos)
        throw UsageError("--tau", "expected label:multiplicity pairs, got \"" +
                                      *r.tau + "\"");
      auto label = parse_int_list("--tau", item.substr(0, colon)).at(0);
      auto mult = parse_int_list("--tau", item.substr(colon + 1)).at(0);
      if (!tau.emplace(label, mult).second)
        throw UsageError("--tau", "label " + std::to_string(label) +
                                      " given twice");
    }
  } else {
    throw UsageError("--tau", "required (or --composition)");
  }
  if (tau.empty())
    throw UsageError("--tau", "must not be empty");
  for (const auto &[label, mult] : tau)
    if (mult <= 0)
      throw UsageError("--tau", "multiplicities must be positive");
  return tau;
}

std::int64_t required_prime(const Request &r) {
  if (!r.p)
    throw UsageError("--p", "required");
  check_prime("--p", *r.p);
  return *r.p;
}

std::size_t matrix_cap_from_env() {
  const char *raw = std::getenv(kMatrixCapEnv);
  if (!raw || !*raw)
    return zlinalg::kDefaultMatrixCap;
  try {
    std::size_t used = 0;
    auto v = std::stoull(raw, &used);
    if (used != std::string(raw).size() || v == 0)
      throw std::invalid_argument(raw);
    return static_cast<std::size_t>(v);
  } catch (const std::exception &) {
    throw UsageError(kMatrixCapEnv, "expected a positive integer, got \"" +
                                        std::string(raw) + "\"");
  }
}

std::string emit(const Request &r, const io::Json &json,
                 const std::string &text) {
  return r.format == "json" ? json.dump() + "\n" : text;
}

std::string execute(const Request &r) {
  check_max_degree(r);
  ComputeOptions opts{matrix_cap_from_env()};
  const int max_degree = r.max_degree.value_or(-1);

  if (r.command == "present") {
    auto z = datum_for(r);
    auto p = present(z);
    io::Json j;
    j["datum"] = io::to_json(z);
    j["presentation"] = io::to_json(p);
    return emit(r, j, "datum: " + io::describe(z) + "\n" + io::render_text(p));
  }
  if (r.command == "graded") {
    auto report = chow_report(datum_for(r), max_degree, opts);
    return emit(r, io::to_json(report), io::render_text(report));
  }
  if (r.command == "picard") {
    auto pic = picard(datum_for(r), opts);
    return emit(r, io::to_json(pic), zlinalg::to_string(pic) + "\n");
  }
  if (r.command == "qdim") {
    auto z = datum_for(r);
    if (z.q < 2)
      throw UsageError("--q", "quotient not finite-dimensional (q = 1)");
    auto dim = q_dimension(z, opts);
    io::Json j;
    j["rational_dimension"] = io::integer_to_json(dim);
    return emit(r, j, dim.get_str() + "\n");
  }
  if (r.command == "orbits") {
    auto z = build_datum(r, false);
    auto count = weyl::coset_count(z.group, z.levi);
    io::Json j;
    j["orbit_count"] = io::integer_to_json(count);
    return emit(r, j, count.get_str() + "\n");
  }
  if (r.command == "fzip") {
    auto tau = build_tau(r);
    auto report = fzip_report(tau, required_prime(r), max_degree, opts);
    return emit(r, io::to_json(report), io::render_text(report));
  }
  if (r.command == "bt") {
    if (!r.h)
      throw UsageError("--h", "required");
    if (*r.h < 1)
      throw UsageError("--h", "must be >= 1");
    if (!r.d)
      throw UsageError("--d", "required");
    if (*r.d < 0 || *r.d > *r.h)
      throw UsageError("--d", "must satisfy 0 <= d <= h");
    if (r.level < 1)
      throw UsageError("--level", "must be >= 1");
    auto report =
        bt_report(*r.h, *r.d, r.level, required_prime(r), max_degree, opts);
    return emit(r, io::to_json(report), io::render_text(report));
  }
  if (r.command == "m11") {
    auto cert = m11_compatibility(required_prime(r));
    return emit(r, io::to_json(cert), io::render_text(cert));
  }
  throw UsageError("command", "unknown command \"" + r.command + "\"");
}

void add_datum_options(CLI::App *cmd, Request &r) {
  cmd->add_option("--group", r.group, "gl or sp")
      ->check(CLI::IsMember({"gl", "sp"}));
  cmd->add_option("--h", r.h, "GL rank (height)");
  cmd->add_option("--d", r.d, "display dimension: composition (d, h-d)");
  cmd->add_option("--composition", r.composition, "GL Levi blocks, e.g. 1,2");
  cmd->add_option("--n", r.n, "Sp(2n) rank");
  cmd->add_option("--parabolic", r.parabolic, "borel or siegel")
      ->check(CLI::IsMember({"borel", "siegel"}));
  cmd->add_option("--q", r.q, "Frobenius power q (defaults to p)");
  cmd->add_option("--p", r.p, "prime with q a power of p");
}

void add_output_options(CLI::App *cmd, Request &r, bool with_degree) {
  if (with_degree)
    cmd->add_option("--max-degree", r.max_degree,
                    "highest degree (default: top degree bound)");
  cmd->add_option("--format", r.format, "text or json")
      ->check(CLI::IsMember({"text", "json"}));
  cmd->add_option("--output", r.output, "write the report to a file");
}

} // namespace

int run(const std::vector<std::string> &args, std::ostream &out,
        std::ostream &err) {
  Request r;
  CLI::App app{"Chow rings of stacks of G-zips and truncated displays",
               "zipchow"};
  app.set_help_flag("--help", "print help");
  app.require_subcommand(1);

  struct Spec {
    const char *name;
    const char *help;
    bool datum;
    bool degree;
  };
  const Spec specs[] = {
      {"present", "relation presentation of the Chow ring", true, false},
      {"graded", "graded Chow groups with Picard group and dimensions", true,
       true},
      {"picard", "Picard group A^1", true, false},
      {"qdim", "rational dimension", true, false},
      {"orbits", "number of zip orbits |W_G/W_L|", true, false},
      {"fzip", "report for the stack of F-zips of type tau", false, true},
      {"bt", "Chow groups of BT_n with p inverted", false, true},
      {"m11", "compatibility with A^*(M_{1,1}) = Z[t]/(12t)", false, false},
  };
  for (const auto &s : specs) {
    auto *cmd = app.add_subcommand(s.name, s.help);
    if (s.datum)
      add_datum_options(cmd, r);
    add_output_options(cmd, r, s.degree);
    cmd->callback([&r, name = s.name] { r.command = name; });
  }
  auto *fzip = app.get_subcommand("fzip");
  fzip->add_option("--tau", r.tau, "support:multiplicity pairs, e.g. 0:1,1:2");
  fzip->add_option("--composition", r.composition,
                   "block sizes, labelled 0..r-1");
  fzip->add_option("--p", r.p, "prime");
  auto *bt = app.get_subcommand("bt");
  bt->add_option("--h", r.h, "height");
  bt->add_option("--d", r.d, "dimension");
  bt->add_option("--level", r.level, "truncation level n (metadata only)");
  bt->add_option("--p", r.p, "prime");
  app.get_subcommand("m11")->add_option("--p", r.p, "prime");

  std::vector<const char *> argv{"zipchow"};
  for (const auto &a : args)
    argv.push_back(a.c_str());

  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp &) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::ParseError &e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  }

  std::string report;
  try {
    report = execute(r);
  } catch (const UsageError &e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const zlinalg::MatrixCapExceeded &e) {
    err << "error: " << e.what() << " (raise " << kMatrixCapEnv << ")\n";
    return kExitMatrixCap;
  } catch (const std::invalid_argument &e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::domain_error &e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  }

  if (r.output) {
    std::ofstream file(*r.output, std::ios::binary);
    if (!file) {
      err << "error: --output: cannot open " << *r.output << '\n';
      return kExitUsage;
    }
    file << report;
  } else {
    out << report;
  }
  return kExitOk;
}

} // namespace zipchow::cli
