#include "zipchow/cli.hpp"
#include "zipchow/report_io.hpp"

#include <doctest.h>

#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

namespace {

struct Result {
  int status;
  std::string out;
  std::string err;
};

Result run(std::vector<std::string> args) {
  std::ostringstream out, err;
  int status = zipchow::cli::run(args, out, err);
  return {status, out.str(), err.str()};
}

bool contains(const std::string &haystack, const std::string &needle) {
  return haystack.find(needle) != std::string::npos;
}

} // namespace

TEST_CASE("present") {
  auto r = run({"present", "--group", "gl", "--h", "2", "--d", "1", "--p", "3"});
  CHECK(r.status == 0);
  CHECK(contains(r.out, "2*t1 + 2*t2"));
  CHECK(contains(r.out, "8*t1*t2"));
  CHECK(contains(r.out, "Lie"));
}

TEST_CASE("picard json") {
  auto r = run({"picard", "--group", "gl", "--h", "3", "--d", "0", "--p", "3",
                "--format", "json"});
  CHECK(r.status == 0);
  CHECK(r.out == "{\"free_rank\":0,\"torsion\":[2]}\n");
}

TEST_CASE("qdim") {
  auto r = run({"qdim", "--group", "sp", "--n", "1", "--parabolic", "borel",
                "--q", "2"});
  CHECK(r.status == 0);
  CHECK(r.out == "2\n");
  auto gl = run({"qdim", "--group", "gl", "--h", "4", "--d", "2", "--q", "3"});
  CHECK(gl.out == "6\n");
}

TEST_CASE("orbits, fzip, bt, m11") {
  CHECK(run({"orbits", "--group", "sp", "--n", "2", "--parabolic", "borel"}).out ==
        "8\n");
  auto f = run({"fzip", "--tau", "0:1,1:1,2:1", "--p", "3", "--format", "json"});
  CHECK(f.status == 0);
  auto j = zipchow::io::Json::parse(f.out);
  CHECK(j["picard"].dump() == R"({"free_rank":2,"torsion":[2]})");
  CHECK(j["rational_dimension"] == 6);
  CHECK(run({"fzip", "--composition", "2,1", "--p", "5"}).status == 0);

  auto bt = run({"bt", "--h", "2", "--d", "1", "--level", "4", "--p", "3",
                 "--max-degree", "1", "--format", "json"});
  CHECK(bt.status == 0);
  auto jb = zipchow::io::Json::parse(bt.out);
  CHECK(jb["localized"]["graded"][1].dump() ==
        R"({"degree":1,"free_rank":1,"torsion":[2]})");
  CHECK(jb["datum"]["level"] == 4);

  auto m = run({"m11", "--p", "7", "--format", "json"});
  CHECK(zipchow::io::Json::parse(m.out)["compatible"] == true);
}

TEST_CASE("validation errors exit 2 with a one-line diagnostic naming the flag") {
  struct Case {
    std::vector<std::string> args;
    std::string flag;
  };
  std::vector<Case> cases{
      {{"frobnicate"}, ""},
      {{}, ""},
      {{"qdim", "--group", "gl", "--h", "2", "--d", "1", "--q", "1"}, "--q"},
      {{"picard", "--group", "gl", "--h", "0", "--d", "0", "--p", "3"}, "--h"},
      {{"picard", "--group", "gl", "--h", "2", "--d", "3", "--p", "3"}, "--d"},
      {{"picard", "--group", "gl", "--h", "2", "--d", "1", "--p", "4"}, "--p"},
      {{"picard", "--group", "gl", "--h", "2", "--d", "1", "--q", "8", "--p", "3"},
       "--q"},
      {{"picard", "--group", "gl", "--h", "2", "--d", "1"}, "--q"},
      {{"picard", "--group", "gl", "--h", "3", "--composition", "1,1", "--q", "2"},
       "--composition"},
      {{"picard", "--group", "sp", "--n", "2", "--q", "2"}, "--parabolic"},
      {{"picard", "--group", "sp", "--n", "2", "--parabolic", "levi", "--q", "2"},
       "--parabolic"},
      {{"picard", "--h", "2", "--d", "1", "--q", "2"}, "--group"},
      {{"graded", "--group", "gl", "--h", "2", "--d", "1", "--q", "2",
        "--max-degree", "-1"},
       "--max-degree"},
      {{"graded", "--group", "gl", "--h", "2", "--d", "1", "--q", "2",
        "--format", "xml"},
       "--format"},
      {{"fzip", "--tau", "0:1,1", "--p", "3"}, "--tau"},
      {{"fzip", "--tau", "0:1", "--p", "6"}, "--p"},
      {{"bt", "--h", "2", "--d", "1", "--level", "0", "--p", "3"}, "--level"},
      {{"m11"}, "--p"},
  };
  for (const auto &c : cases) {
    CAPTURE(c.args.empty() ? std::string("<none>") : c.args.front());
    auto r = run(c.args);
    CHECK(r.status == 2);
    CHECK(r.out.empty());
    CHECK(std::count(r.err.begin(), r.err.end(), '\n') == 1);
    CHECK(contains(r.err, c.flag));
  }
  CHECK(contains(run({"qdim", "--group", "gl", "--h", "2", "--d", "1", "--q", "1"}).err,
                 "quotient not finite-dimensional"));
}

TEST_CASE("matrix cap exceeded exits 3") {
  ::setenv(zipchow::cli::kMatrixCapEnv, "2", 1);
  auto r = run({"graded", "--group", "gl", "--h", "2", "--d", "1", "--q", "3",
                "--max-degree", "3"});
  CHECK(r.status == 3);
  CHECK(contains(r.err, "exceeds"));
  ::setenv(zipchow::cli::kMatrixCapEnv, "abc", 1);
  CHECK(run({"picard", "--group", "gl", "--h", "2", "--d", "1", "--q", "3"}).status == 2);
  ::unsetenv(zipchow::cli::kMatrixCapEnv);
}

TEST_CASE("determinism and JSON round-trip through the CLI") {
  std::vector<std::string> args{"graded", "--group", "gl", "--composition", "1,2",
                                "--h",    "3",       "--p",  "5",
                                "--format", "json"};
  auto a = run(args), b = run(args);
  CHECK(a.status == 0);
  CHECK(a.out == b.out);
  auto parsed = zipchow::io::report_from_json(zipchow::io::Json::parse(a.out));
  auto direct = zipchow::chow_report(
      {zipchow::GroupSpec::gl(3), zipchow::weyl::Composition{{1, 2}}, 5, 5});
  CHECK(parsed == direct);
}

TEST_CASE("--output writes the report to a file") {
  auto path = std::filesystem::temp_directory_path() / "zipchow_cli_output.txt";
  auto r = run({"orbits", "--group", "gl", "--h", "4", "--d", "2", "--output",
                path.string()});
  CHECK(r.status == 0);
  CHECK(r.out.empty());
  std::ifstream in(path);
  std::string line;
  std::getline(in, line);
  CHECK(line == "6");
  std::filesystem::remove(path);
}
