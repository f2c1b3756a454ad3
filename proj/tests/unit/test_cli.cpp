#include <cstdlib>
#include <fstream>
#include <sstream>

#include "doctest.h"
#include "json.hpp"
#include "lfactor/cli.hpp"
#include "lfactor/parse.hpp"
#include "lfactor/report.hpp"

using namespace lfac;

namespace {

struct Run {
  int code;
  std::string out, err;
};

Run run(std::vector<std::string> args) {
  args.insert(args.begin(), "lfactor");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out, err;
  int code = run_cli(static_cast<int>(argv.size()), argv.data(), out, err);
  return {code, out.str(), err.str()};
}

std::string data_path(const std::string& name) {
  const char* dir = std::getenv("LFACTOR_TEST_DATA");
  REQUIRE(dir != nullptr);
  return std::string(dir) + "/" + name;
}

std::string slurp(const std::string& path) {
  std::ifstream in(path);
  REQUIRE(in.good());
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

bool contains(const std::string& hay, const std::string& needle) { return hay.find(needle) != std::string::npos; }

}  // namespace

TEST_CASE("compute text reports") {
  auto gl2 = run({"compute", "--group", "gl:2", "--rep", "std"});
  CHECK(gl2.code == kExitOk);
  CHECK(gl2.err.empty());
  CHECK(contains(gl2.out, "degree  2"));
  CHECK(contains(gl2.out, "shift <rho,gamma> = 1/2"));
  CHECK(contains(gl2.out, "equal   yes"));

  auto spin = run({"compute", "--group", "gsp:4", "--rep", "spin"});
  CHECK(spin.code == kExitOk);
  CHECK(contains(spin.out, "degree  4"));
  CHECK(contains(spin.out, "cosets 4  shift <rho,gamma> = 3/2"));
  CHECK(contains(spin.out, "zero {(0,-1,1) (0,1,-1)}"));

  auto sym2 = run({"compute", "--group", "gl:3", "--rep", "hw:2,0,0"});
  CHECK(sym2.code == kExitOk);
  std::size_t gammas = 0;
  for (std::size_t p = 0; (p = sym2.out.find("\ngamma ", p)) != std::string::npos; ++p) ++gammas;
  CHECK(gammas == 2);

  auto numeric = run({"compute", "--group", "gl:2", "--rep", "std", "--character", "2,1/3"});
  CHECK(numeric.code == kExitOk);
  CHECK(contains(numeric.out, "satake  L(s)^-1 = (1 - q^-s*1/3) (1 - q^-s*2)"));
  CHECK(contains(numeric.out, "hecke   L(s)^-1 = (1 - q^-s*1/3) (1 - q^-s*2)"));
}

TEST_CASE("structured output matches goldens and round-trips") {
  for (const auto& [group, rep, file] : std::vector<std::tuple<std::string, std::string, std::string>>{
           {"gl:2", "std", "gl2_std.json"}, {"gsp:4", "spin", "gsp4_spin.json"}, {"gsp:4", "std", "gsp4_std.json"}}) {
    CAPTURE(file);
    auto r = run({"compute", "--group", group, "--rep", rep, "--output", "structured"});
    REQUIRE(r.code == kExitOk);
    CHECK(r.out == slurp(data_path("golden/" + file)));
    CHECK(recanonicalize(r.out) == r.out);
    auto j = nlohmann::json::parse(r.out);
    CHECK(j["group"] == group);
    CHECK(j["equal"] == true);
  }
}

TEST_CASE("exit codes and the success stream") {
  auto bad_group = run({"compute", "--group", "gl:x", "--rep", "std"});
  CHECK(bad_group.code == kExitInput);
  CHECK(bad_group.out.empty());
  CHECK(contains(bad_group.err, "ParseError"));

  auto bad_rep = run({"compute", "--group", "gl:3", "--rep", "spin"});
  CHECK(bad_rep.code == kExitInput);
  CHECK(bad_rep.out.empty());

  auto bad_char = run({"compute", "--group", "gl:2", "--rep", "std", "--character", "1,0"});
  CHECK(bad_char.code == kExitInput);
  CHECK(run({"compute", "--group", "gl:2", "--rep", "std", "--character", "1,2,3"}).code == kExitInput);

  auto too_big = run({"compute", "--group", "gl:6", "--rep", "sym:3", "--max-dim", "10"});
  CHECK(too_big.code == kExitGuard);
  CHECK(too_big.out.empty());
  CHECK(contains(too_big.err, "TooLarge"));

  auto orbit_guard = run({"compute", "--group", "gl:5", "--rep", "hw:4,3,2,1,0", "--max-weyl", "10"});
  CHECK(orbit_guard.code == kExitGuard);
  CHECK(orbit_guard.out.empty());

  CHECK(run({"bogus"}).code == kExitInput);
  CHECK(run({}).code == kExitInput);
  CHECK(run({"compute", "--group", "gl:2"}).code == kExitInput);
  CHECK(run({"verify", "--suite", "nope"}).code == kExitInput);
  CHECK(run({"table1", "--max-rank", "9"}).code == kExitInput);
  CHECK(run({"--help"}).code == kExitOk);
}

TEST_CASE("datum command") {
  auto g = run({"datum", data_path("gsp4.datum")});
  CHECK(g.code == kExitOk);
  CHECK(contains(g.out, "rank 3, semisimple rank 2, 8 roots"));
  CHECK(contains(g.out, "|W| = 8"));
  CHECK(contains(g.out, "dual"));

  auto t = run({"datum", data_path("torus.datum")});
  CHECK(t.code == kExitOk);
  CHECK(contains(t.out, "rank 2, semisimple rank 0, 0 roots"));
  CHECK(contains(t.out, "|W| = 1"));

  auto bad = run({"datum", data_path("bad_cartan.datum")});
  CHECK(bad.code == kExitInput);
  CHECK(bad.out.empty());
  CHECK(contains(bad.err, "InvalidCartan"));

  auto malformed = run({"datum", data_path("malformed.datum")});
  CHECK(malformed.code == kExitInput);
  CHECK(contains(malformed.err, "line 3, column 3"));

  CHECK(run({"datum", data_path("missing.datum")}).code == kExitInput);
  auto guarded = run({"datum", data_path("gsp4.datum"), "--max-weyl", "4"});
  CHECK(guarded.code == kExitOk);
  CHECK(contains(guarded.out, "|W| > 4 (guard)"));
}

TEST_CASE("datum files are accepted as groups") {
  auto a = run({"compute", "--group", "@" + data_path("gsp4.datum"), "--rep", "hw:1,0,0", "--output", "structured"});
  auto b = run({"compute", "--group", "gsp:4", "--rep", "hw:1,0,0", "--output", "structured"});
  REQUIRE(a.code == kExitOk);
  auto ja = nlohmann::json::parse(a.out), jb = nlohmann::json::parse(b.out);
  CHECK(ja["factors"] == jb["factors"]);
  CHECK(ja["shift_exponents"] == jb["shift_exponents"]);
}

TEST_CASE("parsers") {
  CHECK(parse_group("gl:3") == gl(3));
  CHECK(parse_group("gsp:4") == gsp(4));
  CHECK(parse_group("simple:G:2:adj") == simple('G', 2, Isogeny::Adjoint));
  CHECK_THROWS_AS(parse_group("gsp:5"), Error);
  CHECK_THROWS_AS(parse_group("simple:G:2:xx"), Error);
  CHECK_THROWS_AS(parse_group("so:5"), Error);
  CHECK(parse_character("generic", 2).is_generic());
  CHECK(parse_character("2,-1/3", 2).values() == std::vector<Rational>{2, Rational(-1, 3)});
  CHECK_THROWS_AS(parse_character("2,x", 2), Error);
  CHECK_THROWS_AS(parse_character("1/0,1", 2), Error);
  auto d = parse_datum_text("# comment\nrank 1\nsimples 0\n", "t");
  CHECK(d.rank() == 1);
  CHECK_THROWS_AS(parse_datum_text("rank 1\nsimples 1\n2\n", "t"), Error);
}

TEST_CASE("table1 command") {
  auto r = run({"table1", "--max-rank", "2"});
  CHECK(r.code == kExitOk);
  CHECK(contains(r.out, "G2  7  1  "));
  CHECK(contains(r.out, "E8  248  8  "));
  CHECK(contains(r.out, "A1  3  1  {}"));
  CHECK(contains(r.out, "A1  2  0  {1}"));
  CHECK_FALSE(contains(r.out, "A3"));
}

TEST_CASE("verify suites") {
  for (const auto& suite : {"root_identity", "concave", "table1"}) {
    auto r = run({"verify", "--suite", suite});
    CHECK(r.code == kExitOk);
    CHECK(contains(r.out, "all checks passed"));
    CHECK_FALSE(contains(r.out, "FAIL"));
  }
}

TEST_CASE("output does not depend on the thread count") {
  std::vector<std::string> outs;
  for (const char* threads : {"1", "3", "8"}) {
    setenv("LFACTOR_THREADS", threads, 1);
    outs.push_back(run({"verify", "--suite", "triangle"}).out);
    outs.push_back(run({"compute", "--group", "gsp:6", "--rep", "std", "--output", "structured"}).out);
  }
  unsetenv("LFACTOR_THREADS");
  for (std::size_t i = 2; i < outs.size(); ++i) CHECK(outs[i] == outs[i % 2]);
  CHECK(contains(outs[0], "all checks passed"));
}
