#include <doctest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "dp5/cli.hpp"
#include "dp5/galois.hpp"
#include "dp5/io.hpp"
#include "fixtures.hpp"

using namespace dp5;

namespace {

struct Run {
  int code;
  std::string out, err;
};

Run run(std::vector<std::string> args) {
  args.insert(args.begin(), "dp5");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out, err;
  int code = run_cli(static_cast<int>(argv.size()), argv.data(), out, err);
  return {code, out.str(), err.str()};
}

std::string temp_path(const std::string& name) {
  auto dir = std::filesystem::temp_directory_path() / "dp5_cli_test";
  std::filesystem::create_directories(dir);
  return (dir / name).string();
}

void write_file(const std::string& path, const std::string& text) { std::ofstream(path) << text; }

}  // namespace

TEST_SUITE("cli") {
  TEST_CASE("construct x^5-1 gives the worked example quadrics") {
    auto r = run({"construct", "--seed", "x^5-1", "--json"});
    REQUIRE(r.code == 0);
    auto s = io::surface_from_json(io::json::parse(r.out));
    CHECK(same_span(s.quadrics, fixtures::cyclo_quadrics()));
    CHECK(s.seed.has_value());
  }

  TEST_CASE("output is byte-identical across runs") {
    auto a = run({"construct", "--seed", "x^5-x^4-5*x^3+4*x^2+3*x-1"});
    auto b = run({"construct", "--seed", "x^5-x^4-5*x^3+4*x^2+3*x-1"});
    CHECK(a.out == b.out);
    CHECK(run({"classify", "--seed", "x^5-2"}).out == run({"classify", "--seed", "x^5-2"}).out);
  }

  TEST_CASE("classify prints the table row") {
    auto r = run({"classify", "--seed", "(x^2+1)(x+1)(x-1)*x"});
    CHECK(r.code == 0);
    CHECK(r.out == "C2, orbits 7, degree 3\n");
    CHECK(run({"classify", "--seed", "x^5-x-1"}).out.find("slow path") != std::string::npos);
  }

  TEST_CASE("parse errors exit 1 and name the position") {
    auto r = run({"classify", "--seed", "x^5+*x"});
    CHECK(r.code == 1);
    CHECK(r.err.find("position") != std::string::npos);
    CHECK(run({"construct", "--seed", "x^4-1"}).code == 1);
    CHECK(run({"frobnicate"}).code == 1);
  }

  TEST_CASE("construct, parametrize, verify through files") {
    const std::string sp = temp_path("s.json"), pp = temp_path("p.json");
    REQUIRE(run({"construct", "--seed", "x^5-1", "-o", sp}).code == 0);
    auto p = run({"parametrize", "--surface", sp, "--verify", "-o", pp});
    REQUIRE(p.code == 0);
    CHECK(p.err.find("verified") != std::string::npos);
    auto v = run({"verify", "--surface", sp, "--param", pp});
    CHECK(v.code == 0);
    CHECK(v.out.rfind("ok", 0) == 0);
    // Independent check of the written parametrization.
    auto s = io::surface_from_json(io::read_file(sp));
    auto par = io::parametrization_from_json(io::read_file(pp));
    for (const auto& q : s.quadrics) CHECK(q.substitute(par.forms).is_zero());
  }

  TEST_CASE("verify rejects a parametrization of another surface") {
    const std::string s1 = temp_path("a.json"), s2 = temp_path("b.json"), pp = temp_path("pa.json");
    REQUIRE(run({"construct", "--seed", "x^5-1", "-o", s1}).code == 0);
    REQUIRE(run({"construct", "--seed", "x^5-2", "-o", s2}).code == 0);
    REQUIRE(run({"parametrize", "--surface", s1, "-o", pp}).code == 0);
    CHECK(run({"verify", "--surface", s2, "--param", pp}).code == 1);
  }

  TEST_CASE("malformed files exit 1") {
    const std::string bad = temp_path("bad.json");
    write_file(bad, "{\"version\": 1, \"quadrics\": [");
    auto r = run({"parametrize", "--surface", bad});
    CHECK(r.code == 1);
    CHECK(r.err.find("byte") != std::string::npos);
    write_file(bad, "{\"version\": 1, \"quadrics\": [{\"vars\": [\"x0\"], \"terms\": []}]}");
    CHECK(run({"parametrize", "--surface", bad}).code == 1);
    CHECK(run({"parametrize", "--surface", temp_path("missing.json")}).code == 1);
  }

  TEST_CASE("isom accepts seeds and surface files") {
    const std::string sp = temp_path("iso.json");
    REQUIRE(run({"construct", "--seed", "x^5-x-1", "-o", sp}).code == 0);
    auto r = run({"isom", "--a", sp, "--b", "x^5-x+1"});
    CHECK(r.code == 0);
    CHECK(r.out.rfind("isomorphic", 0) == 0);
    auto n = run({"isom", "--a", "(x^2+1)*(x^2+4)*x", "--b", "(x^2+1)*(x+1)*(x-1)*x"});
    CHECK(n.out.rfind("not isomorphic", 0) == 0);
    CHECK(n.out.find("reason:") != std::string::npos);
  }

  TEST_CASE("resource limit exits 2") {
    setenv("DP5_MAX_TOWER_DEGREE", "4", 1);
    // Same splitting field, different stem fields: only the towers decide.
    auto r = run({"isom", "--a", "(x^4-2)*x", "--b", "(x^4+8)*x"});
    unsetenv("DP5_MAX_TOWER_DEGREE");
    CHECK(r.code == 2);
    CHECK(r.out.find("undecided") != std::string::npos);
  }

  TEST_CASE("json round trip") {
    auto seed = QuinticSeed::from(parse_univariate("x^5-3*x+1/2"));
    auto sys = adjoint_quintics(seed);
    auto s = implicitize(sys.forms);
    s.seed = seed.poly;
    auto j = io::surface_to_json(s, sys.forms);
    auto back = io::surface_from_json(io::json::parse(io::dump(j)));
    CHECK(back.quadrics == s.quadrics);
    CHECK(*back.seed == seed.poly);
    CHECK(io::surface_to_json(back, sys.forms) == j);
    auto par = parametrize_surface(s);
    auto pj = io::parametrization_to_json(par);
    auto pb = io::parametrization_from_json(io::json::parse(io::dump(pj)));
    CHECK(pb.forms == par.forms);
    CHECK(pb.projection == par.projection);
    CHECK(pb.center == par.center);
    CHECK(pb.degree == par.degree);
  }

  TEST_CASE("table passes") {
    auto r = run({"table"});
    CHECK(r.code == 0);
    CHECK(r.out.find("all 20 rows pass") != std::string::npos);
  }
}
