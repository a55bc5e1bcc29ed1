#include "doctest.h"

#include "dp5/groebner.hpp"
#include "dp5/parse.hpp"
#include "fixtures.hpp"

using namespace dp5;

namespace {

std::vector<std::string> xy() { return {"x", "y"}; }
MPoly p2(const std::string& s) { return parse_poly(s, xy()); }

}  // namespace

TEST_SUITE("groebner") {

TEST_CASE("trivial bases") {
  auto gb = groebner_basis({p2("x"), p2("y")});
  REQUIRE(gb.size() == 2);
  auto lex = groebner_basis({p2("x^2"), p2("x*y")}, TermOrder::Lex);
  REQUIRE(lex.size() == 2);
  CHECK(lex[0] == p2("x*y"));
  CHECK(lex[1] == p2("x^2"));
}

TEST_CASE("basis is idempotent") {
  std::vector<MPoly> g{p2("x^2 + y^2 - 1"), p2("x*y - 2")};
  for (auto o : {TermOrder::Grevlex, TermOrder::Lex}) {
    auto gb = groebner_basis(g, o);
    CHECK(groebner_basis(gb, o) == gb);
  }
}

TEST_CASE("quotient and saturation") {
  Ideal i(2, {p2("x*y")});
  CHECK(ideal_equal(ideal_quotient(i, Ideal(2, {p2("x")})), Ideal(2, {p2("y")})));
  CHECK(ideal_equal(ideal_quotient(i, Ideal(2, {p2("1")})), i));
  Ideal j(2, {p2("x^2*y")});
  CHECK(ideal_equal(saturate(j, Ideal(2, {p2("x")})), Ideal(2, {p2("y")})));
  Ideal unit(2, {p2("1")});
  CHECK(saturate(unit, Ideal(2, {p2("1")})).is_unit());
  Ideal s = saturate(j, Ideal(2, {p2("x")}));
  CHECK(s.contains(j));
  CHECK(ideal_equal(saturate(s, Ideal(2, {p2("x")})), s));
}

TEST_CASE("quadric ideal of x^5-1 in grevlex") {
  Ideal i(6, fixtures::cyclo_quadrics());
  const auto& gb = i.basis();
  int deg2 = 0;
  for (const auto& g : gb) {
    CHECK(g.total_degree() >= 2);
    if (g.total_degree() == 2) ++deg2;
  }
  CHECK(deg2 == 5);
  CHECK(ideal_equal(i, Ideal(6, gb)));
}

TEST_CASE("affine zero-dimensional solving") {
  auto sols = zero_dim_solve(Ideal(2, {p2("x^2-1"), p2("y")}));
  REQUIRE(sols.size() == 2);
  std::vector<Rational> xs;
  for (auto& s : sols) {
    CHECK(s.field == nullptr);
    CHECK(s.multiplicity == 1);
    xs.push_back(s.point[0].rational_value());
    CHECK(s.point[1].rational_value() == 0);
  }
  std::sort(xs.begin(), xs.end());
  CHECK(xs == std::vector<Rational>{-1, 1});
  auto origin = zero_dim_solve(Ideal(2, {p2("x"), p2("y")}));
  REQUIRE(origin.size() == 1);
  CHECK(origin[0].multiplicity == 1);
  CHECK_THROWS_AS(zero_dim_solve(Ideal(2, {p2("x*y")})), PositiveDimensional);
}

TEST_CASE("multiplicities and number-field orbits") {
  // (x^2-2)^2 = 0, y = x: one orbit of size 2 with multiplicity 2.
  auto sols = zero_dim_solve(Ideal(2, {p2("x^4 - 4*x^2 + 4"), p2("y - x")}));
  REQUIRE(sols.size() == 1);
  CHECK(sols[0].orbit_size() == 2);
  CHECK(sols[0].multiplicity == 2);
  for (auto& g : {p2("x^2 - 2"), p2("y - x")}) CHECK(is_zero(g.eval(sols[0].point)));
}

TEST_CASE("projective solving with a point at x0 = 0") {
  std::vector<std::string> v{"a", "b", "c"};
  Ideal i(3, {parse_poly("a*b", v), parse_poly("c*(a - b) ", v), parse_poly("c^2", v)});
  // Points: (1:0:0) and (0:1:0).
  auto sols = zero_dim_solve_projective(i);
  int total = 0;
  for (auto& s : sols) {
    for (const auto& g : i.generators()) CHECK(is_zero(g.eval(s.point)));
    total += s.multiplicity * s.orbit_size();
  }
  CHECK(sols.size() == 2);
  CHECK(total >= 2);
}

}
