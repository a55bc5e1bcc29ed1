#include "doctest.h"

#include "dp5/mpoly.hpp"
#include "dp5/parse.hpp"
#include "fixtures.hpp"

using namespace dp5;

namespace {

std::vector<std::string> xyz() { return {"x", "y", "z"}; }

}  // namespace

TEST_SUITE("mpoly") {

TEST_CASE("grevlex order of degree-2 monomials in 3 variables") {
  auto m = monomials_of_degree(3, 2);
  std::vector<std::string> printed;
  for (auto& mono : m) printed.push_back(MPoly::monomial(3, mono).to_string(xyz()));
  CHECK(printed == std::vector<std::string>{"x^2", "x*y", "y^2", "x*z", "y*z", "z^2"});
}

TEST_CASE("parser round trip and errors") {
  for (std::string s : {"x^2 - 3/4*x*y + 7", "-x*y*z + 2*z^3", "(x+1)(x-1)*y", "x^5 - 1"}) {
    MPoly p = parse_poly(s, xyz());
    CHECK(parse_poly(p.to_string(xyz()), xyz()) == p);
  }
  CHECK(parse_poly("(x+1)(x-1)", xyz()) == parse_poly("x^2-1", xyz()));
  CHECK_THROWS_AS(parse_poly("2x", xyz()), InvalidInput);
  CHECK_THROWS_AS(parse_poly("x y", xyz()), InvalidInput);
  CHECK_THROWS_AS(parse_poly("w + 1", xyz()), InvalidInput);
  CHECK_THROWS_AS(parse_poly("x/y", xyz()), InvalidInput);
  CHECK_THROWS_AS(parse_poly("(x+1", xyz()), InvalidInput);
  try {
    parse_poly("x + + ", xyz());
    FAIL("expected a parse error");
  } catch (const InvalidInput& e) {
    CHECK(std::string(e.what()).find("position") != std::string::npos);
  }
  CHECK(parse_univariate("(x^2+1)(x+1)(x-1)*x") == parse_univariate("x^5 - x"));
}

TEST_CASE("graded_piece_fit without conditions gives coordinate forms") {
  auto f = graded_piece_fit({}, 1, 3);
  REQUIRE(f.size() == 3);
  CHECK(f[0] == MPoly::var(3, 0));
  CHECK(f[1] == MPoly::var(3, 1));
  CHECK(f[2] == MPoly::var(3, 2));
}

TEST_CASE("unique conic through five points") {
  std::vector<RatVector> pts = {{1, 0, 0}, {0, 1, 0}, {0, 0, 1}, {1, 1, 1}, {1, 2, 3}};
  auto mons = monomials_of_degree(3, 2);
  std::vector<RatVector> conds;
  for (auto& p : pts) {
    RatVector row;
    for (auto& m : mons) row.push_back(MPoly::monomial(3, m).eval(p));
    conds.push_back(row);
  }
  auto conics = graded_piece_fit(conds, 2, 3);
  REQUIRE(conics.size() == 1);
  for (auto& p : pts) CHECK(conics[0].eval(p) == 0);
}

TEST_CASE("substitution") {
  MPoly f = parse_poly("x^2*y - 3*z + y*z", xyz());
  MPoly g = parse_poly("x - y^2 + 1/2", xyz());
  std::vector<MPoly> id{MPoly::var(3, 0), MPoly::var(3, 1), MPoly::var(3, 2)};
  CHECK(f.substitute(id) == f);
  std::vector<MPoly> img{parse_poly("x+y", xyz()), parse_poly("z^2", xyz()), parse_poly("x*y-1", xyz())};
  CHECK((f * g).substitute(img) == f.substitute(img) * g.substitute(img));
  CHECK((f + g).substitute(img) == f.substitute(img) + g.substitute(img));
  auto quadrics = fixtures::cyclo_quadrics();
  auto quintics = fixtures::cyclo_quintics();
  for (auto& q : quadrics) CHECK(q.substitute(quintics).is_zero());
}

TEST_CASE("Jacobian ranks") {
  MPoly q = parse_poly("x*y - z^2", xyz());
  RatVector p{1, 0, 0};
  CHECK(rank(jacobian_at<Rational>({q}, p)) == 1);
  auto quadrics = fixtures::cyclo_quadrics();
  RatVector e0{1, 0, 0, 0, 0, 0};
  auto j = jacobian_at(quadrics, e0);
  CHECK(rank(j) == 3);
  // Invariance under rescaling of the point and the generators.
  RatVector e0s{7, 0, 0, 0, 0, 0};
  std::vector<MPoly> scaled;
  for (auto& g : quadrics) scaled.push_back(g * Rational(-3, 2));
  CHECK(rank(jacobian_at(scaled, e0s)) == 3);
  RatVector off{1, 1, 0, 0, 0, 0};
  CHECK_THROWS_AS(jacobian_at(quadrics, off), InvalidInput);
}

TEST_CASE("linear subspace representations agree") {
  auto s = LinearSubspace::from_span(4, {{1, 0, 1, 0}, {0, 1, 0, 1}});
  CHECK(s.dimension() == 1);
  CHECK(s.equations.size() == 2);
  auto t = LinearSubspace::from_equations(4, s.equations);
  CHECK(t.span == s.span);
}

}
