#include "doctest.h"

#include "dp5/numfield.hpp"
#include "test_util.hpp"

using namespace dp5;
using testutil::P;

TEST_SUITE("numfield") {

TEST_CASE("quadratic conjugation") {
  auto k = make_field(P({-5, 0, 1}));
  NFElem e = NFElem::from_coords(k, {Rational(3), Rational(-2, 7)});
  NFElem c = e.conjugate();
  CHECK(c.coords()[0] == 3);
  CHECK(c.coords()[1] == Rational(2, 7));
  CHECK(c.conjugate() == e);
  NFElem r(k, QPoly::constant(Rational(4)));
  CHECK(r.conjugate() == r);
  // a^2 - d b^2
  NFElem n = e * c;
  CHECK(n.is_rational());
  CHECK(n.rational_value() == Rational(9) - 5 * Rational(4, 49));
  CHECK(e.norm() == n.rational_value());
  auto cubic = make_field(P({-2, 0, 0, 1}));
  CHECK_THROWS_AS(NFElem::generator(cubic).conjugate(), InvalidInput);
}

TEST_CASE("inverse") {
  auto k = make_field(P({-2, 0, 0, 1}));
  NFElem a = NFElem::generator(k) + NFElem(1);
  CHECK(a * a.inverse() == NFElem(1));
}

TEST_CASE("x^2+1 splits over Q(i)") {
  auto k = make_field(P({1, 0, 1}));
  auto f = factor_over_field(to_kpoly(P({1, 0, 1}), k), k);
  REQUIRE(f.size() == 2);
  CHECK(f[0].degree() == 1);
  CHECK(f[0] * f[1] == to_kpoly(P({1, 0, 1}), k));
}

TEST_CASE("cyclotomic quartic has a root in its stem field") {
  QPoly m = P({1, 1, 1, 1, 1});
  auto k = make_field(m);
  auto f = factor_over_field(to_kpoly(m, k), k);
  CHECK(f.size() == 4);
  KPoly prod = KPoly::constant(NFElem(1));
  for (auto& g : f) {
    CHECK(g.degree() == 1);
    prod = prod * g;
  }
  CHECK(prod == to_kpoly(m, k));
}

TEST_CASE("x^3-2 stays irreducible over Q(sqrt(-3))") {
  auto k = make_field(P({3, 0, 1}));
  auto f = factor_over_field(to_kpoly(P({-2, 0, 0, 1}), k), k);
  CHECK(f.size() == 1);
  // Oracle: a root u + v*sqrt(-3) would make the norm polynomial of x^3-2
  // over k have a rational root; the norm is (x^3-2)^2.
  QPoly n = norm_poly(to_kpoly(P({-2, 0, 0, 1}), k), k);
  CHECK(n == P({-2, 0, 0, 1}) * P({-2, 0, 0, 1}));
  CHECK(rational_roots(n).empty());
}

TEST_CASE("Trager factors multiply back") {
  auto k = make_field(P({-2, 0, 0, 1}));
  QPoly g = P({-2, 0, 0, 1}) * P({1, 1, 1});
  auto f = factor_over_field(to_kpoly(g, k), k);
  KPoly prod = KPoly::constant(NFElem(1));
  for (auto& h : f) prod = prod * h;
  CHECK(prod == to_kpoly(g, k));
  CHECK(f.size() == 3);  // x - a, a quadratic cofactor, and x^2+x+1 (the field is real)
}

TEST_CASE("non-squarefree input rejected") {
  auto k = make_field(P({1, 0, 1}));
  CHECK_THROWS_AS(factor_over_field(to_kpoly(P({1, 2, 1}), k), k), InvalidInput);
}

TEST_CASE("splitting tower degrees") {
  CHECK(splitting_tower(P({-1, 3, 3, -4, -1, 1})).total_degree == 5);
  CHECK(splitting_tower(P({1, 0, 1}) * P({4, 0, 1}) * P({0, 1})).total_degree == 2);
  CHECK(splitting_tower(P({-2, 0, 0, 1})).total_degree == 6);
  CHECK(splitting_tower(P({5, 0, -4, 0, 1}) * P({0, 1})).total_degree == 8);
  CHECK(splitting_tower(P({-2, 0, 0, 1}) * P({-5, 0, 1})).total_degree == 12);
  CHECK(splitting_tower(P({2, 0, 0, 1}) * P({1, 1, 1})).total_degree == 6);
}

TEST_CASE("A5 tower has degree 60") {
  CHECK(splitting_tower(P({9, 18, -5, -11, 0, 1})).total_degree == 60);
}

TEST_CASE("tower degree bound") {
  CHECK_THROWS_AS(splitting_tower(P({9, 18, -5, -11, 0, 1}), 30), ResourceLimit);
}

TEST_CASE("same splitting field") {
  QPoly c2a = P({1, 0, 1}) * P({4, 0, 1}) * P({0, 1});
  QPoly c2b = P({1, 0, 1}) * P({1, 1}) * P({-1, 1}) * P({0, 1});
  CHECK(same_splitting_field(c2a, c2a));
  CHECK(same_splitting_field(c2a, c2b));
  CHECK_FALSE(same_splitting_field(P({1, 0, 1}), P({-2, 0, 1})));
  // x^3-2 and x^3-2*9 (root 2^(1/3)*9^(1/3)) share a splitting field.
  CHECK(same_splitting_field(P({-2, 0, 0, 1}), P({-4, 0, 0, 1})));
  // S4 quartic times x against its image under x -> 3x + 1.
  QPoly f = P({1, -1, -4, 0, 1}) * P({0, 1});
  QPoly g = f.compose(P({1, 3}));
  CHECK(same_splitting_field(f, g));
  CHECK_FALSE(same_splitting_field(f, P({1, -1, -4, 0, 1}) * P({1, 0, 1})));
}

}
