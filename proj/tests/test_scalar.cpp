#include "doctest.h"

#include "dp5/factor.hpp"
#include "dp5/matrix.hpp"
#include "oracles.hpp"
#include "test_util.hpp"

using namespace dp5;

using testutil::P;

TEST_SUITE("scalar") {

TEST_CASE("kernel of identity and zero matrices") {
  CHECK(kernel_basis(RatMatrix::identity(3)).empty());
  auto k = kernel_basis(RatMatrix(2, 3));
  REQUIRE(k.size() == 3);
  for (size_t i = 0; i < 3; ++i)
    for (size_t j = 0; j < 3; ++j) CHECK(k[i][j] == (i == j ? 1 : 0));
}

TEST_CASE("kernel vectors annihilate the matrix") {
  RatMatrix m = RatMatrix::from_rows({{1, 2, 3, 4}, {2, 4, 6, 8}, {Rational(1, 3), 0, -1, 5}}, 4);
  auto k = kernel_basis(m);
  CHECK(k.size() == 2);
  for (const auto& v : k)
    for (const auto& x : m.apply(v)) CHECK(x == 0);
}

TEST_CASE("x^5 - 1 factors as root times cyclotomic") {
  auto f = factor_rational(P({-1, 0, 0, 0, 0, 1}));
  REQUIRE(f.factors.size() == 2);
  CHECK(f.factors[0].first == P({-1, 1}));
  CHECK(f.factors[1].first == P({1, 1, 1, 1, 1}));
}

TEST_CASE("three factors for (x^2+1)(x^2+4)x") {
  QPoly p = P({1, 0, 1}) * P({4, 0, 1}) * P({0, 1});
  auto f = factor_rational(p);
  REQUIRE(f.factors.size() == 3);
  CHECK(f.product() == p);
}

TEST_CASE("S5 seed is irreducible") {
  CHECK(is_irreducible(P({-1, 0, 6, -3, -2, 1})));
}

TEST_CASE("factorization round trip on products") {
  std::vector<QPoly> parts = {P({-2, 0, 0, 1}), P({1, 1, 1}), P({3, -1}), P({1, 0, -4, 0, 1}),
                              P({-1, 0, 6, -3, -2, 1}), P({2, 0, 0, 0, 0, 0, 1})};
  for (size_t i = 0; i < parts.size(); ++i)
    for (size_t j = i; j < parts.size(); ++j) {
      QPoly p = parts[i] * parts[j] * Rational(7, 3);
      auto f = factor_rational(p);
      CHECK(f.product() == p);
      for (auto& [g, m] : f.factors) CHECK(is_irreducible(g));
    }
}

TEST_CASE("factoring a degree 12 product with many modular factors") {
  // Swinnerton-Dyer style: (x^4-10x^2+1)(x^4-4x^2+5)(x^4-x^3-4x^2+4x+1)
  QPoly p = P({1, 0, -10, 0, 1}) * P({5, 0, -4, 0, 1}) * P({1, 4, -4, -1, 1});
  auto f = factor_rational(p);
  CHECK(f.factors.size() == 3);
  CHECK(f.product() == p);
}

TEST_CASE("resultant agrees with Sylvester determinant") {
  CHECK(resultant(P({-1, 1}), P({-2, 1})) == oracle::sylvester_resultant(P({-1, 1}), P({-2, 1})));
  CHECK(resultant(P({-1, 1}), P({-2, 1})) == -1);
  QPoly a = P({3, -1, 0, 2}), b = P({1, 5, 7});
  CHECK(resultant(a, b) == oracle::sylvester_resultant(a, b));
  CHECK(resultant(b, a) == oracle::sylvester_resultant(b, a));
  CHECK(resultant(a, a) == 0);
}

TEST_CASE("discriminant sign convention") {
  CHECK(discriminant(P({1, 0, 1})) == -4);
  CHECK(discriminant(P({-2, 0, 0, 1})) == -108);
  QPoly c5 = P({-1, 3, 3, -4, -1, 1});
  Rational d = discriminant(c5);
  CHECK(d != 0);
  CHECK(is_square_rational(d));
  CHECK(discriminant(P({1, 2, 1})) == 0);
}

TEST_CASE("square tests") {
  CHECK(is_square_rational(Rational(4, 9)));
  CHECK_FALSE(is_square_rational(Rational(-4)));
  Rational d = discriminant(P({5, 0, -4, 0, 1})) * discriminant(P({-4, 0, -8, 0, 1}));
  CHECK_FALSE(is_square_rational(d));
}

}
