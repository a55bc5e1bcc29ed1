#include <doctest.h>

#include <random>

#include "dp5/construct.hpp"
#include "dp5/factor.hpp"
#include "dp5/parametrize.hpp"
#include "fixtures.hpp"
#include "test_util.hpp"

using namespace dp5;

namespace {

QuinticSeed seed_of(const std::string& s) { return QuinticSeed::from(parse_univariate(s)); }

}  // namespace

TEST_SUITE("construct") {
  TEST_CASE("seed validation") {
    CHECK_THROWS_AS(QuinticSeed::from(parse_univariate("x^4-1")), InvalidInput);
    CHECK_THROWS_AS(QuinticSeed::from(parse_univariate("2*x^5-1")), InvalidInput);
    CHECK_THROWS_AS(QuinticSeed::from(parse_univariate("(x-1)^2*(x^3+2)")), InvalidInput);
    CHECK_NOTHROW(QuinticSeed::from(parse_univariate("x^5-1")));
  }

  TEST_CASE("x^5-1 quintics match the worked example") {
    auto sys = adjoint_quintics(seed_of("x^5-1"));
    CHECK(sys.forms.size() == 6);
    CHECK(same_span(sys.forms, fixtures::cyclo_quintics()));
  }

  TEST_CASE("x^5-1 quadrics match the worked example") {
    auto s = construct_surface(seed_of("x^5-1"));
    CHECK_NOTHROW(s.validate());
    CHECK(same_span(s.quadrics, fixtures::cyclo_quadrics()));
    CHECK(ideal_equal(Ideal(6, s.quadrics), Ideal(6, fixtures::cyclo_quadrics())));
  }

  TEST_CASE("quintics vanish doubly at the five points") {
    // Oracle: evaluate each form and its gradient in Q[x]/(Q) directly.
    for (const char* q : {"x^5-2*x^4-3*x^3+6*x^2-1", "x^5-x^4-5*x^3+4*x^2+3*x-1"}) {
      auto seed = seed_of(q);
      REQUIRE(is_irreducible(seed.poly));
      auto f = make_field(seed.poly);
      NFElem x = NFElem::generator(f);
      std::vector<NFElem> pt{x, x * x, NFElem(1)};
      for (const auto& g : adjoint_quintics(seed).forms) {
        CHECK(is_zero(g.eval(pt)));
        for (int i = 0; i < 3; ++i) CHECK(is_zero(g.derivative(i).eval(pt)));
      }
    }
  }

  TEST_CASE("ideal route agrees with the linear conditions") {
    for (const auto& row : fixtures::table1()) {
      auto seed = seed_of(row.seed);
      CAPTURE(row.seed);
      CHECK(same_span(adjoint_quintics(seed).forms, adjoint_quintics_ideal_route(seed).forms));
    }
  }

  TEST_CASE("point scheme has five points and no linear forms") {
    auto seed = seed_of("x^5-1");
    Ideal b = point_scheme_ideal(seed);
    for (const auto& g : b.basis()) CHECK(g.total_degree() >= 2);
    auto sols = zero_dim_solve_projective(b);
    int n = 0;
    for (const auto& s : sols) n += s.orbit_size() * s.multiplicity;
    CHECK(n == 5);
  }

  TEST_CASE("every table seed yields a surface") {
    for (const auto& row : fixtures::table1()) {
      CAPTURE(row.seed);
      auto s = construct_surface(seed_of(row.seed));
      CHECK_NOTHROW(s.validate());
      // Oracle: the parametrization lands on the surface.
      auto forms = adjoint_quintics(seed_of(row.seed)).forms;
      for (const auto& q : s.quadrics) CHECK(q.substitute(forms).is_zero());
    }
  }

  TEST_CASE("random seeds: adjoint space has dimension 6") {
    std::mt19937_64 rng(7);
    std::uniform_int_distribution<long> coef(-10, 10);
    int done = 0;
    while (done < 200) {
      std::vector<long> c(6);
      for (int i = 0; i < 5; ++i) c[static_cast<size_t>(i)] = coef(rng);
      c[5] = 1;
      QPoly q = testutil::P(c);
      if (!is_squarefree_rational(q)) continue;
      auto sys = adjoint_quintics(QuinticSeed::from(q));
      CHECK(sys.forms.size() == 6);
      ++done;
    }
  }

  TEST_CASE("image of (1:0:0) lies on the surface") {
    for (const auto& row : fixtures::table1()) {
      auto seed = seed_of(row.seed);
      auto forms = adjoint_quintics(seed).forms;
      std::vector<Rational> e0{1, 0, 0};
      std::vector<Rational> img;
      for (const auto& f : forms) img.push_back(f.eval(e0));
      bool nonzero = false;
      for (const auto& v : img) nonzero = nonzero || v != 0;
      CHECK(nonzero);
      for (const auto& q : construct_surface(seed).quadrics) CHECK(q.eval(img) == 0);
    }
  }

  TEST_CASE("split example: cubics and Pfaffians") {
    auto s = implicitize(fixtures::split_cubics());
    auto pf = pfaffians(fixtures::split_syzygy_matrix());
    CHECK(same_span(s.quadrics, pf));
    for (const auto& p : pf) CHECK(p.substitute(fixtures::split_cubics()).is_zero());
  }

  TEST_CASE("degenerate systems are rejected") {
    auto v = fixtures::t_vars();
    std::vector<MPoly> forms = fixtures::parse_all({"t0^2", "t0*t1", "t1^2", "t0*t2", "t1*t2", "t2^2"}, v);
    // Veronese surface: six independent quadrics, not five.
    CHECK_THROWS_WITH_AS(implicitize(forms), "degenerate system", InvalidInput);
  }
}
