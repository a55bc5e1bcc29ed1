#include <doctest.h>

#include <random>

#include "dp5/factor.hpp"
#include "dp5/groebner.hpp"
#include "dp5/parametrize.hpp"
#include "fixtures.hpp"
#include "test_util.hpp"

using namespace dp5;

namespace {

DP5Surface surface_of(const std::string& seed) {
  return construct_surface(QuinticSeed::from(parse_univariate(seed)));
}

DP5Surface cyclo_surface() { return DP5Surface{fixtures::cyclo_quadrics(), std::nullopt}; }

// Coefficients of a linear form in six variables.
RatVector linear_coeffs(const MPoly& l) {
  RatVector c(6);
  for (const auto& t : l.terms())
    for (int j = 0; j < 6; ++j)
      if (t.m[j] == 1) c[static_cast<size_t>(j)] = t.c;
  return c;
}

std::vector<RatVector> flatten(const SyzygyBasis& s) {
  std::vector<RatVector> out;
  for (const auto& v : s.vectors) {
    RatVector r;
    for (const auto& l : v) {
      auto c = linear_coeffs(l);
      r.insert(r.end(), c.begin(), c.end());
    }
    out.push_back(r);
  }
  return out;
}

}  // namespace

TEST_SUITE("parametrize") {
  TEST_CASE("syzygies of the worked example") {
    auto syz = linear_syzygies(cyclo_surface());
    REQUIRE(syz.vectors.size() == 5);
    for (const auto& v : syz.vectors) {
      MPoly sum(6);
      for (size_t i = 0; i < 5; ++i) sum += v[i] * syz.quadrics[i];
      CHECK(sum.is_zero());
    }
    CHECK(row_space_basis(flatten(syz), 30).size() == 5);
  }

  TEST_CASE("split example: columns of M are syzygies of the Pfaffians") {
    auto m = fixtures::split_syzygy_matrix();
    auto pf = pfaffians(m);
    // Oracle: M times the Pfaffian vector vanishes.
    for (size_t r = 0; r < 5; ++r) {
      MPoly acc(6);
      for (size_t c = 0; c < 5; ++c) acc += m[r][c] * pf[c];
      CHECK(acc.is_zero());
    }
    DP5Surface s{pf, std::nullopt};
    auto syz = linear_syzygies(s);
    auto span = flatten(syz);
    for (size_t c = 0; c < 5; ++c) {
      RatVector col;
      for (size_t r = 0; r < 5; ++r) {
        auto x = linear_coeffs(m[r][c]);
        col.insert(col.end(), x.begin(), x.end());
      }
      auto with = span;
      with.push_back(col);
      CHECK(row_space_basis(with, 30).size() == 5);
    }
  }

  TEST_CASE("non-surfaces are rejected") {
    auto q = fixtures::cyclo_quadrics();
    q[4] = fixtures::parse_all({"x0^2"}, fixtures::x_vars())[0];
    CHECK_THROWS_AS(linear_syzygies(DP5Surface{q, std::nullopt}), InvalidInput);
  }

  TEST_CASE("special subspace: dimension and containment") {
    std::vector<DP5Surface> surfaces{cyclo_surface(), surface_of("x*(x-1)*(x+1)*(x-2)*(x+2)")};
    for (const auto& row : fixtures::table1()) surfaces.push_back(surface_of(row.seed));
    for (const auto& s : surfaces) {
      auto l = special_subspace(linear_syzygies(s));
      CHECK((l.dimension() == 1 || l.dimension() == 2));
      // Oracle: solve L cap Z(P5) directly and evaluate all quadrics.
      std::vector<MPoly> gens = s.quadrics;
      gens.resize(4);
      std::vector<MPoly> cut{s.quadrics[4]};
      for (const auto& e : l.equations) {
        MPoly f(6);
        for (int j = 0; j < 6; ++j)
          if (e[static_cast<size_t>(j)] != 0) f += MPoly::var(6, j) * e[static_cast<size_t>(j)];
        cut.push_back(f);
      }
      Ideal li(6, cut);
      for (const auto& g : gens) {
        // Containment of zero sets: some power of g lies in the ideal.
        bool in_radical = false;
        for (int k = 1; k <= 2 && !in_radical; ++k) in_radical = li.contains(g.pow(k));
        CHECK(in_radical);
      }
    }
  }

  TEST_CASE("special subspace does not depend on the syzygy basis") {
    auto s = surface_of("x^5-2*x^4-3*x^3+6*x^2-1");
    auto syz = linear_syzygies(s);
    auto l1 = special_subspace(syz);
    std::mt19937_64 rng(11);
    std::uniform_int_distribution<int> coef(-5, 5);
    SyzygyBasis mixed = syz;
    for (size_t i = 0; i < 5; ++i)
      for (size_t j = 0; j < 5; ++j) {
        MPoly acc(6);
        for (size_t k = 0; k < 5; ++k) acc += syz.vectors[k][j] * Rational(k == i ? 7 : coef(rng));
        mixed.vectors[i][j] = acc;
      }
    REQUIRE(row_space_basis(flatten(mixed), 30).size() == 5);
    auto l2 = special_subspace(mixed);
    CHECK(row_space_basis(l1.equations, 6) == row_space_basis(l2.equations, 6));
  }

  TEST_CASE("certificate checker on a planted point") {
    auto s = cyclo_surface();
    auto p = ProjPoint::rational({1, 0, 0, 0, 0, 0});
    for (const auto& c : surface_certificate(s, p)) CHECK(is_zero(c));
    auto bad = ProjPoint::rational({1, 1, 0, 0, 0, 0});
    bool all_zero = true;
    for (const auto& c : surface_certificate(s, bad)) all_zero = all_zero && is_zero(c);
    CHECK_FALSE(all_zero);
  }

  TEST_CASE("find_point: certified, rational or quadratic") {
    CHECK(find_point(cyclo_surface()).certified());
    for (const auto& row : fixtures::table1()) {
      CAPTURE(row.seed);
      auto sp = find_point(surface_of(row.seed));
      CHECK(sp.certified());
      CHECK((sp.is_rational() || sp.point.field->degree() == 2));
    }
  }

  TEST_CASE("quadratic descent") {
    int descended = 0;
    for (const auto& row : fixtures::table1()) {
      auto s = surface_of(row.seed);
      auto sp = find_point(s);
      if (sp.is_rational()) {
        CHECK(rationalize_point(s, sp).point.coords == sp.point.coords);
        continue;
      }
      DescentReport rep;
      auto r = rationalize_point(s, sp, &rep);
      CHECK(r.is_rational());
      CHECK(r.certified());
      CHECK(rep.attempts <= 6);
      if (!rep.line_in_surface) CHECK(rep.multiplicities == std::vector<int>{2, 2, 1});
      ++descended;
    }
    CHECK(descended > 0);
  }

  TEST_CASE("projection from a tangent plane") {
    auto s = cyclo_surface();
    auto par = project_param(s, {1, 0, 0, 0, 0, 0});
    CHECK(verify_parametrization(s, par));
    CHECK(par.degree <= 5);
    CHECK_THROWS_AS(project_param(s, {1, 1, 0, 0, 0, 0}), InvalidInput);
  }

  TEST_CASE("irreducible seed gives degree 5 with five double base points") {
    auto s = surface_of("x^5-x^4-5*x^3+4*x^2+3*x-1");
    auto par = parametrize_surface(s);
    CHECK(verify_parametrization(s, par));
    CHECK(par.degree == 5);
    auto prof = base_point_profile(par);
    CHECK(prof.satisfies_numerics());
    CHECK(prof.five_double_points());
  }

  TEST_CASE("lower degree output keeps the numeric profile") {
    auto s = surface_of("x*(x-1)*(x+1)*(x-2)*(x+2)");
    auto par = parametrize_surface(s);
    CHECK(verify_parametrization(s, par));
    CHECK(base_point_profile(par).satisfies_numerics());
    auto gen = parametrize_surface(s, ParamOptions{InversionMethod::Interpolation, true});
    CHECK(gen.degree == 5);
    CHECK(base_point_profile(gen).five_double_points());
  }

  TEST_CASE("symbolic inversion agrees with interpolation") {
    auto s = cyclo_surface();
    auto a = project_param(s, {1, 0, 0, 0, 0, 0});
    auto b = project_param(s, {1, 0, 0, 0, 0, 0}, InversionMethod::Symbolic);
    CHECK(a.forms == b.forms);
  }

  TEST_CASE("random seeds parametrize") {
    std::mt19937_64 rng(3);
    std::uniform_int_distribution<long> coef(-10, 10);
    int done = 0;
    while (done < 8) {
      std::vector<long> c(6);
      for (int i = 0; i < 5; ++i) c[static_cast<size_t>(i)] = coef(rng);
      c[5] = 1;
      QPoly q = testutil::P(c);
      if (!is_squarefree_rational(q)) continue;
      CAPTURE(format_univariate(q));
      auto s = construct_surface(QuinticSeed::from(q));
      auto par = parametrize_surface(s);
      CHECK(verify_parametrization(s, par));
      ++done;
    }
  }
}
