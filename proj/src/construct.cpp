#include "dp5/construct.hpp"

#include <algorithm>

#include "dp5/factor.hpp"

namespace dp5 {

namespace {

// Reduced echelon basis with columns in lex order (t0 > t1 > t2), pivots
// scaled to positive integers. Rows come out by descending lex leader.
std::vector<MPoly> lex_echelon(const std::vector<MPoly>& forms, int d) {
  auto mons = monomials_of_degree(3, d);
  std::sort(mons.begin(), mons.end(), [](const Monomial& a, const Monomial& b) { return a.e > b.e; });
  std::vector<RatVector> rows;
  for (const auto& f : forms) rows.push_back(coefficients_on(f, mons));
  std::vector<MPoly> out;
  for (auto r : row_space_basis(rows, mons.size())) {
    Integer den = lcm_denominators_range(r.data(), r.data() + r.size());
    for (auto& c : r) c *= den;
    Integer g = 0;
    for (const auto& c : r) g = gcd(g, Integer(c.get_num()));
    for (auto& c : r) c /= g;
    out.push_back(form_from_coefficients(3, mons, r));
  }
  return out;
}

}  // namespace

QuinticSeed QuinticSeed::from(const QPoly& p) {
  if (p.degree() != 5) throw InvalidInput("seed must have degree 5, got " + std::to_string(p.degree()));
  if (p.lead() != 1) throw InvalidInput("seed must be monic");
  if (!is_squarefree_rational(p)) throw InvalidInput("seed must be squarefree");
  return QuinticSeed{p};
}

void DP5Surface::validate() const {
  if (quadrics.size() != 5) throw InvalidInput("a surface needs exactly 5 quadrics");
  for (const auto& q : quadrics) {
    if (q.nvars() != 6) throw InvalidInput("quadrics must be in 6 variables x0..x5");
    if (q.is_zero() || !q.is_homogeneous() || q.total_degree() != 2)
      throw InvalidInput("surface equations must be quadratic forms");
  }
  if (echelon_span(quadrics).size() != 5) throw InvalidInput("quadrics are linearly dependent");
}

Ideal point_scheme_ideal(const QuinticSeed& seed) {
  // Variables s, t, u. Q_h(t, u) = u^5 Q(t/u).
  const MPoly s = MPoly::var(3, 0), t = MPoly::var(3, 1), u = MPoly::var(3, 2);
  MPoly qh(3);
  for (int i = 0; i <= 5; ++i) qh += t.pow(i) * u.pow(5 - i) * seed.poly.coeff(i);
  Ideal i1(3, {qh, t * t - s * u});
  // The only point of I1 with u = 0 is (1:0:0); remove it.
  return saturate(i1, Ideal(3, {u}));
}

QuinticSystem adjoint_quintics(const QuinticSeed& seed) {
  const QPoly& q = seed.poly;
  auto mons = monomials_of_degree(3, 5);
  // Column j: monomial t0^a t1^b t2^c evaluated at (x, x^2, 1), and its
  // t0- and t1-derivatives, all reduced modulo Q.
  std::vector<RatVector> rows(15, RatVector(mons.size()));
  auto xpow = [&](int k) { return QPoly::monomial(Rational(1), k) % q; };
  for (size_t j = 0; j < mons.size(); ++j) {
    const int a = mons[j][0], b = mons[j][1];
    QPoly val = xpow(a + 2 * b);
    QPoly d0 = a > 0 ? xpow(a - 1 + 2 * b) * Rational(a) : QPoly();
    QPoly d1 = b > 0 ? xpow(a + 2 * (b - 1)) * Rational(b) : QPoly();
    for (int k = 0; k < 5; ++k) {
      rows[static_cast<size_t>(k)][j] = val.coeff(k);
      rows[static_cast<size_t>(5 + k)][j] = d0.coeff(k);
      rows[static_cast<size_t>(10 + k)][j] = d1.coeff(k);
    }
  }
  QuinticSystem sys;
  sys.seed = q;
  sys.forms = lex_echelon(graded_piece_fit(rows, 5, 3), 5);
  if (sys.forms.size() != 6) throw Error("adjoint quintic space has dimension " + std::to_string(sys.forms.size()));
  return sys;
}

QuinticSystem adjoint_quintics_ideal_route(const QuinticSeed& seed) {
  Ideal b = point_scheme_ideal(seed);
  std::vector<MPoly> sq;
  const auto& g = b.basis();
  for (size_t i = 0; i < g.size(); ++i)
    for (size_t j = i; j < g.size(); ++j) sq.push_back(g[i] * g[j]);
  Ideal b2 = saturate(Ideal(3, sq), irrelevant_ideal(3));
  auto mons = monomials_of_degree(3, 5);
  // Degree-5 forms with zero normal form: kernel of the normal-form map.
  auto nmons = monomials_of_degree(3, 5);
  std::vector<RatVector> cols;
  for (const auto& m : mons) cols.push_back(coefficients_on(normal_form(MPoly::monomial(3, m), b2.basis()), nmons));
  RatMatrix a(nmons.size(), mons.size());
  for (size_t j = 0; j < mons.size(); ++j)
    for (size_t i = 0; i < nmons.size(); ++i) a(i, j) = cols[j][i];
  std::vector<MPoly> forms;
  // (s, t, u) -> (t1, t0, t2)
  std::vector<MPoly> rename{MPoly::var(3, 1), MPoly::var(3, 0), MPoly::var(3, 2)};
  for (const auto& v : kernel_basis(a)) forms.push_back(form_from_coefficients(3, mons, v).substitute(rename));
  QuinticSystem sys;
  sys.seed = seed.poly;
  sys.forms = lex_echelon(forms, 5);
  return sys;
}

DP5Surface implicitize(const std::vector<MPoly>& forms) {
  if (forms.size() != 6) throw InvalidInput("implicitize expects six forms");
  const int d = forms.front().total_degree();
  const int nt = forms.front().nvars();
  auto quad = monomials_of_degree(6, 2);
  auto target = monomials_of_degree(nt, 2 * d);
  RatMatrix a(target.size(), quad.size());
  for (size_t j = 0; j < quad.size(); ++j) {
    MPoly prod = MPoly::constant(nt, 1);
    for (int i = 0; i < 6; ++i)
      for (int k = 0; k < quad[j][i]; ++k) prod = prod * forms[static_cast<size_t>(i)];
    RatVector c = coefficients_on(prod, target);
    for (size_t i = 0; i < target.size(); ++i) a(i, j) = c[i];
  }
  auto ker = kernel_basis(a);
  if (ker.size() != 5) throw InvalidInput("degenerate system");
  std::vector<MPoly> q;
  for (const auto& v : ker) q.push_back(form_from_coefficients(6, quad, v));
  DP5Surface s;
  s.quadrics = echelon_span(q);
  return s;
}

DP5Surface construct_surface(const QuinticSeed& seed) {
  DP5Surface s = implicitize(adjoint_quintics(seed).forms);
  s.seed = seed.poly;
  return s;
}

}  // namespace dp5
