#include "dp5/parametrize.hpp"

#include <algorithm>
#include <array>
#include <cstdlib>
#include <numeric>
#include <random>

#include "dp5/factor.hpp"
#include "dp5/groebner.hpp"

namespace dp5 {

namespace {

constexpr int kDescentBudget = 6;
constexpr std::uint64_t kFitPrime = 2305843009213693951ULL;  // 2^61 - 1

Rational coord(const NFElem& e, int i) { return e.poly().coeff(i); }

// x = sum_i lambda_i basis[i], as linear forms in lambda.
std::vector<MPoly> span_images(const std::vector<RatVector>& basis) {
  const int k = static_cast<int>(basis.size());
  std::vector<MPoly> img(basis.front().size(), MPoly(k));
  for (int i = 0; i < k; ++i)
    for (size_t j = 0; j < img.size(); ++j)
      if (basis[static_cast<size_t>(i)][j] != 0) img[j] += MPoly::var(k, i) * basis[static_cast<size_t>(i)][j];
  return img;
}

std::vector<MPoly> restrict_to(const std::vector<MPoly>& polys, const std::vector<RatVector>& basis) {
  auto img = span_images(basis);
  std::vector<MPoly> out;
  for (const auto& p : polys) out.push_back(p.substitute(img));
  return out;
}

std::vector<NFElem> combine(const std::vector<RatVector>& basis, const std::vector<NFElem>& lambda) {
  std::vector<NFElem> x(basis.front().size(), NFElem(0));
  for (size_t i = 0; i < basis.size(); ++i)
    for (size_t j = 0; j < x.size(); ++j)
      if (basis[i][j] != 0) x[j] = x[j] + lambda[i] * NFElem(basis[i][j]);
  return x;
}

SurfacePoint certified_point(const DP5Surface& s, std::vector<NFElem> coords) {
  SurfacePoint sp;
  sp.point = ProjPoint::normalized(std::move(coords));
  sp.certificate = surface_certificate(s, sp.point);
  if (!sp.certified()) throw Error("constructed point is not on the surface");
  return sp;
}

// Zero of a binary quadratic form a l0^2 + b l0 l1 + c l1^2 on the line
// spanned by b0, b1. The form is assumed not identically zero.
SurfacePoint point_on_line(const DP5Surface& s, const RatVector& b0, const RatVector& b1, const MPoly& q) {
  Monomial m20, m11, m02;
  m20[0] = 2;
  m11[0] = 1;
  m11[1] = 1;
  m02[1] = 2;
  const Rational a = q.coeff(m20), b = q.coeff(m11), c = q.coeff(m02);
  auto at = [&](const NFElem& l0, const NFElem& l1) { return combine({b0, b1}, {l0, l1}); };
  if (a == 0) return certified_point(s, at(1, 0));
  QPoly t({c / a, b / a, Rational(1)});
  auto roots = rational_roots(t);
  if (!roots.empty()) return certified_point(s, at(*std::min_element(roots.begin(), roots.end()), 1));
  FieldPtr k = make_field(t, true);
  return certified_point(s, at(NFElem::generator(k), 1));
}

bool vanishes_on_span(const std::vector<MPoly>& quadrics, const std::vector<RatVector>& basis) {
  for (const auto& p : restrict_to(quadrics, basis))
    if (!p.is_zero()) return false;
  return true;
}

RatVector solution_rational(const std::vector<NFElem>& v) {
  RatVector r;
  for (const auto& e : v) r.push_back(e.rational_value());
  return r;
}

// Common content of a tuple of forms removed, leading sign fixed by the
// first nonzero form.
std::vector<MPoly> primitive_tuple(std::vector<MPoly> f) {
  std::vector<Rational> all;
  for (const auto& p : f)
    for (const auto& t : p.terms()) all.push_back(t.c);
  if (all.empty()) return f;
  Integer den = lcm_denominators_range(all.data(), all.data() + all.size());
  Integer g = 0;
  for (const auto& c : all) g = gcd(g, Integer(Rational(c * den).get_num()));
  Rational scale(den, g);
  scale.canonicalize();
  for (const auto& p : f)
    if (!p.is_zero()) {
      if (p.lead().c < 0) scale = -scale;
      break;
    }
  for (auto& p : f) p = p * scale;
  return f;
}

std::vector<MPoly> linear_forms(const std::vector<RatVector>& rows) {
  std::vector<MPoly> out;
  for (const auto& r : rows) {
    MPoly l(static_cast<int>(r.size()));
    for (size_t j = 0; j < r.size(); ++j)
      if (r[j] != 0) l += MPoly::var(static_cast<int>(r.size()), static_cast<int>(j)) * r[j];
    out.push_back(l);
  }
  return out;
}

// Degree-d forms F (six of them) with F proportional to the given sample
// values at the sample points. Empty if the kernel is not one-dimensional.
std::vector<MPoly> fit_forms(const std::vector<RatVector>& params, const std::vector<RatVector>& values, int d,
                             size_t* kernel_dim) {
  auto mons = monomials_of_degree(3, d);
  const size_t nm = mons.size();
  RatMatrix a(0, 6 * nm);
  for (size_t s = 0; s < params.size(); ++s) {
    RatVector mv(nm);
    for (size_t i = 0; i < nm; ++i) {
      Rational v = 1;
      for (int k = 0; k < 3; ++k)
        for (int e = 0; e < mons[i][k]; ++e) v *= params[s][static_cast<size_t>(k)];
      mv[i] = v;
    }
    const auto& x = values[s];
    size_t piv = 0;
    while (x[piv] == 0) ++piv;
    for (size_t j = 0; j < 6; ++j) {
      if (j == piv) continue;
      RatVector row(6 * nm);
      for (size_t i = 0; i < nm; ++i) {
        row[j * nm + i] = mv[i] * x[piv];
        row[piv * nm + i] = -mv[i] * x[j];
      }
      a.append_row(row);
    }
  }
  // Rank and a row basis modulo a large prime; the exact kernel is then
  // taken on those rows only. The caller verifies the result exactly.
  auto rows = independent_rows_mod_p(a, kFitPrime);
  *kernel_dim = a.cols() - rows.size();
  if (*kernel_dim != 1) return {};
  RatMatrix sub(0, a.cols());
  for (size_t r : rows) sub.append_row(a.row(r));
  auto ker = kernel_basis(sub);
  if (ker.size() != 1) return {};
  std::vector<MPoly> forms;
  for (size_t j = 0; j < 6; ++j) {
    RatVector c(ker[0].begin() + static_cast<long>(j * nm), ker[0].begin() + static_cast<long>((j + 1) * nm));
    forms.push_back(form_from_coefficients(3, mons, c));
  }
  return primitive_tuple(forms);
}

// Exact fit of degree-d forms proportional to given polynomial forms X.
std::vector<MPoly> fit_forms_exact(const std::vector<MPoly>& x, int d, size_t* kernel_dim) {
  auto mons = monomials_of_degree(3, d);
  const size_t nm = mons.size();
  size_t piv = 0;
  while (x[piv].is_zero()) ++piv;
  const int dx = x[piv].total_degree();
  auto target = monomials_of_degree(3, d + dx);
  RatMatrix a(0, 6 * nm);
  for (size_t j = 0; j < 6; ++j) {
    if (j == piv) continue;
    // F_j X_piv - F_piv X_j = 0, coefficientwise.
    std::vector<RatVector> cols_j, cols_p;
    for (size_t i = 0; i < nm; ++i) {
      MPoly m = MPoly::monomial(3, mons[i]);
      cols_j.push_back(coefficients_on(m * x[piv], target));
      cols_p.push_back(coefficients_on(m * x[j], target));
    }
    for (size_t r = 0; r < target.size(); ++r) {
      RatVector row(6 * nm);
      bool any = false;
      for (size_t i = 0; i < nm; ++i) {
        row[j * nm + i] = cols_j[i][r];
        row[piv * nm + i] = -cols_p[i][r];
        any = any || cols_j[i][r] != 0 || cols_p[i][r] != 0;
      }
      if (any) a.append_row(row);
    }
  }
  auto ker = kernel_basis(a);
  *kernel_dim = ker.size();
  if (ker.size() != 1) return {};
  std::vector<MPoly> forms;
  for (size_t j = 0; j < 6; ++j) {
    RatVector c(ker[0].begin() + static_cast<long>(j * nm), ker[0].begin() + static_cast<long>((j + 1) * nm));
    forms.push_back(form_from_coefficients(3, mons, c));
  }
  return primitive_tuple(forms);
}

struct TangentData {
  std::vector<RatVector> tangent;     // basis of the 3-dim vector space over T_pF
  std::vector<RatVector> projection;  // rows of the Jacobian row space (RREF)
  std::vector<size_t> pivots;         // projection[k] has a 1 in column pivots[k]
};

TangentData tangent_data(const DP5Surface& s, const RatVector& p) {
  Matrix<Rational> j = jacobian_at<Rational>(s.quadrics, p);
  TangentData t;
  RatMatrix r = rref(j, &t.pivots);
  if (t.pivots.size() != 3) throw InvalidInput("point is not a smooth point of the surface");
  for (size_t i = 0; i < 3; ++i) t.projection.push_back(r.row(i));
  t.tangent = kernel_basis(j);
  return t;
}

// Affine equations for the fiber over (a:b:c): x = w + sum v_i T_i, with
// w mapping to (a, b, c) under the projection.
std::vector<MPoly> fiber_equations(const DP5Surface& s, const TangentData& td, const std::vector<MPoly>& w) {
  const int nv = w.front().nvars();
  std::vector<MPoly> img = w;
  for (size_t i = 0; i < 3; ++i)
    for (size_t j = 0; j < 6; ++j)
      if (td.tangent[i][j] != 0) img[j] += MPoly::var(nv, static_cast<int>(i)) * td.tangent[i][j];
  std::vector<MPoly> eqs;
  for (const auto& q : s.quadrics) eqs.push_back(q.substitute(img));
  return eqs;
}

std::vector<MPoly> invert_by_interpolation(const DP5Surface& s, const TangentData& td) {
  std::mt19937_64 rng(0x5eed5eedULL);
  std::uniform_int_distribution<int> coef(-12, 12);
  std::vector<RatVector> params, values;
  auto draw = [&](size_t want) {
    int guard = 0;
    while (params.size() < want && guard++ < 40 * static_cast<int>(want)) {
      RatVector abc{coef(rng), coef(rng), coef(rng)};
      if (abc[0] == 0 && abc[1] == 0 && abc[2] == 0) continue;
      std::vector<MPoly> w(6, MPoly(3));
      for (size_t k = 0; k < 3; ++k) w[td.pivots[k]] += MPoly::constant(3, abc[k]);
      std::vector<Solution> sols;
      try {
        sols = zero_dim_solve(Ideal(3, fiber_equations(s, td, w)));
      } catch (const PositiveDimensional&) {
        continue;
      }
      if (sols.size() != 1 || sols[0].field || sols[0].multiplicity != 1) continue;
      RatVector x(6);
      for (size_t k = 0; k < 3; ++k) x[td.pivots[k]] += abc[k];
      auto v = solution_rational(sols[0].point);
      for (size_t i = 0; i < 3; ++i)
        for (size_t j = 0; j < 6; ++j) x[j] += v[i] * td.tangent[i][j];
      params.push_back(abc);
      values.push_back(primitive_vector(x));
    }
  };
  for (size_t want : {60u, 120u}) {
    draw(want);
    for (int d = 1; d <= 5; ++d) {
      size_t kd = 0;
      auto forms = fit_forms(params, values, d, &kd);
      if (!forms.empty()) return forms;
      if (kd > 1) break;  // underdetermined: more samples
    }
  }
  throw Error("interpolation of the inverse map failed");
}

std::vector<MPoly> invert_symbolically(const DP5Surface& s, const TangentData& td) {
  // Variables v1, v2, v3, t0, t1 (lex, t2 = 1).
  const int nv = 5;
  std::vector<MPoly> w(6, MPoly(nv));
  std::vector<MPoly> tt{MPoly::var(nv, 3), MPoly::var(nv, 4), MPoly::constant(nv, 1)};
  for (size_t k = 0; k < 3; ++k) w[td.pivots[k]] += tt[k];
  auto gb = groebner_basis(fiber_equations(s, td, w), TermOrder::Lex);
  // Triangular back-substitution: v_i = N_i / D, solving v3, v2, v1 in turn
  // from basis elements c * v_i + r with c, r free of v_1..v_i.
  MPoly den = MPoly::constant(nv, 1);
  std::vector<MPoly> num(3, MPoly(nv));
  // f(v) with solved v_k = N_k / D, times D^e (e = degree of f in v).
  auto clear = [&](const MPoly& f) {
    int e = 0;
    for (const auto& t : f.terms()) e = std::max(e, t.m[0] + t.m[1] + t.m[2]);
    MPoly out(nv);
    for (const auto& t : f.terms()) {
      Monomial m = t.m;
      MPoly term = MPoly::constant(nv, t.c);
      for (int k = 0; k < 3; ++k) {
        term = term * num[static_cast<size_t>(k)].pow(m[k]);
        m[k] = 0;
      }
      out += term * MPoly::monomial(nv, m) * den.pow(e - (t.m[0] + t.m[1] + t.m[2]));
    }
    return out;
  };
  for (int i = 2; i >= 0; --i) {
    bool found = false;
    for (const auto& f : gb) {
      MPoly c(nv), r(nv);
      bool ok = true;
      for (const auto& t : f.terms()) {
        for (int k = 0; k < i; ++k) ok = ok && t.m[k] == 0;
        if (t.m[i] > 1) ok = false;
        if (!ok) break;
        Monomial m = t.m;
        if (m[i] == 1) {
          m[i] = 0;
          c += MPoly::monomial(nv, m, t.c);
        } else {
          r += MPoly::monomial(nv, m, t.c);
        }
      }
      if (!ok || c.is_zero()) continue;
      // Bring c and r to the common v-degree before clearing.
      int ec = 0, er = 0;
      for (const auto& t : c.terms()) ec = std::max(ec, t.m[0] + t.m[1] + t.m[2]);
      for (const auto& t : r.terms()) er = std::max(er, t.m[0] + t.m[1] + t.m[2]);
      MPoly cc = clear(c), rr = clear(r);
      if (ec < er) cc = cc * den.pow(er - ec);
      if (er < ec) rr = rr * den.pow(ec - er);
      if (cc.is_zero()) continue;
      for (int k = i + 1; k < 3; ++k) num[static_cast<size_t>(k)] = num[static_cast<size_t>(k)] * cc;
      num[static_cast<size_t>(i)] = -(rr * den);
      den = den * cc;
      found = true;
      break;
    }
    if (!found) throw Error("symbolic inversion failed");
  }
  std::vector<MPoly> x(6, MPoly(nv));
  for (size_t j = 0; j < 6; ++j) x[j] = den * w[j];
  for (size_t i = 0; i < 3; ++i)
    for (size_t j = 0; j < 6; ++j)
      if (td.tangent[i][j] != 0) x[j] += num[i] * td.tangent[i][j];
  int deg = 0;
  for (const auto& f : x)
    if (!f.is_zero()) deg = std::max(deg, f.total_degree());
  std::vector<MPoly> hx;
  for (const auto& f : x) {
    std::vector<Term> terms;
    for (const auto& t : f.terms()) {
      Monomial m;
      m[0] = t.m[3];
      m[1] = t.m[4];
      m[2] = static_cast<std::uint16_t>(deg - t.m[3] - t.m[4]);
      terms.push_back({m, t.c});
    }
    hx.push_back(MPoly(3, terms));
  }
  for (int d = 1; d <= 5; ++d) {
    size_t kd = 0;
    auto forms = fit_forms_exact(hx, d, &kd);
    if (!forms.empty()) return forms;
  }
  throw Error("symbolic inversion failed");
}

}  // namespace

bool SurfacePoint::certified() const {
  for (const auto& c : certificate)
    if (!is_zero(c)) return false;
  return !certificate.empty();
}

std::vector<NFElem> surface_certificate(const DP5Surface& s, const ProjPoint& p) {
  std::vector<NFElem> out;
  for (const auto& q : s.quadrics) out.push_back(q.eval(p.coords));
  return out;
}

bool BasePointProfile::satisfies_numerics() const {
  int sq = 0, gen = 0;
  for (const auto& b : points) {
    sq += b.orbit_size * b.multiplicity * b.multiplicity;
    gen += b.orbit_size * b.multiplicity * (b.multiplicity - 1) / 2;
  }
  return degree * degree - sq == 5 && (degree - 1) * (degree - 2) / 2 - gen == 1;
}

bool BasePointProfile::five_double_points() const {
  int n = 0;
  for (const auto& b : points) {
    if (b.multiplicity != 2) return false;
    n += b.orbit_size;
  }
  return degree == 5 && n == 5;
}

SyzygyBasis linear_syzygies(const DP5Surface& surface) {
  surface.validate();
  // Unknowns a_{ij}: A_i = sum_j a_{ij} x_j, i < 5, j < 6.
  auto cubics = monomials_of_degree(6, 3);
  RatMatrix a(cubics.size(), 30);
  for (size_t i = 0; i < 5; ++i)
    for (size_t j = 0; j < 6; ++j) {
      auto c = coefficients_on(MPoly::var(6, static_cast<int>(j)) * surface.quadrics[i], cubics);
      for (size_t r = 0; r < cubics.size(); ++r) a(r, i * 6 + j) = c[r];
    }
  auto ker = kernel_basis(a);
  if (ker.size() != 5) throw InvalidInput("input is not a quintic Del Pezzo in anticanonical form");
  auto rows = row_space_basis(ker, 30);
  SyzygyBasis syz;
  syz.quadrics = surface.quadrics;
  for (const auto& v : rows) {
    std::vector<RatVector> comps;
    for (size_t i = 0; i < 5; ++i) comps.emplace_back(v.begin() + static_cast<long>(6 * i), v.begin() + static_cast<long>(6 * i + 6));
    syz.vectors.push_back(linear_forms(comps));
  }
  return syz;
}

LinearSubspace special_subspace(const SyzygyBasis& syz) {
  std::vector<RatVector> eqs;
  for (const auto& v : syz.vectors) {
    RatVector e(6);
    for (const auto& t : v[4].terms())
      for (int j = 0; j < 6; ++j)
        if (t.m[j] == 1) e[static_cast<size_t>(j)] = t.c;
    eqs.push_back(e);
  }
  LinearSubspace l = LinearSubspace::from_equations(6, eqs);
  if (l.dimension() != 1 && l.dimension() != 2) throw InvalidInput("Lemma 5 violated");
  return l;
}

SurfacePoint find_point(const DP5Surface& surface) {
  LinearSubspace l = special_subspace(linear_syzygies(surface));
  const MPoly& p5 = surface.quadrics[4];
  // A line of L: L itself, or the line lambda2 = 0 when L is a plane.
  std::vector<RatVector> line{l.span[0], l.span[1]};
  MPoly q = restrict_to({p5}, line)[0];
  if (q.is_zero()) {
    // The line lies in Z(P5) and L, hence in the surface.
    return certified_point(surface, combine(line, {NFElem(1), NFElem(0)}));
  }
  return point_on_line(surface, line[0], line[1], q);
}

SurfacePoint rationalize_point(const DP5Surface& surface, const SurfacePoint& q, DescentReport* report) {
  if (!q.certified()) throw InvalidInput("point is not on the surface");
  if (q.is_rational()) return q;
  if (!q.point.field || q.point.field->degree() != 2) throw InvalidInput("point must be rational or quadratic");
  // q = u + theta v with u, v rational.
  RatVector u, v;
  for (const auto& c : q.point.coords) {
    u.push_back(coord(c, 0));
    v.push_back(coord(c, 1));
  }
  DescentReport rep;
  if (vanishes_on_span(surface.quadrics, {u, v})) {
    rep.line_in_surface = true;
    if (report) *report = rep;
    std::vector<NFElem> x;
    for (const auto& c : u) x.emplace_back(c);
    return certified_point(surface, x);
  }
  const auto& qc = q.point.coords;
  std::vector<NFElem> qbar;
  for (const auto& c : qc) qbar.push_back(c.conjugate());
  Matrix<NFElem> jq = jacobian_at<NFElem>(surface.quadrics, qc);
  Matrix<NFElem> jqb = jacobian_at<NFElem>(surface.quadrics, qbar);
  auto tq = kernel_basis(jq);
  if (tq.size() != 3) throw InvalidInput("point is not a smooth point of the surface");
  // Complete q to a basis (q, u1, u2) of T_q; directions r = u1 + m u2.
  std::vector<Vec<NFElem>> basis{qc};
  for (const auto& w : tq) {
    auto trial = basis;
    trial.push_back(w);
    if (rank(Matrix<NFElem>::from_rows(trial, 6)) == trial.size()) basis = trial;
  }
  const Vec<NFElem> u1 = basis[1], u2 = basis[2];
  for (int m = 0; m < kDescentBudget; ++m) {
    ++rep.attempts;
    Vec<NFElem> r(6);
    for (size_t j = 0; j < 6; ++j) r[j] = u1[j] + NFElem(m) * u2[j];
    // r must avoid T_q cap T_qbar.
    bool in_both = true;
    for (size_t i = 0; i < jqb.rows() && in_both; ++i) {
      NFElem acc(0);
      for (size_t j = 0; j < 6; ++j) acc = acc + jqb(i, j) * r[j];
      in_both = is_zero(acc);
    }
    if (in_both) continue;
    RatVector ru, rv;
    for (const auto& c : r) {
      ru.push_back(coord(c, 0));
      rv.push_back(coord(c, 1));
    }
    std::vector<RatVector> n = row_space_basis(std::vector<RatVector>{u, v, ru, rv}, 6);
    if (n.size() != 4) continue;  // T and its conjugate are coplanar
    std::vector<Solution> sols;
    try {
      sols = zero_dim_solve_projective(Ideal(4, restrict_to(surface.quadrics, n)));
    } catch (const PositiveDimensional&) {
      continue;
    }
    std::vector<int> mult;
    const Solution* rat = nullptr;
    int nrat = 0;
    for (const auto& s : sols) {
      for (int k = 0; k < s.orbit_size(); ++k) mult.push_back(s.multiplicity);
      if (!s.field) {
        rat = &s;
        ++nrat;
      }
    }
    if (nrat != 1) continue;
    std::sort(mult.rbegin(), mult.rend());
    rep.multiplicities = mult;
    if (report) *report = rep;
    return certified_point(surface, combine(n, rat->point));
  }
  if (report) *report = rep;
  throw Error("Lemma 7 bound exceeded");
}

Parametrization project_param(const DP5Surface& surface, const RatVector& p, InversionMethod method) {
  TangentData td = tangent_data(surface, p);
  Parametrization par;
  par.center = primitive_vector(p);
  par.projection = linear_forms(td.projection);
  par.forms = method == InversionMethod::Interpolation ? invert_by_interpolation(surface, td)
                                                       : invert_symbolically(surface, td);
  par.degree = par.forms.front().total_degree();
  for (const auto& f : par.forms)
    if (!f.is_zero()) par.degree = f.total_degree();
  if (!verify_parametrization(surface, par)) throw Error("parametrization failed its identity checks");
  return par;
}

bool verify_parametrization(const DP5Surface& surface, const Parametrization& param) {
  if (param.forms.size() != 6 || param.projection.size() != 3) return false;
  for (const auto& q : surface.quadrics)
    if (!q.substitute(param.forms).is_zero()) return false;
  std::vector<MPoly> l;
  for (const auto& f : param.projection) l.push_back(f.substitute(param.forms));
  const MPoly t[3] = {MPoly::var(3, 0), MPoly::var(3, 1), MPoly::var(3, 2)};
  for (int a = 0; a < 3; ++a)
    for (int b = a + 1; b < 3; ++b)
      if (!(l[static_cast<size_t>(a)] * t[b] - l[static_cast<size_t>(b)] * t[a]).is_zero()) return false;
  return !l[0].is_zero() || !l[1].is_zero() || !l[2].is_zero();
}

Parametrization parametrize_surface(const DP5Surface& surface, const ParamOptions& opts) {
  SurfacePoint sp = find_point(surface);
  if (!sp.is_rational()) sp = rationalize_point(surface, sp);
  Parametrization par = project_param(surface, sp.point.rational_coords(), opts.method);
  if (!opts.require_general) return par;
  if (par.degree == 5 && base_point_profile(par).five_double_points()) return par;
  // Move to other rational points: images of parameter values of small
  // height, tried in order of height.
  const Parametrization first = par;
  std::vector<std::array<int, 3>> params;
  for (int h = 1; h <= 3; ++h)
    for (int a = -h; a <= h; ++a)
      for (int b = -h; b <= h; ++b)
        for (int c = -h; c <= h; ++c) {
          if (std::max({std::abs(a), std::abs(b), std::abs(c)}) != h) continue;
          if (std::gcd(std::gcd(a, b), c) != 1) continue;
          // One representative per projective point.
          int lead = a != 0 ? a : (b != 0 ? b : c);
          if (lead < 0) continue;
          params.push_back({a, b, c});
        }
  for (const auto& t : params) {
    std::vector<Rational> tv{Rational(t[0]), Rational(t[1]), Rational(t[2])};
    RatVector x;
    bool zero = true;
    for (const auto& f : first.forms) {
      x.push_back(f.eval(tv));
      zero = zero && x.back() == 0;
    }
    if (zero) continue;
    try {
      par = project_param(surface, primitive_vector(x), opts.method);
    } catch (const InvalidInput&) {
      continue;
    }
    if (par.degree == 5 && base_point_profile(par).five_double_points()) return par;
  }
  throw Error("no rational point off the lines found");
}

BasePointProfile base_point_profile(const Parametrization& param) {
  BasePointProfile prof;
  prof.degree = param.degree;
  std::vector<MPoly> gens;
  for (const auto& f : param.forms)
    if (!f.is_zero()) gens.push_back(f);
  for (const auto& s : zero_dim_solve_projective(Ideal(3, gens))) {
    BasePoint b;
    b.point = s.point;
    b.field = s.field;
    b.orbit_size = s.orbit_size();
    // Order of vanishing: least k with a nonzero k-th partial at the point.
    int k = 0;
    for (;; ++k) {
      bool nonzero = false;
      for (const auto& m : monomials_of_degree(3, k)) {
        for (const auto& f : gens) {
          MPoly d = f;
          for (int i = 0; i < 3; ++i)
            for (int e = 0; e < m[i]; ++e) d = d.derivative(i);
          if (!is_zero(d.eval(s.point))) {
            nonzero = true;
            break;
          }
        }
        if (nonzero) break;
      }
      if (nonzero) break;
    }
    b.multiplicity = k;
    prof.points.push_back(b);
  }
  return prof;
}

std::vector<MPoly> pfaffians(const std::vector<std::vector<MPoly>>& m) {
  if (m.size() != 5) throw InvalidInput("expected a 5x5 matrix");
  std::vector<MPoly> out;
  for (size_t del = 0; del < 5; ++del) {
    std::vector<size_t> k;
    for (size_t i = 0; i < 5; ++i)
      if (i != del) k.push_back(i);
    auto a = [&](size_t i, size_t j) { return m[k[i]][k[j]]; };
    MPoly pf = a(0, 1) * a(2, 3) - a(0, 2) * a(1, 3) + a(0, 3) * a(1, 2);
    out.push_back(del % 2 ? -pf : pf);
  }
  return out;
}

}  // namespace dp5
