#include "dp5/galois.hpp"

#include <algorithm>
#include <array>
#include <map>
#include <numeric>
#include <set>

#include "dp5/factor.hpp"
#include "dp5/groebner.hpp"
#include "dp5/numfield.hpp"
#include "dp5/parse.hpp"

namespace dp5 {

namespace {

Rational binom(int n, int k) {
  Integer r;
  mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
  return Rational(r);
}

// Power sums P_0..P_m of the roots of a monic polynomial.
std::vector<Rational> power_sums(const QPoly& q, int m) {
  const int n = q.degree();
  std::vector<Rational> e(static_cast<size_t>(n) + 1);
  for (int i = 0; i <= n; ++i) e[static_cast<size_t>(i)] = (i % 2 ? -1 : 1) * q.coeff(n - i);
  std::vector<Rational> p(static_cast<size_t>(m) + 1);
  p[0] = n;
  for (int k = 1; k <= m; ++k) {
    Rational acc = 0;
    for (int i = 1; i < k && i <= n; ++i) acc += (i % 2 ? 1 : -1) * e[static_cast<size_t>(i)] * p[static_cast<size_t>(k - i)];
    if (k <= n) acc += (k % 2 ? 1 : -1) * k * e[static_cast<size_t>(k)];
    p[static_cast<size_t>(k)] = acc;
  }
  return p;
}

// Monic polynomial of degree n from the power sums p_1..p_n of its roots.
QPoly from_power_sums(const std::vector<Rational>& p, int n) {
  std::vector<Rational> e(static_cast<size_t>(n) + 1);
  e[0] = 1;
  for (int k = 1; k <= n; ++k) {
    Rational acc = 0;
    for (int i = 1; i <= k; ++i) acc += (i % 2 ? 1 : -1) * e[static_cast<size_t>(k - i)] * p[static_cast<size_t>(i)];
    e[static_cast<size_t>(k)] = acc / k;
  }
  std::vector<Rational> c(static_cast<size_t>(n) + 1);
  for (int k = 0; k <= n; ++k) c[static_cast<size_t>(n - k)] = (k % 2 ? -1 : 1) * e[static_cast<size_t>(k)];
  return QPoly(c);
}

// Characteristic polynomial of g(alpha) in Q[alpha]/(q), q monic irreducible.
QPoly tschirnhaus(const QPoly& q, const QPoly& g) {
  FieldPtr k = make_field(q, true);
  NFElem b(k, g % q);
  const int n = q.degree();
  std::vector<Rational> p(static_cast<size_t>(n) + 1);
  NFElem pw(1);
  for (int i = 1; i <= n; ++i) {
    pw = pw * b;
    p[static_cast<size_t>(i)] = pw.trace();
  }
  return from_power_sums(p, n);
}

// Universal splitting algebra of a monic quintic: Q[x1..x5] modulo the
// Cauchy modules. Variable 0 is x5, variable 4 is x1, so that with lex
// order the module f_k (monic of degree 6-k in x_k) has a pure power of x_k
// as leading monomial and the modules form a Groebner basis.
class SplittingAlgebra {
 public:
  explicit SplittingAlgebra(const QPoly& q) {
    MPoly f(5);
    for (int i = 0; i <= q.degree(); ++i) f += MPoly::var(5, var(1)).pow(i) * q.coeff(i);
    gb_.push_back(f);
    for (int k = 1; k < 5; ++k) {
      f = divided_difference(f, var(k), var(k + 1));
      gb_.push_back(f);
    }
  }
  static int var(int k) { return 5 - k; }  // x_k -> variable index
  MPoly x(int k) const { return MPoly::var(5, var(k)); }
  MPoly reduce(const MPoly& f) const { return normal_form(f, gb_, TermOrder::Lex); }
  MPoly mul(const MPoly& a, const MPoly& b) const { return reduce(a * b); }

 private:
  // (f(.., y, ..) - f(.., z, ..)) / (y - z) with z substituted for y.
  static MPoly divided_difference(const MPoly& f, int y, int z) {
    MPoly out(5);
    for (const auto& t : f.terms()) {
      const int n = t.m[y];
      if (n == 0) continue;
      Monomial base = t.m;
      base[y] = 0;
      for (int i = 0; i < n; ++i) {
        Monomial m = base;
        m[y] = static_cast<std::uint16_t>(m[y] + i);
        m[z] = static_cast<std::uint16_t>(m[z] + n - 1 - i);
        out += MPoly::monomial(5, m, t.c);
      }
    }
    return out;
  }
  std::vector<MPoly> gb_;
};

bool squarefree(const QPoly& p) { return is_squarefree_rational(p); }

std::vector<int> pattern_of(const std::vector<QPoly>& factors) {
  std::vector<int> d;
  for (const auto& f : factors) d.push_back(f.degree());
  std::sort(d.rbegin(), d.rend());
  return d;
}

const QPoly* factor_of_degree(const std::vector<QPoly>& factors, int deg) {
  for (const auto& f : factors)
    if (f.degree() == deg) return &f;
  return nullptr;
}

std::string class_string(const Rational& r) { return squarefree_class(r).get_str(); }

// x^2 + p x + q splits over Q(sqrt(d)).
bool quadratic_splits_over(const Rational& p, const Rational& q, const Rational& d) {
  Rational disc = p * p - 4 * q;
  return disc == 0 || is_square_rational(disc) || is_square_rational(disc * d);
}

struct QuarticInfo {
  std::string type;
  Rational disc;
};

QuarticInfo classify_quartic(const QPoly& f) {
  const Rational a = f.coeff(3), b = f.coeff(2), c = f.coeff(1), d = f.coeff(0);
  QuarticInfo info;
  info.disc = discriminant(f);
  // Resolvent cubic with roots x1 x2 + x3 x4 and its conjugates.
  QPoly r3({-(a * a * d - 4 * b * d + c * c), a * c - 4 * d, -b, Rational(1)});
  auto roots = rational_roots(r3);
  const bool square = is_square_rational(info.disc);
  if (roots.empty()) {
    info.type = square ? "A4" : "S4";
  } else if (roots.size() >= 3) {
    info.type = "C2xC2";
  } else {
    const Rational r = roots[0];
    bool c4 = quadratic_splits_over(-r, d, info.disc) && quadratic_splits_over(a, b - r, info.disc);
    info.type = c4 ? "C4" : "D4";
  }
  return info;
}

std::string classify_quintic(const QPoly& q) {
  const bool square = is_square_rational(discriminant(q));
  QPoly r6 = sextic_resolvent(q);
  QPoly t = q;
  for (int c = 1; !squarefree(r6) && c < 50; ++c) {
    t = tschirnhaus(q, QPoly({Rational(0), Rational(c), Rational(1)}));
    if (squarefree(t)) r6 = sextic_resolvent(t);
  }
  if (!squarefree(r6)) throw Error("no squarefree sextic resolvent found");
  const bool solvable = !rational_roots(r6).empty();
  if (!solvable) return square ? "A5" : "S5";
  if (!square) return "H20";
  return splitting_tower(q).total_degree == 5 ? "C5" : "D5";
}

std::vector<QPoly> rational_factors(const QPoly& q) { return irreducible_factors(q); }

// Conditions "form of degree d vanishes at the point" over Q, one row per
// coordinate of the value in the point's field.
void add_point_conditions(const std::vector<NFElem>& p, int field_degree, int d, std::vector<RatVector>* rows) {
  auto mons = monomials_of_degree(3, d);
  std::vector<std::vector<Rational>> vals;
  for (const auto& m : mons) {
    NFElem v(1);
    for (int i = 0; i < 3; ++i)
      for (int e = 0; e < m[i]; ++e) v = v * p[static_cast<size_t>(i)];
    vals.push_back(std::vector<Rational>());
    for (int c = 0; c < field_degree; ++c) vals.back().push_back(v.poly().coeff(c));
  }
  for (int c = 0; c < field_degree; ++c) {
    RatVector r(mons.size());
    for (size_t j = 0; j < mons.size(); ++j) r[j] = vals[j][static_cast<size_t>(c)];
    rows->push_back(r);
  }
}

QPoly univariate(const MPoly& f) {
  std::vector<Rational> c(static_cast<size_t>(std::max(0, f.total_degree())) + 1);
  for (const auto& t : f.terms()) c[t.m[0]] += t.c;
  return QPoly(c);
}

const QuinticSeed& seed_or_recover(const IsomInput& in, QuinticSeed* store) {
  if (const auto* s = std::get_if<QuinticSeed>(&in)) return *s;
  *store = recover_seed(std::get<DP5Surface>(in));
  return *store;
}

// N(x) = (c x + d)^5 q((a x + b) / (c x + d)).
QPoly mobius_pullback(const QPoly& q, const std::array<Rational, 4>& m) {
  const QPoly num({m[1], m[0]}), den({m[3], m[2]});
  const int n = q.degree();
  QPoly out;
  for (int i = 0; i <= n; ++i) {
    QPoly t = QPoly::constant(q.coeff(i));
    for (int k = 0; k < i; ++k) t = t * num;
    for (int k = i; k < n; ++k) t = t * den;
    out = out + t;
  }
  return out;
}

// Looks for a rational Moebius map carrying the roots of p onto the roots
// of q: a root of q in the stem field of p's largest factor must be
// (a alpha + b) / (c alpha + d). Only a one-dimensional solution space is
// tried; the result is confirmed by exact composition.
bool mobius_related(const QPoly& p, const QPoly& q) {
  auto fac = irreducible_factors(p);
  const QPoly& f = *std::max_element(fac.begin(), fac.end(),
                                     [](const QPoly& x, const QPoly& y) { return x.degree() < y.degree(); });
  if (f.degree() < 4) return false;  // solution space too large; towers are cheap here
  FieldPtr k = make_field(f * (Rational(1) / f.lead()), true);
  const NFElem alpha = NFElem::generator(k);
  for (const auto& g : factor_over_field(to_kpoly(q, k), k)) {
    if (g.degree() != 1) continue;
    const NFElem beta = -g.coeff(0) / g.lead();
    // beta (c alpha + d) - (a alpha + b) = 0, unknowns (a, b, c, d).
    std::vector<NFElem> cols{-alpha, NFElem(-1), beta * alpha, beta};
    RatMatrix m(static_cast<size_t>(k->degree()), 4);
    for (size_t j = 0; j < 4; ++j) {
      auto c = cols[j].coords();
      for (size_t i = 0; i < c.size() && i < m.rows(); ++i) m(i, j) = c[i];
    }
    auto ker = kernel_basis(m);
    if (ker.size() != 1) continue;
    std::array<Rational, 4> mob{ker[0][0], ker[0][1], ker[0][2], ker[0][3]};
    if (mob[0] * mob[3] - mob[1] * mob[2] == 0) continue;
    QPoly pull = mobius_pullback(q, mob);
    if (pull.degree() == p.degree() && pull * (Rational(1) / pull.lead()) == p * (Rational(1) / p.lead())) return true;
  }
  return false;
}

std::string pattern_string(const std::vector<int>& p) {
  std::string s;
  for (int d : p) s += (s.empty() ? "" : ",") + std::to_string(d);
  return "(" + s + ")";
}

}  // namespace

int group_order(const std::string& type) {
  static const std::map<std::string, int> orders{{"1", 1},    {"C2", 2},   {"C3", 3},  {"C4", 4},  {"C2xC2", 4},
                                                 {"C5", 5},   {"S3", 6},   {"C6", 6},  {"D4", 8},  {"D5", 10},
                                                 {"D6", 12},  {"A4", 12},  {"H20", 20}, {"S4", 24}, {"A5", 60},
                                                 {"S5", 120}};
  auto it = orders.find(type);
  return it == orders.end() ? 0 : it->second;
}

int GaloisClass::group_order() const { return dp5::group_order(group_type); }

QPoly pair_resolvent(const QPoly& q, int c) {
  const int n = 10;
  auto p = power_sums(q, 2 * n);
  std::vector<Rational> s(n + 1);
  for (int k = 1; k <= n; ++k) {
    // sum over ordered pairs (i, j) of (x_i + x_j + c x_i x_j)^k ...
    Rational all = 0;
    for (int e = 0; e <= k; ++e)
      for (int a = 0; a + e <= k; ++a) {
        const int b = k - a - e;
        Rational coef = binom(k, e) * binom(k - e, a);
        for (int i = 0; i < e; ++i) coef *= c;
        all += coef * p[static_cast<size_t>(a + e)] * p[static_cast<size_t>(b + e)];
      }
    // ... minus the diagonal (2 x_i + c x_i^2)^k, halved.
    Rational diag = 0;
    for (int j = 0; j <= k; ++j) {
      Rational coef = binom(k, j);
      for (int i = 0; i < k - j; ++i) coef *= 2;
      for (int i = 0; i < j; ++i) coef *= c;
      diag += coef * p[static_cast<size_t>(k + j)];
    }
    s[static_cast<size_t>(k)] = (all - diag) / 2;
  }
  return from_power_sums(s, n);
}

QPoly sextic_resolvent(const QPoly& q) {
  if (q.degree() != 5 || q.lead() != 1) throw InvalidInput("sextic resolvent needs a monic quintic");
  SplittingAlgebra alg(q);
  // The 12 pentagons on {1..5}, grouped with their complements: 6 classes.
  std::set<std::set<std::pair<int, int>>> seen;
  std::vector<MPoly> theta;
  std::vector<int> perm{2, 3, 4, 5};
  do {
    std::vector<int> cyc{1, perm[0], perm[1], perm[2], perm[3]};
    std::set<std::pair<int, int>> edges;
    for (int i = 0; i < 5; ++i) {
      int u = cyc[static_cast<size_t>(i)], v = cyc[static_cast<size_t>((i + 1) % 5)];
      edges.insert({std::min(u, v), std::max(u, v)});
    }
    if (seen.count(edges)) continue;
    std::set<std::pair<int, int>> comp;
    for (int u = 1; u <= 5; ++u)
      for (int v = u + 1; v <= 5; ++v)
        if (!edges.count({u, v})) comp.insert({u, v});
    seen.insert(edges);
    seen.insert(comp);
    MPoly phi(5);
    for (const auto& [u, v] : edges) phi += alg.x(u) * alg.x(v);
    for (const auto& [u, v] : comp) phi -= alg.x(u) * alg.x(v);
    theta.push_back(alg.mul(phi, phi));
  } while (std::next_permutation(perm.begin(), perm.end()));
  // prod (y - theta_i), coefficients in the algebra; they reduce to constants.
  std::vector<MPoly> coef{MPoly::constant(5, 1)};
  for (const auto& th : theta) {
    std::vector<MPoly> next(coef.size() + 1, MPoly(5));
    for (size_t i = 0; i < coef.size(); ++i) {
      next[i + 1] += coef[i];
      next[i] -= alg.mul(coef[i], th);
    }
    coef = next;
  }
  std::vector<Rational> c;
  for (const auto& f : coef) {
    if (!f.is_zero() && (f.terms().size() != 1 || f.lead().m.degree() != 0))
      throw Error("resolvent coefficient is not symmetric");
    c.push_back(f.is_zero() ? Rational(0) : f.lead().c);
  }
  return QPoly(c);
}

int line_orbits(const QuinticSeed& seed) {
  for (int c = 0; c <= 100; ++c) {
    QPoly r = pair_resolvent(seed.poly, c);
    if (squarefree(r)) return static_cast<int>(irreducible_factors(r).size());
  }
  throw Error("no separating pair invariant found");
}

int parametric_degree(const QuinticSeed& seed) {
  auto pat = pattern_of(rational_factors(seed.poly));
  if (pat.back() == 1) return 3;
  if (pat.back() == 2) return 4;
  return 5;
}

GaloisClass galois_class(const QuinticSeed& seed) {
  GaloisClass g;
  auto fac = rational_factors(seed.poly);
  g.factor_pattern = pattern_of(fac);
  g.orbit_count = line_orbits(seed);
  g.parametric_degree = parametric_degree(seed);
  const auto& pat = g.factor_pattern;
  const std::vector<int> p5{5}, p41{4, 1}, p32{3, 2}, p311{3, 1, 1}, p221{2, 2, 1}, p2111{2, 1, 1, 1};
  if (pat == p5) {
    g.group_type = classify_quintic(fac[0]);
  } else if (pat == p41) {
    auto info = classify_quartic(*factor_of_degree(fac, 4));
    g.group_type = info.type;
    if (info.type == "D4") g.embedding_invariant = "quartic discriminant class " + class_string(info.disc);
  } else if (pat == p32) {
    const QPoly& cub = *factor_of_degree(fac, 3);
    const QPoly& quad = *factor_of_degree(fac, 2);
    Rational d3 = discriminant(cub), d2 = discriminant(quad);
    if (is_square_rational(d3)) {
      g.group_type = "C6";
    } else if (is_square_rational(d2 * d3)) {
      g.group_type = "S3";  // the quadratic field lies in the cubic's splitting field
    } else {
      g.group_type = "D6";
    }
    g.embedding_invariant = "cubic discriminant class " + class_string(d3) + ", quadratic discriminant class " +
                            class_string(d2);
  } else if (pat == p311) {
    g.group_type = is_square_rational(discriminant(*factor_of_degree(fac, 3))) ? "C3" : "S3";
  } else if (pat == p221) {
    Rational d1 = discriminant(fac[fac.size() == 3 && fac[0].degree() == 1 ? 1 : 0]);
    std::vector<Rational> ds;
    for (const auto& f : fac)
      if (f.degree() == 2) ds.push_back(discriminant(f));
    g.group_type = is_square_rational(ds[0] * ds[1]) ? "C2" : "C2xC2";
    g.embedding_invariant = "factor count 3";
    (void)d1;
  } else if (pat == p2111) {
    g.group_type = "C2";
    g.embedding_invariant = "factor count 4";
  } else {
    g.group_type = "1";
  }
  if (g.group_type == "C2xC2" && pat == p41) g.embedding_invariant = "factor count 2";
  return g;
}

QuinticSeed recover_seed(const Parametrization& param) {
  const char* bad = "input not a valid quintic Del Pezzo parametrization";
  if (param.degree != 5) throw InvalidInput(bad);
  BasePointProfile prof = base_point_profile(param);
  if (!prof.five_double_points()) throw InvalidInput(bad);
  // Forms of degree 2 and 3 through the five base points.
  std::vector<RatVector> c2, c3;
  std::vector<RatVector> rational_points;
  for (const auto& b : prof.points) {
    add_point_conditions(b.point, b.orbit_size, 2, &c2);
    add_point_conditions(b.point, b.orbit_size, 3, &c3);
    if (b.orbit_size == 1) {
      RatVector r;
      for (const auto& x : b.point) r.push_back(x.rational_value());
      rational_points.push_back(r);
    }
  }
  auto conics = graded_piece_fit(c2, 2, 3);
  auto cubics = graded_piece_fit(c3, 3, 3);
  if (conics.size() != 1 || cubics.size() != 5) throw InvalidInput(bad);
  const MPoly& c1 = conics[0];
  // Symmetric matrix of the conic: C1(v) = v^T A v.
  Matrix<Rational> a(3, 3);
  for (const auto& t : c1.terms()) {
    std::vector<int> idx;
    for (int i = 0; i < 3; ++i)
      for (int e = 0; e < t.m[i]; ++e) idx.push_back(i);
    if (idx[0] == idx[1]) {
      a(static_cast<size_t>(idx[0]), static_cast<size_t>(idx[0])) = t.c;
    } else {
      a(static_cast<size_t>(idx[0]), static_cast<size_t>(idx[1])) = t.c / 2;
      a(static_cast<size_t>(idx[1]), static_cast<size_t>(idx[0])) = t.c / 2;
    }
  }
  if (determinant(a) == 0) throw InvalidInput(bad);
  // Sixth intersection point of the conic with a cubic through B.
  std::vector<MPoly> candidates = cubics;
  for (size_t i = 1; i < cubics.size(); ++i) candidates.push_back(cubics[0] + cubics[i] * Rational(static_cast<long>(i + 1)));
  RatVector r;
  for (const auto& c2form : candidates) {
    std::vector<Solution> sols;
    try {
      sols = zero_dim_solve_projective(Ideal(3, {c1, c2form}));
    } catch (const PositiveDimensional&) {
      continue;
    }
    for (const auto& s : sols) {
      if (s.field || s.multiplicity != 1) continue;
      RatVector v;
      for (const auto& x : s.point) v.push_back(x.rational_value());
      if (std::find(rational_points.begin(), rational_points.end(), v) != rational_points.end()) continue;
      r = v;
      break;
    }
    if (!r.empty()) break;
  }
  if (r.empty()) throw InvalidInput(bad);
  // Parametrize the conic from r, sending the tangent direction at r to
  // x = infinity: phi(x) = C1(x a + b) r - 2 B(r, b) (x a + b).
  RatVector ar = a.apply(r);
  auto tangent = kernel_basis(RatMatrix::from_rows({ar}, 3));
  RatVector ta;
  for (const auto& k : tangent)
    if (rank(RatMatrix::from_rows({k, r}, 3)) == 2) {
      ta = k;
      break;
    }
  RatVector tb;
  for (size_t i = 0; i < 3 && tb.empty(); ++i)
    if (ar[i] != 0) {
      tb = RatVector(3);
      tb[i] = 1;
    }
  auto bil = [&](const RatVector& u, const RatVector& v) {
    Rational s = 0;
    RatVector av = a.apply(v);
    for (size_t i = 0; i < 3; ++i) s += u[i] * av[i];
    return s;
  };
  const Rational caa = bil(ta, ta), cab = bil(ta, tb), cbb = bil(tb, tb), rb = bil(r, tb);
  std::vector<MPoly> phi;
  const MPoly x = MPoly::var(1, 0), one = MPoly::constant(1, 1);
  MPoly cx = x * x * caa + x * (2 * cab) + one * cbb;
  for (size_t j = 0; j < 3; ++j) phi.push_back(cx * r[j] - (x * ta[j] + one * tb[j]) * (2 * rb));
  QPoly g;
  for (const auto& cub : cubics) g = gcd_rational(g, univariate(cub.substitute(phi)));
  if (g.degree() != 5) throw InvalidInput(bad);
  return QuinticSeed::from(g * (Rational(1) / g.lead()));
}

QuinticSeed recover_seed(const DP5Surface& surface) {
  ParamOptions opts;
  opts.require_general = true;
  return recover_seed(parametrize_surface(surface, opts));
}

IsomorphismVerdict decide_isomorphic(const IsomInput& in_a, const IsomInput& in_b) {
  using S = IsomorphismVerdict::Status;
  IsomorphismVerdict v;
  QuinticSeed store_a, store_b;
  const QuinticSeed& a = seed_or_recover(in_a, &store_a);
  const QuinticSeed& b = seed_or_recover(in_b, &store_b);
  v.evidence.push_back("seed A: " + format_univariate(a.poly));
  v.evidence.push_back("seed B: " + format_univariate(b.poly));
  if (a.poly == b.poly) {
    v.status = S::Isomorphic;
    v.reason = "identical seeds";
    return v;
  }
  if (mobius_related(a.poly, b.poly)) {
    // The Moebius map extends to a projectivity fixing the conic and
    // carrying one set of five points onto the other.
    v.status = S::Isomorphic;
    v.reason = "seeds related by a rational Moebius transformation";
    return v;
  }
  try {
    if (!same_splitting_field(a.poly, b.poly)) {
      v.status = S::NotIsomorphic;
      v.reason = "splitting fields differ";
      return v;
    }
  } catch (const ResourceLimit& e) {
    v.status = S::Undecided;
    v.reason = "undecided: resource limit";
    v.evidence.push_back(e.what());
    return v;
  }
  v.evidence.push_back("splitting fields coincide");
  GaloisClass ga = galois_class(a), gb = galois_class(b);
  v.evidence.push_back("group " + ga.group_type);
  if (ga.factor_pattern != gb.factor_pattern) {
    v.status = S::NotIsomorphic;
    v.reason = "factor degree patterns differ";
    v.evidence.push_back("patterns " + pattern_string(ga.factor_pattern) + " and " + pattern_string(gb.factor_pattern));
    return v;
  }
  auto fa = rational_factors(a.poly), fb = rational_factors(b.poly);
  if (ga.group_type == "C2") {
    v.reason = "case i";
    v.evidence.push_back("factor counts " + std::to_string(fa.size()) + " and " + std::to_string(fb.size()));
    v.status = fa.size() == fb.size() ? S::Isomorphic : S::NotIsomorphic;
  } else if (ga.group_type == "C2xC2") {
    v.reason = "case ii";
    v.evidence.push_back("factor counts " + std::to_string(fa.size()) + " and " + std::to_string(fb.size()));
    v.status = fa.size() == fb.size() ? S::Isomorphic : S::NotIsomorphic;
  } else if (ga.group_type == "D4") {
    v.reason = "case iii";
    Rational q = discriminant(*factor_of_degree(fa, 4)) / discriminant(*factor_of_degree(fb, 4));
    v.evidence.push_back("quartic discriminant quotient class " + class_string(q));
    v.status = is_square_rational(q) ? S::Isomorphic : S::NotIsomorphic;
  } else if (ga.group_type == "D6") {
    v.reason = "case iv";
    bool cubic_same = same_splitting_field(*factor_of_degree(fa, 3), *factor_of_degree(fb, 3));
    Rational q = discriminant(*factor_of_degree(fa, 2)) / discriminant(*factor_of_degree(fb, 2));
    bool quad_same = is_square_rational(q);
    v.evidence.push_back(std::string("cubic splitting fields ") + (cubic_same ? "coincide" : "differ"));
    v.evidence.push_back(std::string("quadratic fields ") + (quad_same ? "coincide" : "differ"));
    v.status = cubic_same && quad_same ? S::Isomorphic : S::NotIsomorphic;
  } else {
    v.reason = "embedding unique up to conjugacy";
    v.status = S::Isomorphic;
  }
  return v;
}

}  // namespace dp5
