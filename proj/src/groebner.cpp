#include "dp5/groebner.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <set>

namespace dp5 {

int order_cmp(TermOrder o, const Monomial& a, const Monomial& b) {
  switch (o) {
    case TermOrder::Grevlex:
      return grevlex_cmp(a, b);
    case TermOrder::Lex:
      for (int i = 0; i < kMaxVars; ++i)
        if (a[i] != b[i]) return a[i] > b[i] ? 1 : -1;
      return 0;
    case TermOrder::Elim0:
      if (a[0] != b[0]) return a[0] > b[0] ? 1 : -1;
      return grevlex_cmp(a, b);
  }
  return 0;
}

namespace {

struct Greater {
  TermOrder o;
  bool operator()(const Monomial& a, const Monomial& b) const { return order_cmp(o, a, b) > 0; }
};

using TermMap = std::map<Monomial, Rational, Greater>;

// Polynomial with terms sorted for a specific order.
struct GPoly {
  std::vector<Term> t;  // descending
  int sugar = 0;
  const Monomial& lm() const { return t.front().m; }
};

GPoly to_gpoly(const MPoly& f, TermOrder o) {
  GPoly g;
  g.t = f.terms();
  std::sort(g.t.begin(), g.t.end(), [o](const Term& a, const Term& b) { return order_cmp(o, a.m, b.m) > 0; });
  g.sugar = std::max(f.total_degree(), 0);
  return g;
}

MPoly to_mpoly(const GPoly& g, int n) { return MPoly(n, g.t); }

void make_monic(GPoly& g) {
  if (g.t.empty()) return;
  Rational inv = Rational(1) / g.t.front().c;
  for (auto& t : g.t) t.c *= inv;
}

// Full reduction of f by the basis (leading terms first, then tails).
GPoly reduce(const GPoly& f, const std::vector<GPoly>& basis, TermOrder o) {
  TermMap work{Greater{o}};
  for (const auto& t : f.t) work.emplace(t.m, t.c);
  GPoly out;
  out.sugar = f.sugar;
  while (!work.empty()) {
    auto it = work.begin();
    const Monomial m = it->first;
    const Rational c = it->second;
    const GPoly* div = nullptr;
    for (const auto& g : basis)
      if (!g.t.empty() && g.lm().divides(m)) {
        div = &g;
        break;
      }
    if (!div) {
      out.t.push_back({m, c});
      work.erase(it);
      continue;
    }
    const Monomial q = div->lm().quotient_of(m);
    const Rational s = c / div->t.front().c;
    out.sugar = std::max(out.sugar, div->sugar + q.degree());
    work.erase(it);
    for (size_t k = 1; k < div->t.size(); ++k) {
      Monomial mm = q * div->t[k].m;
      auto [pos, inserted] = work.emplace(mm, Rational(0));
      pos->second -= s * div->t[k].c;
      if (dp5::is_zero(pos->second)) work.erase(pos);
    }
  }
  return out;
}

GPoly spoly(const GPoly& a, const GPoly& b, TermOrder o) {
  Monomial l = Monomial::lcm(a.lm(), b.lm());
  Monomial qa = a.lm().quotient_of(l), qb = b.lm().quotient_of(l);
  TermMap acc{Greater{o}};
  Rational ia = Rational(1) / a.t.front().c, ib = Rational(1) / b.t.front().c;
  for (size_t k = 1; k < a.t.size(); ++k) acc[qa * a.t[k].m] += a.t[k].c * ia;
  for (size_t k = 1; k < b.t.size(); ++k) acc[qb * b.t[k].m] -= b.t[k].c * ib;
  GPoly s;
  for (auto& [m, c] : acc)
    if (!dp5::is_zero(c)) s.t.push_back({m, c});
  s.sugar = std::max(a.sugar + qa.degree(), b.sugar + qb.degree());
  return s;
}

bool coprime(const Monomial& a, const Monomial& b) {
  for (int i = 0; i < kMaxVars; ++i)
    if (a[i] && b[i]) return false;
  return true;
}

struct Pair {
  size_t i, j;
  Monomial lcm;
  int sugar;
};

std::vector<GPoly> buchberger(const std::vector<MPoly>& gens, TermOrder o) {
  std::vector<GPoly> g;
  std::vector<Pair> pending;
  std::set<std::pair<size_t, size_t>> pending_set;

  auto add = [&](GPoly h) {
    make_monic(h);
    const size_t k = g.size();
    g.push_back(std::move(h));
    for (size_t i = 0; i < k; ++i) {
      if (g[i].t.empty()) continue;
      if (coprime(g[i].lm(), g[k].lm())) continue;
      Monomial l = Monomial::lcm(g[i].lm(), g[k].lm());
      int sugar = std::max(g[i].sugar + g[i].lm().quotient_of(l).degree(), g[k].sugar + g[k].lm().quotient_of(l).degree());
      pending.push_back({i, k, l, sugar});
      pending_set.insert({i, k});
    }
  };

  for (const auto& f : gens) {
    if (f.is_zero()) continue;
    GPoly h = reduce(to_gpoly(f, o), g, o);
    if (!h.t.empty()) add(std::move(h));
  }

  while (!pending.empty()) {
    size_t best = 0;
    for (size_t k = 1; k < pending.size(); ++k) {
      const Pair& a = pending[k];
      const Pair& b = pending[best];
      if (a.sugar < b.sugar || (a.sugar == b.sugar && order_cmp(o, a.lcm, b.lcm) < 0)) best = k;
    }
    Pair p = pending[best];
    pending.erase(pending.begin() + static_cast<long>(best));
    pending_set.erase({p.i, p.j});

    // Chain criterion.
    bool skip = false;
    for (size_t k = 0; k < g.size() && !skip; ++k) {
      if (k == p.i || k == p.j || g[k].t.empty()) continue;
      if (!g[k].lm().divides(p.lcm)) continue;
      auto key = [](size_t a, size_t b) { return std::make_pair(std::min(a, b), std::max(a, b)); };
      if (!pending_set.count(key(p.i, k)) && !pending_set.count(key(p.j, k))) skip = true;
    }
    if (skip) continue;

    GPoly h = reduce(spoly(g[p.i], g[p.j], o), g, o);
    if (!h.t.empty()) add(std::move(h));
  }

  // Minimalize and interreduce.
  std::vector<GPoly> minimal;
  for (size_t i = 0; i < g.size(); ++i) {
    bool redundant = false;
    for (size_t j = 0; j < g.size() && !redundant; ++j) {
      if (i == j) continue;
      if (g[j].lm().divides(g[i].lm()) && (g[j].lm() != g[i].lm() || j < i)) redundant = true;
    }
    if (!redundant) minimal.push_back(g[i]);
  }
  std::vector<GPoly> reduced;
  for (size_t i = 0; i < minimal.size(); ++i) {
    std::vector<GPoly> others;
    for (size_t j = 0; j < minimal.size(); ++j)
      if (j != i) others.push_back(minimal[j]);
    GPoly tail;
    tail.t.assign(minimal[i].t.begin() + 1, minimal[i].t.end());
    GPoly r = reduce(tail, others, o);
    GPoly full;
    full.t.push_back(minimal[i].t.front());
    full.t.insert(full.t.end(), r.t.begin(), r.t.end());
    full.sugar = minimal[i].sugar;
    make_monic(full);
    reduced.push_back(std::move(full));
  }
  std::sort(reduced.begin(), reduced.end(), [o](const GPoly& a, const GPoly& b) { return order_cmp(o, a.lm(), b.lm()) < 0; });
  return reduced;
}

}  // namespace

std::vector<MPoly> groebner_basis(const std::vector<MPoly>& gens, TermOrder order) {
  int n = 0;
  for (const auto& f : gens) n = std::max(n, f.nvars());
  std::vector<MPoly> out;
  for (const auto& g : buchberger(gens, order)) out.push_back(to_mpoly(g, n));
  return out;
}

MPoly normal_form(const MPoly& f, const std::vector<MPoly>& gb, TermOrder order) {
  std::vector<GPoly> b;
  for (const auto& g : gb) b.push_back(to_gpoly(g, order));
  return to_mpoly(reduce(to_gpoly(f, order), b, order), f.nvars());
}

Monomial leading_monomial(const MPoly& f, TermOrder order) {
  if (f.is_zero()) throw InvalidInput("leading monomial of zero");
  Monomial best = f.terms().front().m;
  for (const auto& t : f.terms())
    if (order_cmp(order, t.m, best) > 0) best = t.m;
  return best;
}

Ideal::Ideal(int nvars, std::vector<MPoly> gens) : n_(nvars) {
  for (auto& g : gens)
    if (!g.is_zero()) gens_.push_back(g.with_nvars(nvars));
}

const std::vector<MPoly>& Ideal::basis() const {
  std::call_once(cache_->once, [this] {
    cache_->gb.clear();
    for (auto& g : groebner_basis(gens_, TermOrder::Grevlex)) cache_->gb.push_back(g.with_nvars(n_));
  });
  return cache_->gb;
}

bool Ideal::contains(const MPoly& f) const { return normal_form(f, basis()).is_zero(); }

bool Ideal::contains(const Ideal& j) const {
  for (const auto& g : j.generators())
    if (!contains(g)) return false;
  return true;
}

bool Ideal::is_unit() const {
  const auto& b = basis();
  return b.size() == 1 && b.front().total_degree() == 0;
}

Ideal ideal_sum(const Ideal& a, const Ideal& b) {
  std::vector<MPoly> g = a.generators();
  g.insert(g.end(), b.generators().begin(), b.generators().end());
  return Ideal(std::max(a.nvars(), b.nvars()), g);
}

namespace {

// Renumbers variables i -> i + 1, making room for a new variable 0.
MPoly shift_up(const MPoly& f, int n) {
  std::vector<Term> t;
  for (const auto& term : f.terms()) {
    Monomial m;
    for (int i = 0; i < n; ++i) m[i + 1] = term.m[i];
    t.push_back({m, term.c});
  }
  return MPoly(n + 1, t);
}

MPoly shift_down(const MPoly& f, int n) {
  std::vector<Term> t;
  for (const auto& term : f.terms()) {
    Monomial m;
    for (int i = 0; i < n; ++i) m[i] = term.m[i + 1];
    t.push_back({m, term.c});
  }
  return MPoly(n, t);
}

// Exact quotient f / g; throws if g does not divide f.
MPoly divide_exact(const MPoly& f, const MPoly& g) {
  const TermOrder o = TermOrder::Grevlex;
  GPoly gg = to_gpoly(g, o);
  TermMap work{Greater{o}};
  for (const auto& t : f.terms()) work.emplace(t.m, t.c);
  std::vector<Term> q;
  while (!work.empty()) {
    auto it = work.begin();
    if (!gg.lm().divides(it->first)) throw Error("inexact polynomial division");
    Monomial qm = gg.lm().quotient_of(it->first);
    Rational qc = it->second / gg.t.front().c;
    q.push_back({qm, qc});
    for (const auto& t : gg.t) {
      auto [pos, ins] = work.emplace(qm * t.m, Rational(0));
      pos->second -= qc * t.c;
      if (dp5::is_zero(pos->second)) work.erase(pos);
    }
  }
  return MPoly(f.nvars(), q);
}

Ideal quotient_by(const Ideal& i, const MPoly& f) {
  const int n = i.nvars();
  if (f.total_degree() == 0) return i;
  Ideal inter = ideal_intersection(i, Ideal(n, {f}));
  std::vector<MPoly> g;
  for (const auto& h : inter.generators()) g.push_back(divide_exact(h, f));
  return Ideal(n, g);
}

}  // namespace

Ideal ideal_intersection(const Ideal& a, const Ideal& b) {
  const int n = std::max(a.nvars(), b.nvars());
  if (n + 1 > kMaxVars) throw InvalidInput("too many variables for intersection");
  MPoly t = MPoly::var(n + 1, 0);
  MPoly one_minus_t = MPoly::constant(n + 1, 1) - t;
  std::vector<MPoly> gens;
  for (const auto& f : a.generators()) gens.push_back(t * shift_up(f, n));
  for (const auto& f : b.generators()) gens.push_back(one_minus_t * shift_up(f, n));
  std::vector<MPoly> out;
  for (const auto& g : groebner_basis(gens, TermOrder::Elim0)) {
    bool has_t = false;
    for (const auto& term : g.terms()) has_t = has_t || term.m[0] != 0;
    if (!has_t) out.push_back(shift_down(g, n));
  }
  return Ideal(n, out);
}

Ideal ideal_quotient(const Ideal& i, const Ideal& j) {
  const int n = std::max(i.nvars(), j.nvars());
  if (j.generators().empty()) return Ideal(n, {MPoly::constant(n, 1)});
  Ideal acc;
  bool first = true;
  for (const auto& f : j.generators()) {
    Ideal q = quotient_by(i, f);
    acc = first ? q : ideal_intersection(acc, q);
    first = false;
  }
  return Ideal(n, acc.basis());
}

Ideal saturate(const Ideal& i, const Ideal& j) {
  Ideal cur = i;
  for (int iter = 0; iter < 64; ++iter) {
    Ideal next = ideal_quotient(cur, j);
    if (cur.contains(next)) return Ideal(i.nvars(), cur.basis());
    cur = next;
  }
  throw Error("saturation did not stabilize");
}

Ideal irrelevant_ideal(int nvars) {
  std::vector<MPoly> g;
  for (int i = 0; i < nvars; ++i) g.push_back(MPoly::var(nvars, i));
  return Ideal(nvars, g);
}

// ------------------------------------------------------ zero-dim solving ----

namespace {

struct Quotient {
  int n = 0;
  std::vector<MPoly> gb;
  std::vector<Monomial> basis;  // standard monomials
  std::map<Monomial, size_t, Greater> index{Greater{TermOrder::Grevlex}};

  RatVector vec(const MPoly& f) const {
    RatVector v(basis.size());
    const MPoly r = normal_form(f, gb);
    for (const auto& t : r.terms()) v[index.at(t.m)] = t.c;
    return v;
  }
  RatMatrix mult(const MPoly& z) const {
    RatMatrix m(basis.size(), basis.size());
    for (size_t j = 0; j < basis.size(); ++j) {
      RatVector c = vec(z * MPoly::monomial(n, basis[j]));
      for (size_t i = 0; i < basis.size(); ++i) m(i, j) = c[i];
    }
    return m;
  }
};

Quotient make_quotient(const Ideal& ideal) {
  Quotient q;
  q.n = ideal.nvars();
  q.gb = ideal.basis();
  std::vector<int> bound(static_cast<size_t>(q.n), -1);
  for (const auto& g : q.gb) {
    Monomial lm = leading_monomial(g, TermOrder::Grevlex);
    int nz = 0, var = -1;
    for (int i = 0; i < q.n; ++i)
      if (lm[i]) {
        ++nz;
        var = i;
      }
    if (nz == 1 && (bound[static_cast<size_t>(var)] < 0 || lm[var] < bound[static_cast<size_t>(var)]))
      bound[static_cast<size_t>(var)] = lm[var];
  }
  for (int b : bound)
    if (b < 0) throw PositiveDimensional();
  std::vector<Monomial> lms;
  for (const auto& g : q.gb) lms.push_back(leading_monomial(g, TermOrder::Grevlex));
  // Enumerate the box of exponents below the pure-power bounds.
  Monomial cur;
  std::function<void(int)> rec = [&](int i) {
    if (i == q.n) {
      for (const auto& l : lms)
        if (l.divides(cur)) return;
      q.basis.push_back(cur);
      return;
    }
    for (int e = 0; e < bound[static_cast<size_t>(i)]; ++e) {
      cur[i] = static_cast<std::uint16_t>(e);
      rec(i + 1);
    }
    cur[i] = 0;
  };
  rec(0);
  std::sort(q.basis.begin(), q.basis.end(), [](const Monomial& a, const Monomial& b) { return grevlex_cmp(a, b) < 0; });
  for (size_t i = 0; i < q.basis.size(); ++i) q.index.emplace(q.basis[i], i);
  return q;
}

// Minimal polynomial of multiplication by z acting on the class of 1, plus
// the Krylov vectors z^k (k < degree).
QPoly krylov_minpoly(const Quotient& q, const RatMatrix& mz, std::vector<RatVector>* powers) {
  RatVector v(q.basis.size());
  v[q.index.at(Monomial{})] = 1;
  std::vector<RatVector> seq{v};
  while (true) {
    RatVector next = mz.apply(seq.back());
    // Solve next = sum a_k seq[k].
    RatMatrix a(q.basis.size(), seq.size());
    for (size_t k = 0; k < seq.size(); ++k)
      for (size_t i = 0; i < q.basis.size(); ++i) a(i, k) = seq[k][i];
    RatVector coef;
    if (solve(a, next, &coef)) {
      std::vector<Rational> c(seq.size() + 1);
      for (size_t k = 0; k < seq.size(); ++k) c[k] = -coef[k];
      c[seq.size()] = 1;
      if (powers) *powers = seq;
      return QPoly(c);
    }
    seq.push_back(next);
  }
}

MPoly linear_form(int n, const std::vector<Rational>& c) {
  MPoly z(n);
  for (int i = 0; i < n; ++i) z += MPoly::var(n, i) * c[static_cast<size_t>(i)];
  return z;
}

RatMatrix mat_poly(const QPoly& h, const RatMatrix& m) {
  const size_t d = m.rows();
  RatMatrix acc(d, d);
  for (int k = h.degree(); k >= 0; --k) {
    acc = acc * m;
    for (size_t i = 0; i < d; ++i) acc(i, i) += h.coeff(k);
  }
  return acc;
}

}  // namespace

std::vector<Solution> zero_dim_solve(const Ideal& ideal) {
  const int n = ideal.nvars();
  if (ideal.is_unit()) return {};
  Quotient q = make_quotient(ideal);

  // Radical via squarefree parts of the univariate eliminants.
  std::vector<MPoly> rad_gens = ideal.basis();
  bool changed = false;
  for (int i = 0; i < n; ++i) {
    QPoly mp = krylov_minpoly(q, q.mult(MPoly::var(n, i)), nullptr);
    QPoly sf = squarefree_part(mp);
    if (sf.degree() < mp.degree()) changed = true;
    MPoly u(n);
    for (int k = 0; k <= sf.degree(); ++k) u += MPoly::var(n, i).pow(k) * sf.coeff(k);
    rad_gens.push_back(u);
  }
  Ideal radical = changed ? Ideal(n, rad_gens) : ideal;
  Quotient r = changed ? make_quotient(radical) : q;
  const size_t npoints = r.basis.size();

  // Separating linear form z = sum c^k x_k.
  for (int c = 0; c < 200; ++c) {
    std::vector<Rational> coeffs(static_cast<size_t>(n));
    Rational pw = 1;
    for (int k = 0; k < n; ++k) {
      coeffs[static_cast<size_t>(k)] = c == 0 ? Rational(k == 0 ? 1 : 0) : pw;
      pw *= c;
    }
    MPoly z = linear_form(n, coeffs);
    std::vector<RatVector> powers;
    RatMatrix mz_r = r.mult(z);
    QPoly mu = krylov_minpoly(r, mz_r, &powers);
    if (static_cast<size_t>(mu.degree()) != npoints) continue;

    // x_i = g_i(z) modulo the radical.
    RatMatrix kry(npoints, npoints);
    for (size_t k = 0; k < npoints; ++k)
      for (size_t i = 0; i < npoints; ++i) kry(i, k) = powers[k][i];
    std::vector<QPoly> shape;
    for (int i = 0; i < n; ++i) {
      RatVector sol;
      if (!solve(kry, r.vec(MPoly::var(n, i)), &sol)) throw Error("shape lemma solve failed");
      shape.emplace_back(sol);
    }

    RatMatrix mz = q.mult(z);
    std::vector<Solution> out;
    for (const auto& h : irreducible_factors(mu)) {
      Solution s;
      if (h.degree() > 1) s.field = make_field(h, true);
      NFElem theta = h.degree() > 1 ? NFElem::generator(s.field) : NFElem(-h.coeff(0));
      for (const auto& g : shape) s.point.push_back(g.eval_in(theta));
      // Multiplicity from the generalized eigenspace of z on the full quotient.
      RatMatrix hm = mat_poly(h, mz);
      RatMatrix pw2 = hm;
      for (size_t k = 1; k < q.basis.size(); ++k) pw2 = pw2 * hm;
      size_t dim = q.basis.size() - rank(pw2);
      s.multiplicity = static_cast<int>(dim / static_cast<size_t>(h.degree()));
      out.push_back(std::move(s));
    }
    return out;
  }
  throw Error("no separating linear form found");
}

namespace {

// Sets variable `chart` to 1 and renumbers the others.
MPoly dehomogenize(const MPoly& f, int n, int chart) {
  std::vector<Term> t;
  for (const auto& term : f.terms()) {
    Monomial m;
    for (int i = 0, j = 0; i < n; ++i) {
      if (i == chart) continue;
      m[j++] = term.m[i];
    }
    t.push_back({m, term.c});
  }
  return MPoly(n - 1, t);
}

bool no_points_on_hyperplane(const Ideal& ideal, const MPoly& h) {
  Ideal j = ideal_sum(ideal, Ideal(ideal.nvars(), {h}));
  if (j.is_unit()) return true;
  try {
    make_quotient(j);
    return true;  // only the origin: no projective points
  } catch (const PositiveDimensional&) {
    return false;
  }
}

std::vector<Solution> solve_chart(const Ideal& ideal, int chart) {
  const int n = ideal.nvars();
  std::vector<MPoly> g;
  for (const auto& f : ideal.generators()) g.push_back(dehomogenize(f, n, chart));
  auto sols = zero_dim_solve(Ideal(n - 1, g));
  for (auto& s : sols) {
    std::vector<NFElem> p;
    for (int i = 0, j = 0; i < n; ++i) p.push_back(i == chart ? NFElem(1) : s.point[static_cast<size_t>(j++)]);
    s.point = ProjPoint::normalized(p).coords;
  }
  return sols;
}

}  // namespace

std::vector<Solution> zero_dim_solve_projective(const Ideal& ideal) {
  const int n = ideal.nvars();
  for (int i = 0; i < n; ++i)
    if (no_points_on_hyperplane(ideal, MPoly::var(n, i))) return solve_chart(ideal, i);
  // Generic chart: y0 = x0 + c x1 + c^2 x2 + ..., yk = xk.
  for (int c = 2; c < 50; ++c) {
    std::vector<Rational> l(static_cast<size_t>(n));
    Rational pw = 1;
    for (int k = 0; k < n; ++k) {
      l[static_cast<size_t>(k)] = pw;
      pw *= c;
    }
    std::vector<MPoly> images;
    MPoly x0 = MPoly::var(n, 0);
    for (int k = 1; k < n; ++k) x0 -= MPoly::var(n, k) * l[static_cast<size_t>(k)];
    images.push_back(x0);
    for (int k = 1; k < n; ++k) images.push_back(MPoly::var(n, k));
    std::vector<MPoly> g;
    for (const auto& f : ideal.generators()) g.push_back(f.substitute(images));
    Ideal changed(n, g);
    if (!no_points_on_hyperplane(changed, MPoly::var(n, 0))) continue;
    auto sols = solve_chart(changed, 0);
    for (auto& s : sols) {
      std::vector<NFElem> p = s.point;
      NFElem v0 = p[0];
      for (int k = 1; k < n; ++k) v0 = v0 - p[static_cast<size_t>(k)] * NFElem(l[static_cast<size_t>(k)]);
      p[0] = v0;
      s.point = ProjPoint::normalized(p).coords;
    }
    return sols;
  }
  // Every hyperplane of the family meets the zero set.
  throw PositiveDimensional();
}

}  // namespace dp5
