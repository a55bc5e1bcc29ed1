#include "dp5/numfield.hpp"

#include <algorithm>
#include <cstdlib>

namespace dp5 {

NumberField::NumberField(QPoly modulus, bool trusted) : m_(modulus.monic()) {
  if (m_.degree() < 1) throw InvalidInput("number field modulus must be nonconstant");
  if (!trusted && !is_irreducible(m_)) throw InvalidInput("number field modulus is reducible: " + m_.to_string());
}

FieldPtr make_field(const QPoly& modulus, bool trusted) {
  return std::make_shared<const NumberField>(modulus, trusted);
}

NFElem::NFElem(FieldPtr k, QPoly v) : k_(std::move(k)), v_(std::move(v)) {
  if (k_ && v_.degree() >= k_->degree()) v_ = v_ % k_->modulus();
}

NFElem NFElem::generator(const FieldPtr& k) { return NFElem(k, QPoly::x()); }

NFElem NFElem::from_coords(const FieldPtr& k, const std::vector<Rational>& c) { return NFElem(k, QPoly(c)); }

std::vector<Rational> NFElem::coords() const {
  const int n = k_ ? k_->degree() : 1;
  std::vector<Rational> c(static_cast<size_t>(n));
  for (int i = 0; i < n; ++i) c[static_cast<size_t>(i)] = v_.coeff(i);
  return c;
}

Rational NFElem::rational_value() const {
  if (!is_rational()) throw InvalidInput("number field element is not rational");
  return v_.coeff(0);
}

namespace {

const FieldPtr& common_field(const NFElem& a, const NFElem& b) {
  if (!a.field()) return b.field();
  if (!b.field() || a.field() == b.field()) return a.field();
  if (a.field()->modulus() != b.field()->modulus())
    throw InvalidInput("arithmetic between elements of different number fields");
  return a.field();
}

}  // namespace

NFElem operator+(const NFElem& a, const NFElem& b) { return NFElem(common_field(a, b), a.v_ + b.v_); }
NFElem operator-(const NFElem& a, const NFElem& b) { return NFElem(common_field(a, b), a.v_ - b.v_); }
NFElem operator-(const NFElem& a) { return NFElem(a.k_, -a.v_); }

NFElem operator*(const NFElem& a, const NFElem& b) {
  const FieldPtr& k = common_field(a, b);
  if (a.is_rational()) return NFElem(k, b.v_ * a.v_.coeff(0));
  if (b.is_rational()) return NFElem(k, a.v_ * b.v_.coeff(0));
  return NFElem(k, (a.v_ * b.v_) % k->modulus());
}

NFElem operator/(const NFElem& a, const NFElem& b) {
  if (b.is_rational()) {
    if (is_zero(b)) throw InvalidInput("division by zero in number field");
    return NFElem(common_field(a, b), a.v_ * (Rational(1) / b.v_.coeff(0)));
  }
  return a * b.inverse();
}

NFElem NFElem::inverse() const {
  if (is_zero(*this)) throw InvalidInput("division by zero in number field");
  if (is_rational()) return NFElem(k_, QPoly::constant(Rational(1) / v_.coeff(0)));
  auto [g, s, t] = ext_gcd(v_, k_->modulus());
  if (g.degree() != 0) throw InvalidInput("element is not invertible (reducible modulus)");
  return NFElem(k_, s);
}

NFElem NFElem::conjugate() const {
  if (!k_ || is_rational()) return *this;
  if (k_->degree() != 2) throw InvalidInput("conjugation defined only for quadratic fields here");
  // a -> -c1 - a for modulus x^2 + c1 x + c0.
  QPoly image{-k_->modulus().coeff(1), Rational(-1)};
  return NFElem(k_, v_.compose(image));
}

Rational NFElem::norm() const {
  if (!k_) return v_.coeff(0);
  if (is_zero(*this)) return 0;
  return resultant(k_->modulus(), v_);
}

Rational NFElem::trace() const {
  if (!k_) return v_.coeff(0);
  Rational t = 0;
  NFElem basis = NFElem(k_, QPoly::constant(Rational(1)));
  NFElem gen = generator(k_);
  for (int i = 0; i < k_->degree(); ++i) {
    t += (*this * basis).poly().coeff(i);
    basis = basis * gen;
  }
  return t;
}

std::string to_string(const NFElem& e, const std::string& gen) { return e.poly().to_string(gen); }

std::string coeff_to_string(const NFElem& e) { return to_string(e); }

KPoly to_kpoly(const QPoly& p, const FieldPtr& k) {
  std::vector<NFElem> c;
  c.reserve(p.coeffs().size());
  for (const auto& a : p.coeffs()) c.emplace_back(k, QPoly::constant(a));
  return KPoly(std::move(c));
}

NFElem embed(const NFElem& e, const NFElem& image) {
  NFElem acc(image.field(), QPoly());
  const auto& c = e.poly().coeffs();
  for (auto it = c.rbegin(); it != c.rend(); ++it) acc = acc * image + NFElem(image.field(), QPoly::constant(*it));
  return acc;
}

namespace {

// Newton interpolation through (i, ys[i]), i = 0..n-1.
QPoly interpolate_integers(const std::vector<Rational>& ys) {
  const size_t n = ys.size();
  std::vector<Rational> dd = ys;
  for (size_t j = 1; j < n; ++j)
    for (size_t i = n - 1; i >= j; --i) {
      dd[i] = (dd[i] - dd[i - 1]) / Rational(static_cast<long>(j));
      if (i == j) break;
    }
  QPoly result;
  for (size_t i = n; i-- > 0;) {
    // result = result * (x - i) + dd[i]
    result = result * QPoly{Rational(-static_cast<long>(i)), Rational(1)} + QPoly::constant(dd[i]);
  }
  return result;
}

KPoly shift(const KPoly& g, const NFElem& c) {
  // g(y + c)
  KPoly lin(std::vector<NFElem>{c, NFElem(c.field(), QPoly::constant(Rational(1)))});
  return g.compose(lin);
}

struct TragerResult {
  std::vector<KPoly> factors;
  std::vector<QPoly> norms;  // norms[i] = Norm(factors[i](y - s a))
  int s = 0;
};

TragerResult trager(const KPoly& p, const FieldPtr& k) {
  TragerResult out;
  KPoly g = p.monic();
  if (!k || k->degree() == 1) {
    QPoly q;
    {
      std::vector<Rational> c;
      for (const auto& a : g.coeffs()) c.push_back(a.poly().coeff(0));
      q = QPoly(c);
    }
    for (auto& f : irreducible_factors(q)) {
      out.factors.push_back(to_kpoly(f, k));
      out.norms.push_back(f);
    }
    return out;
  }
  if (g.degree() <= 1) {
    out.factors.push_back(g);
    out.norms.push_back(norm_poly(g, k));
    return out;
  }
  const NFElem alpha = NFElem::generator(k);
  for (int step = 0; step < 200; ++step) {
    const int s = (step % 2 == 1) ? (step + 1) / 2 : -(step / 2);
    KPoly gs = shift(g, alpha * NFElem(-s));
    QPoly n = norm_poly(gs, k);
    if (!is_squarefree_rational(n)) continue;
    out.s = s;
    auto nf = irreducible_factors(n);
    if (nf.size() == 1) {
      out.factors.push_back(g);
      out.norms.push_back(n.monic());
      return out;
    }
    for (auto& nj : nf) {
      KPoly h = gcd(gs, to_kpoly(nj, k));
      out.factors.push_back(shift(h, alpha * NFElem(s)).monic());
      out.norms.push_back(nj);
    }
    // Deterministic order: degree, then printed form.
    std::vector<size_t> idx(out.factors.size());
    for (size_t i = 0; i < idx.size(); ++i) idx[i] = i;
    std::sort(idx.begin(), idx.end(), [&](size_t a, size_t b) {
      if (out.factors[a].degree() != out.factors[b].degree()) return out.factors[a].degree() < out.factors[b].degree();
      return out.factors[a].to_string("y") < out.factors[b].to_string("y");
    });
    TragerResult sorted;
    sorted.s = s;
    for (size_t i : idx) {
      sorted.factors.push_back(out.factors[i]);
      sorted.norms.push_back(out.norms[i]);
    }
    return sorted;
  }
  throw Error("no squarefree norm found for Trager factorization");
}

}  // namespace

QPoly norm_poly(const KPoly& g, const FieldPtr& k) {
  const int n = k ? k->degree() : 1;
  const int d = n * g.degree();
  if (g.is_zero()) return QPoly();
  std::vector<Rational> ys;
  ys.reserve(static_cast<size_t>(d) + 1);
  for (int j = 0; j <= d; ++j) ys.push_back(g.eval(NFElem(k, QPoly::constant(Rational(j)))).norm());
  return interpolate_integers(ys);
}

std::vector<KPoly> factor_over_field(const KPoly& p, const FieldPtr& k) {
  if (p.is_zero()) throw InvalidInput("cannot factor the zero polynomial");
  if (p.degree() < 1) return {};
  if (!is_squarefree(p)) throw InvalidInput("factor_over_field requires a squarefree polynomial");
  return trager(p, k).factors;
}

int max_tower_degree() {
  const char* env = std::getenv("DP5_MAX_TOWER_DEGREE");
  if (!env || !*env) return 120;
  char* end = nullptr;
  long v = std::strtol(env, &end, 10);
  if (*end != '\0' || v < 1) return 120;
  return static_cast<int>(v);
}

namespace {

// Finds a prime l with (D/l) = -1 at which m has a simple root mod l; then D
// is not a square in Q[x]/(m).
bool certify_nonsquare(const Rational& d, const QPoly& m) {
  std::uint64_t l = 3;
  for (int tries = 0; tries < 400; ++tries, l = modp::next_prime(l + 1)) {
    const unsigned long ul = static_cast<unsigned long>(l);
    if (mpz_divisible_ui_p(d.get_num_mpz_t(), ul) || mpz_divisible_ui_p(d.get_den_mpz_t(), ul)) continue;
    if (!modp::is_good_prime(m, l)) continue;
    Integer nd = d.get_num() * d.get_den();
    Integer L(ul);
    if (mpz_legendre(nd.get_mpz_t(), L.get_mpz_t()) != -1) continue;
    if (modp::count_roots(m, l) > 0) return true;
  }
  return false;
}

struct Embedded {
  FieldPtr field;
  NFElem alpha;  // image of the old generator
  NFElem beta;   // the adjoined root
};

// L = Q(beta + s*alpha) where beta is a root of h (irreducible over K) and
// n is the (squarefree, hence irreducible) norm of h(y - s*alpha).
Embedded adjoin(const KPoly& h, const FieldPtr& k, const QPoly& n, int s) {
  Embedded e;
  e.field = make_field(n, true);
  const NFElem gamma = NFElem::generator(e.field);
  if (!k || k->degree() == 1) {
    e.alpha = NFElem(e.field, QPoly());
    e.beta = gamma;
    return e;
  }
  // H(X) = sum_i h_i(X) (gamma - s X)^i; its gcd with m(X) over L is X - alpha.
  KPoly lin(std::vector<NFElem>{gamma, NFElem(e.field, QPoly::constant(Rational(-s)))});
  KPoly H;
  KPoly power = KPoly::constant(NFElem(e.field, QPoly::constant(Rational(1))));
  for (int i = 0; i <= h.degree(); ++i) {
    H += to_kpoly(h.coeff(i).poly(), e.field) * power;
    power = power * lin;
  }
  KPoly g = gcd(to_kpoly(k->modulus(), e.field), H);
  if (g.degree() != 1) throw Error("primitive element embedding failed");
  e.alpha = -g.coeff(0);
  e.beta = gamma - e.alpha * NFElem(s);
  return e;
}

KPoly map_poly(const KPoly& p, const NFElem& alpha_image) {
  std::vector<NFElem> c;
  for (const auto& a : p.coeffs()) c.push_back(embed(a, alpha_image));
  return KPoly(std::move(c));
}

}  // namespace

SplittingTower splitting_tower(const QPoly& p, int max_degree) {
  SplittingTower tower;
  QPoly f = squarefree_part(p);
  if (f.degree() < 2) return tower;
  const Rational D = discriminant(f);
  FieldPtr k;
  std::vector<KPoly> pending;
  for (auto& g : irreducible_factors(f))
    if (g.degree() >= 2) pending.push_back(to_kpoly(g, nullptr));

  while (true) {
    std::vector<KPoly> nonlin;
    std::vector<QPoly> norms;
    std::vector<int> shifts;
    for (const auto& g : pending) {
      TragerResult t = trager(g, k);
      for (size_t i = 0; i < t.factors.size(); ++i)
        if (t.factors[i].degree() >= 2) {
          nonlin.push_back(t.factors[i]);
          norms.push_back(t.norms[i]);
          shifts.push_back(t.s);
        }
    }
    if (nonlin.empty()) break;
    const QPoly kmod = k ? k->modulus() : QPoly::x();

    if (nonlin.size() == 1 && nonlin[0].degree() == 2) {
      if (is_square_rational(D)) break;
      if (!k || certify_nonsquare(D, kmod)) {
        if (tower.total_degree * 2 > max_degree) throw ResourceLimit("splitting tower exceeds degree bound " + std::to_string(max_degree));
        tower.stages.push_back({2, nullptr});
        tower.total_degree *= 2;
        tower.last_stage_relative = true;
        break;
      }
    }

    // Adjoin a root of the largest factor (first among equals).
    size_t pick = 0;
    for (size_t i = 1; i < nonlin.size(); ++i)
      if (nonlin[i].degree() > nonlin[pick].degree()) pick = i;
    const KPoly& h = nonlin[pick];
    if (tower.total_degree * h.degree() > max_degree)
      throw ResourceLimit("splitting tower exceeds degree bound " + std::to_string(max_degree));

    if (nonlin.size() == 1 && h.degree() == 3) {
      // The leftover quadratic over L has discriminant D modulo squares.
      FieldPtr l = make_field(norms[pick], true);
      if (is_square_rational(D)) {
        tower.stages.push_back({3, l});
        tower.total_degree *= 3;
        break;
      }
      if (certify_nonsquare(D, l->modulus())) {
        if (tower.total_degree * 6 > max_degree)
          throw ResourceLimit("splitting tower exceeds degree bound " + std::to_string(max_degree));
        tower.stages.push_back({3, l});
        tower.stages.push_back({2, nullptr});
        tower.total_degree *= 6;
        tower.last_stage_relative = true;
        break;
      }
    }

    Embedded e = adjoin(h, k, norms[pick], shifts[pick]);
    std::vector<KPoly> next;
    for (size_t i = 0; i < nonlin.size(); ++i) {
      if (i == pick) continue;
      next.push_back(map_poly(nonlin[i], e.alpha));
    }
    KPoly hl = map_poly(h, e.alpha);
    KPoly lin(std::vector<NFElem>{-e.beta, NFElem(e.field, QPoly::constant(Rational(1)))});
    auto [q, r] = KPoly::divmod(hl, lin);
    if (!r.is_zero()) throw Error("adjoined element is not a root");
    if (q.degree() >= 2) next.push_back(q);
    tower.stages.push_back({h.degree(), e.field});
    tower.total_degree *= h.degree();
    k = e.field;
    pending = std::move(next);
  }
  return tower;
}

bool frobenius_reject(const QPoly& p, const QPoly& q, int count) {
  QPoly f = squarefree_part(p), g = squarefree_part(q);
  int used = 0;
  for (std::uint64_t l = 3; used < count; l = modp::next_prime(l + 1)) {
    if (!modp::is_good_prime(f, l) || !modp::is_good_prime(g, l)) continue;
    ++used;
    bool sf = f.degree() < 1 || modp::count_roots(f, l) == f.degree();
    bool sg = g.degree() < 1 || modp::count_roots(g, l) == g.degree();
    if (sf != sg) return true;
  }
  return false;
}

namespace {

// Every nonlinear irreducible factor of g has a root in the stem field of
// an equal-degree factor of f. Then each stem field of g equals one of f,
// so Spl(g) is contained in Spl(f).
bool stems_contained(const std::vector<QPoly>& gs, const std::vector<QPoly>& fs) {
  for (const auto& g : gs) {
    if (g.degree() < 2) continue;
    bool found = false;
    for (const auto& f : fs) {
      if (f.degree() != g.degree()) continue;
      FieldPtr k = make_field(f * (Rational(1) / f.lead()), true);
      for (const auto& h : factor_over_field(to_kpoly(g, k), k))
        if (h.degree() == 1) found = true;
      if (found) break;
    }
    if (!found) return false;
  }
  return true;
}

}  // namespace

bool same_splitting_field(const QPoly& p, const QPoly& q, int max_degree) {
  QPoly f = squarefree_part(p), g = squarefree_part(q);
  if (f.degree() < 1) f = QPoly::x();
  if (g.degree() < 1) g = QPoly::x();
  if (f == g) return true;
  if (frobenius_reject(f, g)) return false;
  if (f.degree() == 5 && g.degree() == 5 && is_irreducible(f) && is_irreducible(g)) {
    // Index-5 subgroups of transitive subgroups of S5 are conjugate, so the
    // fields agree iff g has a root in the stem field of f.
    FieldPtr k = make_field(f, true);
    for (const auto& h : factor_over_field(to_kpoly(g, k), k))
      if (h.degree() == 1) return true;
    return false;
  }
  {
    auto fs = irreducible_factors(f), gs = irreducible_factors(g);
    if (stems_contained(gs, fs) && stems_contained(fs, gs)) return true;
  }
  const int df = splitting_tower(f, max_degree).total_degree;
  const int dg = splitting_tower(g, max_degree).total_degree;
  if (df != dg) return false;
  return splitting_tower(squarefree_part(f * g), max_degree).total_degree == df;
}

}  // namespace dp5
