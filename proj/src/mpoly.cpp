#include "dp5/mpoly.hpp"

#include <algorithm>
#include <map>

namespace dp5 {

int grevlex_cmp(const Monomial& a, const Monomial& b) {
  const int da = a.degree(), db = b.degree();
  if (da != db) return da > db ? 1 : -1;
  for (int i = kMaxVars - 1; i >= 0; --i)
    if (a[i] != b[i]) return a[i] < b[i] ? 1 : -1;
  return 0;
}

namespace {

struct GrevlexGreater {
  bool operator()(const Monomial& a, const Monomial& b) const { return grevlex_cmp(a, b) > 0; }
};

void gen_monomials(int n, int d, int i, Monomial& cur, std::vector<Monomial>& out) {
  if (i == n - 1) {
    cur[i] = static_cast<std::uint16_t>(d);
    out.push_back(cur);
    cur[i] = 0;
    return;
  }
  for (int k = d; k >= 0; --k) {
    cur[i] = static_cast<std::uint16_t>(k);
    gen_monomials(n, d - k, i + 1, cur, out);
  }
  cur[i] = 0;
}

}  // namespace

std::vector<Monomial> monomials_of_degree(int n, int d) {
  std::vector<Monomial> out;
  if (n == 0) {
    if (d == 0) out.emplace_back();
    return out;
  }
  Monomial cur;
  gen_monomials(n, d, 0, cur, out);
  std::sort(out.begin(), out.end(), GrevlexGreater());
  return out;
}

MPoly::MPoly(int nvars, std::vector<Term> terms) : n_(nvars) {
  std::map<Monomial, Rational, GrevlexGreater> acc;
  for (auto& t : terms) {
    if (dp5::is_zero(t.c)) continue;
    acc[t.m] += t.c;
  }
  for (auto& [m, c] : acc)
    if (!dp5::is_zero(c)) t_.push_back({m, c});
}

MPoly MPoly::constant(int nvars, const Rational& c) {
  MPoly p(nvars);
  if (!dp5::is_zero(c)) p.t_.push_back({Monomial{}, c});
  return p;
}

MPoly MPoly::var(int nvars, int i) {
  Monomial m;
  m[i] = 1;
  return monomial(nvars, m);
}

MPoly MPoly::monomial(int nvars, const Monomial& m, const Rational& c) {
  MPoly p(nvars);
  if (!dp5::is_zero(c)) p.t_.push_back({m, c});
  return p;
}

int MPoly::total_degree() const {
  int d = -1;
  for (const auto& t : t_) d = std::max(d, t.m.degree());
  return d;
}

bool MPoly::is_homogeneous() const {
  if (t_.empty()) return true;
  const int d = t_.front().m.degree();
  for (const auto& t : t_)
    if (t.m.degree() != d) return false;
  return true;
}

Rational MPoly::coeff(const Monomial& m) const {
  for (const auto& t : t_)
    if (t.m == m) return t.c;
  return 0;
}

MPoly operator+(const MPoly& a, const MPoly& b) {
  MPoly r(std::max(a.n_, b.n_));
  size_t i = 0, j = 0;
  while (i < a.t_.size() || j < b.t_.size()) {
    int c = i == a.t_.size() ? -1 : j == b.t_.size() ? 1 : grevlex_cmp(a.t_[i].m, b.t_[j].m);
    if (c > 0) {
      r.t_.push_back(a.t_[i++]);
    } else if (c < 0) {
      r.t_.push_back(b.t_[j++]);
    } else {
      Rational s = a.t_[i].c + b.t_[j].c;
      if (!is_zero(s)) r.t_.push_back({a.t_[i].m, s});
      ++i;
      ++j;
    }
  }
  return r;
}

MPoly operator-(const MPoly& a) {
  MPoly r = a;
  for (auto& t : r.t_) t.c = -t.c;
  return r;
}

MPoly operator-(const MPoly& a, const MPoly& b) { return a + (-b); }

MPoly operator*(const MPoly& a, const MPoly& b) {
  if (a.is_zero() || b.is_zero()) return MPoly(std::max(a.n_, b.n_));
  std::map<Monomial, Rational, GrevlexGreater> acc;
  for (const auto& x : a.t_)
    for (const auto& y : b.t_) acc[x.m * y.m] += x.c * y.c;
  MPoly r(std::max(a.n_, b.n_));
  for (auto& [m, c] : acc)
    if (!is_zero(c)) r.t_.push_back({m, c});
  return r;
}

MPoly operator*(const MPoly& a, const Rational& s) {
  if (is_zero(s)) return MPoly(a.n_);
  MPoly r = a;
  for (auto& t : r.t_) t.c *= s;
  return r;
}

bool operator==(const MPoly& a, const MPoly& b) {
  if (a.t_.size() != b.t_.size()) return false;
  for (size_t i = 0; i < a.t_.size(); ++i)
    if (a.t_[i].m != b.t_[i].m || a.t_[i].c != b.t_[i].c) return false;
  return true;
}

MPoly MPoly::pow(int k) const {
  MPoly r = constant(n_, 1), b = *this;
  while (k > 0) {
    if (k & 1) r = r * b;
    k >>= 1;
    if (k) b = b * b;
  }
  return r;
}

MPoly MPoly::derivative(int i) const {
  std::vector<Term> out;
  for (const auto& t : t_) {
    if (t.m[i] == 0) continue;
    Term d = t;
    d.c *= t.m[i];
    d.m[i] = static_cast<std::uint16_t>(d.m[i] - 1);
    out.push_back(d);
  }
  return MPoly(n_, std::move(out));
}

MPoly MPoly::substitute(const std::vector<MPoly>& images) const {
  if (static_cast<int>(images.size()) != n_) throw InvalidInput("substitute: arity mismatch");
  const int m = images.empty() ? 0 : images.front().nvars();
  // Cache powers of each image.
  std::vector<std::vector<MPoly>> powers(static_cast<size_t>(n_));
  MPoly acc(m);
  for (const auto& t : t_) {
    MPoly v = constant(m, t.c);
    for (int i = 0; i < n_; ++i) {
      const int e = t.m[i];
      if (e == 0) continue;
      auto& pw = powers[static_cast<size_t>(i)];
      if (pw.empty()) pw.push_back(constant(m, 1));
      while (static_cast<int>(pw.size()) <= e) pw.push_back(pw.back() * images[static_cast<size_t>(i)]);
      v = v * pw[static_cast<size_t>(e)];
    }
    acc += v;
  }
  return acc;
}

MPoly MPoly::primitive() const {
  if (is_zero()) return *this;
  Integer l = 1, g = 0;
  for (const auto& t : t_) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), t.c.get_den_mpz_t());
  for (const auto& t : t_) {
    Integer v = t.c.get_num() * (l / t.c.get_den());
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), v.get_mpz_t());
  }
  Rational s(l, g);
  s.canonicalize();
  if (sgn(t_.front().c) < 0) s = -s;
  return *this * s;
}

MPoly MPoly::with_nvars(int n) const {
  for (const auto& t : t_)
    for (int i = n; i < kMaxVars; ++i)
      if (t.m[i] != 0) throw InvalidInput("with_nvars: variable in use");
  MPoly r = *this;
  r.n_ = n;
  return r;
}

std::string MPoly::to_string(const std::vector<std::string>& vars) const {
  if (t_.empty()) return "0";
  std::string out;
  for (const auto& t : t_) {
    Rational c = t.c;
    bool neg = sgn(c) < 0;
    if (neg) c = -c;
    if (out.empty()) out += neg ? "-" : "";
    else out += neg ? " - " : " + ";
    std::string mono;
    for (int i = 0; i < n_; ++i) {
      if (t.m[i] == 0) continue;
      if (!mono.empty()) mono += "*";
      mono += vars[static_cast<size_t>(i)];
      if (t.m[i] > 1) mono += "^" + std::to_string(t.m[i]);
    }
    if (mono.empty()) out += dp5::to_string(c);
    else if (c == 1) out += mono;
    else out += dp5::to_string(c) + "*" + mono;
  }
  return out;
}

std::vector<std::string> var_names(const std::string& prefix, int n) {
  std::vector<std::string> v;
  for (int i = 0; i < n; ++i) v.push_back(prefix + std::to_string(i));
  return v;
}

RatVector coefficients_on(const MPoly& f, const std::vector<Monomial>& basis) {
  RatVector c(basis.size());
  size_t j = 0;
  for (const auto& t : f.terms()) {
    while (j < basis.size() && basis[j] != t.m) ++j;
    if (j == basis.size())  // basis not in grevlex order
      j = static_cast<size_t>(std::find(basis.begin(), basis.end(), t.m) - basis.begin());
    if (j == basis.size()) throw InvalidInput("form has a monomial outside the basis");
    c[j] = t.c;
  }
  return c;
}

MPoly form_from_coefficients(int nvars, const std::vector<Monomial>& basis, const RatVector& c) {
  std::vector<Term> t;
  for (size_t i = 0; i < basis.size(); ++i)
    if (!is_zero(c[i])) t.push_back({basis[i], c[i]});
  return MPoly(nvars, std::move(t));
}

namespace {

std::vector<MPoly> forms_from_rows(const std::vector<RatVector>& rows, int arity, const std::vector<Monomial>& mons) {
  auto basis = row_space_basis(rows, mons.size());
  std::vector<MPoly> out;
  for (const auto& r : basis) out.push_back(form_from_coefficients(arity, mons, r).primitive());
  return out;
}

}  // namespace

std::vector<MPoly> graded_piece_fit(const std::vector<RatVector>& conditions, int d, int arity) {
  auto mons = monomials_of_degree(arity, d);
  RatMatrix m = RatMatrix::from_rows(conditions, mons.size());
  return forms_from_rows(kernel_basis(m), arity, mons);
}

std::vector<MPoly> echelon_span(const std::vector<MPoly>& forms) {
  if (forms.empty()) return {};
  const int n = forms.front().nvars();
  const int d = forms.front().total_degree();
  auto mons = monomials_of_degree(n, d);
  std::vector<RatVector> rows;
  for (const auto& f : forms) {
    if (!f.is_homogeneous() || (!f.is_zero() && f.total_degree() != d))
      throw InvalidInput("echelon_span expects forms of one degree");
    rows.push_back(coefficients_on(f, mons));
  }
  return forms_from_rows(rows, n, mons);
}

bool same_span(const std::vector<MPoly>& a, const std::vector<MPoly>& b) { return echelon_span(a) == echelon_span(b); }

ProjPoint ProjPoint::normalized(std::vector<NFElem> c) {
  ProjPoint p;
  for (const auto& x : c)
    if (x.field()) p.field = x.field();
  size_t i = 0;
  while (i < c.size() && is_zero(c[i])) ++i;
  if (i == c.size()) throw InvalidInput("projective point with all coordinates zero");
  NFElem inv = c[i].inverse();
  for (auto& x : c) x = x * inv;
  bool rational = true;
  for (const auto& x : c) rational = rational && x.is_rational();
  if (rational) {
    p.field = nullptr;
    for (auto& x : c) x = NFElem(x.poly().coeff(0));
  }
  p.coords = std::move(c);
  return p;
}

ProjPoint ProjPoint::rational(const RatVector& c) {
  std::vector<NFElem> v;
  for (const auto& x : c) v.emplace_back(x);
  return normalized(std::move(v));
}

bool ProjPoint::is_rational() const {
  for (const auto& x : coords)
    if (!x.is_rational()) return false;
  return true;
}

RatVector ProjPoint::rational_coords() const {
  RatVector v;
  for (const auto& x : coords) v.push_back(x.rational_value());
  return v;
}

LinearSubspace LinearSubspace::from_span(int ambient, const std::vector<RatVector>& vecs) {
  LinearSubspace s;
  s.ambient = ambient;
  s.span = row_space_basis(vecs, static_cast<size_t>(ambient));
  if (s.span.empty()) {
    s.equations.clear();
    for (int i = 0; i < ambient; ++i) {
      RatVector e(static_cast<size_t>(ambient));
      e[static_cast<size_t>(i)] = 1;
      s.equations.push_back(e);
    }
  } else {
    s.equations = row_space_basis(kernel_basis(RatMatrix::from_rows(s.span, static_cast<size_t>(ambient))),
                                  static_cast<size_t>(ambient));
  }
  return s;
}

LinearSubspace LinearSubspace::from_equations(int ambient, const std::vector<RatVector>& eqs) {
  LinearSubspace s;
  s.ambient = ambient;
  s.equations = row_space_basis(eqs, static_cast<size_t>(ambient));
  if (s.equations.empty()) {
    for (int i = 0; i < ambient; ++i) {
      RatVector e(static_cast<size_t>(ambient));
      e[static_cast<size_t>(i)] = 1;
      s.span.push_back(e);
    }
  } else {
    s.span = row_space_basis(kernel_basis(RatMatrix::from_rows(s.equations, static_cast<size_t>(ambient))),
                             static_cast<size_t>(ambient));
  }
  return s;
}

}  // namespace dp5
