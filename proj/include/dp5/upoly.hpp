#pragma once

#include <algorithm>
#include <string>
#include <tuple>
#include <utility>
#include <vector>

#include "dp5/rational.hpp"

namespace dp5 {

/// Zero test found by argument-dependent lookup at instantiation.
template <class F>
bool coeff_is_zero(const F& a) {
  return is_zero(a);
}

/// Dense univariate polynomial over a field F, coefficients lowest degree
/// first. F must provide F(int), arithmetic, and a free is_zero(const F&).
/// The zero polynomial has no coefficients and degree -1.
template <class F>
class UPoly {
 public:
  UPoly() = default;
  explicit UPoly(std::vector<F> coeffs) : c_(std::move(coeffs)) { trim(); }
  UPoly(std::initializer_list<F> coeffs) : c_(coeffs) { trim(); }

  static UPoly constant(const F& a) { return UPoly(std::vector<F>{a}); }
  static UPoly monomial(const F& a, int deg) {
    std::vector<F> c(static_cast<size_t>(deg) + 1, F(0));
    c[static_cast<size_t>(deg)] = a;
    return UPoly(std::move(c));
  }
  static UPoly x() { return monomial(F(1), 1); }

  int degree() const { return static_cast<int>(c_.size()) - 1; }
  bool is_zero() const { return c_.empty(); }
  bool is_constant() const { return c_.size() <= 1; }
  const std::vector<F>& coeffs() const { return c_; }
  F coeff(int i) const {
    return (i >= 0 && i < static_cast<int>(c_.size())) ? c_[static_cast<size_t>(i)] : F(0);
  }
  const F& lead() const { return c_.back(); }

  UPoly monic() const {
    if (is_zero()) return *this;
    F inv = F(1) / lead();
    return *this * inv;
  }

  F operator()(const F& x) const { return eval(x); }
  F eval(const F& x) const {
    F acc(0);
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + *it;
    return acc;
  }
  /// Evaluates at an element of another ring G that accepts F scalars.
  template <class G>
  G eval_in(const G& x) const {
    G acc(0);
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + G(*it);
    return acc;
  }

  UPoly derivative() const {
    if (c_.size() <= 1) return {};
    std::vector<F> d(c_.size() - 1, F(0));
    for (size_t i = 1; i < c_.size(); ++i) d[i - 1] = c_[i] * F(static_cast<int>(i));
    return UPoly(std::move(d));
  }

  /// p(q(x)).
  UPoly compose(const UPoly& q) const {
    UPoly acc;
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * q + constant(*it);
    return acc;
  }

  friend UPoly operator+(const UPoly& a, const UPoly& b) {
    std::vector<F> c(std::max(a.c_.size(), b.c_.size()), F(0));
    for (size_t i = 0; i < a.c_.size(); ++i) c[i] = a.c_[i];
    for (size_t i = 0; i < b.c_.size(); ++i) c[i] = c[i] + b.c_[i];
    return UPoly(std::move(c));
  }
  friend UPoly operator-(const UPoly& a) {
    std::vector<F> c(a.c_);
    for (auto& v : c) v = -v;
    return UPoly(std::move(c));
  }
  friend UPoly operator-(const UPoly& a, const UPoly& b) { return a + (-b); }
  friend UPoly operator*(const UPoly& a, const UPoly& b) {
    if (a.is_zero() || b.is_zero()) return {};
    std::vector<F> c(a.c_.size() + b.c_.size() - 1, F(0));
    for (size_t i = 0; i < a.c_.size(); ++i) {
      if (coeff_is_zero(a.c_[i])) continue;
      for (size_t j = 0; j < b.c_.size(); ++j) c[i + j] = c[i + j] + a.c_[i] * b.c_[j];
    }
    return UPoly(std::move(c));
  }
  friend UPoly operator*(const UPoly& a, const F& s) {
    if (coeff_is_zero(s)) return {};
    std::vector<F> c(a.c_);
    for (auto& v : c) v = v * s;
    return UPoly(std::move(c));
  }
  friend UPoly operator*(const F& s, const UPoly& a) { return a * s; }
  UPoly& operator+=(const UPoly& o) { return *this = *this + o; }
  UPoly& operator-=(const UPoly& o) { return *this = *this - o; }
  UPoly& operator*=(const UPoly& o) { return *this = *this * o; }

  friend bool operator==(const UPoly& a, const UPoly& b) {
    if (a.c_.size() != b.c_.size()) return false;
    for (size_t i = 0; i < a.c_.size(); ++i)
      if (!(a.c_[i] == b.c_[i])) return false;
    return true;
  }
  friend bool operator!=(const UPoly& a, const UPoly& b) { return !(a == b); }

  /// Euclidean division: a = q*b + r with deg r < deg b.
  static std::pair<UPoly, UPoly> divmod(const UPoly& a, const UPoly& b) {
    if (b.is_zero()) throw InvalidInput("polynomial division by zero");
    if (a.degree() < b.degree()) return {UPoly(), a};
    std::vector<F> r(a.c_);
    std::vector<F> q(static_cast<size_t>(a.degree() - b.degree() + 1), F(0));
    F inv = F(1) / b.lead();
    const int db = b.degree();
    for (int i = a.degree(); i >= db; --i) {
      F coef = r[static_cast<size_t>(i)];
      if (coeff_is_zero(coef)) continue;
      coef = coef * inv;
      q[static_cast<size_t>(i - db)] = coef;
      for (int j = 0; j <= db; ++j)
        r[static_cast<size_t>(i - db + j)] = r[static_cast<size_t>(i - db + j)] - coef * b.c_[static_cast<size_t>(j)];
    }
    r.resize(static_cast<size_t>(db));
    return {UPoly(std::move(q)), UPoly(std::move(r))};
  }
  friend UPoly operator/(const UPoly& a, const UPoly& b) { return divmod(a, b).first; }
  friend UPoly operator%(const UPoly& a, const UPoly& b) { return divmod(a, b).second; }

  std::string to_string(const std::string& var = "x") const;

 private:
  void trim() {
    while (!c_.empty() && coeff_is_zero(c_.back())) c_.pop_back();
  }
  std::vector<F> c_;
};

/// Monic gcd (zero if both inputs are zero).
template <class F>
UPoly<F> gcd(UPoly<F> a, UPoly<F> b) {
  while (!b.is_zero()) {
    UPoly<F> r = a % b;
    a = std::move(b);
    b = std::move(r);
  }
  return a.monic();
}

/// Returns (g, s, t) with s*a + t*b = g, g monic gcd.
template <class F>
std::tuple<UPoly<F>, UPoly<F>, UPoly<F>> ext_gcd(UPoly<F> a, UPoly<F> b) {
  UPoly<F> s0 = UPoly<F>::constant(F(1)), s1, t0, t1 = UPoly<F>::constant(F(1));
  while (!b.is_zero()) {
    auto [q, r] = UPoly<F>::divmod(a, b);
    a = std::move(b);
    b = std::move(r);
    UPoly<F> s2 = s0 - q * s1;
    UPoly<F> t2 = t0 - q * t1;
    s0 = std::move(s1);
    s1 = std::move(s2);
    t0 = std::move(t1);
    t1 = std::move(t2);
  }
  if (a.is_zero()) return {a, s0, t0};
  F inv = F(1) / a.lead();
  return {a * inv, s0 * inv, t0 * inv};
}

/// Squarefree decomposition (Yun, characteristic 0): returns pairs
/// (g_i, i) with g_i squarefree, pairwise coprime, monic and
/// monic(p) = prod g_i^i.
template <class F>
std::vector<std::pair<UPoly<F>, int>> squarefree_decomposition(const UPoly<F>& p) {
  std::vector<std::pair<UPoly<F>, int>> out;
  if (p.degree() < 1) return out;
  UPoly<F> f = p.monic();
  UPoly<F> df = f.derivative();
  UPoly<F> a = gcd(f, df);
  UPoly<F> b = f / a;
  UPoly<F> c = df / a;
  UPoly<F> d = c - b.derivative();
  int i = 1;
  while (b.degree() > 0) {
    UPoly<F> g = gcd(b, d);
    if (g.degree() > 0) out.emplace_back(g.monic(), i);
    b = b / g;
    c = d / g;
    d = c - b.derivative();
    ++i;
  }
  return out;
}

template <class F>
UPoly<F> squarefree_part(const UPoly<F>& p) {
  if (p.degree() < 1) return p;
  return (p / gcd(p, p.derivative())).monic();
}

template <class F>
bool is_squarefree(const UPoly<F>& p) {
  return p.degree() < 1 || gcd(p, p.derivative()).degree() == 0;
}

using QPoly = UPoly<Rational>;

std::string coeff_to_string(const Rational& c);

template <class F>
std::string UPoly<F>::to_string(const std::string& var) const {
  if (is_zero()) return "0";
  std::string out;
  for (int i = degree(); i >= 0; --i) {
    const F& a = c_[static_cast<size_t>(i)];
    if (coeff_is_zero(a)) continue;
    std::string cs = coeff_to_string(a);
    bool neg = !cs.empty() && cs[0] == '-';
    bool compound = cs.find_first_of("+-", 1) != std::string::npos;
    if (neg && !compound) cs.erase(0, 1);
    if (!out.empty()) out += (neg && !compound) ? " - " : " + ";
    else if (neg && !compound) out += "-";
    std::string mono = i == 0 ? "" : (i == 1 ? var : var + "^" + std::to_string(i));
    if (compound) cs = "(" + cs + ")";
    if (i == 0) out += cs;
    else if (cs == "1") out += mono;
    else out += cs + "*" + mono;
  }
  return out;
}

/// Content-free integer representative with positive leading coefficient.
QPoly primitive_part(const QPoly& p);
/// Multiplies by the lcm of denominators; result has integer coefficients.
QPoly clear_denominators(const QPoly& p);

}  // namespace dp5
