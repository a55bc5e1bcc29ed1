#include "dp5/factor.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <random>

namespace dp5 {

std::string coeff_to_string(const Rational& c) { return to_string(c); }

QPoly primitive_part(const QPoly& p) {
  if (p.is_zero()) return p;
  QPoly q = clear_denominators(p);
  Integer g = 0;
  for (const auto& c : q.coeffs()) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_num_mpz_t());
  Rational s(1, g);
  if (sgn(q.lead()) < 0) s = -s;
  return q * s;
}

QPoly clear_denominators(const QPoly& p) {
  if (p.is_zero()) return p;
  Integer l = 1;
  for (const auto& c : p.coeffs()) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), c.get_den_mpz_t());
  return p * Rational(l);
}

namespace {

using u64 = std::uint64_t;
using u128 = unsigned __int128;
using FpPoly = std::vector<u64>;
using ZPoly = std::vector<Integer>;

// ---------------------------------------------------------------- F_p ----

u64 mulmod(u64 a, u64 b, u64 p) { return static_cast<u64>(static_cast<u128>(a) * b % p); }
u64 addmod(u64 a, u64 b, u64 p) { return (a + b) % p; }
u64 submod(u64 a, u64 b, u64 p) { return (a + p - b) % p; }
u64 powmod(u64 a, u64 e, u64 p) {
  u64 r = 1 % p;
  a %= p;
  while (e) {
    if (e & 1) r = mulmod(r, a, p);
    a = mulmod(a, a, p);
    e >>= 1;
  }
  return r;
}
u64 invmod(u64 a, u64 p) { return powmod(a, p - 2, p); }

void trim(FpPoly& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

int deg(const FpPoly& a) { return static_cast<int>(a.size()) - 1; }

FpPoly fp_sub(FpPoly a, const FpPoly& b, u64 p) {
  if (a.size() < b.size()) a.resize(b.size(), 0);
  for (size_t i = 0; i < b.size(); ++i) a[i] = submod(a[i], b[i], p);
  trim(a);
  return a;
}

FpPoly fp_mul(const FpPoly& a, const FpPoly& b, u64 p) {
  if (a.empty() || b.empty()) return {};
  FpPoly c(a.size() + b.size() - 1, 0);
  for (size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (size_t j = 0; j < b.size(); ++j) c[i + j] = addmod(c[i + j], mulmod(a[i], b[j], p), p);
  }
  trim(c);
  return c;
}

std::pair<FpPoly, FpPoly> fp_divmod(FpPoly a, const FpPoly& b, u64 p) {
  if (deg(a) < deg(b)) return {{}, a};
  const int db = deg(b);
  FpPoly q(static_cast<size_t>(deg(a) - db + 1), 0);
  u64 inv = invmod(b.back(), p);
  for (int i = deg(a); i >= db; --i) {
    u64 c = a[static_cast<size_t>(i)];
    if (c == 0) continue;
    c = mulmod(c, inv, p);
    q[static_cast<size_t>(i - db)] = c;
    for (int j = 0; j <= db; ++j) {
      auto k = static_cast<size_t>(i - db + j);
      a[k] = submod(a[k], mulmod(c, b[static_cast<size_t>(j)], p), p);
    }
  }
  a.resize(static_cast<size_t>(db));
  trim(a);
  trim(q);
  return {q, a};
}

FpPoly fp_mod(const FpPoly& a, const FpPoly& b, u64 p) { return fp_divmod(a, b, p).second; }

FpPoly fp_monic(FpPoly a, u64 p) {
  if (a.empty()) return a;
  u64 inv = invmod(a.back(), p);
  for (auto& c : a) c = mulmod(c, inv, p);
  return a;
}

FpPoly fp_gcd(FpPoly a, FpPoly b, u64 p) {
  while (!b.empty()) {
    FpPoly r = fp_mod(a, b, p);
    a = std::move(b);
    b = std::move(r);
  }
  return fp_monic(a, p);
}

// s*a + t*b = g (monic).
void fp_ext_gcd(FpPoly a, FpPoly b, u64 p, FpPoly& g, FpPoly& s, FpPoly& t) {
  FpPoly s0{1}, s1, t0, t1{1};
  while (!b.empty()) {
    auto [q, r] = fp_divmod(a, b, p);
    a = std::move(b);
    b = std::move(r);
    FpPoly s2 = fp_sub(s0, fp_mul(q, s1, p), p);
    FpPoly t2 = fp_sub(t0, fp_mul(q, t1, p), p);
    s0 = std::move(s1);
    s1 = std::move(s2);
    t0 = std::move(t1);
    t1 = std::move(t2);
  }
  u64 inv = invmod(a.back(), p);
  for (auto& c : a) c = mulmod(c, inv, p);
  for (auto& c : s0) c = mulmod(c, inv, p);
  for (auto& c : t0) c = mulmod(c, inv, p);
  g = a;
  s = s0;
  t = t0;
}

FpPoly fp_powmod(FpPoly base, const Integer& e, const FpPoly& m, u64 p) {
  FpPoly r{1};
  base = fp_mod(base, m, p);
  const size_t bits = mpz_sizeinbase(e.get_mpz_t(), 2);
  for (size_t i = bits; i-- > 0;) {
    r = fp_mod(fp_mul(r, r, p), m, p);
    if (mpz_tstbit(e.get_mpz_t(), i)) r = fp_mod(fp_mul(r, base, p), m, p);
  }
  return r;
}

FpPoly fp_derivative(const FpPoly& a, u64 p) {
  if (a.size() <= 1) return {};
  FpPoly d(a.size() - 1);
  for (size_t i = 1; i < a.size(); ++i) d[i - 1] = mulmod(a[i], i % p, p);
  trim(d);
  return d;
}

u64 reduce_rational(const Rational& c, u64 p) {
  Integer n = c.get_num() % Integer(static_cast<unsigned long>(p));
  if (n < 0) n += static_cast<unsigned long>(p);
  Integer d = c.get_den() % Integer(static_cast<unsigned long>(p));
  u64 nn = n.get_ui(), dd = d.get_ui();
  return mulmod(nn, invmod(dd, p), p);
}

bool reducible_mod(const QPoly& f, u64 p) {
  for (const auto& c : f.coeffs())
    if (mpz_divisible_ui_p(c.get_den_mpz_t(), static_cast<unsigned long>(p))) return false;
  return true;
}

FpPoly to_fp(const QPoly& f, u64 p) {
  FpPoly a(f.coeffs().size());
  for (size_t i = 0; i < a.size(); ++i) a[i] = reduce_rational(f.coeffs()[i], p);
  trim(a);
  return a;
}

FpPoly to_fp(const ZPoly& f, u64 p) {
  FpPoly a(f.size());
  for (size_t i = 0; i < f.size(); ++i) {
    Integer r = f[i] % Integer(static_cast<unsigned long>(p));
    if (r < 0) r += static_cast<unsigned long>(p);
    a[i] = r.get_ui();
  }
  trim(a);
  return a;
}

// Distinct-degree factorization of a monic squarefree polynomial.
std::vector<std::pair<FpPoly, int>> ddf(FpPoly f, u64 p) {
  std::vector<std::pair<FpPoly, int>> out;
  FpPoly x{0, 1};
  FpPoly h = x;
  int d = 0;
  while (2 * (d + 1) <= deg(f)) {
    ++d;
    h = fp_powmod(h, Integer(static_cast<unsigned long>(p)), f, p);
    FpPoly g = fp_gcd(fp_sub(h, x, p), f, p);
    if (deg(g) > 0) {
      out.emplace_back(g, d);
      f = fp_divmod(f, g, p).first;
      h = fp_mod(h, f, p);
    }
  }
  if (deg(f) > 0) out.emplace_back(fp_monic(f, p), deg(f));
  return out;
}

// Equal-degree splitting (Cantor-Zassenhaus, odd p, fixed seed).
void edf(const FpPoly& g, int d, u64 p, std::mt19937_64& rng, std::vector<FpPoly>& out) {
  if (deg(g) == d) {
    out.push_back(g);
    return;
  }
  Integer e;
  mpz_ui_pow_ui(e.get_mpz_t(), static_cast<unsigned long>(p), static_cast<unsigned long>(d));
  e = (e - 1) / 2;
  while (true) {
    FpPoly a(static_cast<size_t>(deg(g)));
    for (auto& c : a) c = rng() % p;
    trim(a);
    if (deg(a) < 1) continue;
    FpPoly b = fp_powmod(a, e, g, p);
    b = fp_sub(b, FpPoly{1}, p);
    FpPoly u = fp_gcd(b, g, p);
    if (deg(u) > 0 && deg(u) < deg(g)) {
      edf(u, d, p, rng, out);
      edf(fp_divmod(g, u, p).first, d, p, rng, out);
      return;
    }
  }
}

std::vector<FpPoly> factor_fp(const FpPoly& f, u64 p) {
  std::mt19937_64 rng(0x5eed5eedULL);
  std::vector<FpPoly> out;
  for (auto& [g, d] : ddf(fp_monic(f, p), p)) edf(g, d, p, rng, out);
  std::sort(out.begin(), out.end());
  return out;
}

// ------------------------------------------------------------ Z[x] ----

ZPoly to_z(const QPoly& f) {
  ZPoly z(f.coeffs().size());
  for (size_t i = 0; i < z.size(); ++i) z[i] = f.coeffs()[i].get_num();
  return z;
}

QPoly from_z(const ZPoly& z) {
  std::vector<Rational> c(z.size());
  for (size_t i = 0; i < z.size(); ++i) c[i] = Rational(z[i]);
  return QPoly(std::move(c));
}

void ztrim(ZPoly& a) {
  while (!a.empty() && sgn(a.back()) == 0) a.pop_back();
}

Integer mods(const Integer& a, const Integer& m) {
  Integer r = a % m;
  if (r < 0) r += m;
  if (2 * r > m) r -= m;
  return r;
}

Integer modp(const Integer& a, const Integer& m) {
  Integer r = a % m;
  if (r < 0) r += m;
  return r;
}

ZPoly z_from_fp(const FpPoly& a) {
  ZPoly z(a.size());
  for (size_t i = 0; i < a.size(); ++i) z[i] = static_cast<unsigned long>(a[i]);
  return z;
}

ZPoly z_mul(const ZPoly& a, const ZPoly& b, const Integer& m) {
  if (a.empty() || b.empty()) return {};
  ZPoly c(a.size() + b.size() - 1, Integer(0));
  for (size_t i = 0; i < a.size(); ++i) {
    if (sgn(a[i]) == 0) continue;
    for (size_t j = 0; j < b.size(); ++j) c[i + j] += a[i] * b[j];
  }
  for (auto& x : c) x = modp(x, m);
  ztrim(c);
  return c;
}

// One factor pair lifted from mod p to mod p^k: f = g*h (mod p^k),
// lc(g) = lc(f), h monic.
void hensel_pair(const ZPoly& f, ZPoly& g, ZPoly& h, u64 p, const Integer& target) {
  FpPoly gp = to_fp(g, p), hp = to_fp(h, p), gg, s, t;
  fp_ext_gcd(gp, hp, p, gg, s, t);
  Integer pk = static_cast<unsigned long>(p);
  g.back() = f.back();
  while (pk < target) {
    Integer next = pk * static_cast<unsigned long>(p);
    // e = (f - g*h) / p^k mod p
    ZPoly gh(g.size() + h.size() - 1, Integer(0));
    for (size_t i = 0; i < g.size(); ++i)
      for (size_t j = 0; j < h.size(); ++j) gh[i + j] += g[i] * h[j];
    ZPoly e(std::max(f.size(), gh.size()), Integer(0));
    for (size_t i = 0; i < f.size(); ++i) e[i] += f[i];
    for (size_t i = 0; i < gh.size(); ++i) e[i] -= gh[i];
    for (auto& x : e) {
      x /= pk;  // exact
      x = modp(x, Integer(static_cast<unsigned long>(p)));
    }
    ztrim(e);
    FpPoly ep = to_fp(e, p);
    auto [q, r] = fp_divmod(fp_mul(s, ep, p), hp, p);
    FpPoly dh = r;
    FpPoly dg = fp_mul(t, ep, p);
    FpPoly qg = fp_mul(q, gp, p);
    if (dg.size() < qg.size()) dg.resize(qg.size(), 0);
    for (size_t i = 0; i < qg.size(); ++i) dg[i] = addmod(dg[i], qg[i], p);
    trim(dg);
    for (size_t i = 0; i < dg.size(); ++i) {
      if (i >= g.size()) g.resize(i + 1, Integer(0));
      g[i] += pk * static_cast<unsigned long>(dg[i]);
    }
    for (size_t i = 0; i < dh.size(); ++i) h[i] += pk * static_cast<unsigned long>(dh[i]);
    for (auto& x : g) x = modp(x, next);
    for (auto& x : h) x = modp(x, next);
    g.back() = modp(f.back(), next);
    pk = next;
  }
}

// Lifts monic modular factors of f (f = lc * prod mod p) to modulus >= target.
void hensel_multi(const ZPoly& f, const std::vector<FpPoly>& factors, u64 p, const Integer& target,
                  std::vector<ZPoly>& out) {
  if (factors.size() == 1) {
    // f = lc * u: u = f / lc mod target.
    Integer pk = static_cast<unsigned long>(p);
    while (pk < target) pk *= static_cast<unsigned long>(p);
    Integer inv;
    mpz_invert(inv.get_mpz_t(), f.back().get_mpz_t(), pk.get_mpz_t());
    ZPoly u(f.size());
    for (size_t i = 0; i < f.size(); ++i) u[i] = modp(f[i] * inv, pk);
    out.push_back(u);
    return;
  }
  size_t half = factors.size() / 2;
  std::vector<FpPoly> left(factors.begin(), factors.begin() + static_cast<long>(half));
  std::vector<FpPoly> right(factors.begin() + static_cast<long>(half), factors.end());
  FpPoly gl{1}, hr{1};
  for (const auto& a : left) gl = fp_mul(gl, a, p);
  for (const auto& a : right) hr = fp_mul(hr, a, p);
  u64 lcp = to_fp(ZPoly{f.back()}, p)[0];
  for (auto& c : gl) c = mulmod(c, lcp, p);
  ZPoly g = z_from_fp(gl), h = z_from_fp(hr);
  hensel_pair(f, g, h, p, target);
  // Lifted g has lc(f); h monic. Recurse; the final modulus is shared.
  hensel_multi(g, left, p, target, out);
  hensel_multi(h, right, p, target, out);
}

Integer coefficient_bound(const ZPoly& f) {
  Integer norm2 = 0;
  for (const auto& c : f) norm2 += c * c;
  Integer norm;
  mpz_sqrt(norm.get_mpz_t(), norm2.get_mpz_t());
  norm += 1;
  Integer two_n;
  mpz_ui_pow_ui(two_n.get_mpz_t(), 2, static_cast<unsigned long>(f.size()));
  return two_n * norm * abs(f.back()) * 2;
}

std::vector<bool> subset_sums(const std::vector<int>& degs, int n) {
  std::vector<bool> ok(static_cast<size_t>(n) + 1, false);
  ok[0] = true;
  for (int d : degs)
    for (int s = n; s >= d; --s)
      if (ok[static_cast<size_t>(s - d)]) ok[static_cast<size_t>(s)] = true;
  return ok;
}

bool next_combination(std::vector<size_t>& c, size_t n) {
  size_t k = c.size();
  for (size_t i = k; i-- > 0;) {
    if (c[i] < n - k + i) {
      ++c[i];
      for (size_t j = i + 1; j < k; ++j) c[j] = c[j - 1] + 1;
      return true;
    }
  }
  return false;
}

// Factors a primitive squarefree integer polynomial of degree >= 2 with
// positive leading coefficient into primitive irreducibles.
std::vector<ZPoly> zassenhaus(const ZPoly& f) {
  const int n = static_cast<int>(f.size()) - 1;
  const QPoly fq = from_z(f);
  const int primes_to_try = n <= 12 ? 1 : 12;
  std::vector<bool> allowed(static_cast<size_t>(n) + 1, true);
  u64 best_p = 0;
  size_t best_count = SIZE_MAX;
  int tried = 0;
  for (u64 p = 17; tried < primes_to_try; p = modp::next_prime(p + 1)) {
    if (!modp::is_good_prime(fq, p)) continue;
    ++tried;
    auto degs = modp::factor_degrees(fq, p);
    auto sums = subset_sums(degs, n);
    for (size_t d = 0; d < allowed.size(); ++d) allowed[d] = allowed[d] && sums[d];
    if (degs.size() < best_count) {
      best_count = degs.size();
      best_p = p;
    }
    if (degs.size() == 1) break;
  }
  bool any_proper = false;
  for (int d = 1; d < n; ++d) any_proper = any_proper || allowed[static_cast<size_t>(d)];
  if (best_count == 1 || !any_proper) return {f};

  const u64 p = best_p;
  std::vector<FpPoly> modular = factor_fp(to_fp(f, p), p);
  Integer target = coefficient_bound(f);
  std::vector<ZPoly> lifted;
  hensel_multi(f, modular, p, target, lifted);
  Integer pk = static_cast<unsigned long>(p);
  while (pk < target) pk *= static_cast<unsigned long>(p);

  std::vector<ZPoly> result;
  ZPoly F = f;
  size_t s = 1;
  while (2 * s <= lifted.size()) {
    bool found = false;
    std::vector<size_t> comb(s);
    for (size_t i = 0; i < s; ++i) comb[i] = i;
    do {
      int d = 0;
      for (size_t i : comb) d += static_cast<int>(lifted[i].size()) - 1;
      if (!allowed[static_cast<size_t>(d)]) continue;
      const Integer& lc = F.back();
      // Constant-term test.
      if (sgn(F[0]) != 0) {
        Integer c0 = lc;
        for (size_t i : comb) c0 = modp(c0 * lifted[i][0], pk);
        c0 = mods(c0, pk);
        if (sgn(c0) == 0 || mpz_divisible_p(Integer(lc * F[0]).get_mpz_t(), c0.get_mpz_t()) == 0) continue;
      }
      ZPoly g{lc};
      for (size_t i : comb) g = z_mul(g, lifted[i], pk);
      for (auto& c : g) c = mods(c, pk);
      ztrim(g);
      QPoly gq = primitive_part(from_z(g));
      auto [q, r] = QPoly::divmod(from_z(F), gq);
      if (!r.is_zero()) continue;
      bool integral = true;
      for (const auto& c : q.coeffs()) integral = integral && c.get_den() == 1;
      if (!integral) continue;
      result.push_back(to_z(gq));
      F = to_z(q);
      std::vector<ZPoly> rest;
      for (size_t i = 0; i < lifted.size(); ++i)
        if (std::find(comb.begin(), comb.end(), i) == comb.end()) rest.push_back(lifted[i]);
      lifted = std::move(rest);
      found = true;
      break;
    } while (next_combination(comb, lifted.size()));
    if (!found) ++s;
  }
  if (F.size() > 1) result.push_back(F);
  return result;
}

std::vector<Integer> small_divisors(Integer n) {
  n = abs(n);
  std::vector<Integer> primes;
  std::vector<int> exps;
  for (unsigned long p = 2; Integer(p) * p <= n; ++p) {
    if (mpz_divisible_ui_p(n.get_mpz_t(), p) == 0) continue;
    int e = 0;
    while (mpz_divisible_ui_p(n.get_mpz_t(), p) != 0) {
      n /= p;
      ++e;
    }
    primes.emplace_back(p);
    exps.push_back(e);
  }
  if (n > 1) {
    primes.push_back(n);
    exps.push_back(1);
  }
  std::vector<Integer> divs{1};
  for (size_t i = 0; i < primes.size(); ++i) {
    size_t cur = divs.size();
    Integer pw = 1;
    for (int e = 1; e <= exps[i]; ++e) {
      pw *= primes[i];
      for (size_t j = 0; j < cur; ++j) divs.push_back(divs[j] * pw);
    }
  }
  return divs;
}

bool poly_less(const QPoly& a, const QPoly& b) {
  if (a.degree() != b.degree()) return a.degree() < b.degree();
  for (int i = a.degree(); i >= 0; --i) {
    int c = cmp(a.coeff(i), b.coeff(i));
    if (c != 0) return c < 0;
  }
  return false;
}

}  // namespace

// ------------------------------------------------------------- public ----

namespace modp {

bool is_good_prime(const QPoly& f, std::uint64_t p) {
  if (!reducible_mod(f, p)) return false;
  FpPoly a = to_fp(f, p);
  if (deg(a) != f.degree()) return false;
  if (deg(a) < 1) return true;
  return deg(fp_gcd(a, fp_derivative(a, p), p)) == 0;
}

std::vector<int> factor_degrees(const QPoly& f, std::uint64_t p) {
  std::vector<int> out;
  for (auto& [g, d] : ddf(fp_monic(to_fp(f, p), p), p))
    for (int k = 0; k < deg(g) / d; ++k) out.push_back(d);
  std::sort(out.begin(), out.end());
  return out;
}

int count_roots(const QPoly& f, std::uint64_t p) {
  FpPoly a = fp_monic(to_fp(f, p), p);
  if (deg(a) < 1) return 0;
  FpPoly x{0, 1};
  FpPoly h = fp_powmod(x, Integer(static_cast<unsigned long>(p)), a, p);
  return deg(fp_gcd(fp_sub(h, x, p), a, p));
}

std::uint64_t next_prime(std::uint64_t start) {
  auto is_prime = [](u64 n) {
    if (n < 2) return false;
    for (u64 d = 2; d * d <= n; ++d)
      if (n % d == 0) return false;
    return true;
  };
  while (!is_prime(start)) ++start;
  return start;
}

}  // namespace modp

QPoly Factorization::product() const {
  QPoly p = QPoly::constant(unit);
  for (const auto& [f, m] : factors)
    for (int i = 0; i < m; ++i) p = p * f;
  return p;
}

std::vector<int> Factorization::degree_pattern() const {
  std::vector<int> out;
  for (const auto& [f, m] : factors)
    for (int i = 0; i < m; ++i) out.push_back(f.degree());
  std::sort(out.begin(), out.end());
  return out;
}

Rational resultant(const QPoly& p, const QPoly& q) {
  if (p.is_zero() || q.is_zero()) return 0;
  QPoly a = p, b = q;
  Rational result = 1;
  while (true) {
    int m = a.degree(), n = b.degree();
    if (n == 0) {
      Rational r = 1;
      for (int i = 0; i < m; ++i) r *= b.lead();
      return result * r;
    }
    if (m == 0) {
      Rational r = 1;
      for (int i = 0; i < n; ++i) r *= a.lead();
      return result * r;
    }
    if (m < n) {
      if ((m * n) % 2 == 1) result = -result;
      std::swap(a, b);
      continue;
    }
    QPoly r = a % b;
    if (r.is_zero()) return 0;
    // Res(a,b) = (-1)^{mn} Res(b,a) = (-1)^{mn} lc(b)^{m - deg r} Res(b, r)
    if ((m * n) % 2 == 1) result = -result;
    for (int i = 0; i < m - r.degree(); ++i) result *= b.lead();
    a = std::move(b);
    b = std::move(r);
  }
}

Rational discriminant(const QPoly& p) {
  if (p.degree() < 1) throw InvalidInput("discriminant of a constant polynomial");
  const int n = p.degree();
  Rational d = resultant(p, p.derivative()) / p.lead();
  if ((n * (n - 1) / 2) % 2 == 1) d = -d;
  return d;
}

QPoly gcd_rational(const QPoly& a, const QPoly& b) {
  if (a.is_zero()) return b.monic();
  if (b.is_zero()) return a.monic();
  QPoly x = primitive_part(a), y = primitive_part(b);
  if (x.degree() < y.degree()) std::swap(x, y);
  while (!y.is_zero()) {
    // Pseudo-remainder on integer polynomials, then content removal.
    QPoly r = x;
    const int dy = y.degree();
    while (!r.is_zero() && r.degree() >= dy) {
      r = r * y.lead() - QPoly::monomial(r.lead(), r.degree() - dy) * y;
    }
    x = std::move(y);
    y = r.is_zero() ? r : primitive_part(r);
  }
  return x.monic();
}

bool is_squarefree_rational(const QPoly& p) {
  if (p.degree() < 2) return true;
  for (u64 q = 10007, tries = 0; tries < 3; q = modp::next_prime(q + 1), ++tries) {
    if (!reducible_mod(p, q)) continue;
    FpPoly a = to_fp(p, q);
    if (deg(a) != p.degree()) continue;
    if (deg(fp_gcd(a, fp_derivative(a, q), q)) == 0) return true;
  }
  return gcd_rational(p, p.derivative()).degree() == 0;
}

std::vector<Rational> rational_roots(const QPoly& p) {
  std::vector<Rational> roots;
  for (const auto& f : irreducible_factors(squarefree_part(p)))
    if (f.degree() == 1) roots.push_back(-f.coeff(0));
  std::sort(roots.begin(), roots.end());
  return roots;
}

namespace {

// Removes rational roots of a primitive integer polynomial when its end
// coefficients are small enough to enumerate candidates.
std::vector<QPoly> extract_rational_roots(QPoly& f) {
  std::vector<QPoly> found;
  while (f.degree() >= 1 && is_zero(f.coeff(0))) {
    found.push_back(QPoly{Rational(0), Rational(1)});
    f = f / found.back();
  }
  if (f.degree() < 1) return found;
  const Integer a0 = abs(f.coeff(0).get_num()), an = abs(f.lead().get_num());
  const Integer limit("1000000000000");
  if (a0 > limit || an > limit) return found;
  auto num = small_divisors(a0), den = small_divisors(an);
  std::vector<Rational> cands;
  for (const auto& a : num)
    for (const auto& b : den) {
      Rational r(a, b);
      r.canonicalize();
      cands.push_back(r);
      cands.push_back(-r);
    }
  std::sort(cands.begin(), cands.end());
  cands.erase(std::unique(cands.begin(), cands.end()), cands.end());
  for (const auto& r : cands) {
    while (f.degree() >= 1 && is_zero(f.eval(r))) {
      QPoly lin{-r, Rational(1)};
      found.push_back(lin);
      f = f / lin;
    }
  }
  return found;
}

}  // namespace

std::vector<QPoly> irreducible_factors(const QPoly& p) {
  std::vector<QPoly> out;
  if (p.degree() < 1) return out;
  QPoly f = primitive_part(p);
  for (auto& lin : extract_rational_roots(f)) out.push_back(lin);
  if (f.degree() >= 1) {
    f = primitive_part(f);
    if (f.degree() == 1) {
      out.push_back(f.monic());
    } else {
      for (auto& z : zassenhaus(to_z(f))) out.push_back(from_z(z).monic());
    }
  }
  std::sort(out.begin(), out.end(), poly_less);
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

bool is_irreducible(const QPoly& p) {
  if (p.degree() < 1) return false;
  if (!is_squarefree_rational(p)) return false;
  return irreducible_factors(p).size() == 1;
}

Factorization factor_rational(const QPoly& p) {
  if (p.is_zero()) throw InvalidInput("cannot factor the zero polynomial");
  Factorization out;
  out.unit = p.lead();
  std::map<int, std::vector<QPoly>> by_mult;
  QPoly f = p.monic();
  // Rational roots first, with multiplicity.
  QPoly prim = primitive_part(f);
  std::vector<std::pair<QPoly, int>> collected;
  for (auto& lin : extract_rational_roots(prim)) {
    auto it = std::find_if(collected.begin(), collected.end(), [&](const auto& e) { return e.first == lin; });
    if (it == collected.end()) collected.emplace_back(lin, 1);
    else ++it->second;
  }
  if (prim.degree() >= 1) {
    for (auto& [g, m] : squarefree_decomposition(prim.monic())) {
      QPoly gp = primitive_part(g);
      std::vector<QPoly> parts;
      if (gp.degree() == 1) parts.push_back(gp.monic());
      else
        for (auto& z : zassenhaus(to_z(gp))) parts.push_back(from_z(z).monic());
      for (auto& h : parts) collected.emplace_back(h, m);
    }
  }
  std::sort(collected.begin(), collected.end(), [](const auto& a, const auto& b) {
    if (a.first == b.first) return a.second < b.second;
    return poly_less(a.first, b.first);
  });
  out.factors = std::move(collected);
  return out;
}

}  // namespace dp5
