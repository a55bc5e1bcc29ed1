#include "dp5/matrix.hpp"

#include <utility>

namespace dp5 {

RatMatrix rref(const RatMatrix& m, std::vector<size_t>* pivots) {
  const size_t rows = m.rows();
  const size_t cols = m.cols();
  // Scale each row to integers.
  std::vector<std::vector<Integer>> a(rows, std::vector<Integer>(cols));
  for (size_t i = 0; i < rows; ++i) {
    Integer l = 1;
    for (size_t j = 0; j < cols; ++j)
      if (sgn(m(i, j)) != 0) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), m(i, j).get_den_mpz_t());
    for (size_t j = 0; j < cols; ++j) {
      if (sgn(m(i, j)) == 0) continue;
      a[i][j] = m(i, j).get_num() * (l / m(i, j).get_den());
    }
  }
  // Bareiss forward elimination with row pivoting.
  std::vector<size_t> piv;
  Integer prev = 1;
  size_t r = 0;
  for (size_t c = 0; c < cols && r < rows; ++c) {
    size_t p = r;
    while (p < rows && sgn(a[p][c]) == 0) ++p;
    if (p == rows) continue;
    std::swap(a[p], a[r]);
    for (size_t i = r + 1; i < rows; ++i) {
      const bool zero_lead = sgn(a[i][c]) == 0;
      for (size_t j = c + 1; j < cols; ++j) {
        if (zero_lead) {
          if (sgn(a[i][j]) != 0) {
            a[i][j] *= a[r][c];
            mpz_divexact(a[i][j].get_mpz_t(), a[i][j].get_mpz_t(), prev.get_mpz_t());
          }
          continue;
        }
        a[i][j] = a[r][c] * a[i][j] - a[i][c] * a[r][j];
        mpz_divexact(a[i][j].get_mpz_t(), a[i][j].get_mpz_t(), prev.get_mpz_t());
      }
      a[i][c] = 0;
    }
    prev = a[r][c];
    piv.push_back(c);
    ++r;
  }
  // Normalize and back-substitute in rationals.
  RatMatrix out(r, cols);
  for (size_t i = 0; i < r; ++i) {
    const Integer& lead = a[i][piv[i]];
    for (size_t j = piv[i]; j < cols; ++j)
      if (sgn(a[i][j]) != 0) {
        out(i, j) = Rational(a[i][j], lead);
        out(i, j).canonicalize();
      }
  }
  for (size_t k = r; k-- > 0;) {
    const size_t c = piv[k];
    for (size_t i = 0; i < k; ++i) {
      if (sgn(out(i, c)) == 0) continue;
      Rational f = out(i, c);
      for (size_t j = c; j < cols; ++j)
        if (sgn(out(k, j)) != 0) out(i, j) -= f * out(k, j);
    }
  }
  if (pivots) *pivots = std::move(piv);
  return out;
}

RatVector primitive_vector(const RatVector& v) {
  Integer l = 1, g = 0;
  for (const auto& x : v)
    if (sgn(x) != 0) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), x.get_den_mpz_t());
  std::vector<Integer> ints(v.size());
  for (size_t i = 0; i < v.size(); ++i) {
    if (sgn(v[i]) == 0) continue;
    ints[i] = v[i].get_num() * (l / v[i].get_den());
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), ints[i].get_mpz_t());
  }
  RatVector out(v.size());
  if (g == 0) return out;
  int sign = 0;
  for (const auto& x : ints)
    if (sgn(x) != 0) {
      sign = sgn(x);
      break;
    }
  for (size_t i = 0; i < v.size(); ++i) out[i] = Rational(ints[i] / g * sign);
  return out;
}

Rational determinant(const RatMatrix& m) {
  if (m.rows() != m.cols()) throw InvalidInput("determinant of a non-square matrix");
  const size_t n = m.rows();
  if (n == 0) return 1;
  Integer scale = 1;
  std::vector<std::vector<Integer>> a(n, std::vector<Integer>(n));
  for (size_t i = 0; i < n; ++i) {
    Integer l = 1;
    for (size_t j = 0; j < n; ++j) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), m(i, j).get_den_mpz_t());
    scale *= l;
    for (size_t j = 0; j < n; ++j) a[i][j] = m(i, j).get_num() * (l / m(i, j).get_den());
  }
  Integer prev = 1;
  int sign = 1;
  for (size_t k = 0; k + 1 < n; ++k) {
    if (sgn(a[k][k]) == 0) {
      size_t p = k + 1;
      while (p < n && sgn(a[p][k]) == 0) ++p;
      if (p == n) return 0;
      std::swap(a[p], a[k]);
      sign = -sign;
    }
    for (size_t i = k + 1; i < n; ++i) {
      for (size_t j = k + 1; j < n; ++j) {
        a[i][j] = a[k][k] * a[i][j] - a[i][k] * a[k][j];
        mpz_divexact(a[i][j].get_mpz_t(), a[i][j].get_mpz_t(), prev.get_mpz_t());
      }
    }
    prev = a[k][k];
  }
  Rational d(a[n - 1][n - 1] * sign, scale);
  d.canonicalize();
  return d;
}

}  // namespace dp5

namespace dp5 {

namespace {

std::uint64_t mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t p) {
  return static_cast<std::uint64_t>(static_cast<unsigned __int128>(a) * b % p);
}

std::uint64_t powmod(std::uint64_t a, std::uint64_t e, std::uint64_t p) {
  std::uint64_t r = 1;
  for (; e; e >>= 1, a = mulmod(a, a, p))
    if (e & 1) r = mulmod(r, a, p);
  return r;
}

std::uint64_t reduce(const Integer& z, std::uint64_t p) { return mpz_fdiv_ui(z.get_mpz_t(), p); }

}  // namespace

std::vector<size_t> independent_rows_mod_p(const RatMatrix& m, std::uint64_t p) {
  // Incremental echelon basis; each row is reduced against it.
  std::vector<std::vector<std::uint64_t>> basis;
  std::vector<size_t> lead, chosen;
  for (size_t i = 0; i < m.rows(); ++i) {
    std::vector<std::uint64_t> r(m.cols());
    for (size_t j = 0; j < m.cols(); ++j) {
      const Rational& c = m(i, j);
      if (c == 0) continue;
      std::uint64_t d = reduce(c.get_den(), p);
      if (d == 0) throw Error("denominator divisible by the modulus");
      r[j] = mulmod(reduce(c.get_num(), p), powmod(d, p - 2, p), p);
    }
    for (size_t b = 0; b < basis.size(); ++b) {
      std::uint64_t f = r[lead[b]];
      if (f == 0) continue;
      for (size_t j = lead[b]; j < m.cols(); ++j)
        if (basis[b][j]) r[j] = (r[j] + p - mulmod(f, basis[b][j], p)) % p;
    }
    size_t l = 0;
    while (l < m.cols() && r[l] == 0) ++l;
    if (l == m.cols()) continue;
    std::uint64_t inv = powmod(r[l], p - 2, p);
    for (size_t j = l; j < m.cols(); ++j) r[j] = mulmod(r[j], inv, p);
    basis.push_back(std::move(r));
    lead.push_back(l);
    chosen.push_back(i);
  }
  return chosen;
}

}  // namespace dp5
