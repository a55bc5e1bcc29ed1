#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "dp5/rational.hpp"

namespace dp5 {

template <class F>
using Vec = std::vector<F>;

/// Dense row-major matrix over a field.
template <class F>
class Matrix {
 public:
  Matrix() = default;
  Matrix(size_t rows, size_t cols) : rows_(rows), cols_(cols), a_(rows * cols, F(0)) {}
  static Matrix from_rows(const std::vector<Vec<F>>& rows, size_t cols) {
    Matrix m(rows.size(), cols);
    for (size_t i = 0; i < rows.size(); ++i)
      for (size_t j = 0; j < cols && j < rows[i].size(); ++j) m(i, j) = rows[i][j];
    return m;
  }
  static Matrix identity(size_t n) {
    Matrix m(n, n);
    for (size_t i = 0; i < n; ++i) m(i, i) = F(1);
    return m;
  }

  size_t rows() const { return rows_; }
  size_t cols() const { return cols_; }
  F& operator()(size_t i, size_t j) { return a_[i * cols_ + j]; }
  const F& operator()(size_t i, size_t j) const { return a_[i * cols_ + j]; }
  Vec<F> row(size_t i) const { return Vec<F>(a_.begin() + static_cast<long>(i * cols_), a_.begin() + static_cast<long>((i + 1) * cols_)); }
  void append_row(const Vec<F>& r) {
    a_.insert(a_.end(), r.begin(), r.end());
    a_.resize((rows_ + 1) * cols_, F(0));
    ++rows_;
  }

  Vec<F> apply(const Vec<F>& v) const {
    Vec<F> out(rows_, F(0));
    for (size_t i = 0; i < rows_; ++i) {
      F acc(0);
      for (size_t j = 0; j < cols_; ++j)
        if (!is_zero(a_[i * cols_ + j]) && !is_zero(v[j])) acc = acc + a_[i * cols_ + j] * v[j];
      out[i] = acc;
    }
    return out;
  }
  Matrix operator*(const Matrix& b) const {
    Matrix c(rows_, b.cols_);
    for (size_t i = 0; i < rows_; ++i)
      for (size_t k = 0; k < cols_; ++k) {
        const F& x = (*this)(i, k);
        if (is_zero(x)) continue;
        for (size_t j = 0; j < b.cols_; ++j) c(i, j) = c(i, j) + x * b(k, j);
      }
    return c;
  }
  Matrix transpose() const {
    Matrix t(cols_, rows_);
    for (size_t i = 0; i < rows_; ++i)
      for (size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
    return t;
  }

 private:
  size_t rows_ = 0;
  size_t cols_ = 0;
  std::vector<F> a_;
};

using RatMatrix = Matrix<Rational>;
using RatVector = Vec<Rational>;

/// Reduced row echelon form; `pivots` receives the pivot column of each
/// nonzero row. Zero rows are dropped from the result.
template <class F>
Matrix<F> rref(const Matrix<F>& m, std::vector<size_t>* pivots = nullptr) {
  Matrix<F> a = m;
  std::vector<size_t> piv;
  size_t r = 0;
  for (size_t c = 0; c < a.cols() && r < a.rows(); ++c) {
    size_t p = r;
    while (p < a.rows() && is_zero(a(p, c))) ++p;
    if (p == a.rows()) continue;
    if (p != r)
      for (size_t j = 0; j < a.cols(); ++j) std::swap(a(p, j), a(r, j));
    F inv = F(1) / a(r, c);
    for (size_t j = c; j < a.cols(); ++j) a(r, j) = a(r, j) * inv;
    for (size_t i = 0; i < a.rows(); ++i) {
      if (i == r || is_zero(a(i, c))) continue;
      F f = a(i, c);
      for (size_t j = c; j < a.cols(); ++j)
        if (!is_zero(a(r, j))) a(i, j) = a(i, j) - f * a(r, j);
    }
    piv.push_back(c);
    ++r;
  }
  Matrix<F> out(r, a.cols());
  for (size_t i = 0; i < r; ++i)
    for (size_t j = 0; j < a.cols(); ++j) out(i, j) = a(i, j);
  if (pivots) *pivots = std::move(piv);
  return out;
}

/// Rational RREF via fraction-free (Bareiss) forward elimination on an
/// integer scaling of the rows, followed by a normalizing back pass.
RatMatrix rref(const RatMatrix& m, std::vector<size_t>* pivots = nullptr);

template <class F>
size_t rank(const Matrix<F>& m) {
  std::vector<size_t> piv;
  rref(m, &piv);
  return piv.size();
}

/// Basis of the right null space in canonical form: one vector per free
/// column (ascending), with a 1 in that column and zeros in the other free
/// columns.
template <class F>
std::vector<Vec<F>> kernel_basis(const Matrix<F>& m) {
  std::vector<size_t> piv;
  Matrix<F> r = rref(m, &piv);
  std::vector<bool> is_pivot(m.cols(), false);
  for (size_t p : piv) is_pivot[p] = true;
  std::vector<Vec<F>> out;
  for (size_t f = 0; f < m.cols(); ++f) {
    if (is_pivot[f]) continue;
    Vec<F> v(m.cols(), F(0));
    v[f] = F(1);
    for (size_t i = 0; i < piv.size(); ++i) v[piv[i]] = -r(i, f);
    out.push_back(std::move(v));
  }
  return out;
}

/// Basis of the row space of the given vectors, in RREF.
template <class F>
std::vector<Vec<F>> row_space_basis(const std::vector<Vec<F>>& vecs, size_t dim) {
  Matrix<F> r = rref(Matrix<F>::from_rows(vecs, dim));
  std::vector<Vec<F>> out;
  for (size_t i = 0; i < r.rows(); ++i) out.push_back(r.row(i));
  return out;
}

/// One solution of m x = b, or empty optional-like result (false) if none.
template <class F>
bool solve(const Matrix<F>& m, const Vec<F>& b, Vec<F>* x) {
  Matrix<F> aug(m.rows(), m.cols() + 1);
  for (size_t i = 0; i < m.rows(); ++i) {
    for (size_t j = 0; j < m.cols(); ++j) aug(i, j) = m(i, j);
    aug(i, m.cols()) = b[i];
  }
  std::vector<size_t> piv;
  Matrix<F> r = rref(aug, &piv);
  if (!piv.empty() && piv.back() == m.cols()) return false;
  Vec<F> sol(m.cols(), F(0));
  for (size_t i = 0; i < piv.size(); ++i) sol[piv[i]] = r(i, m.cols());
  if (x) *x = std::move(sol);
  return true;
}

/// Indices of rows forming a basis of the row space modulo the prime p,
/// chosen greedily in order. Lower bound for the rational rank.
std::vector<size_t> independent_rows_mod_p(const RatMatrix& m, std::uint64_t p);

/// Scales a rational vector to coprime integers with positive first nonzero entry.
RatVector primitive_vector(const RatVector& v);

/// Determinant via fraction-free elimination.
Rational determinant(const RatMatrix& m);

}  // namespace dp5
