#include "logdiv/linalg.hpp"

#include <algorithm>
#include <stdexcept>

namespace logdiv {

void Matrix::append_row(std::span<const Rational> values) {
  if (rows_ == 0 && cols_ == 0) cols_ = values.size();
  if (values.size() != cols_) throw dimension_error("Matrix::append_row: width mismatch");
  data_.insert(data_.end(), values.begin(), values.end());
  ++rows_;
}

void Matrix::swap_rows(std::size_t a, std::size_t b) {
  if (a == b) return;
  for (std::size_t c = 0; c < cols_; ++c) std::swap((*this)(a, c), (*this)(b, c));
}

void Matrix::truncate(std::size_t rows) {
  rows_ = std::min(rows_, rows);
  data_.resize(rows_ * cols_);
}

std::vector<std::size_t> rref(Matrix& m) {
  std::vector<std::size_t> pivots;
  std::size_t r = 0;
  Rational factor;
  for (std::size_t c = 0; c < m.cols() && r < m.rows(); ++c) {
    std::size_t p = r;
    while (p < m.rows() && sgn(m(p, c)) == 0) ++p;
    if (p == m.rows()) continue;
    m.swap_rows(r, p);
    if (m(r, c) != 1) {
      const Rational inv = 1 / m(r, c);
      for (std::size_t j = c; j < m.cols(); ++j)
        if (sgn(m(r, j)) != 0) m(r, j) *= inv;
    }
    for (std::size_t i = 0; i < m.rows(); ++i) {
      if (i == r || sgn(m(i, c)) == 0) continue;
      factor = m(i, c);
      for (std::size_t j = c; j < m.cols(); ++j)
        if (sgn(m(r, j)) != 0) m(i, j) -= factor * m(r, j);
    }
    pivots.push_back(c);
    ++r;
  }
  m.truncate(r);
  return pivots;
}

std::size_t rank(Matrix m) { return rref(m).size(); }

Matrix kernel(const Matrix& a) {
  Matrix m = a;
  const auto pivots = rref(m);
  std::vector<bool> is_pivot(a.cols(), false);
  for (auto p : pivots) is_pivot[p] = true;

  Matrix k(0, a.cols());
  std::vector<Rational> v(a.cols());
  for (std::size_t free = 0; free < a.cols(); ++free) {
    if (is_pivot[free]) continue;
    std::fill(v.begin(), v.end(), Rational(0));
    v[free] = 1;
    for (std::size_t i = 0; i < pivots.size(); ++i) v[pivots[i]] = -m(i, free);
    k.append_row(v);
  }
  rref(k);
  return k;
}

std::optional<std::vector<Rational>> solve(const Matrix& a, std::span<const Rational> b) {
  if (b.size() != a.rows()) throw dimension_error("solve: right-hand side size mismatch");
  Matrix aug(a.rows(), a.cols() + 1);
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < a.cols(); ++j) aug(i, j) = a(i, j);
    aug(i, a.cols()) = b[i];
  }
  const auto pivots = rref(aug);
  std::vector<Rational> x(a.cols());
  for (std::size_t i = 0; i < pivots.size(); ++i) {
    if (pivots[i] == a.cols()) return std::nullopt;
    x[pivots[i]] = aug(i, a.cols());
  }
  return x;
}

void reduce_against(std::span<Rational> v, const Matrix& basis, std::span<const std::size_t> pivots) {
  Rational factor;
  for (std::size_t i = 0; i < pivots.size(); ++i) {
    const std::size_t c = pivots[i];
    if (sgn(v[c]) == 0) continue;
    factor = v[c];
    for (std::size_t j = c; j < basis.cols(); ++j)
      if (sgn(basis(i, j)) != 0) v[j] -= factor * basis(i, j);
  }
}

Polynomial determinant(std::vector<std::vector<Polynomial>> m) {
  const std::size_t n = m.size();
  for (const auto& row : m)
    if (row.size() != n) throw dimension_error("determinant: matrix is not square");
  if (n == 0) throw dimension_error("determinant: empty matrix");
  const std::size_t ring = m[0][0].ring_dim();

  Polynomial prev = Polynomial::constant(ring, 1);
  int sign = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    std::size_t p = k;
    while (p < n && m[p][k].is_zero()) ++p;
    if (p == n) return Polynomial(ring);
    if (p != k) {
      std::swap(m[p], m[k]);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        Polynomial num = m[k][k] * m[i][j] - m[i][k] * m[k][j];
        auto q = divide_exact(num, prev);
        if (!q) throw std::logic_error("determinant: Bareiss division not exact");
        m[i][j] = std::move(*q);
      }
      m[i][k] = Polynomial(ring);
    }
    prev = m[k][k];
  }
  Polynomial d = m[n - 1][n - 1];
  if (sign < 0) d = -d;
  return d;
}

}  // namespace logdiv
