#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include "logdiv/poly.hpp"

namespace logdiv {

/// Dense exact matrix over Q, row-major.
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  Rational& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const Rational& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  std::span<Rational> row(std::size_t r) { return {data_.data() + r * cols_, cols_}; }
  std::span<const Rational> row(std::size_t r) const { return {data_.data() + r * cols_, cols_}; }

  void append_row(std::span<const Rational> values);
  void swap_rows(std::size_t a, std::size_t b);
  /// Drops trailing rows so that only the first `rows` remain.
  void truncate(std::size_t rows);

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Rational> data_;
};

/// In-place reduced row echelon form; zero rows are removed. Returns pivot columns.
std::vector<std::size_t> rref(Matrix& m);

std::size_t rank(Matrix m);

/// Basis of {v : A v = 0}, one vector per row, in reduced row echelon form.
Matrix kernel(const Matrix& a);

/// Some solution of A v = b, or nullopt if inconsistent.
std::optional<std::vector<Rational>> solve(const Matrix& a, std::span<const Rational> b);

/// Reduces `v` against the rows of an RREF matrix with the given pivots.
void reduce_against(std::span<Rational> v, const Matrix& basis, std::span<const std::size_t> pivots);

/// Determinant of a square polynomial matrix by fraction-free (Bareiss) elimination.
Polynomial determinant(std::vector<std::vector<Polynomial>> m);

}  // namespace logdiv
