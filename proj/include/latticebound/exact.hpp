#pragma once

// Exact scalars, dense matrices and the linear algebra every other module
// builds on. No floating point is used anywhere in the library.

#include <gmpxx.h>

#include <cstddef>
#include <initializer_list>
#include <string>
#include <vector>

#include "latticebound/errors.hpp"

namespace latticebound {

using Integer = mpz_class;
/// Always canonical (lowest terms, positive denominator) after every
/// arithmetic operation; construct through make_rational() when building from
/// a numerator/denominator pair.
using Rational = mpq_class;

using IntVector = std::vector<Integer>;
using RatVector = std::vector<Rational>;

Rational make_rational(const Integer& num, const Integer& den);

/// "n" for integral values, "p/q" otherwise.
std::string to_string(const Integer& v);
std::string to_string(const Rational& v);
Rational parse_rational(const std::string& text);

bool is_integral(const Rational& v);

Integer factorial(unsigned n);

/// Dense row-major matrix.
template <typename T>
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), entries_(rows * cols) {}
  Matrix(std::initializer_list<std::initializer_list<T>> init) {
    rows_ = init.size();
    cols_ = rows_ == 0 ? 0 : init.begin()->size();
    entries_.reserve(rows_ * cols_);
    for (const auto& row : init) {
      if (row.size() != cols_) throw DimensionError("ragged matrix initializer");
      entries_.insert(entries_.end(), row.begin(), row.end());
    }
  }

  static Matrix identity(std::size_t n) {
    Matrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = T(1);
    return m;
  }

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  bool square() const noexcept { return rows_ == cols_; }

  T& operator()(std::size_t r, std::size_t c) { return entries_[r * cols_ + c]; }
  const T& operator()(std::size_t r, std::size_t c) const { return entries_[r * cols_ + c]; }

  const std::vector<T>& entries() const noexcept { return entries_; }

  std::vector<T> row(std::size_t r) const {
    return std::vector<T>(entries_.begin() + r * cols_, entries_.begin() + (r + 1) * cols_);
  }
  std::vector<T> col(std::size_t c) const {
    std::vector<T> out(rows_);
    for (std::size_t r = 0; r < rows_; ++r) out[r] = (*this)(r, c);
    return out;
  }

  void swap_rows(std::size_t a, std::size_t b) {
    if (a == b) return;
    for (std::size_t c = 0; c < cols_; ++c) std::swap((*this)(a, c), (*this)(b, c));
  }

  Matrix transposed() const {
    Matrix t(cols_, rows_);
    for (std::size_t r = 0; r < rows_; ++r)
      for (std::size_t c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
    return t;
  }

  friend bool operator==(const Matrix& a, const Matrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.entries_ == b.entries_;
  }

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<T> entries_;
};

using IntMatrix = Matrix<Integer>;
using RatMatrix = Matrix<Rational>;

template <typename T>
Matrix<T> operator*(const Matrix<T>& a, const Matrix<T>& b) {
  if (a.cols() != b.rows()) throw DimensionError("matrix product shape mismatch");
  Matrix<T> out(a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t k = 0; k < a.cols(); ++k) {
      if (a(i, k) == 0) continue;
      for (std::size_t j = 0; j < b.cols(); ++j) out(i, j) += a(i, k) * b(k, j);
    }
  return out;
}

template <typename T>
std::vector<T> operator*(const Matrix<T>& a, const std::vector<T>& x) {
  if (a.cols() != x.size()) throw DimensionError("matrix-vector shape mismatch");
  std::vector<T> out(a.rows());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) out[i] += a(i, j) * x[j];
  return out;
}

RatMatrix to_rational(const IntMatrix& m);
RatVector to_rational(const IntVector& v);

/// Signed determinant by Bareiss fraction-free elimination.
Integer det(const IntMatrix& m);
/// Rows are scaled to integers first, then handled by the integer routine.
Rational det(const RatMatrix& m);

/// Exact solution of m·x = rhs. Throws DegeneracyError when m is singular.
RatVector solve(const RatMatrix& m, const RatVector& rhs);

std::size_t rank(const RatMatrix& m);

struct HermiteResult {
  IntMatrix h;  ///< row-style Hermite normal form of the input
  IntMatrix u;  ///< unimodular transform with h = u·m
};

/// Row-style Hermite normal form under left unimodular action. For an input
/// of full column rank the result is upper triangular with positive pivots
/// h(j,j), every entry above a pivot reduced into [0, h(j,j)), and zero rows
/// below the last pivot. Throws RankError for rank-deficient input.
HermiteResult hnf(const IntMatrix& m);

}  // namespace latticebound
