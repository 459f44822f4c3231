#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include "kul/rational.hpp"

namespace kul {

/// Dense row-major matrix over an exact ring.
template <class T>
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}
  Matrix(std::initializer_list<std::initializer_list<long>> rows);

  static Matrix identity(std::size_t n) {
    Matrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
    return m;
  }

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  T& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const T& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  std::vector<T> column(std::size_t c) const {
    std::vector<T> out(rows_);
    for (std::size_t r = 0; r < rows_; ++r) out[r] = (*this)(r, c);
    return out;
  }
  std::vector<T> row(std::size_t r) const {
    return std::vector<T>(data_.begin() + r * cols_, data_.begin() + (r + 1) * cols_);
  }
  void set_column(std::size_t c, std::span<const T> values) {
    for (std::size_t r = 0; r < rows_; ++r) (*this)(r, c) = values[r];
  }

  Matrix transposed() const {
    Matrix t(cols_, rows_);
    for (std::size_t r = 0; r < rows_; ++r)
      for (std::size_t c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
    return t;
  }

  bool is_square() const { return rows_ == cols_; }
  bool is_symmetric() const {
    if (!is_square()) return false;
    for (std::size_t r = 0; r < rows_; ++r)
      for (std::size_t c = r + 1; c < cols_; ++c)
        if ((*this)(r, c) != (*this)(c, r)) return false;
    return true;
  }

  friend bool operator==(const Matrix& a, const Matrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
  }

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<T> data_;
};

template <class T>
Matrix<T>::Matrix(std::initializer_list<std::initializer_list<long>> rows)
    : rows_(rows.size()), cols_(rows.size() == 0 ? 0 : rows.begin()->size()), data_(rows_ * cols_) {
  std::size_t r = 0;
  for (const auto& row : rows) {
    std::size_t c = 0;
    for (long v : row) (*this)(r, c++) = v;
    ++r;
  }
}

using IntMatrix = Matrix<Integer>;
using RatMatrix = Matrix<Rational>;

RatMatrix to_rational(const IntMatrix& m);

template <class T>
std::vector<T> operator*(const Matrix<T>& m, std::span<const T> v) {
  std::vector<T> out(m.rows());
  for (std::size_t r = 0; r < m.rows(); ++r)
    for (std::size_t c = 0; c < m.cols(); ++c) out[r] += m(r, c) * v[c];
  return out;
}
template <class T>
std::vector<T> operator*(const Matrix<T>& m, const std::vector<T>& v) {
  return m * std::span<const T>(v);
}
template <class T>
Matrix<T> operator*(const Matrix<T>& a, const Matrix<T>& b) {
  Matrix<T> out(a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t k = 0; k < a.cols(); ++k)
      for (std::size_t j = 0; j < b.cols(); ++j) out(i, j) += a(i, k) * b(k, j);
  return out;
}

/// xᵀ·G·y.
Integer bilinear(const IntMatrix& gram, std::span<const Integer> x, std::span<const Integer> y);

struct RowEchelon {
  RatMatrix reduced;                 // reduced row echelon form
  std::vector<std::size_t> pivots;   // pivot column of each nonzero row
};
RowEchelon rref(RatMatrix m);

/// Solution of a·x = b over ℚ. `unique` is false when a has a nontrivial
/// kernel (the returned x sets every free variable to zero).
struct LinearSolution {
  RatVector x;
  bool unique = true;
};
std::optional<LinearSolution> solve(const RatMatrix& a, std::span<const Rational> b);

Rational determinant(RatMatrix m);
std::optional<RatMatrix> inverse(const RatMatrix& m);

/// Column-style Hermite normal form: a·u = [h | 0] with u unimodular.
/// The first `rank` columns of a·u are `h` (echelon, positive pivots, entries
/// left of each pivot reduced into [0, pivot)); the remaining columns of u
/// form a saturated ℤ-basis of ker(a).
struct ColumnHermite {
  IntMatrix h;                          // rows(a) x rank
  IntMatrix u;                          // cols(a) x cols(a), unimodular
  std::size_t rank = 0;
  std::vector<std::size_t> pivot_rows;  // pivot row of each column of h
};
ColumnHermite column_hermite(const IntMatrix& a);

/// Integral y with h·y = v, or nullopt when v is outside the column lattice.
std::optional<IntVector> solve_hermite(const ColumnHermite& hnf, std::span<const Integer> v);

/// Exact Sylvester criterion on -gram.
bool is_negative_definite(const IntMatrix& gram);

/// Smallest t >= 0 with t*t >= q (q >= 0).
Integer ceil_sqrt(const Rational& q);

}  // namespace kul
