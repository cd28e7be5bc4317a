#pragma once

#include "fvir/rational.hpp"

#include <algorithm>
#include <cassert>
#include <cstddef>
#include <optional>
#include <utility>
#include <vector>

namespace fvir {

/// Small dense row-major matrix over either scalar backend. Only meant for
/// l×l objects (structure tables, Gram matrices, regular representations).
template <class Scalar>
class DenseMatrix {
 public:
  DenseMatrix() = default;
  DenseMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols, Scalar(0)) {}

  static DenseMatrix identity(std::size_t n) {
    DenseMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = Scalar(1);
    return m;
  }

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  Scalar& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const Scalar& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

  friend DenseMatrix operator*(const DenseMatrix& a, const DenseMatrix& b) {
    assert(a.cols_ == b.rows_);
    DenseMatrix c(a.rows_, b.cols_);
    for (std::size_t i = 0; i < a.rows_; ++i)
      for (std::size_t k = 0; k < a.cols_; ++k) {
        if (ScalarTraits<Scalar>::exact && a(i, k) == 0) continue;
        for (std::size_t j = 0; j < b.cols_; ++j) c(i, j) += a(i, k) * b(k, j);
      }
    return c;
  }

  friend std::vector<Scalar> operator*(const DenseMatrix& a, const std::vector<Scalar>& x) {
    assert(a.cols_ == x.size());
    std::vector<Scalar> y(a.rows_, Scalar(0));
    for (std::size_t i = 0; i < a.rows_; ++i)
      for (std::size_t j = 0; j < a.cols_; ++j) y[i] += a(i, j) * x[j];
    return y;
  }

  friend bool operator==(const DenseMatrix&, const DenseMatrix&) = default;

  double max_abs() const {
    double m = 0.0;
    for (const auto& v : data_) m = std::max(m, ScalarTraits<Scalar>::magnitude(v));
    return m;
  }

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Scalar> data_;
};

namespace detail {

/// In-place LU with partial pivoting (largest magnitude; first nonzero is
/// enough for exact scalars). Returns the determinant.
template <class Scalar>
Scalar lu_in_place(DenseMatrix<Scalar>& a, std::vector<std::size_t>& perm) {
  const std::size_t n = a.rows();
  perm.resize(n);
  for (std::size_t i = 0; i < n; ++i) perm[i] = i;
  Scalar det(1);
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t pivot = col;
    double best = ScalarTraits<Scalar>::magnitude(a(col, col));
    for (std::size_t r = col + 1; r < n; ++r) {
      double mag = ScalarTraits<Scalar>::magnitude(a(r, col));
      if (mag > best) {
        best = mag;
        pivot = r;
      }
    }
    if (a(pivot, col) == 0) return Scalar(0);
    if (pivot != col) {
      for (std::size_t j = 0; j < n; ++j) std::swap(a(pivot, j), a(col, j));
      std::swap(perm[pivot], perm[col]);
      det = -det;
    }
    det *= a(col, col);
    for (std::size_t r = col + 1; r < n; ++r) {
      if (a(r, col) == 0) continue;
      Scalar factor = a(r, col) / a(col, col);
      a(r, col) = factor;
      for (std::size_t j = col + 1; j < n; ++j) a(r, j) -= factor * a(col, j);
    }
  }
  return det;
}

}  // namespace detail

template <class Scalar>
Scalar determinant(DenseMatrix<Scalar> a) {
  assert(a.rows() == a.cols());
  std::vector<std::size_t> perm;
  return detail::lu_in_place(a, perm);
}

/// Solves a·x = b. Returns nullopt when a is exactly singular; callers apply
/// their own determinant tolerance for the floating backend.
template <class Scalar>
std::optional<std::vector<Scalar>> solve(DenseMatrix<Scalar> a, const std::vector<Scalar>& b) {
  const std::size_t n = a.rows();
  assert(a.cols() == n && b.size() == n);
  std::vector<std::size_t> perm;
  Scalar det = detail::lu_in_place(a, perm);
  if (det == 0) return std::nullopt;
  std::vector<Scalar> x(n);
  for (std::size_t i = 0; i < n; ++i) {
    Scalar s = b[perm[i]];
    for (std::size_t j = 0; j < i; ++j) s -= a(i, j) * x[j];
    x[i] = s;
  }
  for (std::size_t ii = n; ii-- > 0;) {
    Scalar s = x[ii];
    for (std::size_t j = ii + 1; j < n; ++j) s -= a(ii, j) * x[j];
    x[ii] = s / a(ii, ii);
  }
  return x;
}

template <class Scalar>
std::optional<DenseMatrix<Scalar>> inverse(const DenseMatrix<Scalar>& a) {
  const std::size_t n = a.rows();
  DenseMatrix<Scalar> inv(n, n);
  for (std::size_t j = 0; j < n; ++j) {
    std::vector<Scalar> e(n, Scalar(0));
    e[j] = Scalar(1);
    auto col = solve(a, e);
    if (!col) return std::nullopt;
    for (std::size_t i = 0; i < n; ++i) inv(i, j) = (*col)[i];
  }
  return inv;
}

}  // namespace fvir
