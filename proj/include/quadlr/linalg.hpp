#pragma once

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <numeric>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "errors.hpp"

namespace quadlr {

/// Row-major dense real matrix.
class DenseMatrix {
 public:
  DenseMatrix() = default;
  DenseMatrix(std::size_t rows, std::size_t cols, double fill = 0.0)
      : rows_(rows), cols_(cols), data_(rows * cols, fill) {}

  static DenseMatrix identity(std::size_t n) {
    DenseMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = 1.0;
    return m;
  }

  static DenseMatrix from_rows(const std::vector<std::vector<double>>& rows) {
    const std::size_t n = rows.size();
    const std::size_t c = n ? rows.front().size() : 0;
    DenseMatrix m(n, c);
    for (std::size_t i = 0; i < n; ++i) {
      if (rows[i].size() != c) throw std::invalid_argument("DenseMatrix::from_rows: ragged rows");
      std::copy(rows[i].begin(), rows[i].end(), m.data_.begin() + static_cast<std::ptrdiff_t>(i * c));
    }
    return m;
  }

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  bool is_square() const noexcept { return rows_ == cols_; }

  double& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  double operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

  std::span<const double> row(std::size_t i) const { return {data_.data() + i * cols_, cols_}; }

  std::vector<double> column(std::size_t j) const {
    std::vector<double> v(rows_);
    for (std::size_t i = 0; i < rows_; ++i) v[i] = (*this)(i, j);
    return v;
  }

  double frobenius_norm() const {
    return std::sqrt(std::inner_product(data_.begin(), data_.end(), data_.begin(), 0.0));
  }

  double trace() const {
    double t = 0.0;
    for (std::size_t i = 0; i < std::min(rows_, cols_); ++i) t += (*this)(i, i);
    return t;
  }

  /// Largest |a_ij - a_ji|.
  double asymmetry() const {
    if (!is_square()) throw std::invalid_argument("asymmetry of a non-square matrix");
    double worst = 0.0;
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = i + 1; j < cols_; ++j) worst = std::max(worst, std::abs((*this)(i, j) - (*this)(j, i)));
    return worst;
  }

  std::vector<double> apply(std::span<const double> x) const {
    if (x.size() != cols_) throw std::invalid_argument("DenseMatrix::apply: size mismatch");
    std::vector<double> y(rows_, 0.0);
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = 0; j < cols_; ++j) y[i] += (*this)(i, j) * x[j];
    return y;
  }

  friend DenseMatrix operator*(const DenseMatrix& a, const DenseMatrix& b) {
    if (a.cols_ != b.rows_) throw std::invalid_argument("DenseMatrix product: size mismatch");
    DenseMatrix c(a.rows_, b.cols_);
    for (std::size_t i = 0; i < a.rows_; ++i)
      for (std::size_t k = 0; k < a.cols_; ++k) {
        const double aik = a(i, k);
        if (aik == 0.0) continue;
        for (std::size_t j = 0; j < b.cols_; ++j) c(i, j) += aik * b(k, j);
      }
    return c;
  }

  DenseMatrix transpose() const {
    DenseMatrix t(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
    return t;
  }

  friend bool operator==(const DenseMatrix&, const DenseMatrix&) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<double> data_;
};

inline double dot(std::span<const double> a, std::span<const double> b) {
  return std::inner_product(a.begin(), a.end(), b.begin(), 0.0);
}

inline double norm(std::span<const double> a) { return std::sqrt(dot(a, a)); }

/// Eigenvalues in ascending order; column k of `vectors` belongs to values[k].
struct EigenResult {
  std::vector<double> values;
  DenseMatrix vectors;

  std::vector<double> vector(std::size_t k) const { return vectors.column(k); }
};

/// Full eigendecomposition of a real symmetric matrix by cyclic Jacobi
/// rotations. Sweeps stop once the off-diagonal Frobenius norm drops below
/// tol * ||A||_F.
inline EigenResult symmetric_eigen(const DenseMatrix& matrix, double tol = 1e-13, int max_sweeps = 100) {
  if (!matrix.is_square()) throw std::invalid_argument("symmetric_eigen: matrix is not square");
  const std::size_t n = matrix.rows();
  const double scale = matrix.frobenius_norm();
  if (matrix.asymmetry() > tol * std::max(scale, 1.0))
    throw std::invalid_argument("symmetric_eigen: matrix is not symmetric");

  DenseMatrix a = matrix;
  DenseMatrix v = DenseMatrix::identity(n);

  auto off_norm = [&] {
    double s = 0.0;
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = i + 1; j < n; ++j) s += 2.0 * a(i, j) * a(i, j);
    return std::sqrt(s);
  };

  const double target = tol * scale;
  int sweep = 0;
  while (off_norm() > target) {
    if (++sweep > max_sweeps)
      throw ConvergenceError("symmetric_eigen: no convergence after " + std::to_string(max_sweeps) + " sweeps");
    for (std::size_t p = 0; p + 1 < n; ++p) {
      for (std::size_t q = p + 1; q < n; ++q) {
        const double apq = a(p, q);
        if (apq == 0.0) continue;
        const double theta = (a(q, q) - a(p, p)) / (2.0 * apq);
        const double t = (theta >= 0 ? 1.0 : -1.0) / (std::abs(theta) + std::sqrt(theta * theta + 1.0));
        const double c = 1.0 / std::sqrt(t * t + 1.0);
        const double s = t * c;

        for (std::size_t k = 0; k < n; ++k) {
          const double akp = a(k, p), akq = a(k, q);
          a(k, p) = c * akp - s * akq;
          a(k, q) = s * akp + c * akq;
        }
        for (std::size_t k = 0; k < n; ++k) {
          const double apk = a(p, k), aqk = a(q, k);
          a(p, k) = c * apk - s * aqk;
          a(q, k) = s * apk + c * aqk;
        }
        a(p, q) = a(q, p) = 0.0;

        for (std::size_t k = 0; k < n; ++k) {
          const double vkp = v(k, p), vkq = v(k, q);
          v(k, p) = c * vkp - s * vkq;
          v(k, q) = s * vkp + c * vkq;
        }
      }
    }
  }

  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](std::size_t x, std::size_t y) { return a(x, x) < a(y, y); });

  EigenResult result{std::vector<double>(n), DenseMatrix(n, n)};
  for (std::size_t k = 0; k < n; ++k) {
    result.values[k] = a(order[k], order[k]);
    for (std::size_t i = 0; i < n; ++i) result.vectors(i, k) = v(i, order[k]);
  }
  return result;
}

}  // namespace quadlr
