#pragma once

#include <cassert>
#include <cmath>
#include <cstddef>
#include <initializer_list>
#include <span>
#include <vector>

#include "aomp/error.hpp"

namespace aomp {

using Vector = std::vector<double>;

/// Dense real matrix stored column-major. Columns are contiguous, so a data
/// point of a D x N data matrix is a `std::span` into the storage.
class Matrix {
 public:
  Matrix() = default;

  Matrix(std::size_t rows, std::size_t cols, double fill = 0.0)
      : rows_(rows), cols_(cols), data_(rows * cols, fill) {
    if (rows == 0 || cols == 0) {
      throw Error(Errc::invalid_argument, "matrix dimensions must be positive");
    }
  }

  /// Takes ownership of column-major `data`; rejects non-finite entries.
  static Matrix from_data(std::size_t rows, std::size_t cols, std::vector<double> data) {
    if (rows == 0 || cols == 0) {
      throw Error(Errc::invalid_argument, "matrix dimensions must be positive");
    }
    if (data.size() != rows * cols) {
      throw Error(Errc::dimension_mismatch, "data length does not match rows x cols");
    }
    for (double v : data) {
      if (!std::isfinite(v)) throw Error(Errc::invalid_argument, "matrix entry is not finite");
    }
    Matrix m;
    m.rows_ = rows;
    m.cols_ = cols;
    m.data_ = std::move(data);
    return m;
  }

  /// Builds a matrix from a list of columns of equal length.
  static Matrix from_columns(std::initializer_list<std::initializer_list<double>> columns) {
    std::vector<double> data;
    std::size_t rows = columns.size() ? columns.begin()->size() : 0;
    for (const auto& c : columns) {
      if (c.size() != rows) throw Error(Errc::dimension_mismatch, "ragged column list");
      data.insert(data.end(), c.begin(), c.end());
    }
    return from_data(rows, columns.size(), std::move(data));
  }

  static Matrix from_rows(std::initializer_list<std::initializer_list<double>> rows) {
    std::size_t cols = rows.size() ? rows.begin()->size() : 0;
    Matrix m(rows.size(), cols);
    std::size_t r = 0;
    for (const auto& row : rows) {
      if (row.size() != cols) throw Error(Errc::dimension_mismatch, "ragged row list");
      std::size_t c = 0;
      for (double v : row) m(r, c++) = v;
      ++r;
    }
    return m;
  }

  static Matrix identity(std::size_t n) {
    Matrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = 1.0;
    return m;
  }

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  bool empty() const noexcept { return data_.empty(); }

  double& operator()(std::size_t r, std::size_t c) {
    assert(r < rows_ && c < cols_);
    return data_[c * rows_ + r];
  }
  double operator()(std::size_t r, std::size_t c) const {
    assert(r < rows_ && c < cols_);
    return data_[c * rows_ + r];
  }

  std::span<double> col(std::size_t c) {
    assert(c < cols_);
    return {data_.data() + c * rows_, rows_};
  }
  std::span<const double> col(std::size_t c) const {
    assert(c < cols_);
    return {data_.data() + c * rows_, rows_};
  }

  std::span<const double> data() const noexcept { return data_; }
  std::span<double> data() noexcept { return data_; }

  Matrix transpose() const {
    Matrix t(cols_, rows_);
    for (std::size_t c = 0; c < cols_; ++c)
      for (std::size_t r = 0; r < rows_; ++r) t(c, r) = (*this)(r, c);
    return t;
  }

  double frobenius_norm() const {
    double s = 0.0;
    for (double v : data_) s += v * v;
    return std::sqrt(s);
  }

  bool all_finite() const {
    for (double v : data_)
      if (!std::isfinite(v)) return false;
    return true;
  }

  friend bool operator==(const Matrix&, const Matrix&) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<double> data_;
};

inline double dot(std::span<const double> a, std::span<const double> b) {
  assert(a.size() == b.size());
  double s = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

inline double norm2(std::span<const double> a) { return std::sqrt(dot(a, a)); }

// y += alpha * x
inline void axpy(double alpha, std::span<const double> x, std::span<double> y) {
  assert(x.size() == y.size());
  for (std::size_t i = 0; i < x.size(); ++i) y[i] += alpha * x[i];
}

inline Matrix multiply(const Matrix& a, const Matrix& b) {
  if (a.cols() != b.rows()) throw Error(Errc::dimension_mismatch, "matrix product shapes");
  Matrix out(a.rows(), b.cols());
  for (std::size_t j = 0; j < b.cols(); ++j) {
    auto oc = out.col(j);
    for (std::size_t k = 0; k < a.cols(); ++k) axpy(b(k, j), a.col(k), oc);
  }
  return out;
}

inline Vector multiply(const Matrix& a, std::span<const double> x) {
  if (a.cols() != x.size()) throw Error(Errc::dimension_mismatch, "matrix-vector shapes");
  Vector out(a.rows(), 0.0);
  for (std::size_t k = 0; k < a.cols(); ++k) axpy(x[k], a.col(k), out);
  return out;
}

}  // namespace aomp
