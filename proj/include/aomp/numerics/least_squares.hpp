#pragma once

#include <cmath>
#include <span>
#include <vector>

#include "aomp/numerics/matrix.hpp"

namespace aomp {

/// Thin QR factorization grown one column at a time by classical Gram-Schmidt
/// with one reorthogonalization pass. Adding a column costs O(D k) for k
/// columns already present.
class IncrementalQR {
 public:
  explicit IncrementalQR(std::size_t dim, double dependence_tol = 1e-10)
      : dim_(dim), tol_(dependence_tol) {}

  std::size_t dim() const noexcept { return dim_; }
  std::size_t size() const noexcept { return r_.size(); }

  std::span<const double> q(std::size_t k) const { return {q_.data() + k * dim_, dim_}; }

  /// Appends `column`. Returns false, leaving the factorization untouched, when
  /// the part of `column` orthogonal to the current span has norm below
  /// tol * ||column||.
  bool push(std::span<const double> column) {
    if (column.size() != dim_) throw Error(Errc::dimension_mismatch, "column length");
    const std::size_t k = size();
    Vector v(column.begin(), column.end());
    Vector h(k + 1, 0.0);
    for (int pass = 0; pass < 2; ++pass) {
      for (std::size_t j = 0; j < k; ++j) {
        const double c = dot(q(j), v);
        h[j] += c;
        axpy(-c, q(j), v);
      }
    }
    const double scale = norm2(column);
    const double nv = norm2(v);
    if (scale == 0.0 || nv < tol_ * scale) return false;
    for (double& x : v) x /= nv;
    h[k] = nv;
    q_.insert(q_.end(), v.begin(), v.end());
    r_.push_back(std::move(h));
    return true;
  }

  /// Removes the component along the most recently added direction from `r`.
  void deflate_last(std::span<double> r) const {
    const auto qk = q(size() - 1);
    axpy(-dot(qk, r), qk, r);
  }

  /// Least-squares coefficients of `target` against the pushed columns, by back
  /// substitution on R c = Q^T target.
  Vector solve(std::span<const double> target) const {
    const std::size_t k = size();
    Vector c(k, 0.0);
    for (std::size_t j = 0; j < k; ++j) c[j] = dot(q(j), target);
    for (std::size_t jj = k; jj-- > 0;) {
      for (std::size_t m = jj + 1; m < k; ++m) c[jj] -= r_[m][jj] * c[m];
      c[jj] /= r_[jj][jj];
    }
    return c;
  }

 private:
  std::size_t dim_;
  double tol_;
  std::vector<double> q_;          // dim_ x k, column-major
  std::vector<Vector> r_;          // r_[j] is column j of R (length j + 1)
};

struct LeastSquaresResult {
  Vector coeffs;
  Vector residual;
  // Basis was numerically rank deficient; coeffs is the minimum-norm solution.
  bool rank_deficient = false;
};

Vector min_norm_solve(std::span<const double> target, const Matrix& basis);

/// Orthogonal projection of `target` onto the column span of `basis`.
inline LeastSquaresResult least_squares_project(std::span<const double> target, const Matrix& basis) {
  if (target.size() != basis.rows()) throw Error(Errc::dimension_mismatch, "target length");
  LeastSquaresResult out;
  IncrementalQR qr(basis.rows());
  bool independent = basis.cols() <= basis.rows();
  for (std::size_t j = 0; j < basis.cols() && independent; ++j) independent = qr.push(basis.col(j));

  if (independent) {
    out.coeffs = qr.solve(target);
  } else {
    out.rank_deficient = true;
    out.coeffs = min_norm_solve(target, basis);
  }
  out.residual.assign(target.begin(), target.end());
  for (std::size_t j = 0; j < basis.cols(); ++j) axpy(-out.coeffs[j], basis.col(j), out.residual);
  return out;
}

}  // namespace aomp

#include "aomp/numerics/sym_eigen.hpp"

namespace aomp {

/// Minimum-norm least-squares solution through the pseudo-inverse of the Gram
/// matrix. Only used as the rank-deficient fallback.
inline Vector min_norm_solve(std::span<const double> target, const Matrix& basis) {
  const std::size_t k = basis.cols();
  Matrix gram(k, k);
  for (std::size_t a = 0; a < k; ++a)
    for (std::size_t b = a; b < k; ++b) gram(a, b) = gram(b, a) = dot(basis.col(a), basis.col(b));
  Vector rhs(k);
  for (std::size_t a = 0; a < k; ++a) rhs[a] = dot(basis.col(a), target);

  const auto eig = sym_eigen(gram);
  const double top = std::abs(eig.eigenvalues.back());
  // Gram eigenvalues below this are rounding noise.
  const double cutoff = 1e-13 * top * static_cast<double>(k);
  Vector c(k, 0.0);
  for (std::size_t m = 0; m < k; ++m) {
    const double lam = eig.eigenvalues[m];
    if (lam <= cutoff) continue;
    const auto v = eig.eigenvectors.col(m);
    const double w = dot(v, rhs) / lam;
    axpy(w, v, c);
  }
  return c;
}

}  // namespace aomp
