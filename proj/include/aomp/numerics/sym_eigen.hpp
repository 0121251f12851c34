#pragma once

#include <algorithm>
#include <cmath>
#include <numeric>
#include <vector>

#include "aomp/numerics/matrix.hpp"

namespace aomp {

struct SymmetricEigen {
  Vector eigenvalues;   // ascending
  Matrix eigenvectors;  // column k pairs with eigenvalues[k]
  std::size_t sweeps = 0;
};

struct JacobiOptions {
  double symmetry_tol = 1e-10;
  double off_diagonal_tol = 1e-12;
  std::size_t max_sweeps = 100;
};

/// Full eigendecomposition of a symmetric matrix by cyclic Jacobi rotations.
/// Iterates until the off-diagonal Frobenius norm drops below
/// off_diagonal_tol * ||M||_F or max_sweeps is reached.
inline SymmetricEigen sym_eigen(const Matrix& m, const JacobiOptions& opt = {}) {
  const std::size_t n = m.rows();
  if (n == 0 || m.cols() != n) throw Error(Errc::dimension_mismatch, "sym_eigen needs a square matrix");
  const double fro = m.frobenius_norm();
  for (std::size_t j = 0; j < n; ++j)
    for (std::size_t i = j + 1; i < n; ++i)
      if (std::abs(m(i, j) - m(j, i)) > opt.symmetry_tol * std::max(fro, 1e-300))
        throw Error(Errc::not_symmetric, "matrix is not symmetric within tolerance");

  Matrix a = m;
  Matrix v = Matrix::identity(n);
  const double target = opt.off_diagonal_tol * fro;
  // Rotations on entries below this cannot matter for the stopping test.
  const double skip = 0.5 * target / static_cast<double>(n);

  auto off_norm = [&] {
    double s = 0.0;
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t i = j + 1; i < n; ++i) s += 2.0 * a(i, j) * a(i, j);
    return std::sqrt(s);
  };

  std::size_t sweep = 0;
  while (sweep < opt.max_sweeps && off_norm() > target) {
    ++sweep;
    for (std::size_t p = 0; p + 1 < n; ++p) {
      for (std::size_t q = p + 1; q < n; ++q) {
        const double apq = a(p, q);
        if (std::abs(apq) <= skip) continue;
        const double theta = (a(q, q) - a(p, p)) / (2.0 * apq);
        double t = 1.0 / (std::abs(theta) + std::sqrt(theta * theta + 1.0));
        if (theta < 0.0) t = -t;
        const double c = 1.0 / std::sqrt(t * t + 1.0);
        const double s = t * c;

        auto cp = a.col(p);
        auto cq = a.col(q);
        for (std::size_t k = 0; k < n; ++k) {
          if (k == p || k == q) continue;
          const double akp = cp[k];
          const double akq = cq[k];
          cp[k] = c * akp - s * akq;
          cq[k] = s * akp + c * akq;
          a(p, k) = cp[k];
          a(q, k) = cq[k];
        }
        a(p, p) -= t * apq;
        a(q, q) += t * apq;
        a(p, q) = 0.0;
        a(q, p) = 0.0;

        auto vp = v.col(p);
        auto vq = v.col(q);
        for (std::size_t k = 0; k < n; ++k) {
          const double x = vp[k];
          const double y = vq[k];
          vp[k] = c * x - s * y;
          vq[k] = s * x + c * y;
        }
      }
    }
  }

  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::stable_sort(order.begin(), order.end(),
                   [&](std::size_t x, std::size_t y) { return a(x, x) < a(y, y); });

  SymmetricEigen out;
  out.sweeps = sweep;
  out.eigenvalues.resize(n);
  out.eigenvectors = Matrix(n, n);
  for (std::size_t k = 0; k < n; ++k) {
    out.eigenvalues[k] = a(order[k], order[k]);
    auto src = v.col(order[k]);
    std::copy(src.begin(), src.end(), out.eigenvectors.col(k).begin());
  }
  return out;
}

}  // namespace aomp
