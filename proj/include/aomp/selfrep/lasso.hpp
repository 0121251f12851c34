#pragma once

#include <cmath>
#include <span>

#include "aomp/numerics/matrix.hpp"
#include "aomp/selfrep/types.hpp"

namespace aomp {

struct LassoOptions {
  double tolerance = 1e-9;         // stop when lambda * (largest coordinate move in a sweep) drops below this
  std::size_t max_sweeps = 10000;
  double support_ratio = 1e-6;     // |c_j| > ratio * max|c| counts as support
};

struct LassoResult {
  SparseColumn column;  // thresholded support
  Vector coeffs;        // full iterate, length N, coeffs[self] == 0
  std::size_t sweeps = 0;
  bool converged = false;
};

/// Data-driven penalty alpha / mu with mu = max_{j != self} |<x, x_j>|.
inline double default_lambda(std::span<const double> x, const Matrix& X, std::size_t self, double alpha,
                             OpCounter* counter = nullptr) {
  double mu = 0.0;
  for (std::size_t j = 0; j < X.cols(); ++j) {
    if (j == self) continue;
    mu = std::max(mu, std::abs(dot(x, X.col(j))));
  }
  if (counter) counter->add_inner_products(X.cols() - 1, X.rows());
  if (!(mu > 0.0)) return alpha;
  return alpha / mu;
}

inline double soft_threshold(double z, double t) {
  if (z > t) return z - t;
  if (z < -t) return z + t;
  return 0.0;
}

/// Coordinate descent for  min ||c||_1 + (lambda/2) ||x - X c||^2  with c_self
/// pinned to zero.
inline LassoResult lasso_represent(std::span<const double> x, const Matrix& X, std::size_t self,
                                   double lambda, OpCounter& counter, const LassoOptions& opt = {}) {
  if (!(lambda > 0.0) || !std::isfinite(lambda)) throw Error(Errc::invalid_argument, "lambda must be positive");
  const std::size_t D = X.rows();
  const std::size_t N = X.cols();
  if (x.size() != D) throw Error(Errc::dimension_mismatch, "query length differs from atom length");

  Vector sq(N);
  for (std::size_t j = 0; j < N; ++j) sq[j] = dot(X.col(j), X.col(j));

  LassoResult out;
  out.coeffs.assign(N, 0.0);
  Vector r(x.begin(), x.end());
  const double thresh = 1.0 / lambda;

  while (out.sweeps < opt.max_sweeps) {
    ++out.sweeps;
    double max_change = 0.0;
    for (std::size_t j = 0; j < N; ++j) {
      if (j == self || sq[j] == 0.0) continue;
      const auto xj = X.col(j);
      const double old = out.coeffs[j];
      const double z = dot(xj, r) + sq[j] * old;
      const double next = soft_threshold(z, thresh) / sq[j];
      if (next != old) {
        axpy(old - next, xj, r);
        out.coeffs[j] = next;
        max_change = std::max(max_change, std::abs(next - old));
      }
    }
    counter.add_inner_products(N - 1, D);
    if (lambda * max_change < opt.tolerance) {
      out.converged = true;
      break;
    }
  }

  out.column.owner = self;
  double peak = 0.0;
  for (double v : out.coeffs) peak = std::max(peak, std::abs(v));
  for (std::size_t j = 0; j < N; ++j) {
    if (peak > 0.0 && std::abs(out.coeffs[j]) > opt.support_ratio * peak) {
      out.column.indices.push_back(j);
      out.column.values.push_back(out.coeffs[j]);
    }
  }
  return out;
}

}  // namespace aomp
