#pragma once

// Brute-force reference computations used only by tests. Each one takes a
// different route from the library code it checks.

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <vector>

#include "aomp/numerics/matrix.hpp"
#include "aomp/numerics/rng.hpp"
#include "aomp/selfrep/types.hpp"

namespace aomp::oracle {

/// Solves the dense system A x = y by Gaussian elimination with partial pivoting.
inline Vector gauss_solve(Matrix a, Vector y) {
  const std::size_t n = a.rows();
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t piv = c;
    for (std::size_t r = c + 1; r < n; ++r)
      if (std::abs(a(r, c)) > std::abs(a(piv, c))) piv = r;
    if (piv != c) {
      for (std::size_t k = 0; k < n; ++k) std::swap(a(c, k), a(piv, k));
      std::swap(y[c], y[piv]);
    }
    for (std::size_t r = c + 1; r < n; ++r) {
      const double f = a(r, c) / a(c, c);
      for (std::size_t k = c; k < n; ++k) a(r, k) -= f * a(c, k);
      y[r] -= f * y[c];
    }
  }
  Vector x(n);
  for (std::size_t r = n; r-- > 0;) {
    double s = y[r];
    for (std::size_t k = r + 1; k < n; ++k) s -= a(r, k) * x[k];
    x[r] = s / a(r, r);
  }
  return x;
}

/// Least-squares coefficients of `x` on columns `support` of X via the normal
/// equations, recomputed from scratch.
inline Vector normal_equations(const Matrix& X, const std::vector<std::size_t>& support, std::span<const double> x) {
  const std::size_t k = support.size();
  Matrix g(k, k);
  Vector rhs(k);
  for (std::size_t a = 0; a < k; ++a) {
    rhs[a] = dot(X.col(support[a]), x);
    for (std::size_t b = 0; b < k; ++b) g(a, b) = dot(X.col(support[a]), X.col(support[b]));
  }
  return gauss_solve(g, rhs);
}

struct NaiveOmp {
  std::vector<std::size_t> support;
  Vector coeffs;
};

/// OMP that re-solves the full least-squares problem and recomputes the
/// residual from scratch every iteration.
inline NaiveOmp naive_omp(std::span<const double> x, const Matrix& X, std::size_t self,
                          const std::vector<bool>& active, std::size_t d) {
  NaiveOmp out;
  std::size_t available = 0;
  for (std::size_t j = 0; j < X.cols(); ++j) available += (j != self && active[j]);
  const std::size_t iters = std::min(d, available);
  Vector r(x.begin(), x.end());
  for (std::size_t t = 0; t < iters; ++t) {
    std::size_t best = X.cols();
    double best_abs = -1.0;
    for (std::size_t j = 0; j < X.cols(); ++j) {
      if (j == self || !active[j]) continue;
      if (std::find(out.support.begin(), out.support.end(), j) != out.support.end()) continue;
      const double c = std::abs(dot(X.col(j), r));
      if (c > best_abs) {
        best_abs = c;
        best = j;
      }
    }
    out.support.push_back(best);
    out.coeffs = normal_equations(X, out.support, x);
    r.assign(x.begin(), x.end());
    for (std::size_t a = 0; a < out.support.size(); ++a) axpy(-out.coeffs[a], X.col(out.support[a]), r);
  }
  return out;
}

/// 1 - best agreement over all bijections between label names, by
/// enumerating permutations. Labels must lie in [0, side).
inline double exhaustive_error(const std::vector<int>& pred, const std::vector<int>& truth, int side) {
  std::vector<int> perm(side);
  std::iota(perm.begin(), perm.end(), 0);
  std::size_t best = 0;
  do {
    std::size_t hits = 0;
    for (std::size_t i = 0; i < pred.size(); ++i) hits += perm[pred[i]] == truth[i];
    best = std::max(best, hits);
  } while (std::next_permutation(perm.begin(), perm.end()));
  return 1.0 - static_cast<double>(best) / static_cast<double>(pred.size());
}

/// Direct count for the subspace detection property.
inline double count_sdp(const Matrix& dense_c, const std::vector<int>& truth) {
  const std::size_t n = dense_c.cols();
  std::size_t good = 0;
  for (std::size_t i = 0; i < n; ++i) {
    bool any = false, clean = true;
    for (std::size_t j = 0; j < n; ++j) {
      if (dense_c(j, i) == 0.0) continue;
      any = true;
      clean = clean && truth[j] == truth[i];
    }
    good += any && clean;
  }
  return 100.0 * static_cast<double>(good) / static_cast<double>(n);
}

/// Best 2-partition of the rows of `pts` by within-cluster sum of squares,
/// by enumeration (n <= ~16). Returns 0/1 labels with point 0 in cluster 0.
inline std::vector<int> best_two_partition(const Matrix& pts) {
  const std::size_t n = pts.rows();
  const std::size_t dim = pts.cols();
  double best = std::numeric_limits<double>::infinity();
  std::vector<int> arg(n, 0);
  for (std::uint64_t mask = 1; mask < (1ULL << (n - 1)); ++mask) {
    std::vector<int> lab(n, 0);
    for (std::size_t i = 1; i < n; ++i) lab[i] = (mask >> (i - 1)) & 1;
    double cost = 0.0;
    for (int c = 0; c < 2; ++c) {
      Vector mu(dim, 0.0);
      double cnt = 0;
      for (std::size_t i = 0; i < n; ++i)
        if (lab[i] == c) {
          cnt += 1;
          for (std::size_t f = 0; f < dim; ++f) mu[f] += pts(i, f);
        }
      for (double& m : mu) m /= cnt;
      for (std::size_t i = 0; i < n; ++i)
        if (lab[i] == c)
          for (std::size_t f = 0; f < dim; ++f) cost += (pts(i, f) - mu[f]) * (pts(i, f) - mu[f]);
    }
    if (cost < best) {
      best = cost;
      arg = lab;
    }
  }
  return arg;
}

/// Best 2-partition of a weighted graph by normalized cut, by enumeration.
inline std::vector<int> best_normalized_cut(const Matrix& w) {
  const std::size_t n = w.rows();
  Vector deg(n, 0.0);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) deg[i] += w(i, j);
  double best = std::numeric_limits<double>::infinity();
  std::vector<int> arg(n, 0);
  for (std::uint64_t mask = 1; mask < (1ULL << (n - 1)); ++mask) {
    std::vector<int> lab(n, 0);
    for (std::size_t i = 1; i < n; ++i) lab[i] = (mask >> (i - 1)) & 1;
    double cut = 0.0, vol0 = 0.0, vol1 = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
      (lab[i] ? vol1 : vol0) += deg[i];
      for (std::size_t j = 0; j < n; ++j)
        if (lab[i] == 0 && lab[j] == 1) cut += w(i, j);
    }
    const double ncut = cut / vol0 + cut / vol1;
    if (ncut < best) {
      best = ncut;
      arg = lab;
    }
  }
  return arg;
}

/// Same partition up to renaming labels.
inline bool same_partition(const std::vector<int>& a, const std::vector<int>& b) {
  if (a.size() != b.size()) return false;
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < a.size(); ++j)
      if ((a[i] == a[j]) != (b[i] == b[j])) return false;
  return true;
}

inline double lasso_objective(std::span<const double> x, const Matrix& X, const Vector& c, double lambda) {
  Vector r(x.begin(), x.end());
  double l1 = 0.0;
  for (std::size_t j = 0; j < c.size(); ++j) {
    axpy(-c[j], X.col(j), r);
    l1 += std::abs(c[j]);
  }
  return l1 + 0.5 * lambda * dot(r, r);
}

/// Largest violation of the LASSO optimality conditions
/// lambda <x_j, r> = sign(c_j) (c_j != 0),  |lambda <x_j, r>| <= 1 (c_j == 0),
/// over j != self.
inline double lasso_kkt_residual(std::span<const double> x, const Matrix& X, std::size_t self, const Vector& c,
                                 double lambda) {
  Vector r(x.begin(), x.end());
  for (std::size_t j = 0; j < c.size(); ++j) axpy(-c[j], X.col(j), r);
  double worst = 0.0;
  for (std::size_t j = 0; j < X.cols(); ++j) {
    if (j == self) continue;
    const double g = lambda * dot(X.col(j), r);
    const double v = c[j] > 0.0 ? std::abs(g - 1.0) : c[j] < 0.0 ? std::abs(g + 1.0) : std::max(0.0, std::abs(g) - 1.0);
    worst = std::max(worst, v);
  }
  return worst;
}

/// Exact LASSO minimizer by enumerating sign patterns: for each candidate
/// support and signs, solve the stationarity equations and keep the feasible
/// solution with the smallest objective. Exponential; tiny instances only.
inline Vector exhaustive_lasso(std::span<const double> x, const Matrix& X, std::size_t self, double lambda) {
  const std::size_t n = X.cols();
  std::vector<std::size_t> others;
  for (std::size_t j = 0; j < n; ++j)
    if (j != self) others.push_back(j);
  std::size_t patterns = 1;
  for (std::size_t t = 0; t < others.size(); ++t) patterns *= 3;

  Vector best_c(n, 0.0);
  double best = lasso_objective(x, X, best_c, lambda);
  for (std::size_t code = 1; code < patterns; ++code) {
    std::vector<std::size_t> support;
    Vector signs;
    std::size_t rest = code;
    for (std::size_t t = 0; t < others.size(); ++t, rest /= 3) {
      const int s = static_cast<int>(rest % 3);
      if (s == 0) continue;
      support.push_back(others[t]);
      signs.push_back(s == 1 ? 1.0 : -1.0);
    }
    const std::size_t k = support.size();
    Matrix g(k, k);
    Vector rhs(k);
    for (std::size_t a = 0; a < k; ++a) {
      rhs[a] = dot(X.col(support[a]), x) - signs[a] / lambda;
      for (std::size_t b = 0; b < k; ++b) g(a, b) = dot(X.col(support[a]), X.col(support[b]));
    }
    const Vector cs = gauss_solve(g, rhs);
    bool ok = true;
    for (std::size_t a = 0; a < k && ok; ++a) ok = std::isfinite(cs[a]) && cs[a] * signs[a] > 0.0;
    if (!ok) continue;
    Vector c(n, 0.0);
    for (std::size_t a = 0; a < k; ++a) c[support[a]] = cs[a];
    const double obj = lasso_objective(x, X, c, lambda);
    if (obj < best) {
      best = obj;
      best_c = c;
    }
  }
  return best_c;
}

/// D x N matrix of independent uniformly random unit columns.
inline Matrix random_unit_columns(Rng& rng, std::size_t D, std::size_t N) {
  Matrix X(D, N);
  for (std::size_t j = 0; j < N; ++j) {
    auto c = X.col(j);
    for (double& v : c) v = rng.normal();
    const double n = norm2(c);
    for (double& v : c) v /= n;
  }
  return X;
}

/// Dense N x N coefficient matrix from sparse columns.
inline Matrix dense(const std::vector<SparseColumn>& cols) {
  Matrix c(cols.size(), cols.size());
  for (const auto& col : cols)
    for (std::size_t t = 0; t < col.indices.size(); ++t) c(col.indices[t], col.owner) = col.values[t];
  return c;
}

}  // namespace aomp::oracle
