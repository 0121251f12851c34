#pragma once

#include <cmath>
#include <vector>

#include "aomp/metrics/metrics.hpp"
#include "aomp/numerics/kmeans.hpp"
#include "aomp/numerics/sym_eigen.hpp"
#include "aomp/selfrep/types.hpp"

namespace aomp {

/// A = |C| + |C|^T, symmetric and nonnegative with zero diagonal.
struct SimilarityGraph {
  Matrix A;

  std::size_t size() const { return A.rows(); }
};

inline SimilarityGraph build_similarity(const std::vector<SparseColumn>& columns) {
  const std::size_t n = columns.size();
  if (n == 0) throw Error(Errc::invalid_argument, "no coefficient columns");
  Matrix c(n, n);
  for (const auto& col : columns) {
    if (col.owner >= n) throw Error(Errc::dimension_mismatch, "column owner out of range");
    for (std::size_t t = 0; t < col.indices.size(); ++t) {
      if (col.indices[t] >= n) throw Error(Errc::dimension_mismatch, "support index out of range");
      if (col.indices[t] == col.owner) continue;
      c(col.indices[t], col.owner) = col.values[t];
    }
  }
  SimilarityGraph g{Matrix(n, n)};
  for (std::size_t k = 0; k < n; ++k)
    for (std::size_t j = 0; j < n; ++j)
      if (j != k) g.A(j, k) = std::abs(c(j, k)) + std::abs(c(k, j));
  return g;
}

/// Spectral embedding: the k eigenvectors of I - D^{-1/2} A D^{-1/2} with the
/// smallest eigenvalues, as an n x k matrix whose rows are rescaled to unit
/// length (zero rows stay zero). Each eigenvector is signed so its
/// largest-magnitude entry is positive.
inline Matrix spectral_embedding(const Matrix& a, std::size_t k) {
  const std::size_t n = a.rows();
  Vector inv_sqrt(n, 0.0);
  for (std::size_t i = 0; i < n; ++i) {
    double deg = 0.0;
    for (std::size_t j = 0; j < n; ++j) deg += a(i, j);
    inv_sqrt[i] = 1.0 / std::sqrt(std::max(deg, kDegreeFloor));
  }
  Matrix lap(n, n);
  for (std::size_t j = 0; j < n; ++j)
    for (std::size_t i = 0; i < n; ++i) lap(i, j) = (i == j ? 1.0 : 0.0) - inv_sqrt[i] * a(i, j) * inv_sqrt[j];
  // Exact symmetry; the product above can differ in the last bit.
  for (std::size_t j = 0; j < n; ++j)
    for (std::size_t i = j + 1; i < n; ++i) lap(j, i) = lap(i, j);

  const auto eig = sym_eigen(lap);
  Matrix emb(n, k);
  for (std::size_t c = 0; c < k; ++c) {
    const auto v = eig.eigenvectors.col(c);
    std::size_t arg = 0;
    for (std::size_t i = 1; i < n; ++i)
      if (std::abs(v[i]) > std::abs(v[arg])) arg = i;
    const double sign = v[arg] < 0.0 ? -1.0 : 1.0;
    for (std::size_t i = 0; i < n; ++i) emb(i, c) = sign * v[i];
  }
  for (std::size_t i = 0; i < n; ++i) {
    double s = 0.0;
    for (std::size_t c = 0; c < k; ++c) s += emb(i, c) * emb(i, c);
    if (s == 0.0) continue;
    s = std::sqrt(s);
    for (std::size_t c = 0; c < k; ++c) emb(i, c) /= s;
  }
  return emb;
}

/// Normalized spectral clustering (Ng-Jordan-Weiss). Deterministic per seed.
inline std::vector<int> spectral_cluster(const SimilarityGraph& g, std::size_t k, std::uint64_t seed,
                                         const KMeansOptions& opt = {}) {
  const std::size_t n = g.size();
  if (k == 0 || k > n) throw Error(Errc::invalid_argument, "spectral clustering needs 1 <= k <= N");
  if (k == 1) return std::vector<int>(n, 0);
  return kmeans(spectral_embedding(g.A, k), k, seed, opt).labels;
}

}  // namespace aomp
