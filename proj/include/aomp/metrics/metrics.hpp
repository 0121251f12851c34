#pragma once

#include <algorithm>
#include <cstdint>
#include <map>
#include <vector>

#include "aomp/metrics/hungarian.hpp"
#include "aomp/numerics/sym_eigen.hpp"
#include "aomp/selfrep/types.hpp"

namespace aomp {

struct MetricsRecord {
  double error_rate = 0.0;
  std::vector<double> connectivity;  // one value per ground-truth cluster
  double mean_connectivity = 0.0;
  double sdp_percentage = 0.0;
  std::uint64_t inner_products = 0;
  double wall_time = 0.0;  // seconds
};

// Degrees are floored here before D^{-1/2}.
inline constexpr double kDegreeFloor = 1e-12;

namespace detail {

inline std::vector<int> compact_labels(const std::vector<int>& labels, std::size_t& count) {
  std::map<int, int> ids;
  for (int l : labels) ids.emplace(l, 0);
  int next = 0;
  for (auto& [_, id] : ids) id = next++;
  std::vector<int> out(labels.size());
  for (std::size_t i = 0; i < labels.size(); ++i) out[i] = ids[labels[i]];
  count = ids.size();
  return out;
}

}  // namespace detail

/// Fraction of points misassigned under the best one-to-one matching between
/// predicted and true label names (Hungarian assignment on the confusion
/// matrix).
inline double clustering_error(const std::vector<int>& predicted, const std::vector<int>& truth) {
  if (predicted.size() != truth.size())
    throw Error(Errc::length_mismatch, "predicted and true label vectors differ in length");
  const std::size_t n = predicted.size();
  if (n == 0) return 0.0;
  std::size_t kp = 0, kt = 0;
  const auto p = detail::compact_labels(predicted, kp);
  const auto t = detail::compact_labels(truth, kt);
  const std::size_t side = std::max(kp, kt);
  Matrix agree(side, side);
  for (std::size_t i = 0; i < n; ++i) agree(p[i], t[i]) += 1.0;
  Matrix cost(side, side);
  for (std::size_t a = 0; a < side; ++a)
    for (std::size_t b = 0; b < side; ++b) cost(a, b) = static_cast<double>(n) - agree(a, b);
  const auto match = hungarian_min_cost(cost);
  double hits = 0.0;
  for (std::size_t a = 0; a < side; ++a) hits += agree(a, match[a]);
  return 1.0 - hits / static_cast<double>(n);
}

/// Normalized Laplacian D^{-1/2} (Deg - W) D^{-1/2} of a weighted graph, with
/// degrees floored at kDegreeFloor inside D^{-1/2}. For vertices with positive
/// degree this equals I - D^{-1/2} W D^{-1/2}; an isolated vertex gets a zero
/// row, so every connected component (isolated vertices included) contributes
/// one zero eigenvalue.
inline Matrix normalized_laplacian(const Matrix& w) {
  const std::size_t n = w.rows();
  Vector deg(n, 0.0), inv_sqrt(n);
  for (std::size_t j = 0; j < n; ++j)
    for (std::size_t i = 0; i < n; ++i) deg[i] += w(i, j);
  for (std::size_t i = 0; i < n; ++i) inv_sqrt[i] = 1.0 / std::sqrt(std::max(deg[i], kDegreeFloor));
  Matrix lap(n, n);
  for (std::size_t j = 0; j < n; ++j)
    for (std::size_t i = 0; i < n; ++i) {
      const double num = (i == j ? deg[i] : 0.0) - w(i, j);
      lap(i, j) = inv_sqrt[i] * num * inv_sqrt[j];
    }
  return lap;
}

/// Algebraic connectivity of each ground-truth cluster: the second smallest
/// eigenvalue of the normalized Laplacian of its induced subgraph. Clusters
/// of size <= 1 report 0. Values are not clamped.
inline std::vector<double> connectivity(const Matrix& similarity, const std::vector<int>& truth) {
  const std::size_t n = similarity.rows();
  if (similarity.cols() != n || truth.size() != n)
    throw Error(Errc::length_mismatch, "similarity and truth sizes differ");
  int classes = 0;
  for (int t : truth) classes = std::max(classes, t + 1);
  std::vector<std::vector<std::size_t>> members(classes);
  for (std::size_t i = 0; i < n; ++i) members[truth[i]].push_back(i);

  std::vector<double> out(classes, 0.0);
  for (int c = 0; c < classes; ++c) {
    const auto& idx = members[c];
    if (idx.size() < 2) continue;
    Matrix sub(idx.size(), idx.size());
    for (std::size_t b = 0; b < idx.size(); ++b)
      for (std::size_t a = 0; a < idx.size(); ++a) sub(a, b) = similarity(idx[a], idx[b]);
    out[c] = sym_eigen(normalized_laplacian(sub)).eigenvalues[1];
  }
  return out;
}

/// Percentage of points whose representation is non-trivial (some entry above
/// threshold) and whose above-threshold entries all share the point's label.
inline double sdp_percentage(const std::vector<SparseColumn>& columns, const std::vector<int>& truth,
                             double magnitude_threshold) {
  if (columns.size() != truth.size()) throw Error(Errc::length_mismatch, "columns and truth sizes differ");
  if (columns.empty()) return 0.0;
  std::size_t good = 0;
  for (const auto& col : columns) {
    bool any = false;
    bool clean = true;
    for (std::size_t t = 0; t < col.indices.size(); ++t) {
      if (!(std::abs(col.values[t]) > magnitude_threshold)) continue;
      any = true;
      if (truth[col.indices[t]] != truth[col.owner]) clean = false;
    }
    if (any && clean) ++good;
  }
  return 100.0 * static_cast<double>(good) / static_cast<double>(columns.size());
}

inline double mean(const std::vector<double>& v) {
  if (v.empty()) return 0.0;
  double s = 0.0;
  for (double x : v) s += x;
  return s / static_cast<double>(v.size());
}

}  // namespace aomp
