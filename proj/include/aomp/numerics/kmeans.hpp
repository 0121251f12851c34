#pragma once

#include <algorithm>
#include <cstdint>
#include <limits>
#include <numeric>
#include <vector>

#include "aomp/numerics/matrix.hpp"
#include "aomp/numerics/rng.hpp"

namespace aomp {

struct KMeansOptions {
  std::size_t restarts = 10;
  std::size_t max_iterations = 300;
};

struct KMeansResult {
  std::vector<int> labels;
  double wcss = 0.0;  // within-cluster sum of squares of the returned labels
  // Fewer distinct points than k; labels are lexicographic ranks of the
  // distinct points.
  bool degenerate = false;
};

namespace detail {

inline double row_dist2(const Matrix& pts, std::size_t i, const Matrix& centers, std::size_t c) {
  double s = 0.0;
  for (std::size_t f = 0; f < pts.cols(); ++f) {
    const double d = pts(i, f) - centers(c, f);
    s += d * d;
  }
  return s;
}

inline bool row_less(const Matrix& pts, std::size_t a, std::size_t b) {
  for (std::size_t f = 0; f < pts.cols(); ++f) {
    if (pts(a, f) != pts(b, f)) return pts(a, f) < pts(b, f);
  }
  return false;
}

// Distinct-row ranks under lexicographic order; returns the number of distinct rows.
inline std::size_t lexicographic_ranks(const Matrix& pts, std::vector<int>& ranks) {
  const std::size_t n = pts.rows();
  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::stable_sort(order.begin(), order.end(),
                   [&](std::size_t a, std::size_t b) { return row_less(pts, a, b); });
  ranks.assign(n, 0);
  int rank = 0;
  for (std::size_t t = 0; t < n; ++t) {
    if (t > 0 && row_less(pts, order[t - 1], order[t])) ++rank;
    ranks[order[t]] = rank;
  }
  return n ? static_cast<std::size_t>(rank) + 1 : 0;
}

inline Matrix seed_plus_plus(const Matrix& pts, std::size_t k, Rng& rng) {
  const std::size_t n = pts.rows();
  const std::size_t dim = pts.cols();
  Matrix centers(k, dim);
  auto set_center = [&](std::size_t c, std::size_t i) {
    for (std::size_t f = 0; f < dim; ++f) centers(c, f) = pts(i, f);
  };
  set_center(0, rng.index(n));
  std::vector<double> best(n, std::numeric_limits<double>::infinity());
  for (std::size_t c = 1; c < k; ++c) {
    double total = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
      best[i] = std::min(best[i], row_dist2(pts, i, centers, c - 1));
      total += best[i];
    }
    std::size_t pick = n - 1;
    if (total > 0.0) {
      double u = rng.uniform() * total;
      for (std::size_t i = 0; i < n; ++i) {
        if (u < best[i]) {
          pick = i;
          break;
        }
        u -= best[i];
      }
      // Rounding may exhaust u; fall back to the last point with positive weight.
      while (best[pick] == 0.0 && pick > 0) --pick;
    } else {
      pick = rng.index(n);
    }
    set_center(c, pick);
  }
  return centers;
}

struct LloydOutcome {
  std::vector<int> labels;
  double wcss;
};

inline LloydOutcome lloyd(const Matrix& pts, Matrix centers, std::size_t max_iterations) {
  const std::size_t n = pts.rows();
  const std::size_t k = centers.rows();
  const std::size_t dim = pts.cols();
  std::vector<int> labels(n, -1);
  std::vector<double> dist(n, 0.0);
  std::vector<std::size_t> sizes(k, 0);

  for (std::size_t iter = 0; iter < max_iterations; ++iter) {
    bool changed = false;
    std::fill(sizes.begin(), sizes.end(), 0);
    for (std::size_t i = 0; i < n; ++i) {
      int arg = 0;
      double bd = row_dist2(pts, i, centers, 0);
      for (std::size_t c = 1; c < k; ++c) {
        const double d = row_dist2(pts, i, centers, c);
        if (d < bd) {
          bd = d;
          arg = static_cast<int>(c);
        }
      }
      if (labels[i] != arg) changed = true;
      labels[i] = arg;
      dist[i] = bd;
      ++sizes[arg];
    }
    // Refill empty clusters with the point farthest from its center.
    for (std::size_t c = 0; c < k; ++c) {
      if (sizes[c] != 0) continue;
      std::size_t far = n;
      for (std::size_t i = 0; i < n; ++i) {
        if (sizes[labels[i]] > 1 && (far == n || dist[i] > dist[far])) far = i;
      }
      if (far == n) break;
      --sizes[labels[far]];
      labels[far] = static_cast<int>(c);
      dist[far] = 0.0;
      sizes[c] = 1;
      changed = true;
    }
    if (!changed) break;

    Matrix next(k, dim);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t f = 0; f < dim; ++f) next(labels[i], f) += pts(i, f);
    for (std::size_t c = 0; c < k; ++c)
      for (std::size_t f = 0; f < dim; ++f) next(c, f) /= static_cast<double>(sizes[c]);
    centers = std::move(next);
  }

  // Score against the centroids of the final assignment.
  Matrix means(k, dim);
  std::vector<std::size_t> count(k, 0);
  for (std::size_t i = 0; i < n; ++i) {
    ++count[labels[i]];
    for (std::size_t f = 0; f < dim; ++f) means(labels[i], f) += pts(i, f);
  }
  for (std::size_t c = 0; c < k; ++c)
    if (count[c])
      for (std::size_t f = 0; f < dim; ++f) means(c, f) /= static_cast<double>(count[c]);
  double wcss = 0.0;
  for (std::size_t i = 0; i < n; ++i) wcss += row_dist2(pts, i, means, labels[i]);
  return {std::move(labels), wcss};
}

}  // namespace detail

/// Seeded k-means on the rows of `points`: k-means++ seeding, Lloyd
/// iterations, best of `restarts` by within-cluster sum of squares.
inline KMeansResult kmeans(const Matrix& points, std::size_t k, std::uint64_t seed,
                           const KMeansOptions& opt = {}) {
  const std::size_t n = points.rows();
  if (k == 0 || k > n) throw Error(Errc::invalid_argument, "kmeans needs 1 <= k <= n");
  if (opt.restarts == 0) throw Error(Errc::invalid_argument, "kmeans needs at least one restart");

  KMeansResult out;
  std::vector<int> ranks;
  if (detail::lexicographic_ranks(points, ranks) < k) {
    out.labels = std::move(ranks);
    out.degenerate = true;
    return out;
  }

  out.wcss = std::numeric_limits<double>::infinity();
  for (std::size_t r = 0; r < opt.restarts; ++r) {
    Rng rng(derive_seed(seed, r));
    auto fit = detail::lloyd(points, detail::seed_plus_plus(points, k, rng), opt.max_iterations);
    if (fit.wcss < out.wcss) {
      out.wcss = fit.wcss;
      out.labels = std::move(fit.labels);
    }
  }
  return out;
}

}  // namespace aomp
