#pragma once

#include <cstdint>
#include <numeric>
#include <vector>

#include "aomp/numerics/least_squares.hpp"
#include "aomp/numerics/matrix.hpp"
#include "aomp/numerics/rng.hpp"

namespace aomp {

/// Union of independent linear subspaces with additive Gaussian noise.
struct SubspaceModel {
  std::size_t ambient_dim = 0;
  std::vector<std::size_t> subspace_dims;
  std::vector<std::size_t> samples_per_subspace;
  double noise_level = 0.0;
  std::uint64_t seed = 0;

  std::size_t num_subspaces() const { return subspace_dims.size(); }
  std::size_t num_points() const {
    return std::accumulate(samples_per_subspace.begin(), samples_per_subspace.end(), std::size_t{0});
  }

  void validate() const {
    if (ambient_dim == 0) throw Error(Errc::invalid_argument, "ambient dimension must be positive");
    if (subspace_dims.empty() || subspace_dims.size() != samples_per_subspace.size())
      throw Error(Errc::invalid_argument, "need one sample count per subspace");
    std::size_t total = 0;
    for (std::size_t d : subspace_dims) {
      if (d == 0) throw Error(Errc::invalid_argument, "subspace dimension must be positive");
      total += d;
    }
    if (total > ambient_dim)
      throw Error(Errc::infeasible_model, "sum of subspace dimensions exceeds ambient dimension");
    for (std::size_t s : samples_per_subspace)
      if (s == 0) throw Error(Errc::invalid_argument, "every subspace needs at least one sample");
    if (!(noise_level >= 0.0) || !std::isfinite(noise_level))
      throw Error(Errc::invalid_argument, "noise level must be finite and nonnegative");
  }

  /// `count` subspaces of dimension `dim`, `samples` points each.
  static SubspaceModel uniform(std::size_t ambient, std::size_t count, std::size_t dim,
                               std::size_t samples, double noise, std::uint64_t seed) {
    return {ambient, std::vector<std::size_t>(count, dim), std::vector<std::size_t>(count, samples),
            noise, seed};
  }
};

struct LabeledDataset {
  Matrix X;                         // D x N, unit columns
  std::vector<int> truth;           // empty when no ground truth is known
  std::vector<std::size_t> permutation;  // column k was generated as point permutation[k]
  std::vector<Matrix> bases;        // orthonormal bases of generated subspaces

  std::size_t size() const { return X.cols(); }
  bool has_truth() const { return !truth.empty(); }
  int num_classes() const {
    int m = -1;
    for (int t : truth) m = std::max(m, t);
    return m + 1;
  }
};

/// Gaussian noise vector with i.i.d. N(0, sigma^2 / dim) entries, so that
/// E||e||^2 = sigma^2 whatever the dimension.
inline Vector gaussian_noise(Rng& rng, std::size_t dim, double sigma) {
  Vector e(dim);
  const double scale = sigma / std::sqrt(static_cast<double>(dim));
  for (double& v : e) v = scale * rng.normal();
  return e;
}

/// Random D x d matrix with orthonormal columns (Gram-Schmidt of a Gaussian).
inline Matrix random_orthonormal_basis(Rng& rng, std::size_t ambient, std::size_t dim) {
  for (;;) {
    IncrementalQR qr(ambient);
    Vector g(ambient);
    bool ok = true;
    for (std::size_t j = 0; j < dim && ok; ++j) {
      for (double& v : g) v = rng.normal();
      ok = qr.push(g);
    }
    if (!ok) continue;  // probability zero; redraw
    Matrix u(ambient, dim);
    for (std::size_t j = 0; j < dim; ++j) std::copy(qr.q(j).begin(), qr.q(j).end(), u.col(j).begin());
    return u;
  }
}

inline void normalize(std::span<double> x) {
  const double n = norm2(x);
  for (double& v : x) v /= n;
}

/// Draws a labeled dataset from `model`. Draw order is fixed: bases, then
/// per-point coordinates and noise, then the column permutation.
inline LabeledDataset generate(const SubspaceModel& model) {
  model.validate();
  Rng rng(model.seed);
  const std::size_t D = model.ambient_dim;
  const std::size_t L = model.num_subspaces();
  const std::size_t N = model.num_points();

  LabeledDataset out;
  out.bases.reserve(L);
  for (std::size_t l = 0; l < L; ++l) out.bases.push_back(random_orthonormal_basis(rng, D, model.subspace_dims[l]));

  Matrix raw(D, N);
  std::vector<int> raw_truth(N);
  std::size_t col = 0;
  for (std::size_t l = 0; l < L; ++l) {
    const Matrix& u = out.bases[l];
    Vector g(u.cols());
    for (std::size_t s = 0; s < model.samples_per_subspace[l]; ++s, ++col) {
      for (double& v : g) v = rng.normal();
      normalize(g);
      auto x = raw.col(col);
      for (std::size_t j = 0; j < u.cols(); ++j) axpy(g[j], u.col(j), x);
      const Vector e = gaussian_noise(rng, D, model.noise_level);
      if (model.noise_level > 0.0) {
        for (std::size_t r = 0; r < D; ++r) x[r] += e[r];
      }
      normalize(x);
      raw_truth[col] = static_cast<int>(l);
    }
  }

  out.permutation.resize(N);
  std::iota(out.permutation.begin(), out.permutation.end(), std::size_t{0});
  for (std::size_t t = N; t > 1; --t) {
    std::swap(out.permutation[t - 1], out.permutation[rng.index(t)]);
  }
  out.X = Matrix(D, N);
  out.truth.resize(N);
  for (std::size_t c = 0; c < N; ++c) {
    const auto src = raw.col(out.permutation[c]);
    std::copy(src.begin(), src.end(), out.X.col(c).begin());
    out.truth[c] = raw_truth[out.permutation[c]];
  }
  return out;
}

}  // namespace aomp
