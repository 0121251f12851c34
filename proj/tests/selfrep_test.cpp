#include <gtest/gtest.h>

#include "aomp/selfrep/active.hpp"
#include "aomp/selfrep/lasso.hpp"
#include "aomp/selfrep/omp.hpp"
#include "oracles.hpp"

namespace aomp {
namespace {

TEST(Omp, ExactAtomMatch) {
  const Matrix X = Matrix::from_columns({{0.6, 0.8, 0}, {1, 0, 0}, {0.6, 0.8, 0}});
  OpCounter counter;
  const auto c = omp_represent(X.col(0), X, 0, DictionaryMask(3), 1, counter);
  ASSERT_EQ(c.indices, (std::vector<std::size_t>{2}));
  EXPECT_NEAR(c.values[0], 1.0, 1e-15);
  const Vector r = residual(X.col(0), X, c);
  EXPECT_LT(norm2(r), 1e-15);
  EXPECT_EQ(counter.inner_products, 2u);
}

TEST(Omp, OrthogonalQueryUsesSmallestIndexTieBreak) {
  const Matrix X = Matrix::from_columns({{0, 1, 0}, {0, 0, 1}, {1, 0, 0}});
  OpCounter counter;
  const auto c = omp_represent(X.col(2), X, 2, DictionaryMask(3), 1, counter);
  ASSERT_EQ(c.indices, (std::vector<std::size_t>{0}));
  EXPECT_EQ(c.values[0], 0.0);
  EXPECT_EQ(residual(X.col(2), X, c), (Vector{1, 0, 0}));
}

TEST(Omp, EmptyDictionaryGivesTrivialColumn) {
  const Matrix X = Matrix::from_columns({{1, 0}, {0, 1}});
  DictionaryMask mask(2);
  mask.deactivate(1);
  OpCounter counter;
  const auto c = omp_represent(X.col(0), X, 0, mask, 3, counter);
  EXPECT_TRUE(c.trivial);
  EXPECT_TRUE(c.indices.empty());
  EXPECT_EQ(counter.inner_products, 0u);
}

TEST(Omp, RespectsMaskAndRunsAtMostAvailableIterations) {
  Rng rng(3);
  const Matrix X = oracle::random_unit_columns(rng, 6, 7);
  DictionaryMask mask(7);
  mask.deactivate(2);
  mask.deactivate(5);
  mask.deactivate(6);
  OpCounter counter;
  const auto c = omp_represent(X.col(0), X, 0, mask, 5, counter);
  EXPECT_EQ(c.nnz(), 3u);  // atoms 1, 3, 4
  for (auto j : c.indices) EXPECT_TRUE(mask.active(j) && j != 0);
  EXPECT_EQ(counter.inner_products, 3u * 3u);
}

TEST(Omp, MatchesNaiveReferenceOnRandomInstance) {
  Rng rng(58);
  const Matrix X = oracle::random_unit_columns(rng, 5, 8);
  for (std::size_t i = 0; i < 8; ++i) {
    OpCounter counter;
    const auto c = omp_represent(X.col(i), X, i, DictionaryMask(8), 2, counter);
    const auto ref = oracle::naive_omp(X.col(i), X, i, std::vector<bool>(8, true), 2);
    ASSERT_EQ(c.indices, ref.support);
    for (std::size_t t = 0; t < c.values.size(); ++t) EXPECT_NEAR(c.values[t], ref.coeffs[t], 1e-12);
  }
}

TEST(Omp, ResidualProperties) {
  Rng rng(101);
  for (int trial = 0; trial < 100; ++trial) {
    const std::size_t D = 4 + rng.index(20);
    const std::size_t N = 5 + rng.index(30);
    const Matrix X = oracle::random_unit_columns(rng, D, N);
    const std::size_t i = rng.index(N);
    double previous = 1.0;
    for (std::size_t d = 1; d <= std::min<std::size_t>(D - 1, 6); ++d) {
      OpCounter counter;
      const auto c = omp_represent(X.col(i), X, i, DictionaryMask(N), d, counter);
      EXPECT_EQ(counter.inner_products, std::min(d, N - 1) * (N - 1));
      ASSERT_LE(c.nnz(), d);
      const Vector r = residual(X.col(i), X, c);
      for (auto j : c.indices) EXPECT_LE(std::abs(dot(X.col(j), r)), 1e-8);
      // <x, X c> = ||X c||^2 >= 0 for an orthogonal projection.
      Vector proj(X.col(i).begin(), X.col(i).end());
      axpy(-1.0, r, proj);
      EXPECT_GE(dot(X.col(i), proj), -1e-10);
      // Each OMP run with d iterations extends the d-1 run, so norms decrease.
      EXPECT_LE(norm2(r), previous + 1e-12);
      previous = norm2(r);
    }
  }
}

TEST(Residual, TrivialAndExact) {
  const Matrix X = Matrix::from_columns({{1, 0}, {0, 1}, {1, 0}});
  SparseColumn zero{0, {}, {}};
  EXPECT_EQ(residual(X.col(0), X, zero), (Vector{1, 0}));
  SparseColumn exact{0, {2}, {1.0}};
  EXPECT_EQ(residual(X.col(0), X, exact), (Vector{0, 0}));
}

TEST(ActiveUpdate, SpecialCases) {
  const Vector x{0.6, 0.8};
  EXPECT_EQ(active_update(x, Vector{0.3, -0.1}, 0.0).point, x);
  EXPECT_EQ(active_update(x, Vector{0, 0}, 2.5).point, x);
  const auto u = active_update(Vector{1, 0}, Vector{0, 0.5}, 1.0);
  EXPECT_FALSE(u.degenerate);
  EXPECT_NEAR(u.point[0], 2.0 / std::sqrt(5.0), 1e-15);  // 0.8944
  EXPECT_NEAR(u.point[1], 1.0 / std::sqrt(5.0), 1e-15);  // 0.4472
}

TEST(ActiveUpdate, DegenerateFallsBackToInput) {
  // x = r gives x + b r = 0 at b = -1.
  const Vector x{1, 0};
  const auto u = active_update(x, x, -1.0);
  EXPECT_TRUE(u.degenerate);
  EXPECT_EQ(u.point, x);
}

// x = xbar + r with xbar in a random subspace and r orthogonal to it.
struct Decomposition {
  Vector x, xbar, r;
};

Decomposition random_decomposition(Rng& rng) {
  const std::size_t D = 3 + rng.index(20);
  const std::size_t m = 1 + rng.index(D - 1);
  const Matrix basis = oracle::random_unit_columns(rng, D, m);
  Vector x(D);
  for (double& v : x) v = rng.normal();
  const double n = norm2(x);
  for (double& v : x) v /= n;
  IncrementalQR qr(D);
  for (std::size_t j = 0; j < m; ++j) qr.push(basis.col(j));
  Vector r = x;
  for (std::size_t j = 0; j < qr.size(); ++j) axpy(-dot(qr.q(j), r), qr.q(j), r);
  Vector xbar = x;
  axpy(-1.0, r, xbar);
  return {x, xbar, r};
}

TEST(ActiveUpdate, IdealDecompositionInequalities) {
  Rng rng(606);
  for (int trial = 0; trial < 2000; ++trial) {
    const auto dec = random_decomposition(rng);
    const double base = dot(dec.x, dec.xbar);
    for (double b : {0.0, 0.5, 1.0, 2.0, 5.0}) {
      Vector y = dec.x;
      axpy(b, dec.r, y);
      EXPECT_GE(norm2(y), 1.0 - 1e-12);
      const auto u = active_update(dec.x, dec.r, b);
      EXPECT_LE(dot(u.point, dec.xbar), base + 1e-12);
      Vector mirror = dec.x;
      axpy(-2.0 - b, dec.r, mirror);
      EXPECT_NEAR(norm2(y), norm2(mirror), 1e-12);
      if (b == 0.0) {
        EXPECT_NEAR(norm2(y), 1.0, 1e-12);
        EXPECT_NEAR(dot(u.point, dec.xbar), base, 1e-12);
      }
    }
  }
}

TEST(MaybeDrop, CertainOutcomes) {
  Rng rng(1);
  for (int t = 0; t < 1000; ++t) {
    DictionaryMask mask(4);
    EXPECT_FALSE(maybe_drop(mask, 2, 0.0, rng));
    EXPECT_EQ(mask, DictionaryMask(4));
    EXPECT_TRUE(maybe_drop(mask, 2, 1.0, rng));
    EXPECT_FALSE(mask.active(2));
    EXPECT_EQ(mask.count(), 3u);
  }
  DictionaryMask mask(2);
  EXPECT_THROW(maybe_drop(mask, 0, 1.5, rng), Error);
}

TEST(MaybeDrop, EmpiricalRate) {
  // Binomial(10000, 0.8): standard deviation 0.004, so 3 sigma is 0.012.
  Rng rng(31337);
  int drops = 0;
  for (int t = 0; t < 10000; ++t) {
    DictionaryMask mask(1);
    drops += maybe_drop(mask, 0, 0.8, rng);
  }
  EXPECT_NEAR(drops / 10000.0, 0.8, 0.012);
}

TEST(Lasso, TinyLambdaShrinksToZero) {
  Rng rng(2);
  const Matrix X = oracle::random_unit_columns(rng, 4, 6);
  OpCounter counter;
  const auto res = lasso_represent(X.col(0), X, 0, 0.5, counter);  // 1/lambda = 2 > max |<x, x_j>|
  EXPECT_TRUE(res.converged);
  for (double v : res.coeffs) EXPECT_EQ(v, 0.0);
  EXPECT_TRUE(res.column.indices.empty());
}

TEST(Lasso, ScalarSoftThreshold) {
  for (double g : {0.9, -0.7, 0.3, -0.05}) {
    const double h = std::sqrt(1.0 - g * g);
    const Matrix X = Matrix::from_columns({{g, h}, {1, 0}});
    for (double lambda : {2.0, 5.0, 30.0}) {
      OpCounter counter;
      const auto res = lasso_represent(X.col(0), X, 0, lambda, counter);
      const double expected = (g > 0 ? 1.0 : -1.0) * std::max(0.0, std::abs(g) - 1.0 / lambda);
      EXPECT_EQ(res.coeffs[1], expected);
      EXPECT_EQ(res.coeffs[0], 0.0);
    }
  }
}

TEST(Lasso, MatchesExhaustiveOptimumAndKkt) {
  Rng rng(4242);
  for (int trial = 0; trial < 20; ++trial) {
    const Matrix X = oracle::random_unit_columns(rng, 4, 6);
    const double lambda = default_lambda(X.col(0), X, 0, 1.0 + 9.0 * rng.uniform());
    OpCounter counter;
    const auto res = lasso_represent(X.col(0), X, 0, lambda, counter);
    ASSERT_TRUE(res.converged);
    EXPECT_EQ(res.coeffs[0], 0.0);
    const Vector best = oracle::exhaustive_lasso(X.col(0), X, 0, lambda);
    EXPECT_NEAR(oracle::lasso_objective(X.col(0), X, res.coeffs, lambda),
                oracle::lasso_objective(X.col(0), X, best, lambda), 1e-6);
    EXPECT_LE(oracle::lasso_kkt_residual(X.col(0), X, 0, res.coeffs, lambda), 1e-6);
  }
}

TEST(Lasso, FlagsMaxIterations) {
  Rng rng(9);
  const Matrix X = oracle::random_unit_columns(rng, 5, 12);
  OpCounter counter;
  const auto res = lasso_represent(X.col(0), X, 0, 50.0, counter, {.max_sweeps = 1});
  EXPECT_FALSE(res.converged);
  EXPECT_EQ(res.sweeps, 1u);
  EXPECT_THROW(lasso_represent(X.col(0), X, 0, 0.0, counter), Error);
}

TEST(Lasso, SupportThresholdDropsDust) {
  Rng rng(12);
  const Matrix X = oracle::random_unit_columns(rng, 6, 10);
  OpCounter counter;
  const auto res = lasso_represent(X.col(3), X, 3, default_lambda(X.col(3), X, 3, 20.0), counter);
  double peak = 0.0;
  for (double v : res.coeffs) peak = std::max(peak, std::abs(v));
  for (std::size_t t = 0; t < res.column.indices.size(); ++t) {
    EXPECT_NE(res.column.indices[t], 3u);
    EXPECT_GT(std::abs(res.column.values[t]), 1e-6 * peak);
  }
}

}  // namespace
}  // namespace aomp
