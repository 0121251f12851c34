#pragma once

#include <vector>

#include "aomp/numerics/rng.hpp"
#include "aomp/pipeline/params.hpp"
#include "aomp/selfrep/active.hpp"
#include "aomp/selfrep/lasso.hpp"
#include "aomp/selfrep/omp.hpp"

namespace aomp {

struct SelfRepresentation {
  std::vector<SparseColumn> columns;  // columns[i].owner == i
  Matrix X_final;                     // data after active updates
  OpCounter counter;
  std::size_t trivial_columns = 0;
  std::size_t degenerate_updates = 0;
  std::size_t dropped = 0;
  std::size_t unconverged = 0;  // l1 only
};

/// Plain OMP-SSC: every point against the full, fixed dictionary.
inline SelfRepresentation omp_ssc_pass(const Matrix& X, std::size_t d) {
  const std::size_t N = X.cols();
  SelfRepresentation out;
  out.columns.reserve(N);
  const DictionaryMask full(N);
  for (std::size_t i = 0; i < N; ++i) {
    out.columns.push_back(omp_represent(X.col(i), X, i, full, d, out.counter));
    out.trivial_columns += out.columns.back().trivial;
  }
  out.X_final = X;
  return out;
}

/// Sequential active pass: for each point in column order, represent it by OMP
/// against the current dictionary and the current (partially updated) data,
/// replace it by (x + b r)/||x + b r||, then drop it from the dictionary with
/// probability p. With b = 0 and p = 0 this reproduces omp_ssc_pass exactly.
inline SelfRepresentation self_representation_pass(const Matrix& X, const AlgorithmParams& params) {
  if (params.d == 0) throw Error(Errc::invalid_argument, "OMP needs d >= 1");
  if (!(params.p >= 0.0 && params.p <= 1.0)) throw Error(Errc::invalid_argument, "p must lie in [0, 1]");
  const std::size_t N = X.cols();
  if (N < 2) throw Error(Errc::invalid_argument, "self-representation needs at least two points");

  SelfRepresentation out;
  out.columns.reserve(N);
  out.X_final = X;
  Matrix& data = out.X_final;
  DictionaryMask mask(N);
  Rng drop_rng(derive_seed(params.seed, streams::drop));

  for (std::size_t i = 0; i < N; ++i) {
    SparseColumn c = omp_represent(data.col(i), data, i, mask, params.d, out.counter);
    out.trivial_columns += c.trivial;
    const Vector r = residual(data.col(i), data, c);
    const ActiveUpdate upd = active_update(data.col(i), r, params.b);
    if (params.b != 0.0) out.counter.add_flops(4 * data.rows());
    out.degenerate_updates += upd.degenerate;
    std::copy(upd.point.begin(), upd.point.end(), data.col(i).begin());
    out.dropped += maybe_drop(mask, i, params.p, drop_rng);
    out.columns.push_back(std::move(c));
  }
  return out;
}

/// l1-SSC: LASSO per point against the static, full dictionary.
inline SelfRepresentation l1_ssc_pass(const Matrix& X, const AlgorithmParams& params,
                                      const LassoOptions& opt = {}) {
  const std::size_t N = X.cols();
  SelfRepresentation out;
  out.columns.reserve(N);
  for (std::size_t i = 0; i < N; ++i) {
    const double lambda = params.lambda ? *params.lambda : default_lambda(X.col(i), X, i, params.alpha, &out.counter);
    LassoResult res = lasso_represent(X.col(i), X, i, lambda, out.counter, opt);
    out.unconverged += !res.converged;
    out.trivial_columns += res.column.indices.empty();
    out.columns.push_back(std::move(res.column));
  }
  out.X_final = X;
  return out;
}

}  // namespace aomp
