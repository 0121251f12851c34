#pragma once

#include <cmath>
#include <span>

#include "aomp/numerics/least_squares.hpp"
#include "aomp/numerics/matrix.hpp"
#include "aomp/selfrep/types.hpp"

namespace aomp {

struct OmpOptions {
  // Stop early once the residual is exact to this norm.
  double exact_residual = 1e-10;
  // Atoms whose part orthogonal to the current span is below this are dependent.
  double dependence_tol = 1e-10;
};

/// Greedy sparse representation of `x` by at most `d` active columns of `X`,
/// never using column `self`. Each iteration picks the active atom with the
/// largest |<atom, residual>| (smallest index on ties) and re-projects `x` onto
/// the span of the picked atoms via an incrementally grown QR.
///
/// Counts one inner product per active atom (other than `self`) per iteration.
inline SparseColumn omp_represent(std::span<const double> x, const Matrix& X, std::size_t self,
                                  const DictionaryMask& mask, std::size_t d, OpCounter& counter,
                                  const OmpOptions& opt = {}) {
  const std::size_t D = X.rows();
  const std::size_t N = X.cols();
  if (x.size() != D) throw Error(Errc::dimension_mismatch, "query length differs from atom length");
  if (mask.size() != N) throw Error(Errc::dimension_mismatch, "mask length differs from dictionary size");
  if (d == 0) throw Error(Errc::invalid_argument, "OMP needs at least one iteration");

  SparseColumn out;
  out.owner = self;
  const std::size_t available = mask.count_excluding(self);
  if (available == 0) {
    out.trivial = true;
    return out;
  }
  const std::size_t iterations = std::min(d, available);

  Vector r(x.begin(), x.end());
  IncrementalQR qr(D, opt.dependence_tol);
  std::vector<std::uint8_t> picked(N, 0);

  for (std::size_t t = 0; t < iterations; ++t) {
    std::size_t best = N;
    double best_abs = -1.0;
    for (std::size_t j = 0; j < N; ++j) {
      if (j == self || !mask.active(j)) continue;
      const double c = std::abs(dot(X.col(j), r));
      if (!picked[j] && c > best_abs) {
        best_abs = c;
        best = j;
      }
    }
    counter.add_inner_products(available, D);
    if (best == N) break;
    if (!qr.push(X.col(best))) {
      // The residual is already orthogonal to every remaining atom.
      out.rank_deficient = true;
      break;
    }
    counter.add_flops(4 * D * qr.size());
    picked[best] = 1;
    out.indices.push_back(best);
    qr.deflate_last(r);
    if (norm2(r) < opt.exact_residual) break;
  }

  out.values = qr.solve(x);
  counter.add_flops(2 * D * out.indices.size() + out.indices.size() * out.indices.size());
  return out;
}

/// x - X c, touching only the support of c.
inline Vector residual(std::span<const double> x, const Matrix& X, const SparseColumn& c) {
  Vector r(x.begin(), x.end());
  for (std::size_t t = 0; t < c.indices.size(); ++t) axpy(-c.values[t], X.col(c.indices[t]), r);
  return r;
}

}  // namespace aomp
