#pragma once

#include <algorithm>
#include <span>

#include "aomp/numerics/matrix.hpp"
#include "aomp/numerics/rng.hpp"
#include "aomp/selfrep/types.hpp"

namespace aomp {

struct ActiveUpdate {
  Vector point;
  bool degenerate = false;  // ||x + b r|| too small; point is x unchanged
};

/// (x + b r) / ||x + b r||. With b = 0 or r = 0 the point is returned bit for
/// bit, so the b = 0 update is an exact no-op.
inline ActiveUpdate active_update(std::span<const double> x, std::span<const double> r, double b,
                                  double min_norm = 1e-12) {
  if (x.size() != r.size()) throw Error(Errc::dimension_mismatch, "point and residual lengths differ");
  ActiveUpdate out{Vector(x.begin(), x.end()), false};
  if (b == 0.0 || std::all_of(r.begin(), r.end(), [](double v) { return v == 0.0; })) return out;

  Vector y(x.begin(), x.end());
  axpy(b, r, y);
  const double n = norm2(y);
  if (!(n > min_norm)) {
    out.degenerate = true;
    return out;
  }
  for (double& v : y) v /= n;
  out.point = std::move(y);
  return out;
}

/// Removes index `i` from the dictionary with probability `p`. Consumes exactly
/// one uniform draw from `rng` per call, whatever p is. Returns true if dropped.
inline bool maybe_drop(DictionaryMask& mask, std::size_t i, double p, Rng& rng) {
  if (!(p >= 0.0 && p <= 1.0)) throw Error(Errc::invalid_argument, "drop probability must lie in [0, 1]");
  const bool drop = rng.uniform() < p;
  if (drop) mask.deactivate(i);
  return drop;
}

}  // namespace aomp
