#pragma once

#include <cctype>
#include <cmath>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>

#include "aomp/error.hpp"

namespace aomp {

enum class Variant { l1_ssc, omp_ssc, a_omp_ssc };

constexpr std::string_view to_string(Variant v) {
  switch (v) {
    case Variant::l1_ssc: return "l1-ssc";
    case Variant::omp_ssc: return "omp-ssc";
    case Variant::a_omp_ssc: return "a-omp-ssc";
  }
  return "?";
}

/// Accepts "a-omp-ssc", "A_OMP_SSC", "aomp" and the like.
inline Variant parse_variant(std::string_view text) {
  std::string key;
  for (char ch : text)
    if (std::isalnum(static_cast<unsigned char>(ch))) key += static_cast<char>(std::tolower(static_cast<unsigned char>(ch)));
  if (key == "l1ssc" || key == "l1" || key == "ssc") return Variant::l1_ssc;
  if (key == "ompssc" || key == "omp") return Variant::omp_ssc;
  if (key == "aompssc" || key == "aomp") return Variant::a_omp_ssc;
  throw Error(Errc::invalid_argument, "unknown variant '" + std::string(text) + "'");
}

struct AlgorithmParams {
  Variant variant = Variant::a_omp_ssc;
  std::size_t d = 3;        // OMP iterations
  double b = 1.0;           // update modifier
  double p = 0.8;           // drop probability
  double alpha = 20.0;      // l1 penalty scale, lambda = alpha / mu_i
  std::optional<double> lambda;  // fixed l1 penalty, overrides alpha
  std::size_t k = 2;        // clusters
  std::uint64_t seed = 0;

  static AlgorithmParams omp_ssc(std::size_t d, std::size_t k, std::uint64_t seed) {
    AlgorithmParams a;
    a.variant = Variant::omp_ssc;
    a.d = d;
    a.b = 0.0;
    a.p = 0.0;
    a.k = k;
    a.seed = seed;
    return a;
  }
  static AlgorithmParams a_omp_ssc(std::size_t d, double b, double p, std::size_t k, std::uint64_t seed) {
    AlgorithmParams a;
    a.d = d;
    a.b = b;
    a.p = p;
    a.k = k;
    a.seed = seed;
    return a;
  }
  static AlgorithmParams l1_ssc(double alpha, std::size_t k, std::uint64_t seed) {
    AlgorithmParams a;
    a.variant = Variant::l1_ssc;
    a.b = 0.0;
    a.p = 0.0;
    a.alpha = alpha;
    a.k = k;
    a.seed = seed;
    return a;
  }

  void validate() const {
    if (k == 0) throw Error(Errc::invalid_argument, "cluster count must be positive");
    switch (variant) {
      case Variant::l1_ssc:
        if (lambda ? !(*lambda > 0.0) : !(alpha > 0.0))
          throw Error(Errc::invalid_argument, "l1 penalty must be positive");
        break;
      case Variant::omp_ssc:
        if (d == 0) throw Error(Errc::invalid_argument, "OMP needs d >= 1");
        if (b != 0.0 || p != 0.0) throw Error(Errc::invalid_argument, "omp-ssc requires b = 0 and p = 0");
        break;
      case Variant::a_omp_ssc:
        if (d == 0) throw Error(Errc::invalid_argument, "OMP needs d >= 1");
        if (!std::isfinite(b)) throw Error(Errc::invalid_argument, "b must be finite");
        if (!(p >= 0.0 && p <= 1.0)) throw Error(Errc::invalid_argument, "p must lie in [0, 1]");
        break;
    }
  }
};

}  // namespace aomp
