// Minimal library usage: cluster ten noisy three-subspace datasets with
// OMP-SSC and A-OMP-SSC and print the average metrics.

#include <cstdio>

#include "aomp/aomp.hpp"

int main() {
  using namespace aomp;
  constexpr int kTrials = 10;
  for (Variant v : {Variant::omp_ssc, Variant::a_omp_ssc}) {
    double err = 0.0, conn = 0.0, sdp = 0.0;
    for (int t = 0; t < kTrials; ++t) {
      const auto data = generate(SubspaceModel::uniform(40, 3, 6, 45, 0.6, derive_seed(7, t)));
      const auto params = v == Variant::omp_ssc ? AlgorithmParams::omp_ssc(3, 3, t)
                                                : AlgorithmParams::a_omp_ssc(3, 1.0, 0.8, 3, t);
      const MetricsRecord m = *run(data, params).metrics;
      err += m.error_rate / kTrials;
      conn += m.mean_connectivity / kTrials;
      sdp += m.sdp_percentage / kTrials;
    }
    std::printf("%-10s error %.4f  connectivity %.4f  sdp %.1f%%\n", to_string(v).data(), err, conn, sdp);
  }
}
