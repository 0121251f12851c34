#pragma once

#include <filesystem>
#include <optional>
#include <ostream>

#include "aomp/datagen/matrix_io.hpp"
#include "aomp/pipeline/run.hpp"

namespace aomp {

/// Clusters an external data matrix (optionally with ground-truth labels).
inline ClusteringResult run_single(const std::filesystem::path& data_path,
                                   const std::optional<std::filesystem::path>& labels_path,
                                   const AlgorithmParams& params) {
  return run(load_matrix(data_path, labels_path), params);
}

/// `key: value` lines. Truth-dependent metrics appear only when the run had
/// ground truth; labels are always printed.
inline void print_result(std::ostream& out, const ClusteringResult& res) {
  auto g = [](double v) { return detail::format_double(v, 9); };
  out << "points: " << res.labels.size() << '\n';
  if (res.metrics) {
    const auto& m = *res.metrics;
    out << "error_rate: " << g(m.error_rate) << '\n';
    out << "connectivity_mean: " << g(m.mean_connectivity) << '\n';
    out << "connectivity:";
    for (double c : m.connectivity) out << ' ' << g(c);
    out << '\n';
    out << "sdp_percentage: " << g(m.sdp_percentage) << '\n';
  }
  out << "inner_products: " << res.counter.inner_products << '\n';
  out << "flops_estimate: " << res.counter.flops_estimate << '\n';
  out << "trivial_columns: " << res.trivial_columns << '\n';
  out << "dropped: " << res.dropped << '\n';
  out << "wall_time: " << g(res.wall_time) << '\n';
  out << "labels:";
  for (int l : res.labels) out << ' ' << l;
  out << '\n';
}

}  // namespace aomp
