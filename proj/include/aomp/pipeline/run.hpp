#pragma once

#include <chrono>
#include <optional>

#include "aomp/datagen/dataset.hpp"
#include "aomp/metrics/metrics.hpp"
#include "aomp/pipeline/self_representation.hpp"
#include "aomp/pipeline/spectral.hpp"

namespace aomp {

// SDP magnitude cutoff for OMP coefficients. l1 columns are already
// thresholded by the LASSO support rule, so they are scored with 0.
inline constexpr double kOmpSdpThreshold = 1e-8;

struct ClusteringResult {
  std::vector<int> labels;
  std::vector<SparseColumn> coefficients;
  SimilarityGraph similarity;
  OpCounter counter;
  std::size_t trivial_columns = 0;
  std::size_t dropped = 0;
  std::optional<MetricsRecord> metrics;  // present when ground truth is known
  double wall_time = 0.0;
};

/// One full clustering run: self-representation, similarity graph, spectral
/// clustering, and metrics against the dataset's ground truth if it has one.
inline ClusteringResult run(const LabeledDataset& data, const AlgorithmParams& params) {
  params.validate();
  if (data.size() < 2) throw Error(Errc::invalid_argument, "need at least two points");
  if (params.k > data.size()) throw Error(Errc::invalid_argument, "more clusters than points");
  if (data.has_truth() && data.truth.size() != data.size())
    throw Error(Errc::dimension_mismatch, "truth length differs from point count");

  const auto start = std::chrono::steady_clock::now();
  SelfRepresentation rep;
  switch (params.variant) {
    case Variant::l1_ssc: rep = l1_ssc_pass(data.X, params); break;
    case Variant::omp_ssc: rep = omp_ssc_pass(data.X, params.d); break;
    case Variant::a_omp_ssc: rep = self_representation_pass(data.X, params); break;
  }

  ClusteringResult out;
  out.similarity = build_similarity(rep.columns);
  out.labels = spectral_cluster(out.similarity, params.k, derive_seed(params.seed, streams::kmeans));
  out.counter = rep.counter;
  out.trivial_columns = rep.trivial_columns;
  out.dropped = rep.dropped;
  out.coefficients = std::move(rep.columns);
  out.wall_time = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();

  if (data.has_truth()) {
    MetricsRecord m;
    m.error_rate = clustering_error(out.labels, data.truth);
    m.connectivity = connectivity(out.similarity.A, data.truth);
    m.mean_connectivity = mean(m.connectivity);
    const double threshold = params.variant == Variant::l1_ssc ? 0.0 : kOmpSdpThreshold;
    m.sdp_percentage = sdp_percentage(out.coefficients, data.truth, threshold);
    m.inner_products = out.counter.inner_products;
    m.wall_time = out.wall_time;
    out.metrics = std::move(m);
  }
  return out;
}

}  // namespace aomp
