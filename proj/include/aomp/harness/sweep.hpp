#pragma once

#include <atomic>
#include <exception>
#include <filesystem>
#include <fstream>
#include <ostream>
#include <thread>
#include <vector>

#include "aomp/harness/config.hpp"
#include "aomp/pipeline/run.hpp"

namespace aomp {

/// One point of the axis cross-product. For l1-ssc and omp-ssc cells the
/// active parameters are stored as b = p = 0, the values actually used.
struct SweepCell {
  std::size_t index = 0;
  Variant variant = Variant::a_omp_ssc;
  std::size_t samples_per_subspace = 0;
  double noise_level = 0.0;
  double b = 0.0;
  double p = 0.0;
  std::size_t d = 0;
};

struct ResultRow {
  SweepCell cell;
  std::size_t trial = 0;
  std::uint64_t seed = 0;
  double error_rate = 0.0;
  double connectivity = 0.0;  // mean over ground-truth clusters
  double sdp_percentage = 0.0;
  std::uint64_t inner_products = 0;
  double wall_time = 0.0;
};

inline std::vector<SweepCell> enumerate_cells(const SweepSpec& spec) {
  std::vector<SweepCell> cells;
  cells.reserve(spec.num_cells());
  for (Variant v : spec.variant)
    for (std::size_t s : spec.samples_per_subspace)
      for (double sigma : spec.noise_level)
        for (double b : spec.b)
          for (double p : spec.p)
            for (std::size_t d : spec.d) {
              const bool active = v == Variant::a_omp_ssc;
              cells.push_back({cells.size(), v, s, sigma, active ? b : 0.0, active ? p : 0.0, d});
            }
  return cells;
}

/// Seed of (cell, trial). Pairwise distinct over all pairs of a sweep.
inline std::uint64_t trial_seed(std::uint64_t master_seed, std::size_t cell, std::size_t trial, std::size_t trials) {
  return derive_seed(master_seed, static_cast<std::uint64_t>(cell) * trials + trial);
}

inline ResultRow run_trial(const SweepSpec& spec, const SweepCell& cell, std::size_t trial) {
  ResultRow row;
  row.cell = cell;
  row.trial = trial;
  row.seed = trial_seed(spec.master_seed, cell.index, trial, spec.trials);

  const auto model = SubspaceModel::uniform(spec.ambient_dim, spec.num_subspaces, spec.subspace_dim,
                                            cell.samples_per_subspace, cell.noise_level,
                                            derive_seed(row.seed, streams::data));
  const LabeledDataset data = generate(model);

  AlgorithmParams params;
  params.variant = cell.variant;
  params.d = cell.d;
  params.b = cell.b;
  params.p = cell.p;
  params.alpha = spec.alpha;
  params.k = spec.cluster_count();
  params.seed = row.seed;
  const ClusteringResult res = run(data, params);

  row.error_rate = res.metrics->error_rate;
  row.connectivity = res.metrics->mean_connectivity;
  row.sdp_percentage = res.metrics->sdp_percentage;
  row.inner_products = res.counter.inner_products;
  row.wall_time = spec.timing ? res.wall_time : 0.0;
  return row;
}

/// Runs every (cell, trial) pair on `jobs` worker threads. Rows come back in
/// (cell, trial) order regardless of scheduling.
inline std::vector<ResultRow> run_sweep(const SweepSpec& spec, std::size_t jobs = 0) {
  spec.validate();
  const auto cells = enumerate_cells(spec);
  const std::size_t total = cells.size() * spec.trials;
  std::vector<ResultRow> rows(total);
  if (jobs == 0) jobs = std::max(1u, std::thread::hardware_concurrency());
  jobs = std::min(jobs, total);

  std::atomic<std::size_t> next{0};
  std::vector<std::exception_ptr> errors(jobs);
  auto worker = [&](std::size_t w) {
    try {
      for (std::size_t job; (job = next.fetch_add(1)) < total;) {
        rows[job] = run_trial(spec, cells[job / spec.trials], job % spec.trials);
      }
    } catch (...) {
      errors[w] = std::current_exception();
      next.store(total);
    }
  };
  if (jobs <= 1) {
    worker(0);
  } else {
    std::vector<std::jthread> pool;
    for (std::size_t w = 0; w < jobs; ++w) pool.emplace_back(worker, w);
  }
  for (auto& e : errors)
    if (e) std::rethrow_exception(e);
  return rows;
}

inline constexpr const char* kResultHeader =
    "cell,trial,seed,variant,ambient_dim,subspace_dim,num_subspaces,samples_per_subspace,"
    "noise_level,b,p,d,error_rate,connectivity,sdp_percentage,inner_products,wall_time";

/// CSV with a header row; reals carry 9 significant digits.
inline void write_results(std::ostream& out, const SweepSpec& spec, const std::vector<ResultRow>& rows) {
  auto g = [](double v) { return detail::format_double(v, 9); };
  out << kResultHeader << '\n';
  for (const auto& r : rows) {
    out << r.cell.index << ',' << r.trial << ',' << r.seed << ',' << to_string(r.cell.variant) << ','
        << spec.ambient_dim << ',' << spec.subspace_dim << ',' << spec.num_subspaces << ','
        << r.cell.samples_per_subspace << ',' << g(r.cell.noise_level) << ',' << g(r.cell.b) << ','
        << g(r.cell.p) << ',' << r.cell.d << ',' << g(r.error_rate) << ',' << g(r.connectivity) << ','
        << g(r.sdp_percentage) << ',' << r.inner_products << ',' << g(r.wall_time) << '\n';
  }
}

inline void write_results(const std::filesystem::path& path, const SweepSpec& spec,
                          const std::vector<ResultRow>& rows) {
  if (path.has_parent_path()) std::filesystem::create_directories(path.parent_path());
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error(Errc::io_error, "cannot write " + path.string());
  write_results(out, spec, rows);
  if (!out) throw Error(Errc::io_error, "write failed for " + path.string());
}

}  // namespace aomp
