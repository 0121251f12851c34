// Command-line front end: seeded sweeps, summaries, and single runs on
// external data.

#include <CLI11.hpp>

#include <fstream>
#include <iostream>

#include "aomp/harness/single.hpp"
#include "aomp/harness/summarize.hpp"
#include "aomp/harness/sweep.hpp"

namespace {

int do_sweep(const std::string& config, std::size_t jobs, const std::string& out) {
  aomp::SweepSpec spec = aomp::load_sweep_spec(config);
  if (!out.empty()) spec.output = out;
  const auto rows = aomp::run_sweep(spec, jobs);
  aomp::write_results(spec.output, spec, rows);
  std::cerr << "wrote " << rows.size() << " rows (" << spec.num_cells() << " cells x " << spec.trials
            << " trials) to " << spec.output.string() << '\n';
  return 0;
}

int do_summarize(const std::string& file, const std::vector<std::string>& group_by, const std::string& out) {
  const auto table = aomp::summarize_file(file, group_by);
  if (out.empty()) {
    aomp::write_summary_csv(std::cout, table);
    return 0;
  }
  std::ofstream csv(out);
  if (!csv) throw aomp::Error(aomp::Errc::io_error, "cannot write " + out);
  aomp::write_summary_csv(csv, table);
  const std::string dat = std::filesystem::path(out).replace_extension(".dat").string();
  std::ofstream gp(dat);
  if (!gp) throw aomp::Error(aomp::Errc::io_error, "cannot write " + dat);
  aomp::write_summary_gnuplot(gp, table);
  std::cerr << "wrote " << out << " and " << dat << '\n';
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Sparse subspace clustering with active OMP"};
  app.require_subcommand(1);
  std::size_t jobs = 0;
  std::string out;
  app.add_option("--jobs", jobs, "Worker threads for sweeps (0 = all cores)");
  app.add_option("--out", out, "Output path");

  auto* sweep = app.add_subcommand("sweep", "Run a Monte Carlo sweep from a config file");
  std::string config;
  sweep->add_option("config", config, "Sweep config file")->required()->check(CLI::ExistingFile);
  sweep->add_option("--jobs", jobs, "Worker threads (0 = all cores)");
  sweep->add_option("--out", out, "Result CSV (overrides the config's output)");

  auto* summ = app.add_subcommand("summarize", "Mean and standard error per group of a result file");
  std::string result_file;
  std::vector<std::string> group_by;
  summ->add_option("file", result_file, "Result CSV written by sweep")->required()->check(CLI::ExistingFile);
  summ->add_option("--group-by", group_by, "Columns to group by")->required()->delimiter(',');
  summ->add_option("--out", out, "Summary CSV; a gnuplot .dat file is written next to it");

  auto* single = app.add_subcommand("single", "Cluster one external data matrix");
  std::string data_path, labels_path, variant = "a-omp-ssc";
  aomp::AlgorithmParams params;
  params.k = 2;
  single->add_option("data", data_path, "CSV data matrix, one column per point")->required()->check(CLI::ExistingFile);
  single->add_option("--labels", labels_path, "Ground-truth labels, one per line")->check(CLI::ExistingFile);
  single->add_option("--variant", variant, "l1-ssc | omp-ssc | a-omp-ssc")->capture_default_str();
  single->add_option("--b", params.b, "Update modifier")->capture_default_str();
  single->add_option("--p", params.p, "Drop probability")->capture_default_str();
  single->add_option("--d", params.d, "OMP iterations")->capture_default_str();
  single->add_option("--k", params.k, "Number of clusters")->capture_default_str();
  single->add_option("--alpha", params.alpha, "l1 penalty scale")->capture_default_str();
  single->add_option("--seed", params.seed, "Random seed")->capture_default_str();
  single->add_option("--out", out, "Write predicted labels here, one per line");

  CLI11_PARSE(app, argc, argv);

  try {
    if (*sweep) return do_sweep(config, jobs, out);
    if (*summ) return do_summarize(result_file, group_by, out);
    if (*single) {
      params.variant = aomp::parse_variant(variant);
      if (params.variant != aomp::Variant::a_omp_ssc) {
        params.b = 0.0;
        params.p = 0.0;
      }
      std::optional<std::filesystem::path> labels;
      if (!labels_path.empty()) labels = labels_path;
      const auto res = aomp::run_single(data_path, labels, params);
      aomp::print_result(std::cout, res);
      if (!out.empty()) aomp::write_labels(out, res.labels);
      return 0;
    }
  } catch (const aomp::Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  }
  return 1;
}
