#pragma once

#include <cmath>
#include <filesystem>
#include <fstream>
#include <map>
#include <ostream>
#include <string>
#include <vector>

#include "aomp/datagen/matrix_io.hpp"
#include "aomp/harness/config.hpp"

namespace aomp {

inline const std::vector<std::string>& summary_metrics() {
  static const std::vector<std::string> names{"error_rate", "connectivity", "sdp_percentage", "inner_products",
                                              "wall_time"};
  return names;
}

struct SummaryGroup {
  std::vector<std::string> key;  // values of the group-by columns, as written
  std::size_t count = 0;
  std::vector<double> mean;      // per metric
  std::vector<double> std_error;   // sample standard deviation / sqrt(count); 0 for a single row
};

struct SummaryTable {
  std::vector<std::string> group_by;
  std::vector<std::string> metrics;
  std::vector<SummaryGroup> groups;  // in order of first appearance
};

struct CsvTable {
  std::vector<std::string> header;
  std::vector<std::vector<std::string>> rows;

  std::size_t column(const std::string& name) const {
    for (std::size_t c = 0; c < header.size(); ++c)
      if (header[c] == name) return c;
    throw Error(Errc::parse_error, "no column named '" + name + "'");
  }
};

inline CsvTable read_csv(std::istream& in, const std::string& source = "<csv>") {
  CsvTable t;
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (detail::trim(line).empty()) continue;
    auto fields = detail::split_list(detail::trim(line));
    if (t.header.empty()) {
      t.header = std::move(fields);
      continue;
    }
    if (fields.size() != t.header.size())
      throw Error(Errc::parse_error, source + ":" + std::to_string(lineno) + ": wrong field count");
    t.rows.push_back(std::move(fields));
  }
  if (t.header.empty()) throw Error(Errc::parse_error, source + ": empty file");
  return t;
}

/// Mean and standard error of every metric column per group of rows sharing
/// the `group_by` column values.
inline SummaryTable summarize(const CsvTable& table, const std::vector<std::string>& group_by) {
  SummaryTable out;
  out.group_by = group_by;
  out.metrics = summary_metrics();
  std::vector<std::size_t> key_cols, metric_cols;
  for (const auto& g : group_by) key_cols.push_back(table.column(g));
  for (const auto& m : out.metrics) metric_cols.push_back(table.column(m));

  std::map<std::vector<std::string>, std::size_t> index;
  std::vector<std::vector<std::vector<double>>> samples;  // group -> metric -> values
  for (std::size_t r = 0; r < table.rows.size(); ++r) {
    const auto& row = table.rows[r];
    std::vector<std::string> key;
    for (auto c : key_cols) key.push_back(row[c]);
    auto [it, fresh] = index.emplace(key, out.groups.size());
    if (fresh) {
      out.groups.push_back({key, 0, {}, {}});
      samples.emplace_back(metric_cols.size());
    }
    auto& bucket = samples[it->second];
    for (std::size_t m = 0; m < metric_cols.size(); ++m)
      bucket[m].push_back(detail::parse_double(row[metric_cols[m]], "row " + std::to_string(r + 2)));
  }

  for (std::size_t g = 0; g < out.groups.size(); ++g) {
    auto& grp = out.groups[g];
    grp.count = samples[g].front().size();
    for (const auto& values : samples[g]) {
      const double n = static_cast<double>(values.size());
      double s = 0.0;
      for (double v : values) s += v;
      const double mu = s / n;
      double ss = 0.0;
      for (double v : values) ss += (v - mu) * (v - mu);
      grp.mean.push_back(mu);
      grp.std_error.push_back(values.size() > 1 ? std::sqrt(ss / (n - 1.0)) / std::sqrt(n) : 0.0);
    }
  }
  return out;
}

inline SummaryTable summarize_file(const std::filesystem::path& path, const std::vector<std::string>& group_by) {
  std::ifstream in(path);
  if (!in) throw Error(Errc::io_error, "cannot open " + path.string());
  return summarize(read_csv(in, path.string()), group_by);
}

inline void write_summary_csv(std::ostream& out, const SummaryTable& t) {
  for (const auto& g : t.group_by) out << g << ',';
  out << "n";
  for (const auto& m : t.metrics) out << ',' << m << "_mean," << m << "_stderr";
  out << '\n';
  for (const auto& grp : t.groups) {
    for (const auto& k : grp.key) out << k << ',';
    out << grp.count;
    for (std::size_t m = 0; m < t.metrics.size(); ++m)
      out << ',' << detail::format_double(grp.mean[m], 9) << ',' << detail::format_double(grp.std_error[m], 9);
    out << '\n';
  }
}

/// The same table as a gnuplot named data block (`load` it, then
/// `plot $summary using ...`). Non-numeric keys are quoted.
inline void write_summary_gnuplot(std::ostream& out, const SummaryTable& t, const std::string& name = "summary") {
  out << "# columns:";
  for (const auto& g : t.group_by) out << ' ' << g;
  out << " n";
  for (const auto& m : t.metrics) out << ' ' << m << "_mean " << m << "_stderr";
  out << "\n$" << name << " << EOD\n";
  for (const auto& grp : t.groups) {
    for (const auto& k : grp.key) {
      double v;
      const auto [ptr, ec] = std::from_chars(k.data(), k.data() + k.size(), v);
      if (ec == std::errc() && ptr == k.data() + k.size()) out << k << ' ';
      else out << '"' << k << "\" ";
    }
    out << grp.count;
    for (std::size_t m = 0; m < t.metrics.size(); ++m)
      out << ' ' << detail::format_double(grp.mean[m], 9) << ' ' << detail::format_double(grp.std_error[m], 9);
    out << '\n';
  }
  out << "EOD\n";
}

}  // namespace aomp
