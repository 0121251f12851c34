#pragma once

#include <algorithm>
#include <charconv>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <string_view>

#include "aomp/datagen/dataset.hpp"

namespace aomp {

namespace detail {

inline std::string_view trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r\n");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r\n");
  return s.substr(first, last - first + 1);
}

inline double parse_double(std::string_view token, const std::string& where) {
  token = trim(token);
  if (!token.empty() && token.front() == '+') token.remove_prefix(1);
  double v = 0.0;
  const auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), v);
  if (token.empty() || ec != std::errc() || ptr != token.data() + token.size() || !std::isfinite(v))
    throw Error(Errc::parse_error, where + ": bad number '" + std::string(token) + "'");
  return v;
}

inline long long parse_integer(std::string_view token, const std::string& where) {
  token = trim(token);
  if (!token.empty() && token.front() == '+') token.remove_prefix(1);
  long long v = 0;
  const auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), v);
  if (token.empty() || ec != std::errc() || ptr != token.data() + token.size())
    throw Error(Errc::parse_error, where + ": bad integer '" + std::string(token) + "'");
  return v;
}

inline std::string format_double(double v, int digits) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.*g", digits, v);
  return buf;
}

}  // namespace detail

/// Reads a CSV data matrix: one row per ambient dimension, one column per
/// point, no header. Blank lines are ignored.
inline Matrix read_matrix_csv(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw Error(Errc::io_error, "cannot open " + path.string());
  std::vector<std::vector<double>> rows;
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    const auto body = detail::trim(line);
    if (body.empty()) continue;
    std::vector<double> row;
    std::size_t start = 0;
    const std::string where = path.string() + ":" + std::to_string(lineno);
    for (;;) {
      const auto comma = body.find(',', start);
      row.push_back(detail::parse_double(body.substr(start, comma - start), where));
      if (comma == std::string_view::npos) break;
      start = comma + 1;
    }
    if (!rows.empty() && row.size() != rows.front().size())
      throw Error(Errc::parse_error, where + ": expected " + std::to_string(rows.front().size()) + " fields");
    rows.push_back(std::move(row));
  }
  if (rows.empty()) throw Error(Errc::parse_error, path.string() + ": no data");
  Matrix m(rows.size(), rows.front().size());
  for (std::size_t r = 0; r < rows.size(); ++r)
    for (std::size_t c = 0; c < rows[r].size(); ++c) m(r, c) = rows[r][c];
  return m;
}

/// Writes `m` in the CSV layout read by read_matrix_csv. 17 significant
/// digits make the round trip exact.
inline void write_matrix_csv(const std::filesystem::path& path, const Matrix& m) {
  std::ofstream out(path);
  if (!out) throw Error(Errc::io_error, "cannot write " + path.string());
  for (std::size_t r = 0; r < m.rows(); ++r) {
    for (std::size_t c = 0; c < m.cols(); ++c) {
      if (c) out << ',';
      out << detail::format_double(m(r, c), 17);
    }
    out << '\n';
  }
  if (!out) throw Error(Errc::io_error, "write failed for " + path.string());
}

/// Reads one integer label per line. Arbitrary label values are mapped to
/// 0..L-1 in increasing order of value.
inline std::vector<int> read_labels(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw Error(Errc::io_error, "cannot open " + path.string());
  std::vector<long long> raw;
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    const auto body = detail::trim(line);
    if (body.empty()) continue;
    raw.push_back(detail::parse_integer(body, path.string() + ":" + std::to_string(lineno)));
  }
  std::vector<long long> values = raw;
  std::sort(values.begin(), values.end());
  values.erase(std::unique(values.begin(), values.end()), values.end());
  std::vector<int> labels(raw.size());
  for (std::size_t i = 0; i < raw.size(); ++i)
    labels[i] = static_cast<int>(std::lower_bound(values.begin(), values.end(), raw[i]) - values.begin());
  return labels;
}

inline void write_labels(const std::filesystem::path& path, const std::vector<int>& labels) {
  std::ofstream out(path);
  if (!out) throw Error(Errc::io_error, "cannot write " + path.string());
  for (int l : labels) out << l << '\n';
  if (!out) throw Error(Errc::io_error, "write failed for " + path.string());
}

/// Loads an external data matrix (and optional labels) and rescales every
/// column to unit norm.
inline LabeledDataset load_matrix(const std::filesystem::path& data_path,
                                  const std::optional<std::filesystem::path>& labels_path = std::nullopt) {
  LabeledDataset ds;
  ds.X = read_matrix_csv(data_path);
  for (std::size_t c = 0; c < ds.X.cols(); ++c) {
    auto x = ds.X.col(c);
    if (norm2(x) < 1e-12) throw Error(Errc::zero_column, "column " + std::to_string(c) + " has zero norm");
    normalize(x);
  }
  ds.permutation.resize(ds.X.cols());
  std::iota(ds.permutation.begin(), ds.permutation.end(), std::size_t{0});
  if (labels_path) {
    ds.truth = read_labels(*labels_path);
    if (ds.truth.size() != ds.X.cols())
      throw Error(Errc::dimension_mismatch, "labels file has " + std::to_string(ds.truth.size()) +
                                                " entries for " + std::to_string(ds.X.cols()) + " columns");
  }
  return ds;
}

}  // namespace aomp
