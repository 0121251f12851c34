#pragma once

#include <algorithm>
#include <cstdint>
#include <filesystem>
#include <fstream>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "aomp/datagen/matrix_io.hpp"
#include "aomp/pipeline/params.hpp"

namespace aomp {

/// One sweep: a generator template plus list-valued axes. Every combination
/// of axis values is a cell; each cell is run `trials` times.
struct SweepSpec {
  std::size_t ambient_dim = 40;
  std::size_t num_subspaces = 3;
  std::size_t subspace_dim = 6;
  std::optional<std::size_t> k;  // defaults to num_subspaces
  double alpha = 20.0;
  std::size_t trials = 1;
  std::uint64_t master_seed = 0;
  bool timing = false;  // record wall time (breaks byte-identical reruns)
  std::filesystem::path output = "results.csv";

  // Axes, in enumeration order (first axis varies slowest).
  std::vector<Variant> variant{Variant::a_omp_ssc};
  std::vector<std::size_t> samples_per_subspace{45};
  std::vector<double> noise_level{0.0};
  std::vector<double> b{1.0};
  std::vector<double> p{0.8};
  std::vector<std::size_t> d{3};

  std::size_t cluster_count() const { return k.value_or(num_subspaces); }

  std::size_t num_cells() const {
    return variant.size() * samples_per_subspace.size() * noise_level.size() * b.size() * p.size() * d.size();
  }

  void validate() const {
    auto fail = [](const std::string& m) { throw Error(Errc::config_error, m); };
    if (trials == 0) fail("trials must be >= 1");
    if (ambient_dim == 0 || num_subspaces == 0 || subspace_dim == 0) fail("dimensions must be positive");
    if (num_subspaces * subspace_dim > ambient_dim) fail("subspaces do not fit in the ambient space");
    if (cluster_count() == 0) fail("k must be positive");
    if (!(alpha > 0.0)) fail("alpha must be positive");
    if (variant.empty() || samples_per_subspace.empty() || noise_level.empty() || b.empty() || p.empty() || d.empty())
      fail("every axis needs at least one value");
    for (auto s : samples_per_subspace)
      if (s == 0) fail("samples_per_subspace must be positive");
    if (cluster_count() > num_subspaces * *std::min_element(samples_per_subspace.begin(), samples_per_subspace.end()))
      fail("k exceeds the number of points");
    for (double s : noise_level)
      if (!(s >= 0.0) || !std::isfinite(s)) fail("noise_level must be finite and >= 0");
    for (double v : b)
      if (!std::isfinite(v)) fail("b must be finite");
    for (double v : p)
      if (!(v >= 0.0 && v <= 1.0)) fail("p must lie in [0, 1]");
    for (auto v : d)
      if (v == 0) fail("d must be >= 1");
  }
};

namespace detail {

inline std::vector<std::string> split_list(std::string_view s) {
  std::vector<std::string> out;
  std::size_t start = 0;
  for (;;) {
    const auto comma = s.find(',', start);
    out.emplace_back(trim(s.substr(start, comma - start)));
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  return out;
}

inline std::size_t parse_count(std::string_view s, const std::string& key) {
  long long v = 0;
  try {
    v = parse_integer(s, key);
  } catch (const Error& e) {
    throw Error(Errc::config_error, e.what());
  }
  if (v < 0) throw Error(Errc::config_error, key + " must be nonnegative");
  return static_cast<std::size_t>(v);
}

inline double parse_real(std::string_view s, const std::string& key) {
  try {
    return parse_double(s, key);
  } catch (const Error& e) {
    throw Error(Errc::config_error, e.what());
  }
}

inline bool parse_bool(std::string_view s, const std::string& key) {
  if (s == "true" || s == "1" || s == "yes" || s == "on") return true;
  if (s == "false" || s == "0" || s == "no" || s == "off") return false;
  throw Error(Errc::config_error, key + ": expected a boolean");
}

}  // namespace detail

/// Parses `key = value` lines. `#` starts a comment; axis values are
/// comma-separated lists.
inline SweepSpec parse_sweep_spec(std::istream& in, const std::string& source = "<config>") {
  SweepSpec spec;
  std::set<std::string> seen;
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    const auto hash = line.find('#');
    const auto body = detail::trim(std::string_view(line).substr(0, hash));
    if (body.empty()) continue;
    const std::string where = source + ":" + std::to_string(lineno);
    const auto eq = body.find('=');
    if (eq == std::string_view::npos) throw Error(Errc::config_error, where + ": expected key = value");
    const std::string key(detail::trim(body.substr(0, eq)));
    const std::string_view value = detail::trim(body.substr(eq + 1));
    if (value.empty()) throw Error(Errc::config_error, where + ": empty value for " + key);
    if (!seen.insert(key).second) throw Error(Errc::config_error, where + ": duplicate key " + key);
    const auto items = detail::split_list(value);
    auto scalar = [&]() -> std::string_view {
      if (items.size() != 1) throw Error(Errc::config_error, where + ": " + key + " takes a single value");
      return items.front();
    };
    auto counts = [&] {
      std::vector<std::size_t> v;
      for (const auto& s : items) v.push_back(detail::parse_count(s, where));
      return v;
    };
    auto reals = [&] {
      std::vector<double> v;
      for (const auto& s : items) v.push_back(detail::parse_real(s, where));
      return v;
    };

    if (key == "ambient_dim") spec.ambient_dim = detail::parse_count(scalar(), where);
    else if (key == "num_subspaces") spec.num_subspaces = detail::parse_count(scalar(), where);
    else if (key == "subspace_dim") spec.subspace_dim = detail::parse_count(scalar(), where);
    else if (key == "k") spec.k = detail::parse_count(scalar(), where);
    else if (key == "alpha") spec.alpha = detail::parse_real(scalar(), where);
    else if (key == "trials") spec.trials = detail::parse_count(scalar(), where);
    else if (key == "master_seed") spec.master_seed = detail::parse_count(scalar(), where);
    else if (key == "timing") spec.timing = detail::parse_bool(scalar(), where);
    else if (key == "output") spec.output = std::string(scalar());
    else if (key == "samples_per_subspace") spec.samples_per_subspace = counts();
    else if (key == "noise_level") spec.noise_level = reals();
    else if (key == "b") spec.b = reals();
    else if (key == "p") spec.p = reals();
    else if (key == "d") spec.d = counts();
    else if (key == "variant") {
      spec.variant.clear();
      for (const auto& s : items) {
        try {
          spec.variant.push_back(parse_variant(s));
        } catch (const Error& e) {
          throw Error(Errc::config_error, where + ": " + e.what());
        }
      }
    } else {
      throw Error(Errc::config_error, where + ": unknown key " + key);
    }
  }
  spec.validate();
  return spec;
}

inline SweepSpec load_sweep_spec(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw Error(Errc::io_error, "cannot open " + path.string());
  return parse_sweep_spec(in, path.string());
}

}  // namespace aomp
