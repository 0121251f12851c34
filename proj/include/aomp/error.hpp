#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace aomp {

// Hard failures. Recoverable conditions (rank deficiency, empty dictionary,
// degenerate update, non-convergence) are reported as flags on results instead.
enum class Errc {
  invalid_argument,
  not_symmetric,
  infeasible_model,
  parse_error,
  dimension_mismatch,
  zero_column,
  length_mismatch,
  config_error,
  io_error,
};

constexpr std::string_view to_string(Errc code) {
  switch (code) {
    case Errc::invalid_argument: return "InvalidArgument";
    case Errc::not_symmetric: return "NotSymmetric";
    case Errc::infeasible_model: return "InfeasibleModel";
    case Errc::parse_error: return "ParseError";
    case Errc::dimension_mismatch: return "DimensionMismatch";
    case Errc::zero_column: return "ZeroColumn";
    case Errc::length_mismatch: return "LengthMismatch";
    case Errc::config_error: return "ConfigError";
    case Errc::io_error: return "IoError";
  }
  return "Unknown";
}

class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& what)
      : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code) {}

  Errc code() const noexcept { return code_; }

 private:
  Errc code_;
};

}  // namespace aomp
