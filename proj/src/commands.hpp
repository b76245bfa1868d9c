#pragma once

#include "spec_io.hpp"

#include <json.hpp>

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>

namespace fh {

inline constexpr const char* kToolVersion = "1.0.0";

/// Bad option value or unknown name on the command line.
class UsageError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

enum class Outcome {
  Ok,
  Negative,  // invalid filtration, not a loop, non-composable simplex
};

struct CommandResult {
  Outcome outcome = Outcome::Ok;
  nlohmann::json report;  // full envelope
};

struct MartingaleOptions {
  std::optional<std::size_t> max_path_len;
  bool basis = false;
};

struct ComplexOptions {
  std::string simplex;  // comma-separated arrow names
  std::size_t max_degree = 2;
  bool basis = false;
};

struct ScanOptions {
  std::size_t max_len = 3;
  std::size_t limit = 1000;
};

struct NaiveOptions {
  std::size_t degree = 1;
  std::optional<std::size_t> max_path_len;
};

/// Resolves "a,b,c" into a chain of arrows. Unknown names raise UsageError,
/// breaks in the chain raise NotComposableError.
ParamSimplex parse_simplex(const Presentation& pres, const std::string& csv);

CommandResult run_validate(const LoadedSpec& spec);
CommandResult run_martingale(const LoadedSpec& spec, const MartingaleOptions& opts);
CommandResult run_complex(const LoadedSpec& spec, const ComplexOptions& opts);
CommandResult run_holonomy(const LoadedSpec& spec, const std::string& simplex);
CommandResult run_scan(const LoadedSpec& spec, const ScanOptions& opts);
CommandResult run_naive_check(const LoadedSpec& spec, const NaiveOptions& opts);

}  // namespace fh
