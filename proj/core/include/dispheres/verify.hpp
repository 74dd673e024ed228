#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <utility>
#include <vector>

namespace dispheres::verify {

enum class OutputFormat { Json, Csv };

struct RunConfig {
  std::size_t n = 2;       // sphere dimension
  std::size_t m = 2;       // grid resolution
  std::size_t samples = 1000;
  std::uint64_t seed = 0;
  OutputFormat format = OutputFormat::Json;
  int verbosity = 0;
  std::size_t path_cap = 1'000'000;  // enumeration guardrail

  /// Throws ParameterRange unless n >= 1 and m >= 1.
  void validate() const;
};

struct CheckResult {
  std::string name;
  bool passed = false;
  std::vector<std::pair<std::string, std::string>> counters;  // insertion-ordered
  std::string detail;  // first failure description, empty when passed
};

struct Report {
  RunConfig config;
  std::vector<CheckResult> checks;

  bool all_passed() const;
};

/// Runs the whole verification battery for one configuration: grid structure,
/// oracle agreement with the analytic decision, condition/geometry agreement,
/// condition disjointness, partition soundness, fiber class counts,
/// half-square confinement and the contraction homotopy checks. Entirely
/// deterministic for a fixed config. Throws CapExceeded or ParameterRange
/// when a guardrail trips.
Report run_verification(const RunConfig& config);

/// Full JSON document, newline-terminated; byte-stable for a fixed config.
std::string render_json(const Report& report);

/// CSV rows "check,result,counters", newline-terminated.
std::string render_csv(const Report& report);

}  // namespace dispheres::verify
