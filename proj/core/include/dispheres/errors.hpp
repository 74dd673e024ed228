#pragma once

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>

namespace dispheres {

enum class ErrorCode {
  BadInput,           // malformed values: parse failures, broken invariants
  DimensionMismatch,  // operands with different coordinate counts
  ParameterRange,     // scalar argument outside its admissible range
  NotOnBoundary,      // point expected on the cube boundary is interior
  NotOrdered,         // coordinatewise order precondition failed
  NotReachable,       // endpoint pair admits no directed path on the boundary
  CapExceeded,        // enumeration guardrail tripped
};

/// Machine-readable name, e.g. "NOT_REACHABLE".
std::string_view error_code_name(ErrorCode code);

/// Outcome of one of the two staircase interior-crossing conditions; `index`
/// is the witnessing coordinate when the condition holds.
struct ConditionWitness {
  bool holds = false;
  std::optional<std::size_t> index;
};

/// Full diagnostics of a reachability query. u1/u2 are only evaluated when
/// the pair is coordinatewise ordered.
struct ReachDiagnostics {
  bool x_on_boundary = false;
  bool y_on_boundary = false;
  bool ordered = false;
  ConditionWitness u1;
  ConditionWitness u2;

  bool reachable() const {
    return x_on_boundary && y_on_boundary && ordered && (!u1.holds || !u2.holds);
  }
};

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, std::string message);
  Error(ErrorCode code, std::string message, ReachDiagnostics diagnostics);

  ErrorCode code() const { return code_; }
  const std::optional<ReachDiagnostics>& diagnostics() const { return diagnostics_; }

 private:
  ErrorCode code_;
  std::optional<ReachDiagnostics> diagnostics_;
};

}  // namespace dispheres
