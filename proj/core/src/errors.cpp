#include "dispheres/errors.hpp"

namespace dispheres {

std::string_view error_code_name(ErrorCode code) {
  switch (code) {
    case ErrorCode::BadInput: return "BAD_INPUT";
    case ErrorCode::DimensionMismatch: return "DIMENSION_MISMATCH";
    case ErrorCode::ParameterRange: return "PARAMETER_RANGE";
    case ErrorCode::NotOnBoundary: return "NOT_ON_BOUNDARY";
    case ErrorCode::NotOrdered: return "NOT_ORDERED";
    case ErrorCode::NotReachable: return "NOT_REACHABLE";
    case ErrorCode::CapExceeded: return "CAP_EXCEEDED";
  }
  return "UNKNOWN";
}

Error::Error(ErrorCode code, std::string message)
    : std::runtime_error(std::move(message)), code_(code) {}

Error::Error(ErrorCode code, std::string message, ReachDiagnostics diagnostics)
    : std::runtime_error(std::move(message)), code_(code), diagnostics_(std::move(diagnostics)) {}

}  // namespace dispheres
