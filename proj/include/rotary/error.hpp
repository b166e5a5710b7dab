#pragma once

#include <stdexcept>
#include <string>

namespace rotary {

/// Stable, machine-readable error categories. The CLI reports these
/// verbatim in its `{"error": code}` objects, so the spellings in
/// `error_code_name` must not change.
enum class ErrorCode {
  kDivisionByZero,
  kNegativeSqrt,
  kZeroPolynomial,
  kOutOfRange,
  kZeroVector,
  kInfeasible,
  kPrecondition,
  kSingularMatrix,
  kBoundExceeded,
  kParse,
  kCancelled,
  kInternal,
};

inline const char* error_code_name(ErrorCode code) {
  switch (code) {
    case ErrorCode::kDivisionByZero: return "division_by_zero";
    case ErrorCode::kNegativeSqrt: return "negative_sqrt";
    case ErrorCode::kZeroPolynomial: return "zero_polynomial";
    case ErrorCode::kOutOfRange: return "out_of_range";
    case ErrorCode::kZeroVector: return "zero_vector";
    case ErrorCode::kInfeasible: return "infeasible";
    case ErrorCode::kPrecondition: return "precondition";
    case ErrorCode::kSingularMatrix: return "singular_matrix";
    case ErrorCode::kBoundExceeded: return "bound_exceeded";
    case ErrorCode::kParse: return "parse_error";
    case ErrorCode::kCancelled: return "cancelled";
    case ErrorCode::kInternal: return "internal";
  }
  return "internal";
}

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& detail)
      : std::runtime_error(detail), code_(code) {}

  ErrorCode code() const { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace rotary
