#pragma once

#include <stdexcept>
#include <string>

namespace isingcc {

enum class ErrorCode {
  kSchema,            // malformed input literal or scenario
  kBudget,            // enumeration / dimension budget exceeded
  kParity,            // minimal cone violates t - x in Z
  kEmptyRegion,
  kModeMismatch,      // exact mode asked for an irrational quantity
  kTimeLabel,         // operators at different time labels combined
  kSupport,           // operator does not fit the requested window
  kZeroOperator,
  kNegativeTime,
  kDomain,            // parameter outside its documented range
  kNonCommuting,
  kZeroSector,
  kWeights,
  kInvalidPartition,
  kNormViolation,
  kZeroDenominator,
};

/// Exit-code class used by the CLI: 2 schema, 3 budget, 4 precondition.
inline int exit_code_for(ErrorCode code) {
  switch (code) {
    case ErrorCode::kSchema:
      return 2;
    case ErrorCode::kBudget:
      return 3;
    default:
      return 4;
  }
}

inline const char* to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::kSchema: return "schema";
    case ErrorCode::kBudget: return "budget";
    case ErrorCode::kParity: return "parity";
    case ErrorCode::kEmptyRegion: return "empty-region";
    case ErrorCode::kModeMismatch: return "mode-mismatch";
    case ErrorCode::kTimeLabel: return "time-label";
    case ErrorCode::kSupport: return "support";
    case ErrorCode::kZeroOperator: return "zero-operator";
    case ErrorCode::kNegativeTime: return "negative-time";
    case ErrorCode::kDomain: return "domain";
    case ErrorCode::kNonCommuting: return "non-commuting";
    case ErrorCode::kZeroSector: return "zero-sector";
    case ErrorCode::kWeights: return "weights";
    case ErrorCode::kInvalidPartition: return "invalid-partition";
    case ErrorCode::kNormViolation: return "norm-violation";
    case ErrorCode::kZeroDenominator: return "zero-denominator";
  }
  return "unknown";
}

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }
  int exit_code() const noexcept { return exit_code_for(code_); }

 private:
  ErrorCode code_;
};

}  // namespace isingcc
