#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace mexcrank {

enum class ErrorCode {
  NonUnit,          // series reciprocal requested for constant term other than +-1
  InvalidParams,    // generating-function or counting parameters out of range
  InvalidPartition, // parts not positive or not nonincreasing
  UndefinedMexJ,    // mex_j with j > 0 not a part
  MalformedSymbol,  // Frobenius rows not strictly decreasing or unequal lengths
  BudgetExceeded,   // enumeration above the configured cap
  UnknownCheck,
};

inline std::string_view to_string(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::NonUnit: return "NON_UNIT";
    case ErrorCode::InvalidParams: return "INVALID_PARAMS";
    case ErrorCode::InvalidPartition: return "INVALID_PARTITION";
    case ErrorCode::UndefinedMexJ: return "UNDEFINED_MEXJ";
    case ErrorCode::MalformedSymbol: return "MALFORMED_SYMBOL";
    case ErrorCode::BudgetExceeded: return "BUDGET_EXCEEDED";
    case ErrorCode::UnknownCheck: return "UNKNOWN_CHECK";
  }
  return "UNKNOWN";
}

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace mexcrank
