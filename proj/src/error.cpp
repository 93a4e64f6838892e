#include "motzkin/error.hpp"

namespace motzkin {

std::string_view error_name(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::BadSymbol: return "BAD_SYMBOL";
    case ErrorCode::Unbalanced: return "UNBALANCED";
    case ErrorCode::PrefixViolation: return "PREFIX_VIOLATION";
    case ErrorCode::LimitExceeded: return "LIMIT_EXCEEDED";
    case ErrorCode::NotUnique: return "NOT_UNIQUE";
    case ErrorCode::ZeroConstantTerm: return "ZERO_CONSTANT_TERM";
    case ErrorCode::BadConstantTerm: return "BAD_CONSTANT_TERM";
    case ErrorCode::Degenerate: return "DEGENERATE";
    case ErrorCode::ZeroDenominator: return "ZERO_DENOMINATOR";
    case ErrorCode::Internal: return "INTERNAL";
  }
  return "UNKNOWN";
}

Error::Error(ErrorCode code, const std::string& detail)
    : std::runtime_error(std::string(error_name(code)) + ": " + detail), code_(code) {}

}  // namespace motzkin
