#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace motzkin {

enum class ErrorCode {
  BadSymbol,
  Unbalanced,
  PrefixViolation,
  LimitExceeded,
  NotUnique,
  ZeroConstantTerm,
  BadConstantTerm,
  Degenerate,
  ZeroDenominator,
  Internal,
};

// Stable upper-case name, e.g. "NOT_UNIQUE". Printed by the CLI.
std::string_view error_name(ErrorCode code) noexcept;

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& detail);

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace motzkin
