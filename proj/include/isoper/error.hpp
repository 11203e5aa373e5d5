#pragma once

#include <stdexcept>
#include <string>

namespace isoper {

enum class ErrorCode {
  EmptyFactorList,
  InvalidFactor,
  OrderCapExceeded,
  IndexOutOfRange,
  EmptySet,
  GroupMismatch,
  NotASubgroup,
  DegenerateExponents,
  ExponentCap,
  NotSeparable,
  SearchCapExceeded,
  HypothesisNotMet,
  ParseError,
};

const char* to_string(ErrorCode code);

// All library failures are reported through this type; `code()` is stable
// and is what the CLI maps to exit statuses.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace isoper
