#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace patterncount {

enum class ErrorCode {
  InvalidInput,
  NotAcyclic,
  NotAPermutationPoset,
  NotTwinTree,
  UnknownNode,
  IndexError,
  DuplicateColumn,
  OverflowDetected,
  TooLarge,
  TooLargeForCanonicalization,
  BudgetExceeded,
  NotWestTree,
  OrderViolation,
  InvalidArbo,
  ParseError,
};

std::string_view to_string(ErrorCode code);

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message);

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

[[noreturn]] void fail(ErrorCode code, const std::string& message);

}  // namespace patterncount
