#include "patterncount/errors.hpp"

namespace patterncount {

std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::InvalidInput: return "InvalidInput";
    case ErrorCode::NotAcyclic: return "NotAcyclic";
    case ErrorCode::NotAPermutationPoset: return "NotAPermutationPoset";
    case ErrorCode::NotTwinTree: return "NotTwinTree";
    case ErrorCode::UnknownNode: return "UnknownNode";
    case ErrorCode::IndexError: return "IndexError";
    case ErrorCode::DuplicateColumn: return "DuplicateColumn";
    case ErrorCode::OverflowDetected: return "OverflowDetected";
    case ErrorCode::TooLarge: return "TooLarge";
    case ErrorCode::TooLargeForCanonicalization: return "TooLargeForCanonicalization";
    case ErrorCode::BudgetExceeded: return "BudgetExceeded";
    case ErrorCode::NotWestTree: return "NotWestTree";
    case ErrorCode::OrderViolation: return "OrderViolation";
    case ErrorCode::InvalidArbo: return "InvalidArbo";
    case ErrorCode::ParseError: return "ParseError";
  }
  return "Unknown";
}

Error::Error(ErrorCode code, const std::string& message)
    : std::runtime_error(std::string(to_string(code)) + ": " + message), code_(code) {}

void fail(ErrorCode code, const std::string& message) { throw Error(code, message); }

}  // namespace patterncount
