#include "circuitgp/error.hpp"

namespace circuitgp {

std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::UnknownFunction: return "UnknownFunction";
    case ErrorCode::UnknownVariable: return "UnknownVariable";
    case ErrorCode::SyntaxError: return "SyntaxError";
    case ErrorCode::ArityError: return "ArityError";
    case ErrorCode::MissingCombination: return "MissingCombination";
    case ErrorCode::DuplicateCombination: return "DuplicateCombination";
    case ErrorCode::WidthMismatch: return "WidthMismatch";
    case ErrorCode::TooManyInputs: return "TooManyInputs";
    case ErrorCode::SequentialNotAllowed: return "SequentialNotAllowed";
    case ErrorCode::InvalidConfig: return "InvalidConfig";
    case ErrorCode::Io: return "Io";
  }
  return "Unknown";
}

Error::Error(ErrorCode code, const std::string& message, std::size_t line)
    : std::runtime_error(std::string(to_string(code)) + ": " + message), code_(code), line_(line) {}

}  // namespace circuitgp
