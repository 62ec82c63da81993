#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>

namespace circuitgp {

enum class ErrorCode {
  UnknownFunction,
  UnknownVariable,
  SyntaxError,
  ArityError,
  MissingCombination,
  DuplicateCombination,
  WidthMismatch,
  TooManyInputs,
  SequentialNotAllowed,
  InvalidConfig,
  Io,
};

std::string_view to_string(ErrorCode code);

/// Error raised by every parsing and validation routine in the library.
/// `line()` is the 1-based source line for file parsers, or 0 when the
/// error is not tied to a line.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message, std::size_t line = 0);

  ErrorCode code() const noexcept { return code_; }
  std::size_t line() const noexcept { return line_; }

 private:
  ErrorCode code_;
  std::size_t line_;
};

}  // namespace circuitgp
