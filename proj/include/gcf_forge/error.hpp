#pragma once

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>

namespace gcf_forge {

enum class ErrorCode {
  // Input language errors.
  Syntax,
  NonPolynomial,
  UnknownSymbol,
  InvalidInput,
  // Evaluation and precondition errors.
  DivisionByZero,
  NegativeSqrt,
  InsufficientPrecision,
  ZeroPolynomial,
  ZeroPartialNumerator,
  ZeroDenominatorFactor,
  ZeroDenominatorConvergent,
  NotConvergent,
  OutOfDomain,
  Precondition,
  Unsupported,
};

const char* to_string(ErrorCode code);

/// True for errors caused by malformed input text (CLI exit code 2).
bool is_input_error(ErrorCode code);

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message);
  Error(ErrorCode code, const std::string& message, std::size_t offset);

  ErrorCode code() const noexcept { return code_; }

  /// 0-based character offset into the parsed text, when the error came from a parser.
  std::optional<std::size_t> offset() const noexcept { return offset_; }

 private:
  ErrorCode code_;
  std::optional<std::size_t> offset_;
};

}  // namespace gcf_forge
