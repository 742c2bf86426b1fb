#include "gcf_forge/error.hpp"

namespace gcf_forge {

const char* to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::Syntax: return "SyntaxError";
    case ErrorCode::NonPolynomial: return "NonPolynomial";
    case ErrorCode::UnknownSymbol: return "UnknownSymbol";
    case ErrorCode::InvalidInput: return "InvalidInput";
    case ErrorCode::DivisionByZero: return "DivisionByZero";
    case ErrorCode::NegativeSqrt: return "NegativeSqrt";
    case ErrorCode::InsufficientPrecision: return "InsufficientPrecision";
    case ErrorCode::ZeroPolynomial: return "ZeroPolynomial";
    case ErrorCode::ZeroPartialNumerator: return "ZeroPartialNumerator";
    case ErrorCode::ZeroDenominatorFactor: return "ZeroDenominatorFactor";
    case ErrorCode::ZeroDenominatorConvergent: return "ZeroDenominatorConvergent";
    case ErrorCode::NotConvergent: return "NotConvergent";
    case ErrorCode::OutOfDomain: return "OutOfDomain";
    case ErrorCode::Precondition: return "PreconditionFailed";
    case ErrorCode::Unsupported: return "Unsupported";
  }
  return "Error";
}

bool is_input_error(ErrorCode code) {
  return code == ErrorCode::Syntax || code == ErrorCode::NonPolynomial ||
         code == ErrorCode::UnknownSymbol || code == ErrorCode::InvalidInput;
}

Error::Error(ErrorCode code, const std::string& message)
    : std::runtime_error(std::string(to_string(code)) + ": " + message), code_(code) {}

Error::Error(ErrorCode code, const std::string& message, std::size_t offset)
    : std::runtime_error(std::string(to_string(code)) + " at offset " + std::to_string(offset) +
                         ": " + message),
      code_(code),
      offset_(offset) {}

}  // namespace gcf_forge
