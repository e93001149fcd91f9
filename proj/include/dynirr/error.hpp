#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace dynirr {

enum class ErrorCode {
  DegreeCapExceeded,
  ZeroPolynomial,
  ZeroInput,
  ZeroResultant,
  DivisionByZeroPolynomial,
  EvenModulus,
  SquareModulus,
  BadReduction,
  ClassMismatch,
  BudgetExceeded,
  InvalidArgument,
  ParseError,
  IoError,
};

inline std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::DegreeCapExceeded: return "DegreeCapExceeded";
    case ErrorCode::ZeroPolynomial: return "ZeroPolynomial";
    case ErrorCode::ZeroInput: return "ZeroInput";
    case ErrorCode::ZeroResultant: return "ZeroResultant";
    case ErrorCode::DivisionByZeroPolynomial: return "DivisionByZeroPolynomial";
    case ErrorCode::EvenModulus: return "EvenModulus";
    case ErrorCode::SquareModulus: return "SquareModulus";
    case ErrorCode::BadReduction: return "BadReduction";
    case ErrorCode::ClassMismatch: return "ClassMismatch";
    case ErrorCode::BudgetExceeded: return "BudgetExceeded";
    case ErrorCode::InvalidArgument: return "InvalidArgument";
    case ErrorCode::ParseError: return "ParseError";
    case ErrorCode::IoError: return "IoError";
  }
  return "Unknown";
}

/// Single exception type for every recoverable failure in the library.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace dynirr
