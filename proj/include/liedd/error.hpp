#pragma once

#include <stdexcept>
#include <string>

namespace liedd {

enum class ErrorKind {
  DivisionByZero,
  NotUnivariate,
  Parse,
  JacobiViolation,
  AlgebraMismatch,
  NotClosed,
  NotIndependent,
  DenominatorVanishes,
  NotADerivation,
  ArityMismatch,
  IncompatibleQuantifier,
  UnknownName,
  ExcludedParameterValue,
  DuplicateName,
  NotNilpotent,
  Usage,
  Internal,
};

const char* to_string(ErrorKind kind);

/// Single exception type for the library; `kind()` distinguishes the failure.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& message)
      : std::runtime_error(message), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

}  // namespace liedd
