#include "liedd/error.hpp"

namespace liedd {

const char* to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::DivisionByZero: return "DivisionByZero";
    case ErrorKind::NotUnivariate: return "NotUnivariate";
    case ErrorKind::Parse: return "ParseError";
    case ErrorKind::JacobiViolation: return "JacobiViolation";
    case ErrorKind::AlgebraMismatch: return "AlgebraMismatch";
    case ErrorKind::NotClosed: return "NotClosed";
    case ErrorKind::NotIndependent: return "NotIndependent";
    case ErrorKind::DenominatorVanishes: return "DenominatorVanishes";
    case ErrorKind::NotADerivation: return "NotADerivation";
    case ErrorKind::ArityMismatch: return "ArityMismatch";
    case ErrorKind::IncompatibleQuantifier: return "IncompatibleQuantifier";
    case ErrorKind::UnknownName: return "UnknownName";
    case ErrorKind::ExcludedParameterValue: return "ExcludedParameterValue";
    case ErrorKind::DuplicateName: return "DuplicateName";
    case ErrorKind::NotNilpotent: return "NotNilpotent";
    case ErrorKind::Usage: return "UsageError";
    case ErrorKind::Internal: return "InternalError";
  }
  return "Error";
}

}  // namespace liedd
