#include "pdo/error.hpp"

namespace pdo {

std::string_view to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::DimensionMismatch: return "DimensionMismatch";
    case ErrorKind::IndexOutOfRange: return "IndexOutOfRange";
    case ErrorKind::MalformedIdeal: return "MalformedIdeal";
    case ErrorKind::ZeroDivisor: return "ZeroDivisor";
    case ErrorKind::NonCommutingOperators: return "NonCommutingOperators";
    case ErrorKind::ZeroOperator: return "ZeroOperator";
    case ErrorKind::NonConstantQ: return "NonConstantQ";
    case ErrorKind::NotInRing: return "NotInRing";
    case ErrorKind::DegenerateLambda: return "DegenerateLambda";
    case ErrorKind::OrderTooHigh: return "OrderTooHigh";
    case ErrorKind::NegativeN: return "NegativeN";
    case ErrorKind::TooWide: return "TooWide";
    case ErrorKind::SingularMinor: return "SingularMinor";
    case ErrorKind::NonConstantInput: return "NonConstantInput";
    case ErrorKind::SyntaxError: return "SyntaxError";
    case ErrorKind::DimensionExceeded: return "DimensionExceeded";
    case ErrorKind::UnboundName: return "UnboundName";
    case ErrorKind::InvalidArgument: return "InvalidArgument";
    case ErrorKind::InvariantViolation: return "InvariantViolation";
  }
  return "Unknown";
}

Error::Error(ErrorKind kind, const std::string& message)
    : std::runtime_error(std::string(to_string(kind)) + ": " + message), kind_(kind) {}

void fail(ErrorKind kind, const std::string& message) { throw Error(kind, message); }

}  // namespace pdo
