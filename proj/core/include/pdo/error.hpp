#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace pdo {

enum class ErrorKind {
  DimensionMismatch,
  IndexOutOfRange,
  MalformedIdeal,
  ZeroDivisor,
  NonCommutingOperators,
  ZeroOperator,
  NonConstantQ,
  NotInRing,
  DegenerateLambda,
  OrderTooHigh,
  NegativeN,
  TooWide,
  SingularMinor,
  NonConstantInput,
  SyntaxError,
  DimensionExceeded,
  UnboundName,
  InvalidArgument,
  InvariantViolation,
};

std::string_view to_string(ErrorKind kind);

/// Every failure raised by the library carries one of the kinds above, so
/// callers (the CLI in particular) can map it onto an exit status.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& message);

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

[[noreturn]] void fail(ErrorKind kind, const std::string& message);

}  // namespace pdo
