#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace fialg {

enum class ErrorKind {
  DuplicateElement,
  UnknownElement,
  AntisymmetryViolation,
  SizeMismatch,
  SpecMismatch,
  NotAUnit,
  NotComparable,
  ContextMismatch,
  NotInvertible,
  TorsionRefused,
  NotJordan,
  PreconditionFailed,
  InvalidAlgebra,
  ParseError,
};

std::string_view to_string(ErrorKind kind);

// Single exception type for the library; `kind()` tells callers (and the CLI
// exit-code mapping) which precondition was violated.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& message)
      : std::runtime_error(std::string(to_string(kind)) + ": " + message), kind_(kind), message_(message) {}

  ErrorKind kind() const noexcept { return kind_; }
  const std::string& message() const noexcept { return message_; }

 private:
  ErrorKind kind_;
  std::string message_;
};

}  // namespace fialg
