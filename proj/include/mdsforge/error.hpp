#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace mdsforge {

enum class ErrorKind {
  NotPrime,
  ReducibleModulus,
  DegreeMismatch,
  DivisionByZero,
  ContextMismatch,
  NoEmbedding,
  InvalidBaseDegree,
  DuplicatePoints,
  NotSquare,
  Singular,
  IndexOutOfRange,
  LengthMismatch,
  DimensionMismatch,
  NotFullRank,
  ResourceLimit,
  SpecInvalid,
  PreconditionViolated,
  VerificationFailed,
  ParseError,
};

std::string_view to_string(ErrorKind kind);

/// Every failure raised by the library carries a machine-readable kind so the
/// CLI can map it onto an exit code.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(what), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

[[noreturn]] inline void raise(ErrorKind kind, const std::string& what) {
  throw Error(kind, what);
}

}  // namespace mdsforge
