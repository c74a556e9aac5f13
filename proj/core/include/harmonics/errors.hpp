#pragma once

#include <stdexcept>
#include <string>

namespace harmonics {

/// Exit-code categories used by the CLI: validation errors are bad inputs,
/// numerical errors are solver failures, internal errors are broken invariants.
enum class ErrorCategory { Validation = 1, Numerical = 2, Internal = 3 };

enum class ErrorKind {
  KindMismatch,
  ElementNotInGroup,
  RadiusExceeded,
  BallTooLarge,
  InvalidSpec,
  InvalidMeasure,
  ValidationFailed,
  RelatorViolation,
  DimensionMismatch,
  NotSymmetric,
  NotAProduct,
  NotHarmonic,
  MembershipFailure,
  MissingBoundaryValue,
  InconsistentSystem,
  SingularSystem,
  NoConvergence,
  Cancelled,
  InvalidArgument,
  ParseError,
};

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& message);

  ErrorKind kind() const noexcept { return kind_; }
  ErrorCategory category() const noexcept;

  static const char* kind_name(ErrorKind kind) noexcept;

 private:
  ErrorKind kind_;
};

[[noreturn]] void fail(ErrorKind kind, const std::string& message);

}  // namespace harmonics
