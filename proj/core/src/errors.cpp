#include "harmonics/errors.hpp"

namespace harmonics {

Error::Error(ErrorKind kind, const std::string& message)
    : std::runtime_error(std::string(kind_name(kind)) + ": " + message), kind_(kind) {}

ErrorCategory Error::category() const noexcept {
  switch (kind_) {
    case ErrorKind::NoConvergence:
    case ErrorKind::SingularSystem:
    case ErrorKind::Cancelled:
      return ErrorCategory::Numerical;
    case ErrorKind::InconsistentSystem:
      return ErrorCategory::Internal;
    default:
      return ErrorCategory::Validation;
  }
}

const char* Error::kind_name(ErrorKind kind) noexcept {
  switch (kind) {
    case ErrorKind::KindMismatch: return "KindMismatch";
    case ErrorKind::ElementNotInGroup: return "ElementNotInGroup";
    case ErrorKind::RadiusExceeded: return "RadiusExceeded";
    case ErrorKind::BallTooLarge: return "BallTooLarge";
    case ErrorKind::InvalidSpec: return "InvalidSpec";
    case ErrorKind::InvalidMeasure: return "InvalidMeasure";
    case ErrorKind::ValidationFailed: return "ValidationFailed";
    case ErrorKind::RelatorViolation: return "RelatorViolation";
    case ErrorKind::DimensionMismatch: return "DimensionMismatch";
    case ErrorKind::NotSymmetric: return "NotSymmetric";
    case ErrorKind::NotAProduct: return "NotAProduct";
    case ErrorKind::NotHarmonic: return "NotHarmonic";
    case ErrorKind::MembershipFailure: return "MembershipFailure";
    case ErrorKind::MissingBoundaryValue: return "MissingBoundaryValue";
    case ErrorKind::InconsistentSystem: return "InconsistentSystem";
    case ErrorKind::SingularSystem: return "SingularSystem";
    case ErrorKind::NoConvergence: return "NoConvergence";
    case ErrorKind::Cancelled: return "Cancelled";
    case ErrorKind::InvalidArgument: return "InvalidArgument";
    case ErrorKind::ParseError: return "ParseError";
  }
  return "Unknown";
}

void fail(ErrorKind kind, const std::string& message) { throw Error(kind, message); }

}  // namespace harmonics
