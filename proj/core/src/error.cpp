#include "boolring/error.hpp"

namespace boolring {

std::string_view to_string(ErrorKind kind) noexcept {
  switch (kind) {
    case ErrorKind::DuplicateLabel: return "DuplicateLabel";
    case ErrorKind::UnknownLabel: return "UnknownLabel";
    case ErrorKind::GroundMismatch: return "GroundMismatch";
    case ErrorKind::ZeroRing: return "ZeroRing";
    case ErrorKind::OracleBoundExceeded: return "OracleBoundExceeded";
    case ErrorKind::ImproperIdeal: return "ImproperIdeal";
    case ErrorKind::UnverifiedDecomposition: return "UnverifiedDecomposition";
    case ErrorKind::NotPrime: return "NotPrime";
    case ErrorKind::HypothesisFailed: return "HypothesisFailed";
    case ErrorKind::OutOfRange: return "OutOfRange";
    case ErrorKind::LengthMismatch: return "LengthMismatch";
    case ErrorKind::NotAnAtom: return "NotAnAtom";
    case ErrorKind::LimitExceeded: return "LimitExceeded";
    case ErrorKind::NameError: return "NameError";
    case ErrorKind::TypeError: return "TypeError";
    case ErrorKind::ParseError: return "ParseError";
    case ErrorKind::VerificationFailed: return "VerificationFailed";
  }
  return "Unknown";
}

void raise(ErrorKind kind, const std::string& message) {
  throw Error(kind, std::string(to_string(kind)) + ": " + message);
}

}  // namespace boolring
