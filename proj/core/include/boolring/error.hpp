#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace boolring {

/// Every failure the library reports. Values are stable: the CLI derives
/// process exit codes from them.
enum class ErrorKind {
  DuplicateLabel,
  UnknownLabel,
  GroundMismatch,
  ZeroRing,
  OracleBoundExceeded,
  ImproperIdeal,
  UnverifiedDecomposition,
  NotPrime,
  HypothesisFailed,
  OutOfRange,
  LengthMismatch,
  NotAnAtom,
  LimitExceeded,
  NameError,
  TypeError,
  ParseError,
  VerificationFailed,
};

std::string_view to_string(ErrorKind kind) noexcept;

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& message)
      : std::runtime_error(message), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

[[noreturn]] void raise(ErrorKind kind, const std::string& message);

}  // namespace boolring
