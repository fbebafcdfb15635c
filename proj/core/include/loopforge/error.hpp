#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace loopforge {

/// Domain error categories. The CLI prints error_name() of the kind and
/// exits with status 1 when one of these escapes an operation.
enum class ErrorKind {
  MalformedTable,
  NotLatin,
  NoIdentity,
  NotAGroup,
  NotASubloop,
  NotNormal,
  BadFamily,
  BadPsi,
  InvalidData,
  NotMiddleRightNuclear,
  InvalidPair,
  BadShift,
  NotAnAutomorphism,
  CarrierMismatch,
  NotRightBol,
  NotAHomomorphism,
  OrderTooLarge,
  ParseError,
};

std::string_view error_name(ErrorKind kind) noexcept;

class LoopError : public std::runtime_error {
 public:
  LoopError(ErrorKind kind, std::string const& what);

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

/// Raised when a structural identity that must hold by construction fails.
/// Seeing one of these means the library has a bug, not that the input is bad.
class ContractViolation : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

[[noreturn]] void fail(ErrorKind kind, std::string const& what);

inline void ensure(bool condition, char const* what) {
  if (!condition) throw ContractViolation(what);
}

}  // namespace loopforge
