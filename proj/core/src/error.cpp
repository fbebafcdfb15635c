#include "loopforge/error.hpp"

namespace loopforge {

std::string_view error_name(ErrorKind kind) noexcept {
  switch (kind) {
    case ErrorKind::MalformedTable: return "MalformedTable";
    case ErrorKind::NotLatin: return "NotLatin";
    case ErrorKind::NoIdentity: return "NoIdentity";
    case ErrorKind::NotAGroup: return "NotAGroup";
    case ErrorKind::NotASubloop: return "NotASubloop";
    case ErrorKind::NotNormal: return "NotNormal";
    case ErrorKind::BadFamily: return "BadFamily";
    case ErrorKind::BadPsi: return "BadPsi";
    case ErrorKind::InvalidData: return "InvalidData";
    case ErrorKind::NotMiddleRightNuclear: return "NotMiddleRightNuclear";
    case ErrorKind::InvalidPair: return "InvalidPair";
    case ErrorKind::BadShift: return "BadShift";
    case ErrorKind::NotAnAutomorphism: return "NotAnAutomorphism";
    case ErrorKind::CarrierMismatch: return "CarrierMismatch";
    case ErrorKind::NotRightBol: return "NotRightBol";
    case ErrorKind::NotAHomomorphism: return "NotAHomomorphism";
    case ErrorKind::OrderTooLarge: return "OrderTooLarge";
    case ErrorKind::ParseError: return "ParseError";
  }
  return "Unknown";
}

LoopError::LoopError(ErrorKind kind, std::string const& what)
    : std::runtime_error(std::string(error_name(kind)) + ": " + what),
      kind_(kind) {}

void fail(ErrorKind kind, std::string const& what) { throw LoopError(kind, what); }

}  // namespace loopforge
