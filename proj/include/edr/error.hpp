#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace edr {

/// Stable failure categories. The CLI maps these to exit codes and
/// machine-readable error objects, so the spelling of to_string() is part of
/// the external interface.
enum class ErrorCode {
  DescriptorMismatch,
  InvalidDescriptor,
  UnsupportedRing,
  NotDivisible,
  NotUnimodular,
  NotPrincipal,
  NotIdempotent,
  NotInIdeal,
  NotCoprime,
  ZeroElement,
  ZeroConstantTerm,
  PreconditionFailed,
  ScaleExceeded,
  ParseError,
  InternalError,
};

constexpr std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::DescriptorMismatch: return "DescriptorMismatch";
    case ErrorCode::InvalidDescriptor: return "InvalidDescriptor";
    case ErrorCode::UnsupportedRing: return "UnsupportedRing";
    case ErrorCode::NotDivisible: return "NotDivisible";
    case ErrorCode::NotUnimodular: return "NotUnimodular";
    case ErrorCode::NotPrincipal: return "NotPrincipal";
    case ErrorCode::NotIdempotent: return "NotIdempotent";
    case ErrorCode::NotInIdeal: return "NotInIdeal";
    case ErrorCode::NotCoprime: return "NotCoprime";
    case ErrorCode::ZeroElement: return "ZeroElement";
    case ErrorCode::ZeroConstantTerm: return "ZeroConstantTerm";
    case ErrorCode::PreconditionFailed: return "PreconditionFailed";
    case ErrorCode::ScaleExceeded: return "ScaleExceeded";
    case ErrorCode::ParseError: return "ParseError";
    case ErrorCode::InternalError: return "InternalError";
  }
  return "Unknown";
}

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message)
      : std::runtime_error(std::string(to_string(code)) + ": " + message),
        code_(code),
        detail_(message) {}

  ErrorCode code() const noexcept { return code_; }
  const std::string& detail() const noexcept { return detail_; }

 private:
  ErrorCode code_;
  std::string detail_;
};

/// Parse failures carry the byte offset where parsing stopped.
class ParseError : public Error {
 public:
  ParseError(std::size_t position, const std::string& message)
      : Error(ErrorCode::ParseError,
              message + " at position " + std::to_string(position)),
        position_(position) {}

  std::size_t position() const noexcept { return position_; }

 private:
  std::size_t position_;
};

[[noreturn]] inline void fail(ErrorCode code, const std::string& message) {
  throw Error(code, message);
}

}  // namespace edr
