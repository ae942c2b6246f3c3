#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace aspec {

enum class ErrorCode {
  Parse,
  ShapeMismatch,
  NonFinite,
  NotSquare,
  NotHermitian,
  NotPositive,
  InvalidArgument,
  NotMajorized,
  NotMember,
  PreconditionFailed,
  NotConverged,
  SpectrumPoint,
  ZeroDenominator,
  Negative,
};

constexpr std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::Parse: return "ParseError";
    case ErrorCode::ShapeMismatch: return "ShapeMismatch";
    case ErrorCode::NonFinite: return "NonFinite";
    case ErrorCode::NotSquare: return "NotSquare";
    case ErrorCode::NotHermitian: return "NotHermitian";
    case ErrorCode::NotPositive: return "NotPositive";
    case ErrorCode::InvalidArgument: return "InvalidArgument";
    case ErrorCode::NotMajorized: return "NotMajorized";
    case ErrorCode::NotMember: return "NotMember";
    case ErrorCode::PreconditionFailed: return "PreconditionFailed";
    case ErrorCode::NotConverged: return "NotConverged";
    case ErrorCode::SpectrumPoint: return "SpectrumPoint";
    case ErrorCode::ZeroDenominator: return "ZeroDenominator";
    case ErrorCode::Negative: return "Negative";
  }
  return "Unknown";
}

/// Every failure raised by the library. The code is stable and is what the
/// CLI prints; the message is for humans.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message)
      : std::runtime_error(std::string(to_string(code)) + ": " + message), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

/// Syntax error in the rational-expression grammar, with a 0-based byte offset.
class ParseError : public Error {
 public:
  ParseError(std::size_t position, const std::string& message)
      : Error(ErrorCode::Parse, message + " at position " + std::to_string(position)),
        position_(position) {}

  std::size_t position() const noexcept { return position_; }

 private:
  std::size_t position_;
};

}  // namespace aspec
