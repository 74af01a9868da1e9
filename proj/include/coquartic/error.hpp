#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace coq {

enum class ErrorCode {
  DivisionByZeroPolynomial,
  NonConvergence,
  DegreeMismatch,
  NestedExtension,
  DegenerateTensor,
  GenerationFailed,
  InconsistentConstraints,
  LineOnSurface,
  KernelRankDeficient,
  NotOnSurface,
  NoDivisibleTarget,
  NoInverseFound,
  PrecisionExhausted,
  CoincidentPoints,
  DegreeDrop,
  PreconditionFailed,
  ParseError,
};

std::string_view to_string(ErrorCode code);

/// Every failure raised by the library carries one of the codes above, so
/// callers (and the suite runner) can classify it without parsing text.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

inline std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::DivisionByZeroPolynomial: return "DivisionByZeroPolynomial";
    case ErrorCode::NonConvergence: return "NonConvergence";
    case ErrorCode::DegreeMismatch: return "DegreeMismatch";
    case ErrorCode::NestedExtension: return "NestedExtension";
    case ErrorCode::DegenerateTensor: return "DegenerateTensor";
    case ErrorCode::GenerationFailed: return "GenerationFailed";
    case ErrorCode::InconsistentConstraints: return "InconsistentConstraints";
    case ErrorCode::LineOnSurface: return "LineOnSurface";
    case ErrorCode::KernelRankDeficient: return "KernelRankDeficient";
    case ErrorCode::NotOnSurface: return "NotOnSurface";
    case ErrorCode::NoDivisibleTarget: return "NoDivisibleTarget";
    case ErrorCode::NoInverseFound: return "NoInverseFound";
    case ErrorCode::PrecisionExhausted: return "PrecisionExhausted";
    case ErrorCode::CoincidentPoints: return "CoincidentPoints";
    case ErrorCode::DegreeDrop: return "DegreeDrop";
    case ErrorCode::PreconditionFailed: return "PreconditionFailed";
    case ErrorCode::ParseError: return "ParseError";
  }
  return "Unknown";
}

}  // namespace coq
