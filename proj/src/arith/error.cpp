#include <quartic/error.hpp>

namespace quartic {

std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::InvalidArgument: return "InvalidArgument";
    case ErrorCode::ZeroDenominator: return "ZeroDenominator";
    case ErrorCode::NegativeNatural: return "NegativeNatural";
    case ErrorCode::NotPairwiseCoprime: return "NotPairwiseCoprime";
    case ErrorCode::NotAPower: return "NotAPower";
    case ErrorCode::FactorNotAPower: return "FactorNotAPower";
    case ErrorCode::InvalidGenerator: return "InvalidGenerator";
    case ErrorCode::NotCoprime: return "NotCoprime";
    case ErrorCode::NotASquare: return "NotASquare";
    case ErrorCode::BothOdd: return "BothOdd";
    case ErrorCode::Degenerate: return "Degenerate";
    case ErrorCode::AEven: return "AEven";
    case ErrorCode::OrderViolation: return "OrderViolation";
    case ErrorCode::ParityViolation: return "ParityViolation";
    case ErrorCode::InvariantViolation: return "InvariantViolation";
    case ErrorCode::ArityMismatch: return "ArityMismatch";
    case ErrorCode::UnknownForm: return "UnknownForm";
    case ErrorCode::UnsupportedK: return "UnsupportedK";
  }
  return "Unknown";
}

Error::Error(ErrorCode code, const std::string& detail)
    : std::runtime_error(std::string(to_string(code)) + ": " + detail), code_(code) {}

}  // namespace quartic
