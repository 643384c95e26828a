#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace quartic {

/// Every failure the library reports. Several of these mark conditions that
/// the underlying number theory makes unreachable; tests assert that they
/// never fire on valid inputs.
enum class ErrorCode {
  InvalidArgument,
  ZeroDenominator,
  NegativeNatural,
  NotPairwiseCoprime,
  NotAPower,
  FactorNotAPower,
  InvalidGenerator,
  NotCoprime,
  NotASquare,
  BothOdd,
  Degenerate,
  AEven,
  OrderViolation,
  ParityViolation,
  InvariantViolation,
  ArityMismatch,
  UnknownForm,
  UnsupportedK,
};

std::string_view to_string(ErrorCode code);

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& detail);

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace quartic
