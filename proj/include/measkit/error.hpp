#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace measkit {

enum class ErrorCode {
  UndefinedSum,
  UnsupportedExponent,
  NegativeTerm,
  EmptyGenerators,
  PreconditionFailed,
  MalformedBound,
  NotACover,
  NotMeasurable,
  UnsupportedFactorKinds,
  HypothesisFailed,
  SpaceMismatch,
  NegativeValue,
  NegativeFunction,
  IncompatibleSpace,
  NotIntegrable,
  NonDiffuseMeasure,
  NotAbsolutelySummable,
  NotAlmostSummable,
  ZeroMeasure,
  UnboundedFunction,
  AnchorOutOfSpace,
  UnsupportedShape,
  ParseError,
};

std::string_view error_code_name(ErrorCode code);

// Every failure in the library is reported through this type. The code is the
// contract-level reason; the message names the witness when there is one.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message);

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

[[noreturn]] void fail(ErrorCode code, const std::string& message);

}  // namespace measkit
