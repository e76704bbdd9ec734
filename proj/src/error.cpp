#include "measkit/error.hpp"

namespace measkit {

std::string_view error_code_name(ErrorCode code) {
  switch (code) {
    case ErrorCode::UndefinedSum: return "UndefinedSum";
    case ErrorCode::UnsupportedExponent: return "UnsupportedExponent";
    case ErrorCode::NegativeTerm: return "NegativeTerm";
    case ErrorCode::EmptyGenerators: return "EmptyGenerators";
    case ErrorCode::PreconditionFailed: return "PreconditionFailed";
    case ErrorCode::MalformedBound: return "MalformedBound";
    case ErrorCode::NotACover: return "NotACover";
    case ErrorCode::NotMeasurable: return "NotMeasurable";
    case ErrorCode::UnsupportedFactorKinds: return "UnsupportedFactorKinds";
    case ErrorCode::HypothesisFailed: return "HypothesisFailed";
    case ErrorCode::SpaceMismatch: return "SpaceMismatch";
    case ErrorCode::NegativeValue: return "NegativeValue";
    case ErrorCode::NegativeFunction: return "NegativeFunction";
    case ErrorCode::IncompatibleSpace: return "IncompatibleSpace";
    case ErrorCode::NotIntegrable: return "NotIntegrable";
    case ErrorCode::NonDiffuseMeasure: return "NonDiffuseMeasure";
    case ErrorCode::NotAbsolutelySummable: return "NotAbsolutelySummable";
    case ErrorCode::NotAlmostSummable: return "NotAlmostSummable";
    case ErrorCode::ZeroMeasure: return "ZeroMeasure";
    case ErrorCode::UnboundedFunction: return "UnboundedFunction";
    case ErrorCode::AnchorOutOfSpace: return "AnchorOutOfSpace";
    case ErrorCode::UnsupportedShape: return "UnsupportedShape";
    case ErrorCode::ParseError: return "ParseError";
  }
  return "Unknown";
}

Error::Error(ErrorCode code, const std::string& message)
    : std::runtime_error(std::string(error_code_name(code)) + ": " + message),
      code_(code) {}

void fail(ErrorCode code, const std::string& message) {
  throw Error(code, message);
}

}  // namespace measkit
