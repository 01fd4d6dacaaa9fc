#include "judgekit/errors.hpp"

namespace judgekit {

const char* error_code_name(ErrorCode code) {
  switch (code) {
    case ErrorCode::MissingMarker: return "MissingMarker";
    case ErrorCode::NotAnInteger: return "NotAnInteger";
    case ErrorCode::OutOfRange: return "OutOfRange";
    case ErrorCode::AmbiguousVerdict: return "AmbiguousVerdict";
    case ErrorCode::UnknownScenario: return "UnknownScenario";
    case ErrorCode::ParseFailure: return "ParseFailure";
    case ErrorCode::EmptyInput: return "EmptyInput";
    case ErrorCode::TooFewValues: return "TooFewValues";
    case ErrorCode::LengthMismatch: return "LengthMismatch";
    case ErrorCode::ZeroVariance: return "ZeroVariance";
    case ErrorCode::ScenarioMismatch: return "ScenarioMismatch";
    case ErrorCode::InvalidHistogram: return "InvalidHistogram";
    case ErrorCode::DegenerateBaseline: return "DegenerateBaseline";
    case ErrorCode::MissingReference: return "MissingReference";
    case ErrorCode::WrongResponseCount: return "WrongResponseCount";
    case ErrorCode::WrongSeedCount: return "WrongSeedCount";
    case ErrorCode::EmptyInstruction: return "EmptyInstruction";
    case ErrorCode::EmptyCatalog: return "EmptyCatalog";
    case ErrorCode::MissingField: return "MissingField";
    case ErrorCode::EmptyText: return "EmptyText";
    case ErrorCode::UnresolvedPlaceholder: return "UnresolvedPlaceholder";
    case ErrorCode::RateLimited: return "RateLimited";
    case ErrorCode::TimedOut: return "TimedOut";
    case ErrorCode::ProtocolError: return "ProtocolError";
    case ErrorCode::AuthError: return "AuthError";
    case ErrorCode::UnsupportedByProvider: return "UnsupportedByProvider";
    case ErrorCode::MissingScore: return "MissingScore";
    case ErrorCode::NotPairwise: return "NotPairwise";
    case ErrorCode::NoRegressionModel: return "NoRegressionModel";
    case ErrorCode::DegenerateAnswer: return "DegenerateAnswer";
    case ErrorCode::ScorerFailure: return "ScorerFailure";
    case ErrorCode::EmptyAfterFilter: return "EmptyAfterFilter";
    case ErrorCode::KTooLarge: return "KTooLarge";
    case ErrorCode::PoolExhausted: return "PoolExhausted";
    case ErrorCode::IdMismatch: return "IdMismatch";
    case ErrorCode::UnsupportedFormat: return "UnsupportedFormat";
    case ErrorCode::ConfigError: return "ConfigError";
    case ErrorCode::IoError: return "IoError";
  }
  return "UnknownError";
}

}  // namespace judgekit
