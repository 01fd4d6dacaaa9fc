#pragma once

#include <stdexcept>
#include <string>

namespace judgekit {

// Every failure the library raises on purpose carries one of these codes so
// callers can branch without string-matching messages.
enum class ErrorCode {
  // verdict / label parsing
  MissingMarker,
  NotAnInteger,
  OutOfRange,
  AmbiguousVerdict,
  UnknownScenario,
  ParseFailure,
  // metrics
  EmptyInput,
  TooFewValues,
  LengthMismatch,
  ZeroVariance,
  ScenarioMismatch,
  InvalidHistogram,
  DegenerateBaseline,
  // prompt construction
  MissingReference,
  WrongResponseCount,
  WrongSeedCount,
  EmptyInstruction,
  EmptyCatalog,
  MissingField,
  EmptyText,
  UnresolvedPlaceholder,
  // model gateway
  RateLimited,
  TimedOut,
  ProtocolError,
  AuthError,
  UnsupportedByProvider,
  // data engineering
  MissingScore,
  NotPairwise,
  NoRegressionModel,
  DegenerateAnswer,
  ScorerFailure,
  EmptyAfterFilter,
  KTooLarge,
  PoolExhausted,
  // pipeline harness
  IdMismatch,
  UnsupportedFormat,
  ConfigError,
  IoError,
};

const char* error_code_name(ErrorCode code);

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message)
      : std::runtime_error(std::string(error_code_name(code)) + ": " + message),
        code_(code) {}

  ErrorCode code() const { return code_; }

 private:
  ErrorCode code_;
};

[[noreturn]] inline void raise(ErrorCode code, const std::string& message) {
  throw Error(code, message);
}

}  // namespace judgekit
