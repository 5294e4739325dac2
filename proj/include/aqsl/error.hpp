#pragma once

#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace aqsl {

enum class ErrorCode {
  NonHermitianInput,
  NotPositiveSemiDefinite,
  DimensionMismatch,
  InvalidState,
  ParameterOutOfRange,
  IncompleteKrausSet,
  StepSizeTooCoarse,
  RampInvalid,
  DegenerateNormalization,
  RegularizationFailure,
  PathTooShort,
  RankDeficient,
  ZeroLengthPath,
  ZeroAction,
  EmptyInput,
  NonConvergence,
  InadmissibleInitial,
  ConfigError,
};

std::string_view to_string(ErrorCode code);

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

/// Raised by the ramp optimizer when the iteration cap is hit; keeps the
/// action history so the caller can inspect the stall.
class NonConvergenceError : public Error {
 public:
  NonConvergenceError(const std::string& what, std::vector<double> history)
      : Error(ErrorCode::NonConvergence, what), history_(std::move(history)) {}

  const std::vector<double>& history() const noexcept { return history_; }

 private:
  std::vector<double> history_;
};

}  // namespace aqsl
