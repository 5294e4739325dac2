#include "aqsl/error.hpp"

namespace aqsl {

std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::NonHermitianInput: return "NonHermitianInput";
    case ErrorCode::NotPositiveSemiDefinite: return "NotPositiveSemiDefinite";
    case ErrorCode::DimensionMismatch: return "DimensionMismatch";
    case ErrorCode::InvalidState: return "InvalidState";
    case ErrorCode::ParameterOutOfRange: return "ParameterOutOfRange";
    case ErrorCode::IncompleteKrausSet: return "IncompleteKrausSet";
    case ErrorCode::StepSizeTooCoarse: return "StepSizeTooCoarse";
    case ErrorCode::RampInvalid: return "RampInvalid";
    case ErrorCode::DegenerateNormalization: return "DegenerateNormalization";
    case ErrorCode::RegularizationFailure: return "RegularizationFailure";
    case ErrorCode::PathTooShort: return "PathTooShort";
    case ErrorCode::RankDeficient: return "RankDeficient";
    case ErrorCode::ZeroLengthPath: return "ZeroLengthPath";
    case ErrorCode::ZeroAction: return "ZeroAction";
    case ErrorCode::EmptyInput: return "EmptyInput";
    case ErrorCode::NonConvergence: return "NonConvergence";
    case ErrorCode::InadmissibleInitial: return "InadmissibleInitial";
    case ErrorCode::ConfigError: return "ConfigError";
  }
  return "Unknown";
}

}  // namespace aqsl
