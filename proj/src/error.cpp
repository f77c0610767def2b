#include "dara/error.hpp"

namespace dara {

std::string_view to_string(ErrorCode code) noexcept {
    switch (code) {
        case ErrorCode::NonMonotoneWeights: return "NonMonotoneWeights";
        case ErrorCode::BadNormalization: return "BadNormalization";
        case ErrorCode::WeightOutOfRange: return "WeightOutOfRange";
        case ErrorCode::AlphaSumMismatch: return "AlphaSumMismatch";
        case ErrorCode::LengthMismatch: return "LengthMismatch";
        case ErrorCode::InvalidSensor: return "InvalidSensor";
        case ErrorCode::InvalidArgument: return "InvalidArgument";
        case ErrorCode::DeltaOutOfRange: return "DeltaOutOfRange";
        case ErrorCode::DeltaOne: return "DeltaOne";
        case ErrorCode::EmptyHistogram: return "EmptyHistogram";
        case ErrorCode::DegenerateProfile: return "DegenerateProfile";
        case ErrorCode::ZeroUtilityCoefficient: return "ZeroUtilityCoefficient";
        case ErrorCode::TargetDimensionMismatch: return "TargetDimensionMismatch";
        case ErrorCode::InfeasibleDelta: return "InfeasibleDelta";
        case ErrorCode::InfeasibleTarget: return "InfeasibleTarget";
        case ErrorCode::NonPositiveShare: return "NonPositiveShare";
        case ErrorCode::InstanceTooLarge: return "InstanceTooLarge";
        case ErrorCode::UnknownPolicy: return "UnknownPolicy";
        case ErrorCode::ConfigError: return "ConfigError";
    }
    return "Unknown";
}

}  // namespace dara
