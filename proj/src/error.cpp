#include "trigspline/error.hpp"

namespace trigspline {

std::string_view to_string(ErrorKind kind) noexcept {
    switch (kind) {
        case ErrorKind::InvalidGrid: return "InvalidGrid";
        case ErrorKind::InvalidFrequency: return "InvalidFrequency";
        case ErrorKind::InvalidSpec: return "InvalidSpec";
        case ErrorKind::NearSingularDenominator: return "NearSingularDenominator";
        case ErrorKind::TruncationNotConverged: return "TruncationNotConverged";
        case ErrorKind::DerivativeOrderTooHigh: return "DerivativeOrderTooHigh";
        case ErrorKind::ArityMismatch: return "ArityMismatch";
        case ErrorKind::InvalidResolution: return "InvalidResolution";
        case ErrorKind::UseDPartitionVariation: return "UseDPartitionVariation";
        case ErrorKind::UnsupportedForDegree: return "UnsupportedForDegree";
    }
    return "Unknown";
}

}  // namespace trigspline
