#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace trigspline {

enum class ErrorKind {
    InvalidGrid,
    InvalidFrequency,
    InvalidSpec,
    NearSingularDenominator,
    TruncationNotConverged,
    DerivativeOrderTooHigh,
    ArityMismatch,
    InvalidResolution,
    UseDPartitionVariation,
    UnsupportedForDegree,
};

[[nodiscard]] std::string_view to_string(ErrorKind kind) noexcept;

/// Numeric failures (singular denominators, unconverged truncation) are
/// distinguished from input validation so callers can map them separately.
[[nodiscard]] constexpr bool is_numeric(ErrorKind kind) noexcept {
    return kind == ErrorKind::NearSingularDenominator ||
           kind == ErrorKind::TruncationNotConverged;
}

class SplineError : public std::runtime_error {
public:
    SplineError(ErrorKind kind, const std::string& what)
        : std::runtime_error(std::string(to_string(kind)) + ": " + what), kind_(kind) {}

    [[nodiscard]] ErrorKind kind() const noexcept { return kind_; }

private:
    ErrorKind kind_;
};

}  // namespace trigspline
