#pragma once

#include <string_view>

namespace trigspline {

/// Convergence factors applied to the k-th harmonic.
///   PowerSignConstant: alpha * k^-(1+r)        (sign-constant)
///   SincPower:         (sin(alpha k) / (alpha k))^(1+r)   (sign-changing)
/// New factor families extend this enum together with factor_value and
/// factor_majorant.
enum class FactorKind { PowerSignConstant, SincPower };

struct FactorSpec {
    FactorKind kind = FactorKind::SincPower;
    double alpha = 1.0;
    int r = 3;

    /// Throws SplineError(InvalidSpec) for alpha <= 0, non-finite alpha or r < 0.
    void validate() const;
};

/// Throws SplineError(InvalidFrequency) for k < 1.
[[nodiscard]] double factor_value(const FactorSpec& factor, long long k);

/// Constant A with |factor_value(k)| <= A * k^-(1+r) for every k >= 1.
[[nodiscard]] double factor_majorant(const FactorSpec& factor) noexcept;

[[nodiscard]] std::string_view to_string(FactorKind kind) noexcept;
/// Accepts "power" / "PowerSignConstant" and "sinc" / "SincPower".
[[nodiscard]] FactorKind parse_factor_kind(std::string_view name);

/// x^e for a nonnegative integer exponent; keeps the sign of negative bases.
[[nodiscard]] constexpr double ipow(double x, int e) noexcept {
    double result = 1.0;
    while (e > 0) {
        if (e & 1) result *= x;
        x *= x;
        e >>= 1;
    }
    return result;
}

}  // namespace trigspline
