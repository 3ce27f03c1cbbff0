#pragma once

#include <functional>
#include <string_view>

#include "trigspline/harmonic_series.hpp"
#include "trigspline/spline_spec.hpp"

namespace trigspline {

enum class FunctionalKind { NormL2, NormL2Squared, SemiNorm, Variation, ArcLength };
enum class Method { Parseval, Quadrature, Partition };

struct FunctionalValue {
    FunctionalKind kind = FunctionalKind::NormL2;
    int order = 0;  ///< derivative order k for SemiNorm
    double value = 0.0;
    Method method = Method::Parseval;
    double error_estimate = 0.0;
};

struct NormPair {
    FunctionalValue squared;  ///< integral of f^2 over [0, 2pi]
    FunctionalValue norm;     ///< its square root
};

/// Pointwise 2pi-periodic function.
using Evaluator = std::function<double(double)>;

inline constexpr int default_norm_samples = 4096;
inline constexpr int default_variation_samples = 16384;

/// 2pi c0^2 + pi sum (a_n^2 + b_n^2), plus any closed-form tail energy the series carries.
[[nodiscard]] NormPair norm_parseval(const HarmonicSeries& series);

/// Periodic trapezoid on S points; error estimate from one doubling of S.
/// Throws InvalidResolution for S < 2.
[[nodiscard]] FunctionalValue norm_quadrature(const Evaluator& f, int samples = default_norm_samples);
[[nodiscard]] FunctionalValue norm_quadrature(const HarmonicSeries& series, int samples = default_norm_samples);

/// (integral of [f^(k)]^2)^(1/2) from the coefficients: pi sum n^(2k) (a_n^2 + b_n^2).
[[nodiscard]] FunctionalValue seminorm(const HarmonicSeries& series, int k_order);
/// Semi-norm of the fundamental spline, from its k_order-th derivative series.
/// Throws DerivativeOrderTooHigh for k_order > r - 1.
[[nodiscard]] FunctionalValue seminorm(const SplineSpec& spec, int k_order);

/// integral |f'| over S cells: Gauss-Legendre per cell, with cells where f' changes
/// sign cut at its roots. Error estimate from a second pass on S/2 cells.
/// Throws InvalidResolution for S < 64.
[[nodiscard]] FunctionalValue total_variation_derivative(const HarmonicSeries& derivative,
                                                         int samples = default_variation_samples);
/// Throws UseDPartitionVariation for r < 2.
[[nodiscard]] FunctionalValue total_variation_derivative(const SplineSpec& spec,
                                                         int samples = default_variation_samples);

/// sum |f(x_i) - f(x_{i-1})| over the uniform partition of [0, 2pi] into P cells.
[[nodiscard]] FunctionalValue total_variation_partition(const Evaluator& f, int partition_size);
[[nodiscard]] FunctionalValue total_variation_partition(const HarmonicSeries& series, int partition_size);

/// integral sqrt(1 + f'^2) over [0, 2pi]. Throws InvalidResolution for S < 64.
[[nodiscard]] FunctionalValue arc_length(const HarmonicSeries& derivative, int samples = default_variation_samples);
/// Throws UnsupportedForDegree for r < 2.
[[nodiscard]] FunctionalValue arc_length(const SplineSpec& spec, int samples = default_variation_samples);

[[nodiscard]] std::string_view to_string(FunctionalKind kind) noexcept;
[[nodiscard]] std::string_view to_string(Method method) noexcept;

}  // namespace trigspline
