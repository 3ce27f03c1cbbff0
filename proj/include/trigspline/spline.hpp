#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "trigspline/harmonic_series.hpp"
#include "trigspline/spline_spec.hpp"

namespace trigspline {

/// Denominator h_j of the fundamental spline.
struct Denominator {
    int j = 0;
    double value = 0.0;
    long long m_terms = 0;          ///< m-blocks summed (0 for the closed form)
    double tail_bound = 0.0;        ///< bound on the omitted m-tail
    double largest_summand = 0.0;   ///< max |summand|, scale for the singularity test
    bool converged = true;
};

/// Relative singularity threshold: |h_j| below this times the largest summand is rejected.
inline constexpr double singular_rel_threshold = 1e-12;

/// h_j truncated by the spec's policy on its own tail bound.
/// Throws NearSingularDenominator; an unconverged tail is reported in the result.
[[nodiscard]] Denominator denominator(const SplineSpec& spec, int j);

/// Frequency-domain description of the fundamental spline (or its q-th
/// derivative) shared by every node index k: amplitude w_n at frequency n, so
///   st_k^(q)(t) = c0 + sum_n w_n cos(n (t - x_k) + q pi / 2).
struct SplineProfile {
    int N = 0;
    int q = 0;
    double c0 = 0.0;
    std::vector<std::int64_t> freq;
    std::vector<double> amplitude;
    std::vector<Denominator> denominators;  ///< consistent with the kept m-blocks
    SeriesTail tail{};
};

/// Throws DerivativeOrderTooHigh for q > r - 1 (q > 0), NearSingularDenominator.
[[nodiscard]] SplineProfile spline_profile(const SplineSpec& spec, int q = 0);

/// Fundamental spline k (1-based, anchored on the interpolation grid I2), q-th derivative.
[[nodiscard]] HarmonicSeries harmonic_series(const SplineSpec& spec, int k, int q = 0);
[[nodiscard]] HarmonicSeries harmonic_series(const SplineProfile& profile, const GridSpec& anchor_grid, int k);

/// sum_k samples[k] st_k^(q)(t) as one series. Throws ArityMismatch unless samples.size() == N.
[[nodiscard]] HarmonicSeries interpolant_series(const SplineSpec& spec, std::span<const double> samples, int q = 0);
[[nodiscard]] HarmonicSeries interpolant_series(const SplineProfile& profile, const GridSpec& anchor_grid,
                                                std::span<const double> samples);

[[nodiscard]] double eval_interpolant(const SplineSpec& spec, std::span<const double> samples, double t);

}  // namespace trigspline
