#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "trigspline/simd/kernels.hpp"

namespace trigspline {

/// What was left out when an infinite series was cut to a finite model.
struct SeriesTail {
    long long m_terms = 0;          ///< m-blocks kept (frequencies up to m_terms * N + (N-1)/2)
    double tail_bound = 0.0;        ///< sup-norm bound on the omitted part
    double energy = 0.0;            ///< exact omitted sum of a^2 + b^2, when known in closed form
    double energy_bound = 0.0;      ///< bound on the omitted sum of a^2 + b^2 not covered by `energy`
    bool converged = true;          ///< tail_bound met the requested tolerance
};

/// c0 + sum a_n cos(n t) + b_n sin(n t) over strictly increasing positive n.
/// Immutable once built.
class HarmonicSeries {
public:
    HarmonicSeries() = default;

    /// Throws SplineError(InvalidFrequency) if frequencies are not positive and
    /// strictly increasing, SplineError(ArityMismatch) on length mismatch.
    HarmonicSeries(double c0, std::vector<std::int64_t> freq, std::vector<double> a, std::vector<double> b,
                   int derivative_order = 0, SeriesTail tail = {});

    [[nodiscard]] double c0() const noexcept { return c0_; }
    [[nodiscard]] std::span<const std::int64_t> frequencies() const noexcept { return freq_; }
    [[nodiscard]] std::span<const double> cos_coefficients() const noexcept { return a_; }
    [[nodiscard]] std::span<const double> sin_coefficients() const noexcept { return b_; }
    [[nodiscard]] std::size_t size() const noexcept { return freq_.size(); }
    [[nodiscard]] int derivative_order() const noexcept { return derivative_order_; }
    [[nodiscard]] const SeriesTail& tail() const noexcept { return tail_; }
    [[nodiscard]] double tail_bound() const noexcept { return tail_.tail_bound; }

    [[nodiscard]] HarmonicView view() const noexcept { return {c0_, freq_, a_, b_}; }

    [[nodiscard]] double operator()(double t) const;
    /// Batch evaluation through the dispatched kernel; out.size() must equal t.size().
    void evaluate(std::span<const double> t, std::span<double> out) const;
    [[nodiscard]] std::vector<double> evaluate(std::span<const double> t) const;

    /// Multiplies every coefficient (and the tail metadata) by `factor`.
    [[nodiscard]] HarmonicSeries scaled(double factor) const;

private:
    double c0_ = 0.0;
    std::vector<std::int64_t> freq_;
    std::vector<double> a_;
    std::vector<double> b_;
    int derivative_order_ = 0;
    SeriesTail tail_{};
};

[[nodiscard]] inline double eval_series(const HarmonicSeries& series, double t) { return series(t); }

/// Samples of the series at t_s = offset + 2 pi s / samples, s = 0..samples-1.
/// Coefficients are folded modulo `samples` and transformed with one FFT, which
/// gives the exact sample values of the finite series at O(terms + S log S).
[[nodiscard]] std::vector<double> sample_uniform(const HarmonicSeries& series, std::size_t samples,
                                                 double offset = 0.0);

}  // namespace trigspline
