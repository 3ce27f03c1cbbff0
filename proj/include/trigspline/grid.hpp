#pragma once

#include <numbers>
#include <vector>

namespace trigspline {

inline constexpr double two_pi = 2.0 * std::numbers::pi;

/// Uniform grid on [0, 2pi) with an odd node count.
/// Indicator 0 puts the first node at 0, indicator 1 shifts every node by half a step.
struct GridSpec {
    int N = 7;
    int indicator = 0;

    /// Throws SplineError(InvalidGrid) unless N >= 3 is odd and indicator is 0 or 1.
    void validate() const;

    /// Largest harmonic index of the low-frequency band, (N - 1) / 2.
    [[nodiscard]] int half() const noexcept { return (N - 1) / 2; }

    /// Node k (1-based).
    [[nodiscard]] double node(int k) const;

    /// Phase n * node(k) reduced into [0, 2pi) using integer arithmetic,
    /// so large harmonic indices do not lose accuracy.
    [[nodiscard]] double node_phase(long long n, int k) const;
};

[[nodiscard]] std::vector<double> grid_nodes(const GridSpec& grid);

}  // namespace trigspline
