#pragma once

#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "trigspline/functionals.hpp"
#include "trigspline/spline_spec.hpp"

namespace trigspline {

/// m-blocks behind the published norm tables; the r = 1 cells are only
/// reproduced with this truncation (the converged values are lower).
inline constexpr long long reference_table_terms = 20;

[[nodiscard]] std::vector<int> default_table_degrees();  // 1..8, 50

/// Squared L2 norms of st^(0,0) and st^(0,1) for each degree r.
struct NormTable {
    GammaVector gamma{};
    FactorKind factor = FactorKind::PowerSignConstant;
    int N = 7;
    double alpha = 1.0;
    TruncationPolicy truncation{};
    std::vector<int> degrees;
    std::vector<std::pair<int, int>> grids{{0, 0}, {0, 1}};
    std::vector<std::vector<double>> cells;  ///< cells[row][column], row per grid pair

    /// Throws InvalidSpec if the grid pair or degree is not in the table.
    [[nodiscard]] double at(int I1, int I2, int r) const;
};

[[nodiscard]] NormTable reproduce_norm_table(const GammaVector& gamma, int N, std::span<const int> degrees,
                                             const TruncationPolicy& truncation = TruncationPolicy::fixed(reference_table_terms),
                                             FactorKind factor = FactorKind::PowerSignConstant, double alpha = 1.0);

enum class SweepFunctional { NormL2Squared, NormL2, SemiNorm, Variation, ArcLength };

[[nodiscard]] std::string_view to_string(SweepFunctional f) noexcept;
/// Accepts norm2, norm, seminorm, variation, arclength.
[[nodiscard]] SweepFunctional parse_sweep_functional(std::string_view name);

struct SweepOptions {
    int samples = default_variation_samples;  ///< quadrature points for variation / arc length
    int seminorm_order = 0;                   ///< 0 selects (r + 1) / 2
    bool refine_minima = true;
    double golden_tolerance = 1e-9;           ///< bracket width that ends the golden-section pass
    int golden_max_iterations = 80;
};

struct SweepMinimum {
    double alpha = 0.0;
    double value = 0.0;
    std::size_t index = 0;  ///< sample index the bracket was centred on
};

/// A functional of the fundamental spline st_1 sampled over alpha.
struct SweepCurve {
    SweepFunctional functional = SweepFunctional::NormL2Squared;
    SplineSpec spec{};                 ///< template; spec.factor.alpha is ignored
    std::vector<double> alphas;
    std::vector<double> values;        ///< NaN where invalid
    std::vector<bool> valid;
    std::vector<double> errors;        ///< quadrature plus truncation error per sample
    std::vector<std::string> notes;    ///< reason per invalid sample
    std::vector<SweepMinimum> minima;
    std::optional<double> reference;   ///< value at alpha = pi / N (polynomial counterpart level)
    double max_tail_bound = 0.0;
    bool all_converged = true;
};

/// Uniform grid of `steps` points on [lo, hi].
[[nodiscard]] std::vector<double> alpha_grid(int steps = 200, double lo = 0.01,
                                             double hi = 1.5707963267948966 - 0.01);

/// Functional value of st_1 for `spec` (alpha taken from spec.factor).
[[nodiscard]] FunctionalValue evaluate_functional(const SplineSpec& spec, SweepFunctional functional,
                                                  const SweepOptions& options = {});

/// Throws InvalidSpec unless alphas are strictly increasing inside (0, pi/2) with at
/// least 8 points; singular samples are recorded as invalid rather than thrown.
[[nodiscard]] SweepCurve sweep_alpha(const SplineSpec& spec_template, std::span<const double> alphas,
                                     SweepFunctional functional, const SweepOptions& options = {});

/// Three-point local minima of a sampled curve (invalid samples break brackets).
/// Neighbours closer than the sum of their `errors` count as equal.
[[nodiscard]] std::vector<std::size_t> local_minima(std::span<const double> values, const std::vector<bool>& valid,
                                                    std::span<const double> errors = {});

/// Golden-section search for a minimum of f on [lo, hi]; returns (argmin, min).
template <class F>
std::pair<double, double> golden_section_minimize(F&& f, double lo, double hi, double tolerance, int max_iterations);

enum class DegreeParity { Odd, Even };

struct CoincidencePair {
    double alpha1 = 0.0;
    double alpha2 = 0.0;
    double deviation = 0.0;
    bool coincide = false;
};

struct CoincidenceReport {
    DegreeParity parity = DegreeParity::Odd;
    int N = 7;
    int r = 3;
    GammaVector gamma{};
    double tolerance = 1e-6;
    std::vector<int> multipliers;       ///< accepted p with alpha = p pi / N
    std::vector<double> alphas;
    std::vector<std::string> rejected;  ///< rejected multipliers with the reason
    std::vector<CoincidencePair> pairs;
    /// deviation of each alpha from the polynomial counterpart
    /// (Gamma = (1,1,1), power factor, same r and grids)
    std::vector<CoincidencePair> versus_polynomial;
    double max_pairwise = 0.0;
    double max_versus_polynomial = 0.0;
    [[nodiscard]] bool pairwise_coincide() const noexcept { return max_pairwise <= tolerance; }
    [[nodiscard]] bool polynomial_coincide() const noexcept { return max_versus_polynomial <= tolerance; }
};

/// Sinc-factor splines on grid (0,0) for odd degree or (0,1) for even degree, compared
/// over `samples` uniform points at alpha = p pi / N.
[[nodiscard]] CoincidenceReport coincidence_check(const SplineSpec& spec_template, DegreeParity parity,
                                                  std::span<const int> multipliers, int samples = 512,
                                                  double tolerance = 1e-6);

struct DegreeScan {
    std::vector<int> degrees;
    std::vector<double> values;
    bool increasing = false;  ///< strictly increasing
    bool decreasing = false;  ///< strictly decreasing
    bool below_limit = false;
    bool above_limit = false;
};

struct LimitReport {
    GammaVector gamma{};
    int N = 7;
    FactorKind factor = FactorKind::PowerSignConstant;
    int I1 = 0;
    int I2 = 0;
    double value = 0.0;   ///< squared norm at r = 50
    double exact = 0.0;   ///< 2 pi / N, the fundamental trigonometric polynomial
    double deviation = 0.0;
    DegreeScan odd;       ///< r = 1, 3, 5, 7
    DegreeScan even;      ///< r = 2, 4, 6, 8
};

/// For the sinc factor alpha = pi / N is used.
[[nodiscard]] LimitReport limit_check(const GammaVector& gamma, int N, FactorKind factor, int I1, int I2,
                                      const TruncationPolicy& truncation = TruncationPolicy::fixed(reference_table_terms));

template <class F>
std::pair<double, double> golden_section_minimize(F&& f, double lo, double hi, double tolerance, int max_iterations) {
    const double inv_phi = 0.6180339887498949;
    double c = hi - inv_phi * (hi - lo);
    double d = lo + inv_phi * (hi - lo);
    double fc = f(c);
    double fd = f(d);
    for (int i = 0; i < max_iterations && (hi - lo) > tolerance; ++i) {
        if (fc < fd) {
            hi = d;
            d = c;
            fd = fc;
            c = hi - inv_phi * (hi - lo);
            fc = f(c);
        } else {
            lo = c;
            c = d;
            fc = fd;
            d = lo + inv_phi * (hi - lo);
            fd = f(d);
        }
    }
    return fc < fd ? std::pair{c, fc} : std::pair{d, fd};
}

}  // namespace trigspline
