#pragma once

#include <string_view>

#include "trigspline/factor.hpp"
#include "trigspline/grid.hpp"

namespace trigspline {

/// Weights of the low (j), medium (mN - j) and high (mN + j) frequency branches.
struct GammaVector {
    double g1 = 1.0;
    double g2 = 1.0;
    double g3 = 1.0;

    /// g2 = g3 = 0 collapses the spline to the fundamental trigonometric polynomial.
    [[nodiscard]] bool is_trig_polynomial_regime() const noexcept { return g2 == 0.0 && g3 == 0.0; }
    [[nodiscard]] bool is_simple() const noexcept { return g1 == 1.0 && g2 == 1.0 && g3 == 1.0; }
};

enum class TruncationMode {
    /// Sum m = 1..M with M the first index whose integral tail bound drops below tail_tol.
    Adaptive,
    /// Denominators and omitted series energy in closed form through the Hurwitz zeta
    /// function (PowerSignConstant only); series terms truncated as in Adaptive.
    ClosedFormZeta,
    /// Exactly fixed_terms values of m, no tail control.
    FixedTerms,
};

struct TruncationPolicy {
    double tail_tol = 1e-8;
    long long m_max = 1'000'000;
    TruncationMode mode = TruncationMode::Adaptive;
    long long fixed_terms = 20;

    void validate() const;

    [[nodiscard]] static TruncationPolicy fixed(long long terms) {
        TruncationPolicy p;
        p.mode = TruncationMode::FixedTerms;
        p.fixed_terms = terms;
        return p;
    }
};

[[nodiscard]] std::string_view to_string(TruncationMode mode) noexcept;
/// Accepts "adaptive", "zeta" and "fixed".
[[nodiscard]] TruncationMode parse_truncation_mode(std::string_view name);

/// One fundamental spline family st^(I1,I2)(Gamma, factor, alpha, r, N, t).
struct SplineSpec {
    int I1 = 0;  ///< stitching grid
    int I2 = 0;  ///< interpolation grid
    GammaVector gamma{};
    FactorSpec factor{};
    int N = 7;
    TruncationPolicy truncation{};

    void validate() const;

    [[nodiscard]] GridSpec interpolation_grid() const noexcept { return GridSpec{N, I2}; }
    [[nodiscard]] int degree() const noexcept { return factor.r; }
    /// Splines are C^(r-1); derivatives up to this order have absolutely convergent series.
    [[nodiscard]] int max_derivative_order() const noexcept { return factor.r - 1; }
};

}  // namespace trigspline
