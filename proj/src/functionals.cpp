#include "trigspline/functionals.hpp"

#include <array>
#include <cmath>
#include <cstdint>
#include <numbers>
#include <string>
#include <vector>

#include <boost/math/quadrature/gauss.hpp>
#include <boost/math/tools/toms748_solve.hpp>

#include "trigspline/error.hpp"
#include "trigspline/spline.hpp"

namespace trigspline {
namespace {

constexpr double pi = std::numbers::pi;

void require_resolution(int samples, int minimum, const char* what) {
    if (samples < minimum) {
        throw SplineError(ErrorKind::InvalidResolution, std::string(what) + " needs at least " +
                                                            std::to_string(minimum) + " samples, got " +
                                                            std::to_string(samples));
    }
}

std::vector<double> every_other(const std::vector<double>& x) {
    std::vector<double> out;
    out.reserve(x.size() / 2);
    for (std::size_t i = 0; i < x.size(); i += 2) out.push_back(x[i]);
    return out;
}

FunctionalValue norm_from_samples(const std::vector<double>& fine) {
    // `fine` holds 2S samples; the S-point rule uses every other one.
    const auto& k = simd::kernels();
    const std::vector<double> coarse = every_other(fine);
    const double q_coarse = two_pi / static_cast<double>(coarse.size()) * k.sum_squares(coarse);
    const double q_fine = two_pi / static_cast<double>(fine.size()) * k.sum_squares(fine);
    const double value = std::sqrt(q_coarse);
    return {FunctionalKind::NormL2, 0, value, Method::Quadrature, std::abs(std::sqrt(q_fine) - value)};
}

// Quartic through five samples of g on one cell (positions in [0, 1]), in
// barycentric form.
struct CellQuartic {
    std::array<double, 5> x;
    std::array<double, 5> y;
    std::array<double, 5> w;

    CellQuartic(const std::array<double, 5>& pos, const std::array<double, 5>& val) : x(pos), y(val) {
        for (std::size_t i = 0; i < 5; ++i) {
            double p = 1.0;
            for (std::size_t j = 0; j < 5; ++j) {
                if (j != i) p *= x[i] - x[j];
            }
            w[i] = 1.0 / p;
        }
    }

    double operator()(double s) const {
        double num = 0.0;
        double den = 0.0;
        for (std::size_t i = 0; i < 5; ++i) {
            if (s == x[i]) return y[i];
            const double c = w[i] / (s - x[i]);
            num += c * y[i];
            den += c;
        }
        return num / den;
    }
};

// integral of |g| over [0, 2pi] split into `cells` equal cells. Cells where g keeps
// its sign use 3-point Gauss-Legendre, sampled for all cells at once by shifted
// FFTs. Where g changes sign, the quartic through the cell's five samples is cut
// at its roots and |quartic| integrated piece by piece.
double abs_integral(const HarmonicSeries& g, std::size_t cells) {
    using boost::math::quadrature::gauss;
    using boost::math::tools::eps_tolerance;
    using boost::math::tools::toms748_solve;

    const double h = two_pi / static_cast<double>(cells);
    const double d = std::sqrt(15.0) / 10.0;
    const std::array<double, 3> node{0.5 - d, 0.5, 0.5 + d};
    const std::array<double, 3> weight{5.0 / 18.0, 8.0 / 18.0, 5.0 / 18.0};
    const std::array<double, 5> pos{0.0, node[0], node[1], node[2], 1.0};

    const std::vector<double> edge = sample_uniform(g, cells);
    std::array<std::vector<double>, 3> inner;
    for (std::size_t k = 0; k < 3; ++k) inner[k] = sample_uniform(g, cells, node[k] * h);

    double total = 0.0;
    for (std::size_t i = 0; i < cells; ++i) {
        const std::array<double, 5> val{edge[i], inner[0][i], inner[1][i], inner[2][i], edge[(i + 1) % cells]};
        bool crosses = false;
        for (std::size_t k = 0; k + 1 < val.size(); ++k) crosses = crosses || val[k] * val[k + 1] < 0.0;
        if (!crosses) {
            total += h * (weight[0] * std::abs(val[1]) + weight[1] * std::abs(val[2]) + weight[2] * std::abs(val[3]));
            continue;
        }
        const CellQuartic p(pos, val);
        auto abs_p = [&p](double s) { return std::abs(p(s)); };
        double left = 0.0;
        double cell = 0.0;
        for (std::size_t k = 0; k + 1 < val.size(); ++k) {
            if (!(val[k] * val[k + 1] < 0.0)) continue;
            std::uintmax_t iterations = 100;
            const auto [lo, hi] = toms748_solve(p, pos[k], pos[k + 1], val[k], val[k + 1], eps_tolerance<double>(), iterations);
            const double root = 0.5 * (lo + hi);
            cell += gauss<double, 7>::integrate(abs_p, left, root);
            left = root;
        }
        cell += gauss<double, 7>::integrate(abs_p, left, 1.0);
        total += h * cell;
    }
    return total;
}

}  // namespace

NormPair norm_parseval(const HarmonicSeries& series) {
    const auto& k = simd::kernels();
    const SeriesTail& tail = series.tail();
    const double energy = k.sum_squares(series.cos_coefficients()) + k.sum_squares(series.sin_coefficients());
    const double squared = two_pi * series.c0() * series.c0() + pi * (energy + tail.energy);
    // omitted frequencies are orthogonal to the kept ones: the error is the tail energy itself
    const double sq_err = pi * tail.energy_bound;
    const double norm = std::sqrt(squared);
    const double norm_err = norm > 0.0 ? sq_err / (2.0 * norm) : std::sqrt(sq_err);
    return {{FunctionalKind::NormL2Squared, 0, squared, Method::Parseval, sq_err},
            {FunctionalKind::NormL2, 0, norm, Method::Parseval, norm_err}};
}

FunctionalValue norm_quadrature(const Evaluator& f, int samples) {
    require_resolution(samples, 2, "trapezoid norm");
    const std::size_t fine_n = 2 * static_cast<std::size_t>(samples);
    std::vector<double> fine(fine_n);
    for (std::size_t i = 0; i < fine_n; ++i) fine[i] = f(two_pi * static_cast<double>(i) / static_cast<double>(fine_n));
    return norm_from_samples(fine);
}

FunctionalValue norm_quadrature(const HarmonicSeries& series, int samples) {
    require_resolution(samples, 2, "trapezoid norm");
    return norm_from_samples(sample_uniform(series, 2 * static_cast<std::size_t>(samples)));
}

FunctionalValue seminorm(const HarmonicSeries& series, int k_order) {
    if (k_order < 1) throw SplineError(ErrorKind::InvalidSpec, "semi-norm order must be >= 1");
    const auto freq = series.frequencies();
    const auto a = series.cos_coefficients();
    const auto b = series.sin_coefficients();
    double energy = 0.0;
    for (std::size_t i = 0; i < freq.size(); ++i) {
        energy += ipow(static_cast<double>(freq[i]), 2 * k_order) * (a[i] * a[i] + b[i] * b[i]);
    }
    const double value = std::sqrt(pi * energy);
    return {FunctionalKind::SemiNorm, k_order, value, Method::Parseval, 0.0};
}

FunctionalValue seminorm(const SplineSpec& spec, int k_order) {
    if (k_order < 1) throw SplineError(ErrorKind::InvalidSpec, "semi-norm order must be >= 1");
    const HarmonicSeries derivative = harmonic_series(spec, 1, k_order);
    const NormPair p = norm_parseval(derivative);
    return {FunctionalKind::SemiNorm, k_order, p.norm.value, Method::Parseval, p.norm.error_estimate};
}

FunctionalValue total_variation_derivative(const HarmonicSeries& derivative, int samples) {
    require_resolution(samples, 64, "derivative variation");
    const double fine = abs_integral(derivative, static_cast<std::size_t>(samples));
    const double coarse = abs_integral(derivative, static_cast<std::size_t>(samples) / 2);
    return {FunctionalKind::Variation, 0, fine, Method::Quadrature, std::abs(fine - coarse)};
}

FunctionalValue total_variation_derivative(const SplineSpec& spec, int samples) {
    if (spec.factor.r < 2) {
        throw SplineError(ErrorKind::UseDPartitionVariation,
                          "r = " + std::to_string(spec.factor.r) + " has no continuous derivative; use the partition sum");
    }
    return total_variation_derivative(harmonic_series(spec, 1, 1), samples);
}

FunctionalValue total_variation_partition(const Evaluator& f, int partition_size) {
    require_resolution(partition_size, 2, "partition variation");
    const auto P = static_cast<std::size_t>(partition_size);
    std::vector<double> v(P + 1);
    for (std::size_t i = 0; i <= P; ++i) v[i] = f(two_pi * static_cast<double>(i) / static_cast<double>(P));
    double fine = 0.0;
    for (std::size_t i = 1; i <= P; ++i) fine += std::abs(v[i] - v[i - 1]);
    double coarse = 0.0;
    for (std::size_t i = 2; i <= P; i += 2) coarse += std::abs(v[i] - v[i - 2]);
    return {FunctionalKind::Variation, 0, fine, Method::Partition, fine - coarse};
}

FunctionalValue total_variation_partition(const HarmonicSeries& series, int partition_size) {
    require_resolution(partition_size, 2, "partition variation");
    const std::vector<double> v = sample_uniform(series, static_cast<std::size_t>(partition_size));
    const auto& k = simd::kernels();
    const double fine = k.sum_abs_diff_periodic(v);
    const double coarse = v.size() % 2 == 0 ? k.sum_abs_diff_periodic(every_other(v)) : fine;
    return {FunctionalKind::Variation, 0, fine, Method::Partition, fine - coarse};
}

FunctionalValue arc_length(const HarmonicSeries& derivative, int samples) {
    require_resolution(samples, 64, "arc length");
    const std::vector<double> g = sample_uniform(derivative, static_cast<std::size_t>(samples));
    const auto& k = simd::kernels();
    const double fine = two_pi / static_cast<double>(g.size()) * k.sum_sqrt1p_sq(g);
    if (g.size() % 2 != 0) return {FunctionalKind::ArcLength, 0, fine, Method::Quadrature, 0.0};
    const std::vector<double> half = every_other(g);
    const double coarse = two_pi / static_cast<double>(half.size()) * k.sum_sqrt1p_sq(half);
    return {FunctionalKind::ArcLength, 0, fine, Method::Quadrature, std::abs(fine - coarse)};
}

FunctionalValue arc_length(const SplineSpec& spec, int samples) {
    if (spec.factor.r < 2) {
        throw SplineError(ErrorKind::UnsupportedForDegree,
                          "arc length needs a continuous derivative (r >= 2), got r = " + std::to_string(spec.factor.r));
    }
    return arc_length(harmonic_series(spec, 1, 1), samples);
}

std::string_view to_string(FunctionalKind kind) noexcept {
    switch (kind) {
        case FunctionalKind::NormL2: return "NormL2";
        case FunctionalKind::NormL2Squared: return "NormL2Squared";
        case FunctionalKind::SemiNorm: return "SemiNorm";
        case FunctionalKind::Variation: return "Variation";
        case FunctionalKind::ArcLength: return "ArcLength";
    }
    return "NormL2";
}

std::string_view to_string(Method method) noexcept {
    switch (method) {
        case Method::Parseval: return "Parseval";
        case Method::Quadrature: return "Quadrature";
        case Method::Partition: return "Partition";
    }
    return "Parseval";
}

}  // namespace trigspline
