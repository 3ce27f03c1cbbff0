#include "trigspline/analysis.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <numeric>

#include "trigspline/error.hpp"
#include "trigspline/harmonic_series.hpp"
#include "trigspline/spline.hpp"

namespace trigspline {
namespace {

constexpr double nan = std::numeric_limits<double>::quiet_NaN();
constexpr double half_pi = std::numbers::pi / 2.0;

double norm_squared(const SplineSpec& spec) { return norm_parseval(harmonic_series(spec, 1, 0)).squared.value; }

DegreeScan scan_degrees(SplineSpec spec, std::vector<int> degrees, double limit) {
    DegreeScan scan;
    scan.degrees = std::move(degrees);
    for (int r : scan.degrees) {
        spec.factor.r = r;
        scan.values.push_back(norm_squared(spec));
    }
    scan.increasing = scan.decreasing = scan.below_limit = scan.above_limit = true;
    for (std::size_t i = 0; i < scan.values.size(); ++i) {
        if (i > 0) {
            scan.increasing = scan.increasing && scan.values[i] > scan.values[i - 1];
            scan.decreasing = scan.decreasing && scan.values[i] < scan.values[i - 1];
        }
        scan.below_limit = scan.below_limit && scan.values[i] < limit;
        scan.above_limit = scan.above_limit && scan.values[i] > limit;
    }
    return scan;
}

}  // namespace

std::vector<int> default_table_degrees() { return {1, 2, 3, 4, 5, 6, 7, 8, 50}; }

double NormTable::at(int I1, int I2, int r) const {
    const auto row = std::find(grids.begin(), grids.end(), std::pair{I1, I2});
    const auto col = std::find(degrees.begin(), degrees.end(), r);
    if (row == grids.end() || col == degrees.end()) {
        throw SplineError(ErrorKind::InvalidSpec, "no table cell for the requested grid pair / degree");
    }
    return cells[static_cast<std::size_t>(row - grids.begin())][static_cast<std::size_t>(col - degrees.begin())];
}

NormTable reproduce_norm_table(const GammaVector& gamma, int N, std::span<const int> degrees,
                               const TruncationPolicy& truncation, FactorKind factor, double alpha) {
    GridSpec{N, 0}.validate();
    NormTable table;
    table.gamma = gamma;
    table.factor = factor;
    table.N = N;
    table.alpha = alpha;
    table.truncation = truncation;
    table.degrees.assign(degrees.begin(), degrees.end());
    for (const auto& [I1, I2] : table.grids) {
        std::vector<double> row;
        for (int r : table.degrees) {
            SplineSpec spec;
            spec.I1 = I1;
            spec.I2 = I2;
            spec.gamma = gamma;
            spec.factor = {factor, alpha, r};
            spec.N = N;
            spec.truncation = truncation;
            row.push_back(norm_squared(spec));
        }
        table.cells.push_back(std::move(row));
    }
    return table;
}

std::string_view to_string(SweepFunctional f) noexcept {
    switch (f) {
        case SweepFunctional::NormL2Squared: return "norm2";
        case SweepFunctional::NormL2: return "norm";
        case SweepFunctional::SemiNorm: return "seminorm";
        case SweepFunctional::Variation: return "variation";
        case SweepFunctional::ArcLength: return "arclength";
    }
    return "norm2";
}

SweepFunctional parse_sweep_functional(std::string_view name) {
    for (auto f : {SweepFunctional::NormL2Squared, SweepFunctional::NormL2, SweepFunctional::SemiNorm,
                   SweepFunctional::Variation, SweepFunctional::ArcLength}) {
        if (name == to_string(f)) return f;
    }
    throw SplineError(ErrorKind::InvalidSpec, "unknown functional '" + std::string(name) + "'");
}

std::vector<double> alpha_grid(int steps, double lo, double hi) {
    if (steps < 2 || !(hi > lo)) throw SplineError(ErrorKind::InvalidSpec, "alpha grid needs >= 2 steps and lo < hi");
    std::vector<double> out(static_cast<std::size_t>(steps));
    for (int i = 0; i < steps; ++i) out[static_cast<std::size_t>(i)] = lo + (hi - lo) * i / (steps - 1);
    return out;
}

FunctionalValue evaluate_functional(const SplineSpec& spec, SweepFunctional functional, const SweepOptions& options) {
    switch (functional) {
        case SweepFunctional::NormL2Squared: return norm_parseval(harmonic_series(spec, 1, 0)).squared;
        case SweepFunctional::NormL2: return norm_parseval(harmonic_series(spec, 1, 0)).norm;
        case SweepFunctional::SemiNorm:
            return seminorm(spec, options.seminorm_order > 0 ? options.seminorm_order : (spec.factor.r + 1) / 2);
        case SweepFunctional::Variation: return total_variation_derivative(spec, options.samples);
        case SweepFunctional::ArcLength: return arc_length(spec, options.samples);
    }
    return {};
}

std::vector<std::size_t> local_minima(std::span<const double> values, const std::vector<bool>& valid,
                                      std::span<const double> errors) {
    auto noise = [&](std::size_t i, std::size_t j) {
        const double e = errors.empty() ? 0.0 : errors[i] + errors[j];
        return e + 1e-12 * std::max(1.0, std::abs(values[i]));
    };
    std::vector<std::size_t> out;
    for (std::size_t i = 1; i + 1 < values.size(); ++i) {
        if (!valid[i - 1] || !valid[i] || !valid[i + 1]) continue;
        const double v = values[i];
        if (!(v < values[i - 1] - noise(i, i - 1))) continue;
        if (values[i + 1] - v > noise(i, i + 1)) {
            out.push_back(i);
        } else if (std::abs(values[i + 1] - v) <= noise(i, i + 1)) {
            // plateau of equal samples: report its first point once the curve rises again
            std::size_t j = i + 1;
            while (j + 1 < values.size() && valid[j + 1] && std::abs(values[j + 1] - v) <= noise(i, j + 1)) ++j;
            if (j + 1 < values.size() && valid[j + 1] && values[j + 1] - v > noise(i, j + 1)) out.push_back(i);
        }
    }
    return out;
}

SweepCurve sweep_alpha(const SplineSpec& spec_template, std::span<const double> alphas, SweepFunctional functional,
                       const SweepOptions& options) {
    if (alphas.size() < 8) throw SplineError(ErrorKind::InvalidSpec, "alpha sweep needs at least 8 points");
    for (std::size_t i = 0; i < alphas.size(); ++i) {
        if (!(alphas[i] > 0.0 && alphas[i] < half_pi)) {
            throw SplineError(ErrorKind::InvalidSpec, "alpha sweep must stay inside (0, pi/2)");
        }
        if (i > 0 && !(alphas[i] > alphas[i - 1])) {
            throw SplineError(ErrorKind::InvalidSpec, "alpha sweep must be strictly increasing");
        }
    }
    SplineSpec probe = spec_template;
    probe.factor.alpha = alphas.front();
    probe.validate();

    SweepCurve curve;
    curve.functional = functional;
    curve.spec = spec_template;
    curve.alphas.assign(alphas.begin(), alphas.end());
    curve.values.assign(alphas.size(), nan);
    curve.valid.assign(alphas.size(), false);
    curve.errors.assign(alphas.size(), 0.0);

    auto estimate_at = [&](double alpha) {
        SplineSpec spec = spec_template;
        spec.factor.alpha = alpha;
        return evaluate_functional(spec, functional, options);
    };
    auto value_at = [&](double alpha) { return estimate_at(alpha).value; };
    // tail bookkeeping uses the q = 0 series of every sampled alpha; returns its bound
    auto record_tail = [&](double alpha) {
        SplineSpec spec = spec_template;
        spec.factor.alpha = alpha;
        const SeriesTail tail = spline_profile(spec, 0).tail;
        curve.max_tail_bound = std::max(curve.max_tail_bound, tail.tail_bound);
        curve.all_converged = curve.all_converged && tail.converged;
        return tail.tail_bound;
    };

    for (std::size_t i = 0; i < alphas.size(); ++i) {
        try {
            const FunctionalValue fv = estimate_at(alphas[i]);
            curve.values[i] = fv.value;
            curve.errors[i] = fv.error_estimate;
            curve.valid[i] = true;
            // truncated denominators perturb the value by about tail_bound relative
            curve.errors[i] += record_tail(alphas[i]) * std::max(1.0, std::abs(fv.value));
        } catch (const SplineError& e) {
            if (!is_numeric(e.kind())) throw;
            curve.notes.push_back("alpha=" + std::to_string(alphas[i]) + ": " + e.what());
        }
    }

    for (std::size_t i : local_minima(curve.values, curve.valid, curve.errors)) {
        SweepMinimum m{alphas[i], curve.values[i], i};
        if (options.refine_minima) {
            auto guarded = [&](double alpha) {
                try {
                    return value_at(alpha);
                } catch (const SplineError& e) {
                    if (!is_numeric(e.kind())) throw;
                    return std::numeric_limits<double>::infinity();
                }
            };
            const auto [a_star, v_star] = golden_section_minimize(guarded, alphas[i - 1], alphas[i + 1],
                                                                  options.golden_tolerance,
                                                                  options.golden_max_iterations);
            if (v_star <= m.value) {
                m.alpha = a_star;
                m.value = v_star;
            }
        }
        curve.minima.push_back(m);
    }

    if (spec_template.factor.kind == FactorKind::SincPower) {
        try {
            curve.reference = value_at(std::numbers::pi / spec_template.N);
        } catch (const SplineError& e) {
            if (!is_numeric(e.kind())) throw;
        }
    }
    return curve;
}

CoincidenceReport coincidence_check(const SplineSpec& spec_template, DegreeParity parity,
                                    std::span<const int> multipliers, int samples, double tolerance) {
    if (samples < 2) throw SplineError(ErrorKind::InvalidResolution, "coincidence check needs >= 2 samples");
    CoincidenceReport report;
    report.parity = parity;
    report.N = spec_template.N;
    report.r = spec_template.factor.r;
    report.gamma = spec_template.gamma;
    report.tolerance = tolerance;

    SplineSpec base = spec_template;
    base.I1 = 0;
    base.I2 = parity == DegreeParity::Odd ? 0 : 1;
    base.factor.kind = FactorKind::SincPower;

    for (int p : multipliers) {
        const double alpha = p * std::numbers::pi / base.N;
        const std::string tag = "p=" + std::to_string(p) + ": ";
        if (std::gcd(std::abs(p), base.N) != 1) {
            report.rejected.push_back(tag + "not coprime with N");
        } else if (parity == DegreeParity::Even && p % 2 == 0) {
            report.rejected.push_back(tag + "even multiplier (even degree uses alpha = (2k+1) pi / N)");
        } else if (!(alpha > 0.0 && alpha < half_pi)) {
            report.rejected.push_back(tag + "alpha outside (0, pi/2)");
        } else {
            report.multipliers.push_back(p);
            report.alphas.push_back(alpha);
        }
    }

    const auto S = static_cast<std::size_t>(samples);
    std::vector<std::vector<double>> curves;
    for (double alpha : report.alphas) {
        SplineSpec spec = base;
        spec.factor.alpha = alpha;
        curves.push_back(sample_uniform(harmonic_series(spec, 1, 0), S));
    }
    auto max_dev = [](const std::vector<double>& x, const std::vector<double>& y) {
        double d = 0.0;
        for (std::size_t i = 0; i < x.size(); ++i) d = std::max(d, std::abs(x[i] - y[i]));
        return d;
    };
    for (std::size_t i = 0; i < curves.size(); ++i) {
        for (std::size_t j = i + 1; j < curves.size(); ++j) {
            const double d = max_dev(curves[i], curves[j]);
            report.pairs.push_back({report.alphas[i], report.alphas[j], d, d <= tolerance});
            report.max_pairwise = std::max(report.max_pairwise, d);
        }
    }

    SplineSpec polynomial = base;
    polynomial.gamma = GammaVector{};
    polynomial.factor = {FactorKind::PowerSignConstant, 1.0, base.factor.r};
    if (polynomial.truncation.mode == TruncationMode::ClosedFormZeta) polynomial.truncation.mode = TruncationMode::Adaptive;
    const std::vector<double> reference = sample_uniform(harmonic_series(polynomial, 1, 0), S);
    for (std::size_t i = 0; i < curves.size(); ++i) {
        const double d = max_dev(curves[i], reference);
        report.versus_polynomial.push_back({report.alphas[i], 0.0, d, d <= tolerance});
        report.max_versus_polynomial = std::max(report.max_versus_polynomial, d);
    }
    return report;
}

LimitReport limit_check(const GammaVector& gamma, int N, FactorKind factor, int I1, int I2,
                        const TruncationPolicy& truncation) {
    LimitReport report;
    report.gamma = gamma;
    report.N = N;
    report.factor = factor;
    report.I1 = I1;
    report.I2 = I2;
    report.exact = two_pi / N;

    SplineSpec spec;
    spec.I1 = I1;
    spec.I2 = I2;
    spec.gamma = gamma;
    spec.N = N;
    spec.truncation = truncation;
    spec.factor = {factor, factor == FactorKind::SincPower ? std::numbers::pi / N : 1.0, 50};
    spec.validate();
    report.value = norm_squared(spec);
    report.deviation = std::abs(report.value - report.exact);
    report.odd = scan_degrees(spec, {1, 3, 5, 7}, report.exact);
    report.even = scan_degrees(spec, {2, 4, 6, 8}, report.exact);
    return report;
}

}  // namespace trigspline
