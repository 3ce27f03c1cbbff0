#include "trigspline/spline.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

#include "hurwitz.hpp"
#include "trigspline/error.hpp"

namespace trigspline {
namespace {

constexpr double inf = std::numeric_limits<double>::infinity();

bool is_power(const SplineSpec& spec) { return spec.factor.kind == FactorKind::PowerSignConstant; }

// Sign of block m: (-1)^{m(I1+I2)} for the power factor, (-1)^{m(r+1+I1+I2)} for sinc.
double block_sign(const SplineSpec& spec, long long m) {
    const int exponent = is_power(spec) ? spec.I1 + spec.I2 : spec.factor.r + 1 + spec.I1 + spec.I2;
    return (exponent % 2 != 0 && m % 2 != 0) ? -1.0 : 1.0;
}

// Extra (-1)^{1+r} on the mN - j branch, power factor only.
double low_branch_sign(const SplineSpec& spec) {
    if (!is_power(spec)) return 1.0;
    return (spec.factor.r + 1) % 2 != 0 ? -1.0 : 1.0;
}

// Integral majorant of sum_{m>M} A [|g2| (mN-j)^-(1+s) + |g3| (mN+j)^-(1+s)] * (mN -+ j)^0,
// i.e. A [|g2| (MN-j)^-s + |g3| (MN+j)^-s] / (N s). Infinite for s <= 0.
double tail_majorant(double A, const GammaVector& g, int N, int j, long long M, double s) {
    if (s <= 0.0) return inf;
    const double base = static_cast<double>(M) * N;
    return A * (std::abs(g.g2) * std::pow(base - j, -s) + std::abs(g.g3) * std::pow(base + j, -s)) / (N * s);
}

struct Block {
    double low = 0.0;   // signed summand of the mN - j branch
    double high = 0.0;  // signed summand of the mN + j branch
};

Block block_terms(const SplineSpec& spec, int j, long long m) {
    const double sign = block_sign(spec, m);
    const long long mn = m * spec.N;
    return {sign * low_branch_sign(spec) * spec.gamma.g2 * factor_value(spec.factor, mn - j),
            sign * spec.gamma.g3 * factor_value(spec.factor, mn + j)};
}

void check_singular(const Denominator& h) {
    if (!(std::abs(h.value) >= singular_rel_threshold * h.largest_summand) || h.largest_summand == 0.0) {
        throw SplineError(ErrorKind::NearSingularDenominator,
                          "h_" + std::to_string(h.j) + " = " + std::to_string(h.value) +
                              " is below the singularity threshold");
    }
}

Denominator closed_form_denominator(const SplineSpec& spec, int j) {
    const double p = spec.factor.r + 1.0;
    const int N = spec.N;
    const bool alternating = (spec.I1 + spec.I2) % 2 != 0;
    auto branch = [&](double c) {
        return alternating ? detail::alternating_power_sum(p, N, c) : detail::shifted_power_sum(p, N, c, 1);
    };
    Denominator h;
    h.j = j;
    h.value = spec.gamma.g1 * factor_value(spec.factor, j) +
              spec.factor.alpha * (low_branch_sign(spec) * spec.gamma.g2 * branch(-j) + spec.gamma.g3 * branch(j));
    const Block first = block_terms(spec, j, 1);
    h.largest_summand = std::max({std::abs(spec.gamma.g1 * factor_value(spec.factor, j)), std::abs(first.low),
                                  std::abs(first.high)});
    return h;
}

/// m-blocks to keep and the matching denominators.
struct Truncation {
    long long M = 0;
    std::vector<Denominator> h;
    bool converged = true;
};

// Partial sums of h_j over m = 1..M for all j at once.
class PartialDenominators {
public:
    explicit PartialDenominators(const SplineSpec& spec) : spec_(spec) {
        const int half = (spec.N - 1) / 2;
        h_.resize(static_cast<std::size_t>(half));
        for (int j = 1; j <= half; ++j) {
            auto& d = h_[static_cast<std::size_t>(j - 1)];
            d.j = j;
            d.value = spec.gamma.g1 * factor_value(spec.factor, j);
            d.largest_summand = std::abs(d.value);
        }
    }

    void add_block(long long m) {
        for (auto& d : h_) {
            const Block b = block_terms(spec_, d.j, m);
            d.value += b.low + b.high;
            d.largest_summand = std::max({d.largest_summand, std::abs(b.low), std::abs(b.high)});
            d.m_terms = m;
        }
    }

    [[nodiscard]] std::vector<Denominator>& values() { return h_; }

private:
    const SplineSpec& spec_;
    std::vector<Denominator> h_;
};

// Sup-norm bound on the omitted part of the q-th derivative series after M blocks.
double series_tail_bound(const SplineSpec& spec, const std::vector<Denominator>& h, long long M, int q) {
    if (spec.gamma.is_trig_polynomial_regime()) return 0.0;
    const double A = factor_majorant(spec.factor);
    const double s = spec.factor.r - q;
    double bound = 0.0;
    for (const auto& d : h) {
        bound += (2.0 / spec.N) * tail_majorant(A, spec.gamma, spec.N, d.j, M, s) / std::abs(d.value);
    }
    return bound;
}

Truncation choose_truncation(const SplineSpec& spec) {
    const TruncationPolicy& policy = spec.truncation;
    Truncation out;
    if (policy.mode == TruncationMode::ClosedFormZeta) {
        const int half = (spec.N - 1) / 2;
        for (int j = 1; j <= half; ++j) out.h.push_back(closed_form_denominator(spec, j));
        for (const auto& d : out.h) check_singular(d);
        if (spec.gamma.is_trig_polynomial_regime()) return out;
        // series terms: smallest M meeting the tolerance with the exact denominators
        long long M = 1;
        while (M < policy.m_max && series_tail_bound(spec, out.h, M, 0) >= policy.tail_tol) M = std::min(policy.m_max, 2 * M);
        long long lo = M / 2 + 1;
        while (lo < M) {
            const long long mid = lo + (M - lo) / 2;
            if (series_tail_bound(spec, out.h, mid, 0) < policy.tail_tol) M = mid; else lo = mid + 1;
        }
        out.M = M;
        out.converged = series_tail_bound(spec, out.h, M, 0) < policy.tail_tol;
        return out;
    }

    PartialDenominators partial(spec);
    if (spec.gamma.is_trig_polynomial_regime()) {
        out.h = std::move(partial.values());
        for (const auto& d : out.h) check_singular(d);
        return out;
    }
    if (policy.mode == TruncationMode::FixedTerms) {
        for (long long m = 1; m <= policy.fixed_terms; ++m) partial.add_block(m);
        out.M = policy.fixed_terms;
    } else {
        out.converged = false;
        for (long long m = 1; m <= policy.m_max; ++m) {
            partial.add_block(m);
            out.M = m;
            if (series_tail_bound(spec, partial.values(), m, 0) < policy.tail_tol) {
                out.converged = true;
                break;
            }
        }
    }
    out.h = std::move(partial.values());
    for (auto& d : out.h) {
        d.tail_bound = tail_majorant(factor_majorant(spec.factor), spec.gamma, spec.N, d.j, out.M, spec.factor.r);
        check_singular(d);
    }
    return out;
}

void check_derivative_order(const SplineSpec& spec, int q) {
    if (q < 0) throw SplineError(ErrorKind::InvalidSpec, "derivative order must be nonnegative");
    if (q > 0 && q > spec.max_derivative_order()) {
        throw SplineError(ErrorKind::DerivativeOrderTooHigh,
                          "derivative order " + std::to_string(q) + " exceeds r - 1 = " +
                              std::to_string(spec.max_derivative_order()));
    }
}

// (cos, sin) of q pi / 2, exact.
std::pair<double, double> quarter_turn(int q) {
    switch (q % 4) {
        case 0: return {1.0, 0.0};
        case 1: return {0.0, 1.0};
        case 2: return {-1.0, 0.0};
        default: return {0.0, -1.0};
    }
}

}  // namespace

Denominator denominator(const SplineSpec& spec, int j) {
    spec.validate();
    const int half = (spec.N - 1) / 2;
    if (j < 1 || j > half) {
        throw SplineError(ErrorKind::InvalidFrequency,
                          "j = " + std::to_string(j) + " outside 1.." + std::to_string(half));
    }
    const TruncationPolicy& policy = spec.truncation;
    if (policy.mode == TruncationMode::ClosedFormZeta) {
        Denominator h = closed_form_denominator(spec, j);
        check_singular(h);
        return h;
    }
    const double A = factor_majorant(spec.factor);
    Denominator h;
    h.j = j;
    h.value = spec.gamma.g1 * factor_value(spec.factor, j);
    h.largest_summand = std::abs(h.value);
    if (!spec.gamma.is_trig_polynomial_regime()) {
        const long long limit = policy.mode == TruncationMode::FixedTerms ? policy.fixed_terms : policy.m_max;
        h.converged = policy.mode == TruncationMode::FixedTerms;
        for (long long m = 1; m <= limit; ++m) {
            const Block b = block_terms(spec, j, m);
            h.value += b.low + b.high;
            h.largest_summand = std::max({h.largest_summand, std::abs(b.low), std::abs(b.high)});
            h.m_terms = m;
            h.tail_bound = tail_majorant(A, spec.gamma, spec.N, j, m, spec.factor.r);
            if (policy.mode == TruncationMode::Adaptive && h.tail_bound < policy.tail_tol) {
                h.converged = true;
                break;
            }
        }
    }
    check_singular(h);
    return h;
}

SplineProfile spline_profile(const SplineSpec& spec, int q) {
    spec.validate();
    check_derivative_order(spec, q);
    Truncation trunc = choose_truncation(spec);

    const int N = spec.N;
    const int half = (N - 1) / 2;
    const long long M = trunc.M;
    const double low_sign = low_branch_sign(spec);

    SplineProfile p;
    p.N = N;
    p.q = q;
    p.c0 = q == 0 ? 1.0 / N : 0.0;
    const auto count = static_cast<std::size_t>(half) * static_cast<std::size_t>(2 * M + 1);
    p.freq.reserve(count);
    p.amplitude.reserve(count);

    auto push = [&](long long n, double weight, const Denominator& h) {
        p.freq.push_back(n);
        p.amplitude.push_back((2.0 / N) * weight * ipow(static_cast<double>(n), q) / h.value);
    };
    // ascending order: 1..half, then per block mN - half..mN - 1, mN + 1..mN + half
    for (int j = 1; j <= half; ++j) {
        push(j, spec.gamma.g1 * factor_value(spec.factor, j), trunc.h[static_cast<std::size_t>(j - 1)]);
    }
    for (long long m = 1; m <= M; ++m) {
        const double sign = block_sign(spec, m);
        for (int j = half; j >= 1; --j) {
            const long long n = m * N - j;
            push(n, sign * low_sign * spec.gamma.g2 * factor_value(spec.factor, n), trunc.h[static_cast<std::size_t>(j - 1)]);
        }
        for (int j = 1; j <= half; ++j) {
            const long long n = m * N + j;
            push(n, sign * spec.gamma.g3 * factor_value(spec.factor, n), trunc.h[static_cast<std::size_t>(j - 1)]);
        }
    }

    SeriesTail& tail = p.tail;
    tail.m_terms = M;
    tail.converged = trunc.converged;
    tail.tail_bound = series_tail_bound(spec, trunc.h, M, q);
    if (!spec.gamma.is_trig_polynomial_regime()) {
        const double A = factor_majorant(spec.factor);
        const double s = 2.0 * (spec.factor.r - q) + 1.0;  // decay exponent of the squared-coefficient tail
        for (const auto& d : trunc.h) {
            const double scale = (2.0 / N) / d.value;
            if (spec.truncation.mode == TruncationMode::ClosedFormZeta) {
                const double pw = 2.0 * (spec.factor.r + 1 - q);
                tail.energy += scale * scale * spec.factor.alpha * spec.factor.alpha *
                               (spec.gamma.g2 * spec.gamma.g2 * detail::shifted_power_sum(pw, N, -d.j, M + 1) +
                                spec.gamma.g3 * spec.gamma.g3 * detail::shifted_power_sum(pw, N, d.j, M + 1));
            } else {
                const GammaVector sq{0.0, spec.gamma.g2 * spec.gamma.g2, spec.gamma.g3 * spec.gamma.g3};
                tail.energy_bound += scale * scale * tail_majorant(A * A, sq, N, d.j, M, s);
            }
        }
    }
    p.denominators = std::move(trunc.h);
    return p;
}

HarmonicSeries harmonic_series(const SplineProfile& profile, const GridSpec& anchor_grid, int k) {
    std::vector<double> unit(static_cast<std::size_t>(profile.N), 0.0);
    if (k < 1 || k > profile.N) {
        throw SplineError(ErrorKind::InvalidGrid,
                          "node index " + std::to_string(k) + " outside 1.." + std::to_string(profile.N));
    }
    unit[static_cast<std::size_t>(k - 1)] = 1.0;
    return interpolant_series(profile, anchor_grid, unit);
}

HarmonicSeries harmonic_series(const SplineSpec& spec, int k, int q) {
    return harmonic_series(spline_profile(spec, q), spec.interpolation_grid(), k);
}

HarmonicSeries interpolant_series(const SplineProfile& profile, const GridSpec& anchor_grid,
                                  std::span<const double> samples) {
    anchor_grid.validate();
    if (anchor_grid.N != profile.N) throw SplineError(ErrorKind::InvalidGrid, "anchor grid size differs from profile");
    if (samples.size() != static_cast<std::size_t>(profile.N)) {
        throw SplineError(ErrorKind::ArityMismatch, "expected " + std::to_string(profile.N) + " samples, got " +
                                                        std::to_string(samples.size()));
    }
    // n x_k mod 2 pi depends only on n mod N (grid 0) or n mod 2N (grid 1).
    const int period = anchor_grid.indicator == 0 ? profile.N : 2 * profile.N;
    std::vector<double> cs(static_cast<std::size_t>(period), 0.0);
    std::vector<double> sn(static_cast<std::size_t>(period), 0.0);
    for (int res = 0; res < period; ++res) {
        for (int k = 1; k <= profile.N; ++k) {
            const double f = samples[static_cast<std::size_t>(k - 1)];
            if (f == 0.0) continue;
            const double theta = anchor_grid.node_phase(res, k);
            cs[static_cast<std::size_t>(res)] += f * std::cos(theta);
            sn[static_cast<std::size_t>(res)] += f * std::sin(theta);
        }
    }
    double total = 0.0;
    for (double f : samples) total += f;

    // w cos(n t - theta + q pi/2) = w [cos(theta - q pi/2) cos nt + sin(theta - q pi/2) sin nt]
    const auto [cq, sq] = quarter_turn(profile.q);
    std::vector<double> a(profile.freq.size());
    std::vector<double> b(profile.freq.size());
    for (std::size_t i = 0; i < profile.freq.size(); ++i) {
        const auto res = static_cast<std::size_t>(profile.freq[i] % period);
        a[i] = profile.amplitude[i] * (cs[res] * cq + sn[res] * sq);
        b[i] = profile.amplitude[i] * (sn[res] * cq - cs[res] * sq);
    }
    double weight = 0.0;
    int nonzero = 0;
    for (double f : samples) {
        weight += std::abs(f);
        nonzero += f != 0.0 ? 1 : 0;
    }
    // The omitted part is sum_k f_k (tail of st_k); its energy is exact only for
    // a single node and otherwise bounded through the triangle inequality.
    SeriesTail tail = profile.tail;
    tail.tail_bound *= weight;
    tail.energy_bound *= weight * weight;
    if (nonzero <= 1) {
        tail.energy *= weight * weight;
    } else {
        tail.energy_bound += tail.energy * weight * weight;
        tail.energy = 0.0;
    }
    return HarmonicSeries(profile.c0 * total, profile.freq, std::move(a), std::move(b), profile.q, tail);
}

HarmonicSeries interpolant_series(const SplineSpec& spec, std::span<const double> samples, int q) {
    return interpolant_series(spline_profile(spec, q), spec.interpolation_grid(), samples);
}

double eval_interpolant(const SplineSpec& spec, std::span<const double> samples, double t) {
    return interpolant_series(spec, samples, 0)(t);
}

}  // namespace trigspline
