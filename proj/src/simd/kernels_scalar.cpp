#include <algorithm>
#include <array>
#include <cmath>

#include "trigspline/simd/kernels.hpp"

namespace trigspline::simd {
namespace {

void eval_harmonics_scalar(const HarmonicView& s, std::span<const double> t, std::span<double> out) {
    const std::size_t terms = s.freq.size();
    std::array<double, max_rotation_gap + 1> wc{};
    std::array<double, max_rotation_gap + 1> ws{};

    for (std::size_t i = 0; i < t.size(); ++i) {
        const double x = t[i];
        for (std::int64_t d = 1; d <= max_rotation_gap; ++d) {
            wc[d] = std::cos(static_cast<double>(d) * x);
            ws[d] = std::sin(static_cast<double>(d) * x);
        }
        double acc = 0.0;
        std::size_t k = 0;
        while (k < terms) {
            const std::size_t block_end = std::min(terms, k + anchor_stride);
            double c = std::cos(static_cast<double>(s.freq[k]) * x);
            double sn = std::sin(static_cast<double>(s.freq[k]) * x);
            for (;;) {
                acc += s.a[k] * c + s.b[k] * sn;
                if (++k == block_end) break;
                const std::int64_t gap = s.freq[k] - s.freq[k - 1];
                if (gap <= max_rotation_gap) {
                    const double nc = c * wc[gap] - sn * ws[gap];
                    sn = sn * wc[gap] + c * ws[gap];
                    c = nc;
                } else {
                    c = std::cos(static_cast<double>(s.freq[k]) * x);
                    sn = std::sin(static_cast<double>(s.freq[k]) * x);
                }
            }
        }
        out[i] = s.c0 + acc;
    }
}

double sum_squares_scalar(std::span<const double> x) {
    double acc = 0.0;
    for (double v : x) acc += v * v;
    return acc;
}

double sum_abs_scalar(std::span<const double> x) {
    double acc = 0.0;
    for (double v : x) acc += std::abs(v);
    return acc;
}

double sum_abs_diff_periodic_scalar(std::span<const double> x) {
    if (x.empty()) return 0.0;
    double acc = 0.0;
    for (std::size_t i = 0; i + 1 < x.size(); ++i) acc += std::abs(x[i + 1] - x[i]);
    return acc + std::abs(x.front() - x.back());
}

double sum_sqrt1p_sq_scalar(std::span<const double> x) {
    double acc = 0.0;
    for (double v : x) acc += std::sqrt(1.0 + v * v);
    return acc;
}

}  // namespace

namespace detail {
const KernelTable scalar_table{
    Isa::Scalar,
    &eval_harmonics_scalar,
    &sum_squares_scalar,
    &sum_abs_scalar,
    &sum_abs_diff_periodic_scalar,
    &sum_sqrt1p_sq_scalar,
};
}  // namespace detail

}  // namespace trigspline::simd
