// Compiled with -mavx2 -mfma; only reached through the dispatcher after a
// runtime CPU check.

#include <immintrin.h>

#include <algorithm>
#include <array>
#include <cmath>

#include "trigspline/simd/kernels.hpp"

namespace trigspline::simd {
namespace {

constexpr std::size_t lanes = 4;

[[gnu::always_inline]] inline double hsum(__m256d v) noexcept {
    const __m128d lo = _mm256_castpd256_pd128(v);
    const __m128d hi = _mm256_extractf128_pd(v, 1);
    const __m128d sum = _mm_add_pd(lo, hi);
    return _mm_cvtsd_f64(_mm_add_sd(sum, _mm_unpackhi_pd(sum, sum)));
}

[[gnu::always_inline]] inline void exact_phase(const double* x, double n, __m256d& c, __m256d& s) noexcept {
    alignas(32) std::array<double, lanes> cv{};
    alignas(32) std::array<double, lanes> sv{};
    for (std::size_t l = 0; l < lanes; ++l) {
        cv[l] = std::cos(n * x[l]);
        sv[l] = std::sin(n * x[l]);
    }
    c = _mm256_load_pd(cv.data());
    s = _mm256_load_pd(sv.data());
}

// Lanes run over evaluation points; every lane walks the same frequency list,
// so the gap branch is uniform across the vector.
void eval_harmonics_avx2(const HarmonicView& s, std::span<const double> t, std::span<double> out) {
    const std::size_t terms = s.freq.size();
    const std::size_t count = t.size();
    const std::size_t vec_end = count - count % lanes;

    __m256d wc[max_rotation_gap + 1];
    __m256d ws[max_rotation_gap + 1];

    for (std::size_t i = 0; i < vec_end; i += lanes) {
        const double* x = t.data() + i;
        for (std::int64_t d = 1; d <= max_rotation_gap; ++d) {
            exact_phase(x, static_cast<double>(d), wc[d], ws[d]);
        }
        __m256d acc = _mm256_setzero_pd();
        std::size_t k = 0;
        while (k < terms) {
            const std::size_t block_end = std::min(terms, k + anchor_stride);
            __m256d c;
            __m256d sn;
            exact_phase(x, static_cast<double>(s.freq[k]), c, sn);
            for (;;) {
                acc = _mm256_fmadd_pd(_mm256_set1_pd(s.a[k]), c, acc);
                acc = _mm256_fmadd_pd(_mm256_set1_pd(s.b[k]), sn, acc);
                if (++k == block_end) break;
                const std::int64_t gap = s.freq[k] - s.freq[k - 1];
                if (gap <= max_rotation_gap) {
                    const __m256d nc = _mm256_fmsub_pd(c, wc[gap], _mm256_mul_pd(sn, ws[gap]));
                    sn = _mm256_fmadd_pd(sn, wc[gap], _mm256_mul_pd(c, ws[gap]));
                    c = nc;
                } else {
                    exact_phase(x, static_cast<double>(s.freq[k]), c, sn);
                }
            }
        }
        _mm256_storeu_pd(out.data() + i, _mm256_add_pd(acc, _mm256_set1_pd(s.c0)));
    }
    if (vec_end < count) {
        detail::scalar_table.eval_harmonics(s, t.subspan(vec_end), out.subspan(vec_end));
    }
}

template <class Lane, class Tail>
[[gnu::always_inline]] inline double reduce(std::span<const double> x, Lane lane, Tail tail) noexcept {
    const std::size_t n = x.size();
    const double* p = x.data();
    __m256d acc0 = _mm256_setzero_pd();
    __m256d acc1 = _mm256_setzero_pd();
    std::size_t i = 0;
    for (; i + 2 * lanes <= n; i += 2 * lanes) {
        acc0 = lane(_mm256_loadu_pd(p + i), acc0);
        acc1 = lane(_mm256_loadu_pd(p + i + lanes), acc1);
    }
    for (; i + lanes <= n; i += lanes) acc0 = lane(_mm256_loadu_pd(p + i), acc0);
    double total = hsum(_mm256_add_pd(acc0, acc1));
    for (; i < n; ++i) total += tail(p[i]);
    return total;
}

// No namespace-scope AVX constants: static initialisation runs before the CPU check.
[[gnu::always_inline]] inline __m256d abs_mask() noexcept {
    return _mm256_castsi256_pd(_mm256_set1_epi64x(0x7fffffffffffffffLL));
}

double sum_squares_avx2(std::span<const double> x) {
    return reduce(
        x, [](__m256d v, __m256d acc) { return _mm256_fmadd_pd(v, v, acc); },
        [](double v) { return v * v; });
}

double sum_abs_avx2(std::span<const double> x) {
    return reduce(
        x, [](__m256d v, __m256d acc) { return _mm256_add_pd(acc, _mm256_and_pd(v, abs_mask())); },
        [](double v) { return std::abs(v); });
}

double sum_abs_diff_periodic_avx2(std::span<const double> x) {
    const std::size_t n = x.size();
    if (n == 0) return 0.0;
    const double* p = x.data();
    __m256d acc = _mm256_setzero_pd();
    std::size_t i = 0;
    for (; i + lanes + 1 <= n; i += lanes) {
        const __m256d d = _mm256_sub_pd(_mm256_loadu_pd(p + i + 1), _mm256_loadu_pd(p + i));
        acc = _mm256_add_pd(acc, _mm256_and_pd(d, abs_mask()));
    }
    double total = hsum(acc);
    for (; i + 1 < n; ++i) total += std::abs(p[i + 1] - p[i]);
    return total + std::abs(p[0] - p[n - 1]);
}

double sum_sqrt1p_sq_avx2(std::span<const double> x) {
    const __m256d one = _mm256_set1_pd(1.0);
    return reduce(
        x, [one](__m256d v, __m256d acc) { return _mm256_add_pd(acc, _mm256_sqrt_pd(_mm256_fmadd_pd(v, v, one))); },
        [](double v) { return std::sqrt(1.0 + v * v); });
}

}  // namespace

namespace detail {
const KernelTable avx2_table{
    Isa::Avx2,
    &eval_harmonics_avx2,
    &sum_squares_avx2,
    &sum_abs_avx2,
    &sum_abs_diff_periodic_avx2,
    &sum_sqrt1p_sq_avx2,
};
}  // namespace detail

}  // namespace trigspline::simd
