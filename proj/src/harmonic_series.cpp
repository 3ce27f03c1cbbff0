#include "trigspline/harmonic_series.hpp"

#include <fftw3.h>

#include <cmath>
#include <complex>
#include <memory>
#include <mutex>
#include <string>

#include "trigspline/error.hpp"

namespace trigspline {

HarmonicSeries::HarmonicSeries(double c0, std::vector<std::int64_t> freq, std::vector<double> a,
                               std::vector<double> b, int derivative_order, SeriesTail tail)
    : c0_(c0), freq_(std::move(freq)), a_(std::move(a)), b_(std::move(b)),
      derivative_order_(derivative_order), tail_(tail) {
    if (a_.size() != freq_.size() || b_.size() != freq_.size()) {
        throw SplineError(ErrorKind::ArityMismatch, "coefficient arrays differ in length from frequencies");
    }
    for (std::size_t i = 0; i < freq_.size(); ++i) {
        if (freq_[i] < 1 || (i > 0 && freq_[i] <= freq_[i - 1])) {
            throw SplineError(ErrorKind::InvalidFrequency,
                              "frequencies must be positive and strictly increasing (index " +
                                  std::to_string(i) + ")");
        }
    }
}

double HarmonicSeries::operator()(double t) const {
    double out = 0.0;
    simd::kernels().eval_harmonics(view(), std::span<const double>(&t, 1), std::span<double>(&out, 1));
    return out;
}

void HarmonicSeries::evaluate(std::span<const double> t, std::span<double> out) const {
    if (t.size() != out.size()) throw SplineError(ErrorKind::ArityMismatch, "output span size differs from input");
    simd::kernels().eval_harmonics(view(), t, out);
}

std::vector<double> HarmonicSeries::evaluate(std::span<const double> t) const {
    std::vector<double> out(t.size());
    evaluate(t, out);
    return out;
}

HarmonicSeries HarmonicSeries::scaled(double factor) const {
    HarmonicSeries copy = *this;
    copy.c0_ *= factor;
    for (double& v : copy.a_) v *= factor;
    for (double& v : copy.b_) v *= factor;
    const double af = std::abs(factor);
    copy.tail_.tail_bound *= af;
    copy.tail_.energy *= factor * factor;
    copy.tail_.energy_bound *= factor * factor;
    return copy;
}

namespace {

struct FftwFree {
    void operator()(void* p) const noexcept { fftw_free(p); }
};

// Planner calls are not thread-safe in FFTW; execution is.
std::mutex& planner_mutex() {
    static std::mutex m;
    return m;
}

}  // namespace

std::vector<double> sample_uniform(const HarmonicSeries& series, std::size_t samples, double offset) {
    if (samples < 1) throw SplineError(ErrorKind::InvalidResolution, "need at least one sample");
    const auto S = static_cast<std::int64_t>(samples);

    std::unique_ptr<fftw_complex[], FftwFree> bins(
        static_cast<fftw_complex*>(fftw_malloc(sizeof(fftw_complex) * samples)));
    for (std::size_t i = 0; i < samples; ++i) bins[i][0] = bins[i][1] = 0.0;

    // f(t_s) = c0 + Re sum_n (a_n - i b_n) exp(i n offset) exp(2 pi i n s / S), and
    // the last factor only depends on n mod S.
    const auto freq = series.frequencies();
    const auto a = series.cos_coefficients();
    const auto b = series.sin_coefficients();
    for (std::size_t k = 0; k < freq.size(); ++k) {
        const auto bin = static_cast<std::size_t>(freq[k] % S);
        if (offset == 0.0) {
            bins[bin][0] += a[k];
            bins[bin][1] -= b[k];
        } else {
            const double phase = static_cast<double>(freq[k]) * offset;
            const double c = std::cos(phase);
            const double s = std::sin(phase);
            bins[bin][0] += a[k] * c + b[k] * s;
            bins[bin][1] += a[k] * s - b[k] * c;
        }
    }

    fftw_plan plan;
    {
        std::lock_guard lock(planner_mutex());
        plan = fftw_plan_dft_1d(static_cast<int>(samples), bins.get(), bins.get(), FFTW_BACKWARD, FFTW_ESTIMATE);
    }
    fftw_execute(plan);
    {
        std::lock_guard lock(planner_mutex());
        fftw_destroy_plan(plan);
    }

    std::vector<double> out(samples);
    for (std::size_t i = 0; i < samples; ++i) out[i] = series.c0() + bins[i][0];
    return out;
}

}  // namespace trigspline
