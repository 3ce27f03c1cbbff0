#pragma once

// Data-parallel inner loops shared by series evaluation and the quadrature
// functionals. Every kernel has a portable scalar reference; wider variants
// are selected at runtime from the host CPU features.

#include <cstddef>
#include <cstdint>
#include <span>
#include <string_view>

namespace trigspline {

/// Read-only view of a harmonic series in structure-of-arrays layout:
///   f(t) = c0 + sum_k a[k] cos(freq[k] t) + b[k] sin(freq[k] t)
/// Frequencies are positive and strictly increasing.
struct HarmonicView {
    double c0 = 0.0;
    std::span<const std::int64_t> freq;
    std::span<const double> a;
    std::span<const double> b;
};

namespace simd {

enum class Isa { Scalar, Avx2 };

/// Consecutive frequency gaps up to this size advance the phase by a cached
/// rotation; larger gaps re-anchor with an exact sincos.
inline constexpr std::int64_t max_rotation_gap = 8;
/// Terms between exact re-anchors of the rotation recurrence.
inline constexpr std::size_t anchor_stride = 256;

struct KernelTable {
    Isa isa;
    /// out[i] = f(t[i]); t and out have equal length.
    void (*eval_harmonics)(const HarmonicView& series, std::span<const double> t, std::span<double> out);
    /// sum x_i^2
    double (*sum_squares)(std::span<const double> x);
    /// sum |x_i|
    double (*sum_abs)(std::span<const double> x);
    /// sum |x_{i+1} - x_i| with x_n = x_0 (closed periodic partition)
    double (*sum_abs_diff_periodic)(std::span<const double> x);
    /// sum sqrt(1 + x_i^2)
    double (*sum_sqrt1p_sq)(std::span<const double> x);
};

[[nodiscard]] bool isa_supported(Isa isa) noexcept;

/// Kernel table for a specific ISA, or nullptr when it is not compiled in
/// or not supported by the running CPU.
[[nodiscard]] const KernelTable* kernels_for(Isa isa) noexcept;

/// Widest supported table. TRIGSPLINE_ISA=scalar in the environment forces
/// the reference kernels.
[[nodiscard]] const KernelTable& kernels() noexcept;

[[nodiscard]] std::string_view to_string(Isa isa) noexcept;

namespace detail {
extern const KernelTable scalar_table;
#if defined(TRIGSPLINE_HAVE_AVX2)
extern const KernelTable avx2_table;
#endif
}  // namespace detail

}  // namespace simd
}  // namespace trigspline
