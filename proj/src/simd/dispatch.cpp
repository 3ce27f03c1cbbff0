#include <cstdlib>
#include <string_view>

#include "trigspline/simd/kernels.hpp"

namespace trigspline::simd {

bool isa_supported(Isa isa) noexcept {
    switch (isa) {
        case Isa::Scalar: return true;
        case Isa::Avx2:
#if defined(TRIGSPLINE_HAVE_AVX2)
            return __builtin_cpu_supports("avx2") && __builtin_cpu_supports("fma");
#else
            return false;
#endif
    }
    return false;
}

const KernelTable* kernels_for(Isa isa) noexcept {
    if (!isa_supported(isa)) return nullptr;
    switch (isa) {
        case Isa::Scalar: return &detail::scalar_table;
        case Isa::Avx2:
#if defined(TRIGSPLINE_HAVE_AVX2)
            return &detail::avx2_table;
#else
            return nullptr;
#endif
    }
    return nullptr;
}

namespace {

const KernelTable& select() noexcept {
    if (const char* forced = std::getenv("TRIGSPLINE_ISA"); forced != nullptr) {
        if (std::string_view(forced) == "scalar") return detail::scalar_table;
    }
    if (const KernelTable* t = kernels_for(Isa::Avx2)) return *t;
    return detail::scalar_table;
}

}  // namespace

const KernelTable& kernels() noexcept {
    static const KernelTable& table = select();
    return table;
}

std::string_view to_string(Isa isa) noexcept {
    return isa == Isa::Avx2 ? "avx2" : "scalar";
}

}  // namespace trigspline::simd
