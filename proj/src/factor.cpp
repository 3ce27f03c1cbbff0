#include "trigspline/factor.hpp"

#include <cmath>
#include <string>

#include "trigspline/error.hpp"

namespace trigspline {

void FactorSpec::validate() const {
    if (!std::isfinite(alpha) || alpha <= 0.0) {
        throw SplineError(ErrorKind::InvalidSpec, "alpha must be positive, got " + std::to_string(alpha));
    }
    if (r < 0) throw SplineError(ErrorKind::InvalidSpec, "r must be nonnegative");
}

double factor_value(const FactorSpec& factor, long long k) {
    if (k < 1) {
        throw SplineError(ErrorKind::InvalidFrequency,
                          "convergence factor needs k >= 1, got " + std::to_string(k));
    }
    const double kd = static_cast<double>(k);
    switch (factor.kind) {
        case FactorKind::PowerSignConstant:
            return factor.alpha / ipow(kd, factor.r + 1);
        case FactorKind::SincPower: {
            const double x = factor.alpha * kd;
            const double sinc = x == 0.0 ? 1.0 : std::sin(x) / x;
            return ipow(sinc, factor.r + 1);
        }
    }
    return 0.0;
}

double factor_majorant(const FactorSpec& factor) noexcept {
    switch (factor.kind) {
        case FactorKind::PowerSignConstant: return factor.alpha;
        case FactorKind::SincPower: return 1.0 / ipow(factor.alpha, factor.r + 1);
    }
    return 0.0;
}

std::string_view to_string(FactorKind kind) noexcept {
    return kind == FactorKind::PowerSignConstant ? "PowerSignConstant" : "SincPower";
}

FactorKind parse_factor_kind(std::string_view name) {
    if (name == "power" || name == "PowerSignConstant" || name == "sigma0") {
        return FactorKind::PowerSignConstant;
    }
    if (name == "sinc" || name == "SincPower" || name == "sigma") return FactorKind::SincPower;
    throw SplineError(ErrorKind::InvalidSpec, "unknown factor kind '" + std::string(name) + "'");
}

}  // namespace trigspline
