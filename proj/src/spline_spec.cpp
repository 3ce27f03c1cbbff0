#include "trigspline/spline_spec.hpp"

#include <cmath>
#include <string>

#include "trigspline/error.hpp"

namespace trigspline {

void TruncationPolicy::validate() const {
    if (!(tail_tol > 0.0) || !std::isfinite(tail_tol)) {
        throw SplineError(ErrorKind::InvalidSpec, "tail_tol must be positive");
    }
    if (m_max < 1) throw SplineError(ErrorKind::InvalidSpec, "m_max must be >= 1");
    if (mode == TruncationMode::FixedTerms && fixed_terms < 0) {
        throw SplineError(ErrorKind::InvalidSpec, "fixed_terms must be >= 0");
    }
}

std::string_view to_string(TruncationMode mode) noexcept {
    switch (mode) {
        case TruncationMode::Adaptive: return "adaptive";
        case TruncationMode::ClosedFormZeta: return "zeta";
        case TruncationMode::FixedTerms: return "fixed";
    }
    return "adaptive";
}

TruncationMode parse_truncation_mode(std::string_view name) {
    if (name == "adaptive" || name == "Adaptive") return TruncationMode::Adaptive;
    if (name == "zeta" || name == "ClosedFormZeta") return TruncationMode::ClosedFormZeta;
    if (name == "fixed" || name == "FixedTerms") return TruncationMode::FixedTerms;
    throw SplineError(ErrorKind::InvalidSpec, "unknown truncation mode '" + std::string(name) + "'");
}

void SplineSpec::validate() const {
    GridSpec{N, I1}.validate();
    GridSpec{N, I2}.validate();
    factor.validate();
    truncation.validate();
    if (!std::isfinite(gamma.g1) || !std::isfinite(gamma.g2) || !std::isfinite(gamma.g3)) {
        throw SplineError(ErrorKind::InvalidSpec, "gamma components must be finite");
    }
    if (truncation.mode == TruncationMode::ClosedFormZeta &&
        factor.kind != FactorKind::PowerSignConstant) {
        throw SplineError(ErrorKind::InvalidSpec,
                          "closed-form zeta truncation is only available for the power factor");
    }
    if (truncation.mode == TruncationMode::ClosedFormZeta && factor.r < 1) {
        throw SplineError(ErrorKind::InvalidSpec, "closed-form zeta truncation needs r >= 1");
    }
}

}  // namespace trigspline
