#include "hurwitz.hpp"

#include <gsl/gsl_errno.h>
#include <gsl/gsl_sf_zeta.h>

#include <cmath>
#include <mutex>
#include <string>

#include "trigspline/error.hpp"

namespace trigspline::detail {

double hurwitz_zeta(double s, double q) {
    static std::once_flag handler_off;
    std::call_once(handler_off, [] { gsl_set_error_handler_off(); });

    gsl_sf_result result;
    const int status = gsl_sf_hzeta_e(s, q, &result);
    if (status != GSL_SUCCESS && status != GSL_EUNDRFLW) {
        throw SplineError(ErrorKind::TruncationNotConverged,
                          "Hurwitz zeta(" + std::to_string(s) + ", " + std::to_string(q) +
                              ") failed: " + gsl_strerror(status));
    }
    return result.val;
}

double shifted_power_sum(double p, int N, double c, long long m0) {
    // (m N + c)^-p = N^-p (m + c/N)^-p, m = m0 + n
    return std::pow(static_cast<double>(N), -p) * hurwitz_zeta(p, static_cast<double>(m0) + c / N);
}

double alternating_power_sum(double p, int N, double c) {
    // even m = 2l: (2N)^-p (l + c/2N)^-p;  odd m = 2l-1: (2N)^-p (l - 1 + (N+c)/2N)^-p
    const double two_n = 2.0 * N;
    return std::pow(two_n, -p) * (hurwitz_zeta(p, 1.0 + c / two_n) - hurwitz_zeta(p, (N + c) / two_n));
}

}  // namespace trigspline::detail
