#pragma once

namespace trigspline::detail {

/// zeta(s, q) = sum_{n>=0} (n + q)^-s for s > 1, q > 0.
[[nodiscard]] double hurwitz_zeta(double s, double q);

/// sum_{m>=m0} (m N + c)^-p, requires m0 N + c > 0.
[[nodiscard]] double shifted_power_sum(double p, int N, double c, long long m0);

/// sum_{m>=1} (-1)^m (m N + c)^-p, requires N + c > 0.
[[nodiscard]] double alternating_power_sum(double p, int N, double c);

}  // namespace trigspline::detail
