#pragma once
// Independent reference implementations used only by the tests. They follow the
// printed spline formulas literally (double loop over j and m, std::cos per term)
// and share no code with the library.

#include <cmath>
#include <functional>
#include <numbers>

namespace oracle {

inline constexpr double pi = std::numbers::pi;

struct Params {
    int I1 = 0;
    int I2 = 0;
    double g1 = 1.0, g2 = 1.0, g3 = 1.0;
    bool sinc = true;
    double alpha = pi / 7;
    int r = 3;
    int N = 7;
    long long M = 20;
};

inline double factor(const Params& p, long long n) {
    if (p.sinc) {
        const double x = p.alpha * static_cast<double>(n);
        return std::pow(std::sin(x) / x, p.r + 1);
    }
    return p.alpha * std::pow(static_cast<double>(n), -(p.r + 1));
}

inline double sign(long long e) { return e % 2 == 0 ? 1.0 : -1.0; }

inline double block_sign(const Params& p, long long m) {
    return p.sinc ? sign(m * (p.r + 1 + p.I1 + p.I2)) : sign(m * (p.I1 + p.I2));
}

inline double medium_sign(const Params& p) { return p.sinc ? 1.0 : sign(1 + p.r); }

inline double node(int N, int I, int k) {
    return I == 0 ? 2.0 * pi * (k - 1) / N : pi * (2 * k - 1) / N;
}

inline double h(const Params& p, int j) {
    double s = p.g1 * factor(p, j);
    for (long long m = 1; m <= p.M; ++m) {
        s += block_sign(p, m) * (p.g2 * medium_sign(p) * factor(p, m * p.N - j) + p.g3 * factor(p, m * p.N + j));
    }
    return s;
}

/// q-th derivative of the k-th fundamental spline at t.
inline double st(const Params& p, int k, double t, int q = 0) {
    const double x = t - node(p.N, p.I2, k);
    const double shift = q * pi / 2;
    auto term = [&](long long n) { return std::pow(static_cast<double>(n), q) * std::cos(n * x + shift); };
    double sum = 0.0;
    for (int j = 1; j <= (p.N - 1) / 2; ++j) {
        double c = p.g1 * factor(p, j) * term(j);
        for (long long m = 1; m <= p.M; ++m) {
            c += block_sign(p, m) * (p.g2 * medium_sign(p) * factor(p, m * p.N - j) * term(m * p.N - j) +
                                     p.g3 * factor(p, m * p.N + j) * term(m * p.N + j));
        }
        sum += c / h(p, j);
    }
    return ((q == 0 ? 1.0 : 0.0) + 2.0 * sum) / p.N;
}

/// Composite Simpson rule on [a, b] with an even number of panels.
inline double simpson(const std::function<double(double)>& f, double a, double b, int panels) {
    const double dx = (b - a) / panels;
    double s = f(a) + f(b);
    for (int i = 1; i < panels; ++i) s += (i % 2 == 1 ? 4.0 : 2.0) * f(a + i * dx);
    return s * dx / 3.0;
}

}  // namespace oracle
