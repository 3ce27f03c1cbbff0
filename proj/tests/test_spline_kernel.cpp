#include <cmath>
#include <numbers>
#include <random>
#include <vector>

#include "doctest.h"
#include "oracle.hpp"
#include "trigspline/error.hpp"
#include "trigspline/factor.hpp"
#include "trigspline/grid.hpp"
#include "trigspline/harmonic_series.hpp"
#include "trigspline/simd/kernels.hpp"
#include "trigspline/spline.hpp"

using namespace trigspline;
using std::numbers::pi;

namespace {

SplineSpec make_spec(FactorKind kind, int r, int I1 = 0, int I2 = 0, GammaVector g = {}, double alpha = pi / 7) {
    SplineSpec s;
    s.I1 = I1;
    s.I2 = I2;
    s.gamma = g;
    s.factor = {kind, alpha, r};
    return s;
}

oracle::Params to_oracle(const SplineSpec& s, long long M) {
    oracle::Params p;
    p.I1 = s.I1;
    p.I2 = s.I2;
    p.g1 = s.gamma.g1;
    p.g2 = s.gamma.g2;
    p.g3 = s.gamma.g3;
    p.sinc = s.factor.kind == FactorKind::SincPower;
    p.alpha = s.factor.alpha;
    p.r = s.factor.r;
    p.N = s.N;
    p.M = M;
    return p;
}

}  // namespace

TEST_CASE("grid nodes") {
    CHECK(GridSpec{7, 0}.node(1) == 0.0);
    CHECK(GridSpec{7, 0}.node(2) == doctest::Approx(2 * pi / 7).epsilon(1e-15));
    CHECK(GridSpec{7, 1}.node(1) == doctest::Approx(pi / 7).epsilon(1e-15));
    const auto nodes = grid_nodes(GridSpec{9, 0});
    REQUIRE(nodes.size() == 9);
    for (int j = 0; j < 9; ++j) CHECK(nodes[j] == doctest::Approx(2 * pi * j / 9).epsilon(1e-14));
    CHECK(nodes.back() == doctest::Approx(16 * pi / 9));

    CHECK_THROWS_AS((GridSpec{8, 0}.validate()), SplineError);
    CHECK_THROWS_AS((GridSpec{-3, 0}.validate()), SplineError);
    CHECK_THROWS_AS((GridSpec{7, 2}.validate()), SplineError);
    try {
        GridSpec{6, 0}.validate();
    } catch (const SplineError& e) {
        CHECK(e.kind() == ErrorKind::InvalidGrid);
    }
}

TEST_CASE("node phase agrees with the direct product and stays accurate for huge n") {
    for (int I : {0, 1}) {
        const GridSpec g{7, I};
        for (int k = 1; k <= 7; ++k) {
            for (long long n : {1LL, 2LL, 13LL, 50LL}) {
                const double direct = std::remainder(n * g.node(k), 2 * pi);
                const double reduced = std::remainder(g.node_phase(n, k), 2 * pi);
                CHECK(std::abs(std::remainder(direct - reduced, 2 * pi)) < 1e-12);
            }
        }
    }
    // 7 * 10^12 + 1 times node 2 is 2pi/7 modulo 2pi
    CHECK(GridSpec{7, 0}.node_phase(7'000'000'000'001LL, 2) == doctest::Approx(2 * pi / 7).epsilon(1e-15));
}

TEST_CASE("convergence factors") {
    CHECK(factor_value({FactorKind::PowerSignConstant, 1.0, 1}, 2) == doctest::Approx(0.25));
    CHECK(std::abs(factor_value({FactorKind::SincPower, pi / 7, 2}, 7)) < 1e-15);
    CHECK(factor_value({FactorKind::SincPower, 1e-9, 3}, 5) == doctest::Approx(1.0).epsilon(1e-14));
    const double x = 0.7 * 3;
    CHECK(factor_value({FactorKind::SincPower, 0.7, 4}, 3) == doctest::Approx(std::pow(std::sin(x) / x, 5)));
    CHECK_THROWS_AS((void)factor_value({FactorKind::SincPower, 0.7, 4}, 0), SplineError);
    for (int k = 1; k < 200; ++k) {
        const FactorSpec f{FactorKind::SincPower, 0.3, 3};
        CHECK(std::abs(factor_value(f, k)) <= factor_majorant(f) * std::pow(k, -4.0) * (1 + 1e-12));
        CHECK(std::abs(factor_value(f, k)) <= 1.0);
    }
    CHECK(parse_factor_kind("power") == FactorKind::PowerSignConstant);
    CHECK(parse_factor_kind("SincPower") == FactorKind::SincPower);
    CHECK_THROWS_AS((void)parse_factor_kind("cubic"), SplineError);
    CHECK_THROWS_AS(FactorSpec({FactorKind::SincPower, 0.0, 3}).validate(), SplineError);
    CHECK_THROWS_AS(FactorSpec({FactorKind::SincPower, 1.0, -1}).validate(), SplineError);
}

TEST_CASE("denominators") {
    SUBCASE("degenerate gamma keeps only the low term") {
        for (auto kind : {FactorKind::PowerSignConstant, FactorKind::SincPower}) {
            const auto s = make_spec(kind, 3, 0, 0, {1, 0, 0}, 0.4);
            for (int j = 1; j <= 3; ++j) CHECK(denominator(s, j).value == factor_value(s.factor, j));
        }
    }
    SUBCASE("power factor, j = 1, against direct summation") {
        auto s = make_spec(FactorKind::PowerSignConstant, 3, 0, 0, {}, 1.0);
        double direct = 1.0;
        for (long long m = 200000; m >= 1; --m) direct += std::pow(7.0 * m - 1, -4) + std::pow(7.0 * m + 1, -4);
        const Denominator adaptive = denominator(s, 1);
        // 1 + sum over m of (7m-1)^-4 + (7m+1)^-4
        CHECK(std::abs(adaptive.value - 1.0010873180647) < 1e-8);
        CHECK(std::abs(adaptive.value - direct) < 1e-8);
        CHECK(adaptive.converged);
        s.truncation.mode = TruncationMode::ClosedFormZeta;
        const Denominator zeta = denominator(s, 1);
        CHECK(std::abs(zeta.value - direct) < 1e-13);
        CHECK(zeta.value == doctest::Approx(1.0010873180647426).epsilon(1e-14));
        CHECK(std::abs(zeta.value - adaptive.value) <= adaptive.tail_bound + 1e-15);
    }
    SUBCASE("zeta mode across grids and degrees") {
        for (int I1 : {0, 1}) {
            for (int I2 : {0, 1}) {
                for (int r : {1, 2, 5}) {
                    auto s = make_spec(FactorKind::PowerSignConstant, r, I1, I2, {0.1, 0.5, 1.5}, 1.0);
                    s.truncation.mode = TruncationMode::ClosedFormZeta;
                    for (int j = 1; j <= 3; ++j) {
                        auto p = to_oracle(s, 400000);
                        const double h = denominator(s, j).value;
                        CHECK(std::abs(h - oracle::h(p, j)) < 2e-6 * std::pow(0.01, r - 1) + 1e-12);
                    }
                }
            }
        }
    }
    SUBCASE("power factor scales linearly with alpha") {
        for (double a : {0.2, 0.5, 1.7}) {
            auto s1 = make_spec(FactorKind::PowerSignConstant, 2, 0, 1, {0.1, 0.5, 1.5}, 1.0);
            auto sa = make_spec(FactorKind::PowerSignConstant, 2, 0, 1, {0.1, 0.5, 1.5}, a);
            s1.truncation = sa.truncation = TruncationPolicy::fixed(50);
            for (int j = 1; j <= 3; ++j) {
                CHECK(denominator(sa, j).value / denominator(s1, j).value == doctest::Approx(a).epsilon(1e-13));
            }
        }
    }
    SUBCASE("fixed truncation matches the literal 20-block sum") {
        auto s = make_spec(FactorKind::SincPower, 4, 0, 1, {0.1, 0.5, 1.5}, 0.35);
        s.truncation = TruncationPolicy::fixed(20);
        const auto p = to_oracle(s, 20);
        for (int j = 1; j <= 3; ++j) CHECK(denominator(s, j).value == doctest::Approx(oracle::h(p, j)).epsilon(1e-13));
    }
    SUBCASE("a vanishing denominator is reported with its index") {
        // one m-block: h_1 = g1 + 6^-4 + 8^-4, cancelled by the choice of g1
        auto s = make_spec(FactorKind::PowerSignConstant, 3, 0, 0, {-(std::pow(6.0, -4) + std::pow(8.0, -4)), 1, 1}, 1.0);
        s.truncation = TruncationPolicy::fixed(1);
        try {
            (void)denominator(s, 1);
            FAIL("expected NearSingularDenominator");
        } catch (const SplineError& e) {
            CHECK(e.kind() == ErrorKind::NearSingularDenominator);
            CHECK(std::string(e.what()).find("h_1") != std::string::npos);
        }
        CHECK_THROWS_AS((void)harmonic_series(s, 1), SplineError);
        CHECK_NOTHROW((void)denominator(s, 2));
    }
    SUBCASE("unconverged truncation is flagged, not thrown") {
        auto s = make_spec(FactorKind::SincPower, 1, 0, 0, {}, 0.4);
        s.truncation.m_max = 10;
        const Denominator d = denominator(s, 1);
        CHECK_FALSE(d.converged);
        CHECK(d.m_terms == 10);
    }
}

TEST_CASE("harmonic series structure") {
    SUBCASE("degenerate gamma gives the fundamental trigonometric polynomial") {
        for (auto kind : {FactorKind::PowerSignConstant, FactorKind::SincPower}) {
            const auto s = make_spec(kind, 3, 0, 0, {1, 0, 0}, 0.9);
            const HarmonicSeries hs = harmonic_series(s, 3);
            CHECK(hs.size() == 3);
            CHECK(hs.c0() == doctest::Approx(1.0 / 7).epsilon(1e-15));
            for (double t : {0.0, 0.3, 2.0, 5.9}) {
                double expected = 1.0;
                for (int j = 1; j <= 3; ++j) expected += 2 * std::cos(j * (t - 4 * pi / 7));
                CHECK(hs(t) == doctest::Approx(expected / 7).epsilon(1e-14));
            }
        }
    }
    SUBCASE("derivatives have no constant term") {
        const auto s = make_spec(FactorKind::SincPower, 4, 0, 1, {0.1, 0.5, 1.5}, 0.5);
        CHECK(harmonic_series(s, 2, 1).c0() == 0.0);
        CHECK(harmonic_series(s, 2, 3).c0() == 0.0);
        CHECK_THROWS_AS((void)harmonic_series(s, 2, 4), SplineError);
    }
    SUBCASE("power factor coefficients do not depend on alpha") {
        const auto a = harmonic_series(make_spec(FactorKind::PowerSignConstant, 3, 0, 0, {0.1, 0.5, 1.5}, 0.5), 2);
        const auto b = harmonic_series(make_spec(FactorKind::PowerSignConstant, 3, 0, 0, {0.1, 0.5, 1.5}, 1.5), 2);
        REQUIRE(a.size() == b.size());
        for (std::size_t i = 0; i < a.size(); ++i) {
            CHECK(std::abs(a.cos_coefficients()[i] - b.cos_coefficients()[i]) < 1e-14);
            CHECK(std::abs(a.sin_coefficients()[i] - b.sin_coefficients()[i]) < 1e-14);
        }
    }
    SUBCASE("frequencies are unique and increasing") {
        const auto hs = harmonic_series(make_spec(FactorKind::SincPower, 2, 1, 1, {}, 0.7), 5);
        const auto f = hs.frequencies();
        for (std::size_t i = 1; i < f.size(); ++i) CHECK(f[i] > f[i - 1]);
        for (auto n : f) CHECK(n % 7 != 0);
    }
    SUBCASE("constructor validation") {
        CHECK_THROWS_AS((HarmonicSeries(0, {2, 1}, {1, 1}, {0, 0})), SplineError);
        CHECK_THROWS_AS((HarmonicSeries(0, {0}, {1}, {0})), SplineError);
        CHECK_THROWS_AS((HarmonicSeries(0, {1, 2}, {1}, {0, 0})), SplineError);
        const HarmonicSeries empty(1.0 / 7, {}, {}, {});
        CHECK(empty(1.234) == doctest::Approx(1.0 / 7));
    }
}

TEST_CASE("fundamental splines match the literal formula") {
    for (auto kind : {FactorKind::PowerSignConstant, FactorKind::SincPower}) {
        for (int I1 : {0, 1}) {
            for (int I2 : {0, 1}) {
                for (int r : {2, 3}) {
                    for (GammaVector g : {GammaVector{}, GammaVector{0.1, 0.5, 1.5}}) {
                        auto s = make_spec(kind, r, I1, I2, g, 0.45);
                        s.truncation = TruncationPolicy::fixed(20);
                        const auto p = to_oracle(s, 20);
                        for (int k : {1, 4}) {
                            for (int q = 0; q <= r - 1; ++q) {
                                const HarmonicSeries hs = harmonic_series(s, k, q);
                                for (double t : {0.0, 0.77, 3.1, 6.0}) {
                                    const double ref = oracle::st(p, k, t, q);
                                    CHECK(std::abs(hs(t) - ref) < 1e-11 * (1 + std::abs(ref)));
                                }
                            }
                        }
                    }
                }
            }
        }
    }
}

TEST_CASE("fundamental spline properties") {
    for (auto kind : {FactorKind::PowerSignConstant, FactorKind::SincPower}) {
        for (int I1 : {0, 1}) {
            for (int I2 : {0, 1}) {
                const auto s = make_spec(kind, 3, I1, I2, {0.1, 0.5, 1.5}, 0.6);
                const GridSpec grid = s.interpolation_grid();
                for (int k = 1; k <= 7; ++k) {
                    const HarmonicSeries hs = harmonic_series(s, k);
                    const double tol = 10 * hs.tail_bound() + 1e-12;
                    for (int j = 1; j <= 7; ++j) CHECK(std::abs(hs(grid.node(j)) - (j == k ? 1.0 : 0.0)) <= tol);
                    CHECK(hs(0.4) == doctest::Approx(hs(0.4 + 2 * pi)).epsilon(1e-12));
                }
                // translation: st_k(t) = st_1(t - (x_k - x_1))
                const HarmonicSeries s1 = harmonic_series(s, 1);
                const HarmonicSeries s5 = harmonic_series(s, 5);
                for (double t : {0.1, 1.3, 4.4}) {
                    CHECK(s5(t) == doctest::Approx(s1(t - (grid.node(5) - grid.node(1)))).epsilon(1e-12));
                }
            }
        }
    }
}

TEST_CASE("grids (0,0)~(1,1) and (0,1)~(1,0) give the same power splines up to the anchor shift") {
    const auto a = harmonic_series(make_spec(FactorKind::PowerSignConstant, 3, 0, 0), 1);
    const auto b = harmonic_series(make_spec(FactorKind::PowerSignConstant, 3, 1, 1), 1);
    for (double t : {0.0, 0.8, 2.5}) CHECK(a(t) == doctest::Approx(b(t + pi / 7)).epsilon(1e-12));
}

TEST_CASE("derivative series against central differences") {
    const auto s = make_spec(FactorKind::SincPower, 5, 0, 0, {}, 0.5);
    const auto f0 = harmonic_series(s, 1, 0);
    const auto f1 = harmonic_series(s, 1, 1);
    const auto f2 = harmonic_series(s, 1, 2);
    const double h = 1e-4;
    for (double t : {0.3, 1.1, 2.9, 5.0}) {
        const double d1 = (f0(t + h) - f0(t - h)) / (2 * h);
        const double d2 = (f0(t + h) - 2 * f0(t) + f0(t - h)) / (h * h);
        CHECK(std::abs(f1(t) - d1) <= 1e-5 * std::max(1.0, std::abs(d1)));
        CHECK(std::abs(f2(t) - d2) <= 1e-5 * std::max(1.0, std::abs(d2)));
    }
}

TEST_CASE("interpolant") {
    const auto s = make_spec(FactorKind::SincPower, 3, 0, 1, {0.1, 0.5, 1.5}, 0.8);
    const GridSpec grid = s.interpolation_grid();
    SUBCASE("partition of unity") {
        const std::vector<double> ones(7, 1.0);
        const auto hs = interpolant_series(s, ones);
        for (double t : {0.0, 0.5, 3.3, 6.1}) CHECK(std::abs(hs(t) - 1.0) <= 10 * hs.tail_bound() + 1e-12);
    }
    SUBCASE("unit vector gives the fundamental spline") {
        std::vector<double> e(7, 0.0);
        e[2] = 1.0;
        const auto hs = interpolant_series(s, e);
        const auto st3 = harmonic_series(s, 3);
        for (double t : {0.0, 1.7, 4.0}) CHECK(hs(t) == doctest::Approx(st3(t)).epsilon(1e-13));
    }
    SUBCASE("interpolates cos t at the nodes") {
        std::vector<double> f;
        for (int k = 1; k <= 7; ++k) f.push_back(std::cos(grid.node(k)));
        const auto hs = interpolant_series(s, f);
        for (int k = 1; k <= 7; ++k) CHECK(std::abs(hs(grid.node(k)) - f[k - 1]) <= 10 * hs.tail_bound() + 1e-12);
        CHECK(eval_interpolant(s, f, grid.node(3)) == doctest::Approx(f[2]).epsilon(1e-9));
    }
    SUBCASE("wrong arity") {
        const std::vector<double> six(6, 1.0);
        try {
            (void)interpolant_series(s, six);
            FAIL("expected ArityMismatch");
        } catch (const SplineError& e) {
            CHECK(e.kind() == ErrorKind::ArityMismatch);
        }
    }
}

TEST_CASE("SIMD kernels agree with the scalar reference and with std::cos") {
    const auto& scalar = *simd::kernels_for(simd::Isa::Scalar);
    std::mt19937_64 rng(7);
    std::uniform_real_distribution<double> u(-1.0, 1.0);
    std::vector<std::int64_t> freq;
    std::vector<double> a, b;
    for (std::int64_t n = 1; n < 5000; n += 1 + static_cast<std::int64_t>(rng() % 12)) {
        freq.push_back(n);
        a.push_back(u(rng) / n);
        b.push_back(u(rng) / n);
    }
    const HarmonicView view{0.25, freq, a, b};
    std::vector<double> t;
    for (int i = 0; i < 103; ++i) t.push_back(2 * pi * u(rng) + (i % 5) * 100.0);
    std::vector<double> ref(t.size()), out(t.size());
    scalar.eval_harmonics(view, t, ref);
    for (std::size_t i = 0; i < t.size(); i += 7) {
        double naive = 0.25;
        for (std::size_t k = 0; k < freq.size(); ++k) naive += a[k] * std::cos(freq[k] * t[i]) + b[k] * std::sin(freq[k] * t[i]);
        CHECK(std::abs(ref[i] - naive) < 1e-11);
    }
    std::vector<double> x(1001);
    for (auto& v : x) v = u(rng);
    for (auto isa : {simd::Isa::Scalar, simd::Isa::Avx2}) {
        const simd::KernelTable* k = simd::kernels_for(isa);
        if (k == nullptr) {
            MESSAGE("ISA not available: " << simd::to_string(isa));
            continue;
        }
        k->eval_harmonics(view, t, out);
        for (std::size_t i = 0; i < t.size(); ++i) CHECK(std::abs(out[i] - ref[i]) < 1e-12);
        CHECK(k->sum_squares(x) == doctest::Approx(scalar.sum_squares(x)).epsilon(1e-13));
        CHECK(k->sum_abs(x) == doctest::Approx(scalar.sum_abs(x)).epsilon(1e-13));
        CHECK(k->sum_abs_diff_periodic(x) == doctest::Approx(scalar.sum_abs_diff_periodic(x)).epsilon(1e-13));
        CHECK(k->sum_sqrt1p_sq(x) == doctest::Approx(scalar.sum_sqrt1p_sq(x)).epsilon(1e-13));
    }
    CHECK(simd::kernels().eval_harmonics != nullptr);
}

TEST_CASE("uniform sampling by FFT equals pointwise evaluation") {
    const auto s = make_spec(FactorKind::SincPower, 3, 1, 0, {0.1, 0.5, 1.5}, 0.3);
    const auto hs = harmonic_series(s, 2, 1);
    for (std::size_t S : {7u, 64u, 500u}) {
        const auto v = sample_uniform(hs, S);
        REQUIRE(v.size() == S);
        for (std::size_t i = 0; i < S; i += 3) CHECK(std::abs(v[i] - hs(2 * pi * i / S)) < 1e-11);
    }
}
