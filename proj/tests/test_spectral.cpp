#include <doctest.h>

#include <cmath>
#include <numeric>

#include "fixtures.hpp"
#include "regspec/sampler.hpp"
#include "regspec/spectral.hpp"

using namespace regspec;
using doctest::Approx;

TEST_CASE("scaled spectrum of the Petersen graph") {
    const ScaledSpectrum s = scaled_spectrum(fixtures::petersen());
    REQUIRE(s.values.size() == 10);
    CHECK(s.max_residual < 1e-10);
    // Eigenvalues 3, 1 (x5), -2 (x4), scaled by 1/sqrt(2).
    CHECK(s.values[0] == Approx(2.1213203435596426).epsilon(1e-12));
    for (int i = 1; i <= 5; ++i)
        CHECK(s.values[static_cast<std::size_t>(i)] ==
              Approx(0.70710678118654752).epsilon(1e-10));
    for (int i = 6; i <= 9; ++i)
        CHECK(s.values[static_cast<std::size_t>(i)] ==
              Approx(-1.414213562373095).epsilon(1e-10));
}

TEST_CASE("spectrum invariants of random cubic graphs") {
    for (std::uint64_t t = 0; t < 3; ++t) {
        Rng rng = Rng::stream(17, t);
        const RegularGraph g = sample_pairing_rejection(30, 3, rng).graph;
        const ScaledSpectrum s = scaled_spectrum(g);
        // Top eigenvalue d/sqrt(d-1); trace zero; squared sum nd/(d-1).
        CHECK(s.values.front() == Approx(3.0 / std::sqrt(2.0)).epsilon(1e-10));
        const double sum = std::accumulate(s.values.begin(), s.values.end(), 0.0);
        CHECK(sum == Approx(0.0).scale(1.0).epsilon(1e-9));
        double sq = 0.0;
        for (double v : s.values) sq += v * v;
        CHECK(sq == Approx(30.0 * 3.0 / 2.0).epsilon(1e-9));
    }
}

TEST_CASE("polynomial bases") {
    // Phi_k(2 cos t) = 2 cos(k t).
    for (int k = 0; k <= 6; ++k) {
        for (double t : {0.3, 1.1, 2.9}) {
            const double expect = k == 0 ? 1.0 : 2.0 * std::cos(k * t);
            CHECK(phi_poly(k, 2.0 * std::cos(t)) == Approx(expect).epsilon(1e-10));
        }
    }
    CHECK(phi_poly(2, 0.0) == Approx(-2.0));
    CHECK(phi_poly(3, 1.5) == Approx(1.5 * 1.5 * 1.5 - 3.0 * 1.5));
    // Gamma shifts even degrees by (d-2)/(d-1)^{k/2}.
    CHECK(gamma_poly(2, 3, 0.0) == Approx(-1.5));
    CHECK(gamma_poly(3, 3, 1.5) == Approx(phi_poly(3, 1.5)));
    CHECK(gamma_poly(4, 3, 0.7) == Approx(phi_poly(4, 0.7) + 0.25));
    CHECK(gamma_poly(0, 5, 0.2) == Approx(1.0));
    CHECK_THROWS_AS(phi_poly(-1, 0.0), std::invalid_argument);
    CHECK_THROWS_AS(gamma_poly(2, 1, 0.0), std::invalid_argument);
}

TEST_CASE("expansions of polynomial test functions") {
    // x^2 = Phi_2 + 2 Phi_0.
    const auto sq = cheb_expand([](double x) { return x * x; }, ChebBasis::phi, 0, 4);
    CHECK(sq.converged);
    CHECK(sq.a[0] == Approx(2.0).epsilon(1e-10));
    CHECK(sq.a[1] == Approx(0.0).scale(1.0).epsilon(1e-10));
    CHECK(sq.a[2] == Approx(1.0).epsilon(1e-10));
    // Same function in the Gamma basis at d=3: constant moves to 1.5.
    const auto sqg = cheb_expand([](double x) { return x * x; }, ChebBasis::gamma, 3, 4);
    CHECK(sqg.a[0] == Approx(1.5).epsilon(1e-10));
    CHECK(sqg.a[2] == Approx(1.0).epsilon(1e-10));
    // x^3 = Phi_3 + 3 Phi_1.
    const auto cu = cheb_expand([](double x) { return x * x * x; }, ChebBasis::phi, 0, 5);
    CHECK(cu.a[1] == Approx(3.0).epsilon(1e-10));
    CHECK(cu.a[3] == Approx(1.0).epsilon(1e-10));
    CHECK(cu.a[5] == Approx(0.0).scale(1.0).epsilon(1e-10));
}

TEST_CASE("exponential expansion matches modified Bessel values") {
    // exp(2 cos t) = I_0(2) + 2 sum_k I_k(2) cos(k t), so a_k = I_k(2).
    const auto e = cheb_expand([](double x) { return std::exp(x); }, ChebBasis::phi, 0, 4);
    CHECK(e.converged);
    CHECK(e.a[0] == Approx(2.2795853023360673).epsilon(1e-11));
    CHECK(e.a[1] == Approx(1.5906368546373291).epsilon(1e-11));
    CHECK(e.a[2] == Approx(0.6889484476987382).epsilon(1e-11));
    CHECK(e.a[3] == Approx(0.21273995923985266).epsilon(1e-11));
    CHECK(e.a[4] == Approx(0.050728569979180238).epsilon(1e-11));
}

TEST_CASE("basis conversions round-trip") {
    const auto e = cheb_expand([](double x) { return std::exp(x); }, ChebBasis::phi, 0, 6);
    const auto g = to_gamma_basis(e, 3);
    const auto back = to_phi_basis(g);
    for (std::size_t k = 0; k < e.a.size(); ++k)
        CHECK(back.a[k] == Approx(e.a[k]).epsilon(1e-12));
    // Both bases evaluate the same truncated expansion; the truncation
    // itself is off from exp by about 2 I_7(2) at degree 6.
    for (double x : {-1.9, -0.4, 0.0, 1.2, 2.0}) {
        CHECK(g.evaluate(x) == Approx(e.evaluate(x)).epsilon(1e-12));
        CHECK(std::abs(g.evaluate(x) - std::exp(x)) < 3e-3);
    }
    CHECK_THROWS_AS(to_gamma_basis(g, 4), std::invalid_argument);
}

TEST_CASE("trace identity on fixed and random graphs") {
    CHECK(gamma_trace_identity_check(fixtures::k4(), 10) < 1e-8);
    CHECK(gamma_trace_identity_check(fixtures::petersen(), 10) < 1e-8);
    for (std::uint64_t t = 0; t < 3; ++t) {
        Rng rng = Rng::stream(23, t);
        const RegularGraph g = sample_pairing_rejection(40, 3, rng).graph;
        CHECK(gamma_trace_identity_check(g, 8) < 1e-8);
    }
}

TEST_CASE("functional of the K4 spectrum") {
    // sum_i Gamma_3(lambda_i) = 2^{-3/2} CNBW_3 = 24 / (2 sqrt 2) = 6 sqrt 2.
    ChebExpansion e;
    e.basis = ChebBasis::gamma;
    e.d = 3;
    e.a = {0.0, 0.0, 0.0, 1.0};
    const double y = eigen_functional(scaled_spectrum(fixtures::k4()), e);
    CHECK(y == Approx(8.4852813742385703).epsilon(1e-10));
    ChebExpansion wrong = e;
    wrong.d = 4;
    CHECK_THROWS_AS(eigen_functional(scaled_spectrum(fixtures::k4()), wrong),
                    std::invalid_argument);
}

TEST_CASE("growing-d centering and variance") {
    ChebExpansion phi3;
    phi3.basis = ChebBasis::phi;
    phi3.a = {0.0, 0.0, 0.0, 1.0};
    // m_f = mu_3(3) / 2^{3/2} = 2 sqrt 2; independent of n for odd k.
    CHECK(centering_m_f(100, 3, phi3, 4) == Approx(2.8284271247461901).epsilon(1e-12));
    CHECK(limit_variance_growing_d(phi3) == Approx(6.0));

    ChebExpansion phi4;
    phi4.basis = ChebBasis::phi;
    phi4.a = {0.0, 0.0, 0.0, 0.0, 1.0};
    // m_f = (mu_4(3) - (d-2) n) / (d-1)^2 = (16 - 100) / 4 = -21.
    CHECK(centering_m_f(100, 3, phi4, 4) == Approx(-21.0).epsilon(1e-12));

    ChebExpansion both;
    both.basis = ChebBasis::phi;
    both.a = {0.0, 0.0, 0.0, 1.0, 1.0};
    CHECK(limit_variance_growing_d(both) == Approx(14.0));

    ChebExpansion gamma = to_gamma_basis(phi3, 3);
    CHECK_THROWS_AS(centering_m_f(100, 3, gamma, 4), std::invalid_argument);
    CHECK_THROWS_AS(limit_variance_growing_d(gamma), std::invalid_argument);
}

TEST_CASE("truncation cutoff") {
    CHECK(rn_cutoff(1000, 3, 0.3) == 2);
    CHECK(rn_cutoff(1000, 3, 1.0) == 9);
    CHECK(rn_cutoff(2000, 10) == 1);
    CHECK_THROWS_AS(rn_cutoff(1, 3), std::invalid_argument);
    CHECK_THROWS_AS(rn_cutoff(100, 2), std::invalid_argument);
}

TEST_CASE("fixed-d limit sampler") {
    ChebExpansion g3;
    g3.basis = ChebBasis::gamma;
    g3.d = 3;
    g3.a = {0.0, 0.0, 0.0, 1.0};
    const int count = 200000;
    const LimitSample s = sample_limit_fixed_d(g3, 3, 3, count, 99, 4);
    REQUIRE(s.draws.size() == static_cast<std::size_t>(count));
    CHECK(s.kmax == 3);
    CHECK(s.tail_bound == 0.0);
    // Y = 2^{-3/2} * 6 * Poisson(4/3): mean 2 sqrt 2, variance 6.
    double m = 0.0;
    for (double y : s.draws) m += y;
    m /= count;
    CHECK(std::abs(m - 2.8284271247461901) < 4.0 * std::sqrt(6.0 / count));
    const LimitSample again = sample_limit_fixed_d(g3, 3, 3, count, 99, 1);
    CHECK(again.draws == s.draws);  // identical under any worker count

    CHECK_THROWS_AS(sample_limit_fixed_d(g3, 4, 3, 10, 0), std::invalid_argument);
    CHECK_THROWS_AS(sample_limit_fixed_d(g3, 3, 2, 10, 0), std::invalid_argument);
    CHECK_THROWS_AS(sample_limit_fixed_d(g3, 3, 3, 0, 0), std::invalid_argument);
    ChebExpansion phi = g3;
    phi.basis = ChebBasis::phi;
    CHECK_THROWS_AS(sample_limit_fixed_d(phi, 3, 3, 10, 0), std::invalid_argument);
}
