#include <doctest.h>

#include <cmath>

#include "jacobi_cs/bargmann.hpp"

using namespace jacobi_cs;

TEST_CASE("quadrature rules") {
    const auto gh = QuadratureRule::gauss_hermite(20);
    double sum = 0, second = 0;
    for (int i = 0; i < gh.size(); ++i) {
        sum += gh.weights()[i];
        second += gh.weights()[i] * gh.nodes()[i] * gh.nodes()[i];
    }
    CHECK(sum == doctest::Approx(std::sqrt(kPi)).epsilon(1e-13));
    CHECK(second == doctest::Approx(std::sqrt(kPi) / 2.0).epsilon(1e-13));

    const auto gl = QuadratureRule::gauss_legendre(10);
    double cubic = 0, quartic = 0;
    for (int i = 0; i < gl.size(); ++i) {
        cubic += gl.weights()[i] * std::pow(gl.nodes()[i], 3);
        quartic += gl.weights()[i] * std::pow(gl.nodes()[i], 4);
    }
    CHECK(std::abs(cubic) < 1e-14);
    CHECK(quartic == doctest::Approx(0.4).epsilon(1e-13));
    CHECK_THROWS_AS(QuadratureRule::make({0.0, 1.0}, {1.0}), DimensionMismatch);
}

TEST_CASE("kernel at the origin") {
    const auto p = HBarParams::make(1.0);
    CHECK(std::abs(bargmann_kernel(0.0, 0.0, p) - std::pow(kPi, -0.25)) < 1e-15);
    CHECK_THROWS_AS(HBarParams::make(0.0), InvalidParams);
}

TEST_CASE("reproducing property") {
    const auto rule = QuadratureRule::gauss_hermite(64);
    CHECK(reproducing_check(1.0, {0.0, 1.0}, HBarParams::make(1.0), rule) < 1e-10);
    CHECK(reproducing_check({1.0, 1.0}, {1.0, 1.0}, HBarParams::make(0.5), QuadratureRule::gauss_hermite(96)) < 1e-9);
    CHECK_THROWS_AS(reproducing_check(1.0, 1.0, HBarParams::make(1.0), QuadratureRule::gauss_hermite(8)),
                    InvalidParams);
}

TEST_CASE("Hermite states") {
    for (double hbar : {1.0, 0.5, 2.0}) {
        const auto p = HBarParams::make(hbar);
        for (double q : {-1.3, 0.0, 0.4, 2.2})
            CHECK(hermite_state(1, q, p) ==
                  doctest::Approx(std::sqrt(2.0 / hbar) * q * hermite_state(0, q, p)).epsilon(1e-13));
        const auto rule = QuadratureRule::gauss_hermite(40);
        for (int n = 0; n <= 8; ++n)
            for (int m = 0; m <= 8; ++m)
                CHECK(std::abs(hermite_overlap(n, m, p, rule) - (n == m ? 1.0 : 0.0)) < 1e-12);
    }
}

TEST_CASE("the other common ground-state prefactor is not normalized") {
    // (2 pi hbar)^(-1/4) instead of (pi hbar)^(-1/4) gives norm^2 = 2^(-1/2)
    const auto p = HBarParams::make(0.7);
    const auto rule = QuadratureRule::gauss_hermite(40);
    const double ratio = std::pow(2.0, -0.25);
    double norm2 = 0;
    for (int i = 0; i < rule.size(); ++i) {
        const double q = rule.nodes()[i] * std::sqrt(p.hbar());
        const double phi = ratio * hermite_state(0, q, p);
        norm2 += rule.weights()[i] * std::exp(rule.nodes()[i] * rule.nodes()[i]) * phi * phi * std::sqrt(p.hbar());
    }
    CHECK(norm2 == doctest::Approx(std::pow(2.0, -0.5)).epsilon(1e-12));
}

TEST_CASE("Bargmann image of Hermite states") {
    const auto p = HBarParams::make(1.0);
    const auto rule = QuadratureRule::gauss_hermite(64);
    for (int n = 0; n <= 10; ++n) CHECK(bargmann_image_check(n, {0.3, -0.8}, p, rule) < 1e-10);
    CHECK(std::abs(bargmann_image(0, 0.0, p, rule) - 1.0) < 1e-12);
}
