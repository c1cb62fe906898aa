#include <doctest.h>

#include <cmath>

#include "jacobi_cs/group.hpp"
#include "jacobi_cs/quadrature.hpp"
#include "test_support.hpp"

using namespace jacobi_cs;

namespace {
JacobiPoint pt(Complex z, Complex w) { return make_jacobi_point(z, w); }
const ModelParams kP = ModelParams::make(1.25, 1.0);
}  // namespace

TEST_CASE("measure and weight") {
    CHECK(invariant_measure_density(pt(0.3, 0.5), 2.0) == doctest::Approx(128.0 / 27.0).epsilon(1e-13));
    const auto k1 = ModelParams::make(1.0, 1.0);
    CHECK(normalization_constant(k1) == doctest::Approx(1.0 / (2.0 * kPi * kPi)).epsilon(1e-14));
    CHECK(weight_rho(pt(0.0, 0.0), k1) == doctest::Approx(0.050660591821).epsilon(1e-10));
    CHECK_THROWS_AS(normalization_constant(ModelParams::make(0.75, 1.0)), InvalidK);
}

TEST_CASE("density transforms with the inverse Jacobian determinant") {
    // invariant measure: rho_inv(g zeta) |det J|^2 = rho_inv(zeta)
    test_support::Sampler s(51);
    const double mu = 1.3;
    const auto params = ModelParams::make(1.0, mu);
    for (int i = 0; i < 50; ++i) {
        const auto g = s.element(0.5, 0.5);
        const auto x = s.point(0.8, 0.5);
        const auto jac = jacobi_action_jacobian(g, x, params);
        const double det2 = std::norm(jac[0][0] * jac[1][1] - jac[0][1] * jac[1][0]);
        const double before = invariant_measure_density(x, mu);
        const double after = invariant_measure_density(jacobi_action(g, x, params).point, mu) * det2;
        CHECK(std::abs(before - after) < 1e-6 * before);
    }
}

TEST_CASE("Monte Carlo configuration") {
    CHECK_THROWS_AS(McConfig::make(10, 0), InvalidParams);
    CHECK_NOTHROW(McConfig::make(McConfig::kMinSamples, 0));
}

TEST_CASE("estimates are reproducible for a fixed seed") {
    const auto cfg = McConfig::make(20000, 99);
    const auto a = inner_product_mc({1, 1}, {1, 1}, kP, cfg);
    const auto b = inner_product_mc({1, 1}, {1, 1}, kP, cfg);
    CHECK(a.value == b.value);
    CHECK(a.std_error == b.std_error);
    CHECK(a.n_samples == 20000);
    CHECK(a.seed == 99u);
}

TEST_CASE("basis is orthonormal within the Monte Carlo error") {
    const auto report = orthonormality_matrix(2, 2, kP, McConfig::make(50000, 3));
    CHECK(report.pass);
    CHECK(report.entries.size() == 81);
    CHECK(report.max_std_error < 2e-2);
    // without rotations or z integration the raw estimator is still unbiased
    const auto raw = inner_product_mc({1, 0}, {1, 0}, kP, McConfig::make(200000, 4, 1, false));
    CHECK(std::abs(raw.value - 1.0) < 4.0 * raw.std_error + 1e-10);
}

TEST_CASE("different charges vanish exactly after symmetrization") {
    const auto e = inner_product_mc({1, 0}, {0, 0}, kP, McConfig::make(5000, 5));
    CHECK(std::abs(e.value) < 1e-12);
}

TEST_CASE("Parseval") {
    const BasisCombination c1{{{0, 0}, {1.0, 0.5}}, {{1, 1}, {0.0, -2.0}}};
    const BasisCombination c2{{{0, 0}, {0.3, 0.0}}, {{1, 1}, {1.0, 1.0}}, {{2, 0}, 0.7}};
    const auto r = parseval_check(c1, c2, kP, McConfig::make(50000, 6));
    CHECK(std::abs(r.exact - (std::conj(Complex(1.0, 0.5)) * 0.3 + std::conj(Complex(0.0, -2.0)) * Complex(1.0, 1.0))) <
          1e-15);
    CHECK(r.deviation < 4.0 * r.estimate.std_error + 1e-10);
}

TEST_CASE("disk marginal integrates to one") {
    for (int m = 0; m <= 6; ++m) CHECK(disk_marginal_check(m, kP) < 1e-10);
    CHECK(disk_marginal_check(3, ModelParams::make(2.75, 0.4)) < 1e-10);
}

TEST_CASE("sampler stays inside the domain") {
    PointSampler sampler(kP, 7);
    for (int i = 0; i < 10000; ++i) {
        const auto smp = sampler.draw();
        CHECK(smp.point.p() > 0);
        CHECK(smp.weight == doctest::Approx(1.0));
    }
}

TEST_CASE("normalization does not depend on mu") {
    for (double mu : {0.3, 2.5}) {
        const auto report = orthonormality_matrix(2, 1, ModelParams::make(1.75, mu), McConfig::make(50000, 8));
        CHECK(report.pass);
    }
}
