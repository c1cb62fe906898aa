#include <doctest.h>

#include <cmath>

#include "jacobi_cs/geometry.hpp"
#include "jacobi_cs/group.hpp"
#include "jacobi_cs/kernels.hpp"
#include "test_support.hpp"

using namespace jacobi_cs;
using test_support::rel_err;

namespace {
const SU11Element kBoost = SU11Element::make(1.25, 0.75);
}

TEST_CASE("SU(1,1) elements") {
    CHECK_THROWS_AS(SU11Element::make(1.0, 0.5), InvalidParams);
    CHECK(kBoost.determinant() == doctest::Approx(1.0));
    const auto e = kBoost * kBoost.inverse();
    CHECK(std::abs(e.a() - 1.0) < 1e-15);
    CHECK(std::abs(e.b()) < 1e-15);
}

TEST_CASE("Mobius and Heisenberg examples") {
    CHECK(std::abs(mobius(kBoost, DiskPoint::make(0.0)).value() - 0.6) < 1e-15);
    CHECK(heisenberg_phase({0.0, 1.0}, 1.0, 1.0) == doctest::Approx(1.0));
    CHECK(heisenberg_phase(1.0, 1.0, 1.0) == 0.0);
    CHECK_THROWS_AS(heisenberg_phase(1.0, 1.0, 0.0), InvalidParams);
}

TEST_CASE("action of a boost on the origin") {
    for (double k : {1.0, 1.75}) {
        const auto params = ModelParams::make(k, 1.0);
        const auto r = jacobi_action({kBoost, 0.0, 0.0}, make_jacobi_point(0.0, 0.0), params);
        CHECK(std::abs(r.point.z()) < 1e-15);
        CHECK(std::abs(r.point.w() - 0.6) < 1e-15);
        CHECK(rel_err(r.multiplier, std::pow(0.8, 2.0 * k)) < 1e-14);
    }
}

TEST_CASE("FC transform") {
    const auto z = fc_forward(2.0, DiskPoint::make(0.5));
    CHECK(std::abs(z.z() - 1.0) < 1e-15);
    CHECK(std::abs(fc_inverse(z).eta - 2.0) < 1e-14);
    const auto moved = action_eta_coords({SU11Element::identity(), 1.0, 0.0}, 0.0, DiskPoint::make(0.0));
    CHECK(std::abs(moved.eta - 1.0) < 1e-15);
}

TEST_CASE("FC transform intertwines the two actions") {
    test_support::Sampler s(21);
    const auto params = ModelParams::make(1.0, 1.0);
    for (int i = 0; i < 1000; ++i) {
        const auto g = s.element();
        const Complex eta = s.disc(2.0);
        const auto w = DiskPoint::make(s.disc(0.6));
        const auto lhs = jacobi_action(g, fc_forward(eta, w), params).point;
        const auto e1 = action_eta_coords(g, eta, w);
        const auto rhs = fc_forward(e1.eta, e1.w);
        CHECK(std::abs(lhs.z() - rhs.z()) < 1e-10 * std::max(1.0, std::abs(rhs.z())));
        CHECK(std::abs(lhs.w() - rhs.w()) < 1e-12);
    }
}

TEST_CASE("kernel transforms with the multiplier") {
    test_support::Sampler s(22);
    const auto params = ModelParams::make(1.5, 0.9);
    for (int i = 0; i < 200; ++i) {
        const auto g = s.element(0.6, 0.6);
        const auto z1 = s.point(0.8, 0.5), z2 = s.point(0.8, 0.5);
        const auto a1 = jacobi_action(g, z1, params), a2 = jacobi_action(g, z2, params);
        const Complex lhs = jacobi_kernel(a1.point, a2.point, params) * a1.multiplier * std::conj(a2.multiplier);
        CHECK(rel_err(lhs, jacobi_kernel(z1, z2, params)) < 1e-9);
    }
}

TEST_CASE("metric is invariant under the action") {
    test_support::Sampler s(23);
    const auto params = ModelParams::make(1.0, 2.0);
    for (int i = 0; i < 50; ++i) {
        const auto g = s.element(0.5, 0.5);
        const auto zeta = s.point(0.8, 0.5);
        const auto image = jacobi_action(g, zeta, params).point;
        const auto pulled = pullback_holomorphic(jacobi_action_jacobian(g, zeta, params), metric(image, params));
        const auto h = metric(zeta, params);
        CHECK(max_abs_diff(pulled, h) < 1e-6 * h.scale());
    }
}

TEST_CASE("split form in FC coordinates") {
    test_support::Sampler s(24);
    const auto params = ModelParams::make(1.2, 0.7);
    for (int i = 0; i < 50; ++i) {
        const Complex eta = s.disc(1.5);
        const auto w = DiskPoint::make(s.disc(0.6));
        const auto r = fc_pullback(eta, w, params);
        const auto expected = split_metric(w, params);
        CHECK(max_abs_diff(r.coefficients, expected) < 1e-6 * expected.scale());
        CHECK(r.non_hermitian_residual < 1e-6 * expected.scale());

        const auto g = s.element(0.5, 0.5);
        const auto a = split_form_pullback_under_action(g, eta, w, params);
        CHECK(max_abs_diff(a.coefficients, expected) < 1e-6 * expected.scale());
    }
}

TEST_CASE("disk geodesic map") {
    CHECK(std::abs(disk_geodesic_map(1.0, 1.0).value() - std::tanh(1.0)) < 1e-15);
    CHECK(disk_geodesic_map(0.0, 3.0).value() == Complex(0.0));
    CHECK(std::abs(disk_geodesic_map({0.0, 2.0}, 0.5).value() - Complex(0.0, std::tanh(1.0))) < 1e-15);
}

TEST_CASE("multiplier is continuous along a loop of w") {
    const auto params = ModelParams::make(1.3, 1.0);
    const JacobiGroupElement e{SU11Element::from_angles(1.0, 2.5, -0.5), {0.2, 0.1}, 0.3};
    Complex prev = jacobi_action(e, make_jacobi_point(0.1, 0.95), params).multiplier;
    for (int i = 1; i <= 2000; ++i) {
        const Complex w = std::polar(0.95, 2.0 * kPi * i / 2000.0);
        const Complex cur = jacobi_action(e, make_jacobi_point(0.1, w), params).multiplier;
        CHECK(std::abs(cur - prev) < 0.05 * std::max(std::abs(prev), 1e-300) + 1e-12);
        prev = cur;
    }
}
