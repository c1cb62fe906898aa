#include <doctest.h>

#include <cmath>
#include <sstream>

#include "jacobi_cs/geodesics.hpp"
#include "jacobi_cs/geometry.hpp"
#include "jacobi_cs/group.hpp"
#include "test_support.hpp"

using namespace jacobi_cs;

namespace {
JacobiPoint pt(Complex z, Complex w) { return make_jacobi_point(z, w); }
double dist(const TangentVector& a, const TangentVector& b) { return std::abs(a.dz - b.dz) + std::abs(a.dw - b.dw); }
}  // namespace

TEST_CASE("Christoffel symbols") {
    const auto g = christoffel(pt(1.0, 0.5), ModelParams::make(1.0, 1.0));
    CHECK(std::abs(g.g_zzz + 1.0) < 1e-14);
    CHECK(std::abs(g.g_wzz - 0.5) < 1e-14);
    CHECK(std::abs(g.g_zzw + 4.0 / 3.0) < 1e-14);
    CHECK(std::abs(g.g_wwz - 1.0) < 1e-14);
    CHECK(std::abs(g.g_zww + 4.0) < 1e-14);
    CHECK(std::abs(g.g_www - 10.0 / 3.0) < 1e-14);
}

TEST_CASE("Christoffel symbols match derivatives of the metric") {
    // h_{a lbar} Gamma^a_jk = d_j h_{k lbar}
    test_support::Sampler s(31);
    const auto params = ModelParams::make(1.4, 0.9);
    const auto st = WirtingerStencil::make(1e-4);
    const auto entry = [](const HermitianMetric2& g, int k, int l) {
        const Complex m[2][2] = {{g.h_zz, g.h_zw}, {std::conj(g.h_zw), g.h_ww}};
        return m[k][l];
    };
    for (int i = 0; i < 30; ++i) {
        const auto zeta = s.point(1.0, 0.6);
        const auto c = christoffel(zeta, params);
        const Complex gam[2][2][2] = {{{c.g_zzz, c.g_zzw}, {c.g_zzw, c.g_zww}},
                                      {{c.g_wzz, c.g_wwz}, {c.g_wwz, c.g_www}}};
        const auto h = metric(zeta, params);
        for (int k = 0; k < 2; ++k)
            for (int l = 0; l < 2; ++l) {
                const auto d = wirtinger_gradient(
                    [&](const JacobiPoint& y) { return entry(metric(y, params), k, l); }, zeta, st);
                for (int j = 0; j < 2; ++j) {
                    const Complex lowered = entry(h, 0, l) * gam[0][j][k] + entry(h, 1, l) * gam[1][j][k];
                    CHECK(std::abs(d[j] - lowered) < 1e-6 * h.scale());
                }
            }
    }
}

TEST_CASE("geodesic right-hand side") {
    const auto params = ModelParams::make(1.5, 0.6);
    const auto a = geodesic_rhs({pt(0.0, 0.0), {1.0, 0.0}}, params);
    CHECK(std::abs(a.dz) < 1e-15);
    CHECK(std::abs(a.dw + 0.6 / 3.0) < 1e-15);
    test_support::Sampler s(32);
    for (int i = 0; i < 200; ++i) {
        const GeodesicState st{s.point(1.0, 0.8), {s.disc(1.0), s.disc(1.0)}};
        CHECK(dist(geodesic_rhs(st, params), geodesic_rhs_christoffel(st, ConnectionRatio::from(params))) < 1e-12);
    }
}

TEST_CASE("FC particular solution solves the system") {
    const auto ratio = ConnectionRatio::from(ModelParams::make(1.0, 1.0));
    const Complex eta0(1.0, 1.0), b(0.7, 0.0);
    for (int i = 1; i <= 19; ++i) {
        const double t = 0.1 * i;
        const auto s = fc_particular_solution(eta0, b, t);
        const auto acc = fc_particular_acceleration(eta0, b, t);
        CHECK(dist(acc, geodesic_rhs(s, ratio)) < 1e-9);
        CHECK(std::abs(eta_of(s.pos) - eta0) < 1e-12);
    }
}

TEST_CASE("mu = 0 limit integrates to the closed form") {
    const auto ratio = ConnectionRatio::flat_heisenberg_limit();
    const Complex z0dot(0.4, -0.2), b(0.6, 0.3), z1(0.1, 0.2);
    const auto s0 = mu_zero_solution(z0dot, z1, b, 0.0);
    const auto path = integrate(s0, 2.0, 2000, ratio);
    double worst = 0;
    for (const auto& smp : path.samples) {
        const auto exact = mu_zero_solution(z0dot, z1, b, smp.t);
        worst = std::max({worst, std::abs(smp.state.pos.z() - exact.pos.z()), std::abs(smp.state.pos.w() - exact.pos.w())});
        const auto res = disk_residuals(smp.state, geodesic_rhs(smp.state, ratio));
        CHECK(std::abs(res.g2) < 1e-12);
        CHECK(std::abs(res.g3) < 1e-12);
    }
    CHECK(worst < 1e-8);
    CHECK_THROWS_AS(mu_zero_solution(1.0, 0.0, 0.0, 1.0), ZeroDirection);
}

TEST_CASE("RK4 preserves the energy and tracks the particular solution") {
    const auto params = ModelParams::make(1.0, 1.0);
    const Complex eta0(0.5, -0.3), b(0.0, 0.8);
    const auto path = integrate(fc_particular_solution(eta0, b, 0.0), 1.5, 1500, params);
    CHECK(path.samples.size() == 1501);
    CHECK(energy_drift(path, params) < 1e-8);
    const auto exact = fc_particular_solution(eta0, b, 1.5);
    CHECK(std::abs(path.back().pos.z() - exact.pos.z()) < 1e-9);
    CHECK(std::abs(path.back().pos.w() - exact.pos.w()) < 1e-9);
}

TEST_CASE("integration escaping the disk reports the last valid time") {
    const auto params = ModelParams::make(1.0, 1.0);
    try {
        integrate({pt(0.0, 0.0), {0.0, 40.0}}, 5.0, 50, params);
        FAIL("expected BoundaryEscape");
    } catch (const BoundaryEscape& e) {
        CHECK(e.t() >= 0.0);
        CHECK(e.t() < 5.0);
    }
}

TEST_CASE("curve length") {
    const auto params = ModelParams::make(1.0, 1.0);
    const auto path = straight_path(pt(0.0, 0.0), pt(1.0, 0.0), 11);
    CHECK(curve_length(path, params) == doctest::Approx(1.0).epsilon(1e-12));
    CHECK_THROWS_AS(straight_path(pt(0.0, 0.0), pt(1.0, 0.0), 1), InvalidParams);
    // zero-velocity path
    const auto still = integrate({pt(0.3, 0.2), {}}, 1.0, 10, params);
    CHECK(curve_length(still, params) == 0.0);
    // length grows like the geodesic parameter for a unit-speed start
    const auto along = integrate({pt(0.0, 0.0), {0.0, 1.0 / std::sqrt(2.0)}}, 1.0, 1000, params);
    CHECK(curve_length(along, params) == doctest::Approx(1.0).epsilon(1e-9));
}

TEST_CASE("GeodesicPath rejects non-increasing times") {
    GeodesicPath p;
    p.append({0.0, {pt(0.0, 0.0), {}}});
    CHECK_THROWS_AS(p.append({0.0, {pt(0.0, 0.0), {}}}), InvalidParams);
}

TEST_CASE("shooting finds the geodesic between two points") {
    const auto params = ModelParams::make(1.0, 1.0);
    const auto a = pt({0.1, 0.2}, {0.1, -0.2}), b = pt({-0.3, 0.1}, {0.3, 0.1});
    const auto path = shoot_geodesic(a, b, params);
    REQUIRE(path.has_value());
    CHECK(std::abs(path->back().pos.z() - b.z()) < 1e-8);
    CHECK(std::abs(path->back().pos.w() - b.w()) < 1e-8);
    CHECK(curve_length(*path, params) <= curve_length(straight_path(a, b, 1001), params) + 1e-9);
}

TEST_CASE("CSV output") {
    const auto params = ModelParams::make(1.0, 1.0);
    std::ostringstream os;
    write_path_csv(os, straight_path(pt(0.0, 0.0), pt(0.5, 0.1), 3), params);
    std::string header;
    std::istringstream is(os.str());
    std::getline(is, header);
    CHECK(header == "t,re_z,im_z,re_w,im_w,re_dz,im_dz,re_dw,im_dw,speed");
    int rows = 0;
    for (std::string line; std::getline(is, line);) ++rows;
    CHECK(rows == 3);
}
