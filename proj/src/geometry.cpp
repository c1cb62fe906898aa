#include "jacobi_cs/geometry.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "jacobi_cs/kernels.hpp"

namespace jacobi_cs {

WirtingerStencil WirtingerStencil::make(double step) {
    if (!(step >= 1e-7 && step <= 1e-1)) {
        std::ostringstream os;
        os << "finite-difference step " << step << " outside [1e-7, 1e-1]";
        throw InvalidParams(os.str());
    }
    return WirtingerStencil(step);
}

double WirtingerStencil::usable_step(const JacobiPoint& zeta) const {
    const double room = 1.0 - kDefaultBoundGuard - std::abs(zeta.w());
    double h = step_;
    while (2.0 * h >= room) {
        h *= 0.5;
        if (h < kMinStep) {
            std::ostringstream os;
            os << "finite-difference stencil at |w| = " << std::abs(zeta.w()) << " would leave the disk";
            throw BoundaryProximity(os.str());
        }
    }
    return h;
}

namespace {

using Coords = std::array<double, 4>;  // Re z, Im z, Re w, Im w

Coords coords_of(const JacobiPoint& zeta) {
    return {zeta.z().real(), zeta.z().imag(), zeta.w().real(), zeta.w().imag()};
}

JacobiPoint point_of(const Coords& x) { return make_jacobi_point({x[0], x[1]}, {x[2], x[3]}); }

Coords shifted(Coords x, int i, double di, int j = -1, double dj = 0.0) {
    x[i] += di;
    if (j >= 0) x[j] += dj;
    return x;
}

// Real partial derivatives d/dx_i of a complex field.
template <typename G>
std::array<Complex, 4> real_gradient(const G& g, const Coords& x, double h) {
    std::array<Complex, 4> d{};
    for (int i = 0; i < 4; ++i)
        d[i] = (g(point_of(shifted(x, i, h))) - g(point_of(shifted(x, i, -h)))) / (2.0 * h);
    return d;
}

}  // namespace

HermitianMetric2 wirtinger_hessian(const RealField& f, const JacobiPoint& zeta, const WirtingerStencil& stencil) {
    const double h = stencil.usable_step(zeta);
    const Coords x = coords_of(zeta);
    const double f0 = f(zeta);
    double hess[4][4];
    for (int i = 0; i < 4; ++i) {
        hess[i][i] = (f(point_of(shifted(x, i, h))) - 2.0 * f0 + f(point_of(shifted(x, i, -h)))) / (h * h);
        for (int j = i + 1; j < 4; ++j) {
            const double pp = f(point_of(shifted(x, i, h, j, h)));
            const double pm = f(point_of(shifted(x, i, h, j, -h)));
            const double mp = f(point_of(shifted(x, i, -h, j, h)));
            const double mm = f(point_of(shifted(x, i, -h, j, -h)));
            hess[i][j] = hess[j][i] = (pp - pm - mp + mm) / (4.0 * h * h);
        }
    }
    HermitianMetric2 out;
    out.h_zz = 0.25 * (hess[0][0] + hess[1][1]);
    out.h_ww = 0.25 * (hess[2][2] + hess[3][3]);
    // d_z d_wbar = (d_x1 - i d_y1)(d_x2 + i d_y2) / 4
    out.h_zw = 0.25 * Complex(hess[0][2] + hess[1][3], hess[0][3] - hess[1][2]);
    return out;
}

std::array<Complex, 2> wirtinger_gradient(const ComplexField& g, const JacobiPoint& zeta,
                                          const WirtingerStencil& stencil) {
    const auto d = real_gradient(g, coords_of(zeta), stencil.usable_step(zeta));
    const Complex i(0.0, 1.0);
    return {0.5 * (d[0] - i * d[1]), 0.5 * (d[2] - i * d[3])};
}

std::array<Complex, 2> wirtinger_conj_gradient(const ComplexField& g, const JacobiPoint& zeta,
                                               const WirtingerStencil& stencil) {
    const auto d = real_gradient(g, coords_of(zeta), stencil.usable_step(zeta));
    const Complex i(0.0, 1.0);
    return {0.5 * (d[0] + i * d[1]), 0.5 * (d[2] + i * d[3])};
}

HermitianMetric2 metric(const JacobiPoint& zeta, const ModelParams& params) {
    const double p = zeta.p();
    const double mu = params.mu();
    const Complex eta = eta_of(zeta);
    return {mu / p, mu * eta / p, mu * std::norm(eta) / p + 2.0 * params.k() / (p * p)};
}

HermitianMetric2 metric_fd(const JacobiPoint& zeta, const ModelParams& params, const WirtingerStencil& stencil) {
    return wirtinger_hessian([&](const JacobiPoint& x) { return kahler_potential(x, params); }, zeta, stencil);
}

double metric_det(const JacobiPoint& zeta, const ModelParams& params) { return metric(zeta, params).det(); }

double metric_det_closed_form(const JacobiPoint& zeta, const ModelParams& params) {
    const double p = zeta.p();
    return 2.0 * params.k() * params.mu() / (p * p * p);
}

RicciTensor2 ricci(const JacobiPoint& zeta, const ModelParams&) {
    const double p = zeta.p();
    return {0.0, Complex{}, -3.0 / (p * p)};
}

RicciTensor2 ricci_fd(const JacobiPoint& zeta, const ModelParams& params, const WirtingerStencil& stencil) {
    const auto h = wirtinger_hessian(
        [&](const JacobiPoint& x) { return std::log(metric_det(x, params)); }, zeta, stencil);
    return {-h.h_zz, -h.h_zw, -h.h_ww};
}

double trace_against(const HermitianMetric2& h, const RicciTensor2& ric) {
    const double det = h.det();
    const double cross = 2.0 * std::real(h.h_zw * std::conj(ric.r_zw));
    return (h.h_ww * ric.r_zz - cross + h.h_zz * ric.r_ww) / det;
}

double scalar_curvature(const JacobiPoint& zeta, const ModelParams& params) {
    return trace_against(metric(zeta, params), ricci(zeta, params));
}

HermitianMetric2 tilde_metric(const JacobiPoint& zeta, const ModelParams& params) {
    const auto h = metric(zeta, params);
    const auto r = ricci(zeta, params);
    return {3.0 * h.h_zz - r.r_zz, 3.0 * h.h_zw - r.r_zw, 3.0 * h.h_ww - r.r_ww};
}

double volume_density(const JacobiPoint& zeta, const ModelParams& params) {
    const double p = zeta.p();
    return 4.0 * params.k() * params.mu() / (p * p * p);
}

double tangent_norm(const HermitianMetric2& h, const TangentVector& v) {
    const double sq = h.h_zz * std::norm(v.dz) + 2.0 * std::real(h.h_zw * v.dz * std::conj(v.dw)) +
                      h.h_ww * std::norm(v.dw);
    return std::sqrt(std::max(sq, 0.0));
}

double tangent_norm(const JacobiPoint& zeta, const TangentVector& v, const ModelParams& params) {
    return tangent_norm(metric(zeta, params), v);
}

double kahler_condition_check(const MetricField& field, const JacobiPoint& zeta, const WirtingerStencil& stencil) {
    // Only a != c carries content: d_w h_{z bbar} = d_z h_{w bbar} for b in {z, w}.
    const auto d_hzz = wirtinger_gradient([&](const JacobiPoint& x) { return Complex(field(x).h_zz); }, zeta, stencil);
    const auto d_hwz =
        wirtinger_gradient([&](const JacobiPoint& x) { return std::conj(field(x).h_zw); }, zeta, stencil);
    const auto d_hzw = wirtinger_gradient([&](const JacobiPoint& x) { return field(x).h_zw; }, zeta, stencil);
    const auto d_hww = wirtinger_gradient([&](const JacobiPoint& x) { return Complex(field(x).h_ww); }, zeta, stencil);
    return std::max(std::abs(d_hzz[1] - d_hwz[0]), std::abs(d_hzw[1] - d_hww[0]));
}

double kahler_condition_check(const JacobiPoint& zeta, const ModelParams& params, const WirtingerStencil& stencil) {
    return kahler_condition_check([&](const JacobiPoint& x) { return metric(x, params); }, zeta, stencil);
}

}  // namespace jacobi_cs
