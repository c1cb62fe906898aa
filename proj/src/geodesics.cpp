#include "jacobi_cs/geodesics.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <iomanip>
#include <ostream>
#include <sstream>

#include "jacobi_cs/geometry.hpp"

namespace jacobi_cs {

void GeodesicPath::append(PathSample s) {
    if (!samples.empty() && !(s.t > samples.back().t)) throw InvalidParams("path samples must have increasing t");
    samples.push_back(std::move(s));
}

ChristoffelSet christoffel(const JacobiPoint& zeta, ConnectionRatio ratio) {
    const double lambda = ratio.value();
    const Complex eb = std::conj(eta_of(zeta));
    const Complex wp = std::conj(zeta.w()) / zeta.p();
    return {
        -lambda * eb,
        lambda,
        -lambda * eb * eb + wp,
        lambda * eb,
        -lambda * eb * eb * eb,
        lambda * eb * eb + 2.0 * wp,
    };
}

TangentVector geodesic_rhs(const GeodesicState& s, ConnectionRatio ratio) {
    const double lambda = ratio.value();
    const Complex eb = std::conj(eta_of(s.pos));
    const Complex wp = std::conj(s.pos.w()) / s.pos.p();
    const Complex dz = s.vel.dz, dw = s.vel.dw;
    const Complex g1 = dz + eb * dw;
    return {-2.0 * wp * dz * dw + lambda * eb * g1 * g1, -2.0 * wp * dw * dw - lambda * g1 * g1};
}

TangentVector geodesic_rhs_christoffel(const GeodesicState& s, ConnectionRatio ratio) {
    const auto c = christoffel(s.pos, ratio);
    const Complex dz = s.vel.dz, dw = s.vel.dw;
    return {-(c.g_zzz * dz * dz + 2.0 * c.g_zzw * dz * dw + c.g_zww * dw * dw),
            -(c.g_wzz * dz * dz + 2.0 * c.g_wwz * dz * dw + c.g_www * dw * dw)};
}

DiskResiduals disk_residuals(const GeodesicState& s, const TangentVector& accel) {
    const Complex wp = std::conj(s.pos.w()) / s.pos.p();
    return {accel.dw + 2.0 * wp * s.vel.dw * s.vel.dw, accel.dz + 2.0 * wp * s.vel.dz * s.vel.dw};
}

namespace {

using Phase = std::array<Complex, 4>;  // z, w, z', w'

Phase derivative(const Phase& y, ConnectionRatio ratio) {
    const GeodesicState s{make_jacobi_point(y[0], y[1]), {y[2], y[3]}};
    const TangentVector acc = geodesic_rhs(s, ratio);
    return {y[2], y[3], acc.dz, acc.dw};
}

Phase axpy(const Phase& y, double h, const Phase& k) {
    return {y[0] + h * k[0], y[1] + h * k[1], y[2] + h * k[2], y[3] + h * k[3]};
}

}  // namespace

GeodesicPath integrate(const GeodesicState& s0, double t_end, int n_steps, ConnectionRatio ratio) {
    if (n_steps < 1) throw InvalidParams("n_steps must be >= 1");
    if (!(t_end > 0) || !std::isfinite(t_end)) throw InvalidParams("t_end must be positive and finite");
    const double h = t_end / n_steps;
    GeodesicPath path;
    path.samples.reserve(n_steps + 1);
    path.append({0.0, s0});
    Phase y = {s0.pos.z(), s0.pos.w(), s0.vel.dz, s0.vel.dw};
    double t = 0.0;
    for (int step = 0; step < n_steps; ++step) {
        try {
            const Phase k1 = derivative(y, ratio);
            const Phase k2 = derivative(axpy(y, 0.5 * h, k1), ratio);
            const Phase k3 = derivative(axpy(y, 0.5 * h, k2), ratio);
            const Phase k4 = derivative(axpy(y, h, k3), ratio);
            for (int i = 0; i < 4; ++i) y[i] += h / 6.0 * (k1[i] + 2.0 * k2[i] + 2.0 * k3[i] + k4[i]);
            const double t_next = (step + 1 == n_steps) ? t_end : (step + 1) * h;
            path.append({t_next, {make_jacobi_point(y[0], y[1]), {y[2], y[3]}}});
            t = t_next;
        } catch (const BoundaryViolation&) {
            std::ostringstream os;
            os << "geodesic left the guarded disk after t = " << t;
            throw BoundaryEscape(os.str(), t);
        }
    }
    return path;
}

namespace {

struct DiskCurve {
    Complex w, dw, ddw;
};

// w(t) = (B/|B|) tanh(t|B|) and its first two derivatives.
DiskCurve tanh_curve(Complex B, double t) {
    const double r = std::abs(B);
    if (r == 0.0) return {};
    const double th = std::tanh(t * r);
    const double sech2 = 1.0 - th * th;
    return {B / r * th, B * sech2, -2.0 * r * B * sech2 * th};
}

}  // namespace

GeodesicState fc_particular_solution(Complex eta0, Complex B, double t) {
    const DiskCurve c = tanh_curve(B, t);
    const Complex eb = std::conj(eta0);
    return {make_jacobi_point(eta0 - eb * c.w, c.w), {-eb * c.dw, c.dw}};
}

TangentVector fc_particular_acceleration(Complex eta0, Complex B, double t) {
    const DiskCurve c = tanh_curve(B, t);
    return {-std::conj(eta0) * c.ddw, c.ddw};
}

GeodesicState mu_zero_solution(Complex z0dot, Complex z1, Complex B, double t) {
    if (B == Complex{}) {
        if (z0dot != Complex{}) throw ZeroDirection("B = 0 with nonzero initial z velocity");
        return {make_jacobi_point(z1, 0.0), {}};
    }
    const DiskCurve c = tanh_curve(B, t);
    const Complex ratio = z0dot / B;
    return {make_jacobi_point(ratio * c.w + z1, c.w), {ratio * c.dw, c.dw}};
}

TangentVector mu_zero_acceleration(Complex z0dot, Complex B, double t) {
    if (B == Complex{}) {
        if (z0dot != Complex{}) throw ZeroDirection("B = 0 with nonzero initial z velocity");
        return {};
    }
    const DiskCurve c = tanh_curve(B, t);
    return {z0dot / B * c.ddw, c.ddw};
}

double curve_length(const GeodesicPath& path, const ModelParams& params) {
    if (path.samples.size() < 2) throw InvalidParams("curve_length needs at least two samples");
    double length = 0.0;
    double prev = tangent_norm(path.samples[0].state.pos, path.samples[0].state.vel, params);
    for (std::size_t i = 1; i < path.samples.size(); ++i) {
        const auto& s = path.samples[i];
        const double cur = tangent_norm(s.state.pos, s.state.vel, params);
        length += 0.5 * (prev + cur) * (s.t - path.samples[i - 1].t);
        prev = cur;
    }
    return length;
}

double energy_drift(const GeodesicPath& path, const ModelParams& params) {
    if (path.samples.empty()) return 0.0;
    auto energy = [&](const GeodesicState& s) {
        const double n = tangent_norm(s.pos, s.vel, params);
        return n * n;
    };
    const double e0 = energy(path.front());
    if (e0 == 0.0) {
        double worst = 0;
        for (const auto& s : path.samples) worst = std::max(worst, energy(s.state));
        return worst;
    }
    double worst = 0.0;
    for (const auto& s : path.samples) worst = std::max(worst, std::abs(energy(s.state) - e0) / e0);
    return worst;
}

GeodesicPath straight_path(const JacobiPoint& zeta1, const JacobiPoint& zeta2, int n_samples) {
    if (n_samples < 2) throw InvalidParams("a path needs at least two samples");
    const TangentVector v{zeta2.z() - zeta1.z(), zeta2.w() - zeta1.w()};
    GeodesicPath path;
    path.samples.reserve(n_samples);
    for (int i = 0; i < n_samples; ++i) {
        const double s = static_cast<double>(i) / (n_samples - 1);
        const JacobiPoint p = (i == n_samples - 1) ? zeta2 : make_jacobi_point(zeta1.z() + s * v.dz, zeta1.w() + s * v.dw);
        path.append({s, {p, v}});
    }
    return path;
}

std::optional<GeodesicPath> shoot_geodesic(const JacobiPoint& zeta1, const JacobiPoint& zeta2,
                                           const ModelParams& params, int n_steps, double tolerance,
                                           int max_iterations) {
    using Vec4 = std::array<double, 4>;
    const auto ratio = ConnectionRatio::from(params);
    auto endpoint_error = [&](const Vec4& v) -> std::optional<Vec4> {
        try {
            const auto path = integrate({zeta1, {{v[0], v[1]}, {v[2], v[3]}}}, 1.0, n_steps, ratio);
            const auto& end = path.back().pos;
            const Complex dz = end.z() - zeta2.z(), dw = end.w() - zeta2.w();
            return Vec4{dz.real(), dz.imag(), dw.real(), dw.imag()};
        } catch (const BoundaryEscape&) {
            return std::nullopt;
        }
    };
    auto norm = [](const Vec4& r) { return std::sqrt(r[0] * r[0] + r[1] * r[1] + r[2] * r[2] + r[3] * r[3]); };

    const Complex dz0 = zeta2.z() - zeta1.z(), dw0 = zeta2.w() - zeta1.w();
    Vec4 v = {dz0.real(), dz0.imag(), dw0.real(), dw0.imag()};
    auto r = endpoint_error(v);
    if (!r) return std::nullopt;
    for (int it = 0; it < max_iterations && norm(*r) > tolerance; ++it) {
        // Finite-difference Jacobian of the endpoint map.
        double jac[4][4];
        const double h = 1e-7;
        for (int j = 0; j < 4; ++j) {
            Vec4 vp = v;
            vp[j] += h;
            const auto rp = endpoint_error(vp);
            if (!rp) return std::nullopt;
            for (int i = 0; i < 4; ++i) jac[i][j] = ((*rp)[i] - (*r)[i]) / h;
        }
        // Gaussian elimination with partial pivoting for jac * dv = -r.
        double a[4][5];
        for (int i = 0; i < 4; ++i) {
            for (int j = 0; j < 4; ++j) a[i][j] = jac[i][j];
            a[i][4] = -(*r)[i];
        }
        for (int c = 0; c < 4; ++c) {
            int piv = c;
            for (int i = c + 1; i < 4; ++i)
                if (std::abs(a[i][c]) > std::abs(a[piv][c])) piv = i;
            if (std::abs(a[piv][c]) < 1e-300) return std::nullopt;
            for (int j = 0; j < 5; ++j) std::swap(a[c][j], a[piv][j]);
            for (int i = c + 1; i < 4; ++i) {
                const double f = a[i][c] / a[c][c];
                for (int j = c; j < 5; ++j) a[i][j] -= f * a[c][j];
            }
        }
        Vec4 dv{};
        for (int i = 3; i >= 0; --i) {
            double s = a[i][4];
            for (int j = i + 1; j < 4; ++j) s -= a[i][j] * dv[j];
            dv[i] = s / a[i][i];
        }
        // Damped update: halve until the residual decreases.
        double damping = 1.0;
        bool accepted = false;
        for (int tries = 0; tries < 20; ++tries, damping *= 0.5) {
            Vec4 trial = v;
            for (int i = 0; i < 4; ++i) trial[i] += damping * dv[i];
            const auto rt = endpoint_error(trial);
            if (rt && norm(*rt) < norm(*r)) {
                v = trial;
                r = rt;
                accepted = true;
                break;
            }
        }
        if (!accepted) return std::nullopt;
    }
    if (norm(*r) > tolerance) return std::nullopt;
    return integrate({zeta1, {{v[0], v[1]}, {v[2], v[3]}}}, 1.0, n_steps, ratio);
}

void write_path_csv(std::ostream& os, const GeodesicPath& path, const ModelParams& params) {
    os << "t,re_z,im_z,re_w,im_w,re_dz,im_dz,re_dw,im_dw,speed\n";
    os << std::setprecision(17);
    for (const auto& s : path.samples) {
        const auto& p = s.state.pos;
        const auto& v = s.state.vel;
        os << s.t << ',' << p.z().real() << ',' << p.z().imag() << ',' << p.w().real() << ',' << p.w().imag() << ','
           << v.dz.real() << ',' << v.dz.imag() << ',' << v.dw.real() << ',' << v.dw.imag() << ','
           << tangent_norm(p, v, params) << '\n';
    }
}

}  // namespace jacobi_cs
