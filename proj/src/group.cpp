#include "jacobi_cs/group.hpp"

#include <cmath>
#include <sstream>

namespace jacobi_cs {

SU11Element SU11Element::make(Complex a, Complex b) {
    if (!is_finite(a) || !is_finite(b)) throw NonFinite("SU(1,1) entries must be finite");
    const double det = std::norm(a) - std::norm(b);
    if (std::abs(det - 1.0) > kDeterminantTolerance) {
        std::ostringstream os;
        os << "|a|^2 - |b|^2 = " << det << " is not 1";
        throw InvalidParams(os.str());
    }
    return SU11Element(a, b);
}

SU11Element SU11Element::from_angles(double r, double phi, double psi) {
    return SU11Element(std::polar(std::cosh(r), phi), std::polar(std::sinh(r), psi));
}

SU11Element operator*(const SU11Element& g1, const SU11Element& g2) {
    return SU11Element(g1.a_ * g2.a_ + g1.b_ * std::conj(g2.b_), g1.a_ * g2.b_ + g1.b_ * std::conj(g2.a_));
}

namespace {

Complex denominator(const SU11Element& g, Complex w) {
    const Complex delta = std::conj(g.b()) * w + std::conj(g.a());
    if (std::abs(delta) <= 1e-12) throw DomainError("Mobius denominator vanished");
    return delta;
}

}  // namespace

DiskPoint mobius(const SU11Element& g, const DiskPoint& w) {
    const Complex delta = denominator(g, w.value());
    return DiskPoint::make((g.a() * w.value() + g.b()) / delta);
}

double heisenberg_phase(Complex alpha2, Complex alpha1, double mu) {
    if (!(mu > 0)) throw InvalidParams("mu must be positive");
    return mu * std::imag(alpha2 * std::conj(alpha1));
}

ActionResult jacobi_action(const JacobiGroupElement& e, const JacobiPoint& zeta, const ModelParams& params) {
    const Complex a = e.g.a(), b = e.g.b();
    const Complex z = zeta.z(), w = zeta.w();
    const Complex alpha_c = std::conj(e.alpha);
    const Complex delta = denominator(e.g, w);
    const Complex gamma = z + e.alpha - alpha_c * w;

    JacobiPoint image(gamma / delta, DiskPoint::make((a * w + b) / delta));

    const Complex log_delta = std::log(std::conj(a)) + std::log(1.0 + std::conj(b) / std::conj(a) * w);
    const Complex lambda1 = alpha_c * (z + gamma) + std::conj(b) * gamma * gamma / delta;
    const Complex log_multiplier =
        -2.0 * params.k() * log_delta - 0.5 * params.mu() * lambda1 + Complex(0.0, params.mu() * e.t);
    return {image, std::exp(log_multiplier)};
}

JacobiPoint fc_forward(Complex eta, const DiskPoint& w) {
    if (!is_finite(eta)) throw NonFinite("eta is not finite");
    return JacobiPoint(eta - w.value() * std::conj(eta), w);
}

EtaCoordinates fc_inverse(const JacobiPoint& zeta) { return {eta_of(zeta), zeta.disk()}; }

EtaCoordinates action_eta_coords(const JacobiGroupElement& e, Complex eta, const DiskPoint& w) {
    const Complex shifted = eta + e.alpha;
    return {e.g.a() * shifted + e.g.b() * std::conj(shifted), mobius(e.g, w)};
}

DiskPoint disk_geodesic_map(Complex z, double t) {
    const double r = std::abs(z);
    if (r == 0.0) return DiskPoint::make(0.0);
    return DiskPoint::make(z / r * std::tanh(t * r));
}

std::array<std::array<Complex, 2>, 2> jacobi_action_jacobian(const JacobiGroupElement& e, const JacobiPoint& zeta,
                                                             const ModelParams& params,
                                                             const WirtingerStencil& stencil) {
    const auto dz1 = wirtinger_gradient(
        [&](const JacobiPoint& x) { return jacobi_action(e, x, params).point.z(); }, zeta, stencil);
    const auto dw1 = wirtinger_gradient(
        [&](const JacobiPoint& x) { return jacobi_action(e, x, params).point.w(); }, zeta, stencil);
    return {{{dz1[0], dz1[1]}, {dw1[0], dw1[1]}}};
}

HermitianMetric2 split_metric(const DiskPoint& w, const ModelParams& params) {
    const double p = w.p();
    return {params.mu(), Complex{}, 2.0 * params.k() / (p * p)};
}

SplitFormReport fc_pullback(Complex eta, const DiskPoint& w, const ModelParams& params, double jacobian_step) {
    const JacobiPoint image = fc_forward(eta, w);
    const RealTwoForm target = RealTwoForm::from_hermitian(metric(image, params));
    const RealMap fc = [](const Real4& x) {
        const Complex e(x[0], x[1]), ww(x[2], x[3]);
        const Complex z = e - ww * std::conj(e);
        return Real4{z.real(), z.imag(), x[2], x[3]};
    };
    const Matrix4 jac = real_jacobian(fc, {eta.real(), eta.imag(), w.value().real(), w.value().imag()}, jacobian_step);
    const RealTwoForm pulled = target.pullback(jac);
    return {pulled.hermitian_part(), pulled.non_hermitian_residual()};
}

SplitFormReport split_form_pullback_under_action(const JacobiGroupElement& e, Complex eta, const DiskPoint& w,
                                                 const ModelParams& params, double jacobian_step) {
    const EtaCoordinates image = action_eta_coords(e, eta, w);
    const RealTwoForm target = RealTwoForm::from_hermitian(split_metric(image.w, params));
    const RealMap act = [&](const Real4& x) {
        const auto r = action_eta_coords(e, {x[0], x[1]}, DiskPoint::make({x[2], x[3]}));
        return Real4{r.eta.real(), r.eta.imag(), r.w.value().real(), r.w.value().imag()};
    };
    const Matrix4 jac = real_jacobian(act, {eta.real(), eta.imag(), w.value().real(), w.value().imag()}, jacobian_step);
    const RealTwoForm pulled = target.pullback(jac);
    return {pulled.hermitian_part(), pulled.non_hermitian_residual()};
}

}  // namespace jacobi_cs
