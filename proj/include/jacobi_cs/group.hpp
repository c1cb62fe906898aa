#pragma once

// SU(1,1) and Jacobi group actions on D_1 and on C x D_1, the multiplier of
// the coherent-state vectors, the Heisenberg composition phase and the
// FC-transform z = eta - w conj(eta) with its inverse.
//
// The FC-transform is a diffeomorphism but not holomorphic in eta, so forms
// are pulled back through it with the full real Jacobian (see forms.hpp).

#include <array>

#include "jacobi_cs/core.hpp"
#include "jacobi_cs/forms.hpp"
#include "jacobi_cs/geometry.hpp"

namespace jacobi_cs {

/// g = [[a, b], [conj(b), conj(a)]] with |a|^2 - |b|^2 = 1.
class SU11Element {
public:
    static constexpr double kDeterminantTolerance = 1e-12;

    static SU11Element make(Complex a, Complex b);
    static SU11Element identity() { return SU11Element({1.0, 0.0}, {}); }
    /// a = cosh(r) e^{i phi}, b = sinh(r) e^{i psi}.
    static SU11Element from_angles(double r, double phi, double psi);

    Complex a() const { return a_; }
    Complex b() const { return b_; }
    double determinant() const { return std::norm(a_) - std::norm(b_); }
    SU11Element inverse() const { return SU11Element(std::conj(a_), -b_); }

    /// Matrix product; the result is not re-validated so drift can be measured.
    friend SU11Element operator*(const SU11Element& g1, const SU11Element& g2);

private:
    SU11Element(Complex a, Complex b) : a_(a), b_(b) {}
    Complex a_;
    Complex b_;
};

struct JacobiGroupElement {
    SU11Element g = SU11Element::identity();
    Complex alpha{};
    double t = 0.0;  // central parameter
};

/// (a w + b) / (conj(b) w + conj(a)).
DiskPoint mobius(const SU11Element& g, const DiskPoint& w);

/// theta_mu(alpha2, alpha1) = mu Im(alpha2 conj(alpha1)).
double heisenberg_phase(Complex alpha2, Complex alpha1, double mu);

struct ActionResult {
    JacobiPoint point;
    Complex multiplier;
};

/// Image zeta_1 = (gamma/delta, g.w) with gamma = z + alpha - conj(alpha) w,
/// delta = conj(b) w + conj(a), and multiplier
/// delta^(-2k) exp(-mu/2 (conj(alpha)(z + gamma) + conj(b) gamma^2 / delta)) exp(i mu t).
///
/// delta^(-2k) uses log(delta) = Log(conj(a)) + Log(1 + (conj(b)/conj(a)) w), a
/// branch that is continuous in w on the whole disk.
ActionResult jacobi_action(const JacobiGroupElement& e, const JacobiPoint& zeta, const ModelParams& params);

struct EtaCoordinates {
    Complex eta;
    DiskPoint w;
};

/// (eta, w) -> (eta - w conj(eta), w).
JacobiPoint fc_forward(Complex eta, const DiskPoint& w);

/// (z, w) -> ((z + conj(z) w)/(1 - |w|^2), w).
EtaCoordinates fc_inverse(const JacobiPoint& zeta);

/// eta_1 = a(eta + alpha) + b(conj(eta) + conj(alpha)), w_1 = g.w.
EtaCoordinates action_eta_coords(const JacobiGroupElement& e, Complex eta, const DiskPoint& w);

/// w = (z/|z|) tanh(t |z|); 0 for z = 0.
DiskPoint disk_geodesic_map(Complex z, double t);

/// Complex Jacobian d(z_1, w_1)/d(z, w) of jacobi_action by Wirtinger differences.
std::array<std::array<Complex, 2>, 2> jacobi_action_jacobian(const JacobiGroupElement& e, const JacobiPoint& zeta,
                                                             const ModelParams& params,
                                                             const WirtingerStencil& stencil = {});

/// Kahler form at FC(eta, w) pulled back to (eta, w) coordinates.
struct SplitFormReport {
    HermitianMetric2 coefficients;    // h_{eta etabar}, h_{eta wbar}, h_{w wbar}
    double non_hermitian_residual;    // (2,0) + (0,2) part of the pullback
};

SplitFormReport fc_pullback(Complex eta, const DiskPoint& w, const ModelParams& params, double jacobian_step = 1e-3);

/// The split form mu |d eta|^2 + 2k |dw|^2 / P^2.
HermitianMetric2 split_metric(const DiskPoint& w, const ModelParams& params);

/// Split form at action_eta_coords(e, eta, w) pulled back to (eta, w).
SplitFormReport split_form_pullback_under_action(const JacobiGroupElement& e, Complex eta, const DiskPoint& w,
                                                 const ModelParams& params, double jacobian_step = 1e-4);

}  // namespace jacobi_cs
