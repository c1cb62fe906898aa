#pragma once

// Geodesics of the Siegel-Jacobi disk: Christoffel symbols, the geodesic
// ODE, a fixed-step RK4 integrator, the closed-form particular solutions and
// curve lengths.

#include <iosfwd>
#include <optional>
#include <vector>

#include "jacobi_cs/core.hpp"

namespace jacobi_cs {

/// lambda = mu / (2k), the only parameter entering the connection. The
/// mu = 0 limit (pure disk geodesics in z) is allowed here even though the
/// metric itself degenerates there.
class ConnectionRatio {
public:
    static ConnectionRatio from(const ModelParams& params) { return ConnectionRatio(params.mu() / (2.0 * params.k())); }
    static ConnectionRatio flat_heisenberg_limit() { return ConnectionRatio(0.0); }
    double value() const { return lambda_; }

private:
    explicit ConnectionRatio(double lambda) : lambda_(lambda) {}
    double lambda_;
};

/// The six nonzero symbols; the remaining ones follow from symmetry in the
/// lower indices.
struct ChristoffelSet {
    Complex g_zzz;  // Gamma^z_zz
    Complex g_wzz;  // Gamma^w_zz
    Complex g_zzw;  // Gamma^z_zw
    Complex g_wwz;  // Gamma^w_wz
    Complex g_zww;  // Gamma^z_ww
    Complex g_www;  // Gamma^w_ww
};

ChristoffelSet christoffel(const JacobiPoint& zeta, ConnectionRatio ratio);
inline ChristoffelSet christoffel(const JacobiPoint& zeta, const ModelParams& params) {
    return christoffel(zeta, ConnectionRatio::from(params));
}

struct GeodesicState {
    JacobiPoint pos;
    TangentVector vel;
};

struct PathSample {
    double t;
    GeodesicState state;
};

struct GeodesicPath {
    std::vector<PathSample> samples;

    /// Throws InvalidParams unless t is strictly increasing.
    void append(PathSample s);
    const GeodesicState& front() const { return samples.front().state; }
    const GeodesicState& back() const { return samples.back().state; }
};

/// Second derivatives from the system
///   z'' = -2 (conj(w)/P) z' w' + lambda conj(eta) G1^2
///   w'' = -2 (conj(w)/P) w'^2 - lambda G1^2,   G1 = z' + conj(eta) w'.
TangentVector geodesic_rhs(const GeodesicState& s, ConnectionRatio ratio);
inline TangentVector geodesic_rhs(const GeodesicState& s, const ModelParams& params) {
    return geodesic_rhs(s, ConnectionRatio::from(params));
}

/// Same acceleration from -Gamma^i_jk v^j v^k.
TangentVector geodesic_rhs_christoffel(const GeodesicState& s, ConnectionRatio ratio);

/// Disk residuals G2 = w'' + 2(conj(w)/P) w'^2 and G3 = z'' + 2(conj(w)/P) z' w'.
struct DiskResiduals {
    Complex g2;
    Complex g3;
};
DiskResiduals disk_residuals(const GeodesicState& s, const TangentVector& accel);

/// Classical RK4 with n_steps equal steps on [0, t_end]. Throws
/// BoundaryEscape if any stage leaves the guarded disk.
GeodesicPath integrate(const GeodesicState& s0, double t_end, int n_steps, ConnectionRatio ratio);
inline GeodesicPath integrate(const GeodesicState& s0, double t_end, int n_steps, const ModelParams& params) {
    return integrate(s0, t_end, n_steps, ConnectionRatio::from(params));
}

/// w(t) = (B/|B|) tanh(t|B|), z(t) = eta0 - conj(eta0) w(t); eta stays eta0.
GeodesicState fc_particular_solution(Complex eta0, Complex B, double t);
/// Closed-form second derivative of the same curve.
TangentVector fc_particular_acceleration(Complex eta0, Complex B, double t);

/// mu = 0 geodesic: w(t) as above, z(t) = (z0dot/B) w(t) + z1.
/// Throws ZeroDirection when B = 0 but z0dot != 0.
GeodesicState mu_zero_solution(Complex z0dot, Complex z1, Complex B, double t);
TangentVector mu_zero_acceleration(Complex z0dot, Complex B, double t);

/// Trapezoidal integral of the metric speed over the samples.
double curve_length(const GeodesicPath& path, const ModelParams& params);

/// Largest relative drift of h(v, v) along the path.
double energy_drift(const GeodesicPath& path, const ModelParams& params);

/// Straight segment zeta1 + s (zeta2 - zeta1), s in [0, 1], n_samples >= 2.
GeodesicPath straight_path(const JacobiPoint& zeta1, const JacobiPoint& zeta2, int n_samples);

/// Experimental shooting solver for the geodesic from zeta1 to zeta2 on
/// t in [0, 1]: Newton iteration on the initial velocity with a
/// finite-difference Jacobian. Returns nothing if it fails to converge.
std::optional<GeodesicPath> shoot_geodesic(const JacobiPoint& zeta1, const JacobiPoint& zeta2,
                                           const ModelParams& params, int n_steps = 1000, double tolerance = 1e-10,
                                           int max_iterations = 30);

/// CSV with header t,re_z,im_z,re_w,im_w,re_dz,im_dz,re_dw,im_dw,speed.
void write_path_csv(std::ostream& os, const GeodesicPath& path, const ModelParams& params);

}  // namespace jacobi_cs
