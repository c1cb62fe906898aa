#pragma once

// Kahler geometry of the Siegel-Jacobi disk: closed-form metric, Ricci form,
// scalar curvature and volume density, plus Wirtinger finite-difference
// machinery used as an independent oracle for all of them.

#include <array>
#include <functional>

#include "jacobi_cs/core.hpp"

namespace jacobi_cs {

struct RicciTensor2 {
    double r_zz = 0;
    Complex r_zw{};
    double r_ww = 0;
};

/// Central-difference step for Wirtinger derivatives. Steps are shrunk by
/// halving (down to kMinStep) when the stencil would leave the guarded disk.
class WirtingerStencil {
public:
    static constexpr double kDefaultStep = 1e-4;
    static constexpr double kMinStep = 1e-6;

    WirtingerStencil() = default;
    /// Accepts steps in [1e-7, 1e-1].
    static WirtingerStencil make(double step);
    double step() const { return step_; }

    /// Step actually usable at zeta: `step()` halved until the stencil stays
    /// 2 * step inside the guarded disk. Throws BoundaryProximity if that
    /// requires a step below kMinStep.
    double usable_step(const JacobiPoint& zeta) const;

private:
    explicit WirtingerStencil(double step) : step_(step) {}
    double step_ = kDefaultStep;
};

using RealField = std::function<double(const JacobiPoint&)>;
using ComplexField = std::function<Complex(const JacobiPoint&)>;
using MetricField = std::function<HermitianMetric2(const JacobiPoint&)>;

/// Mixed Wirtinger Hessian d^2 f / dz_a dconj(z_b) of a real function, from a
/// 4-point real stencil per coordinate pair.
HermitianMetric2 wirtinger_hessian(const RealField& f, const JacobiPoint& zeta, const WirtingerStencil& stencil);

/// Holomorphic Wirtinger derivatives {dg/dz, dg/dw}, dg/dz = (dg/dx - i dg/dy)/2.
std::array<Complex, 2> wirtinger_gradient(const ComplexField& g, const JacobiPoint& zeta,
                                          const WirtingerStencil& stencil);

/// Antiholomorphic derivatives {dg/dconj(z), dg/dconj(w)}.
std::array<Complex, 2> wirtinger_conj_gradient(const ComplexField& g, const JacobiPoint& zeta,
                                               const WirtingerStencil& stencil);

/// h_{z zbar} = mu/P, h_{z wbar} = mu eta/P, h_{w wbar} = mu |eta|^2/P + 2k/P^2.
HermitianMetric2 metric(const JacobiPoint& zeta, const ModelParams& params);

/// Wirtinger Hessian of the Kahler potential.
HermitianMetric2 metric_fd(const JacobiPoint& zeta, const ModelParams& params,
                           const WirtingerStencil& stencil = {});

/// det h as the 2x2 determinant of metric().
double metric_det(const JacobiPoint& zeta, const ModelParams& params);

/// 2 k mu / P^3.
double metric_det_closed_form(const JacobiPoint& zeta, const ModelParams& params);

/// Ric = -ddbar ln det h; only the w-component survives: -3/P^2.
RicciTensor2 ricci(const JacobiPoint& zeta, const ModelParams& params);

/// -Wirtinger Hessian of ln metric_det.
RicciTensor2 ricci_fd(const JacobiPoint& zeta, const ModelParams& params, const WirtingerStencil& stencil = {});

/// tr(h^{-1} Ric) for given metric and Ricci blocks.
double trace_against(const HermitianMetric2& h, const RicciTensor2& ric);

/// Equals -3/(2k) everywhere.
double scalar_curvature(const JacobiPoint& zeta, const ModelParams& params);

/// 3h - Ric (complex dimension 2).
HermitianMetric2 tilde_metric(const JacobiPoint& zeta, const ModelParams& params);

/// 4 k mu / P^3, density against dRe z dIm z dRe w dIm w including the
/// factor 4 of the real volume form.
double volume_density(const JacobiPoint& zeta, const ModelParams& params);

/// sqrt(sum h_{a bbar} v_a conj(v_b)).
double tangent_norm(const HermitianMetric2& h, const TangentVector& v);
double tangent_norm(const JacobiPoint& zeta, const TangentVector& v, const ModelParams& params);

/// max |d h_{a bbar}/dz_c - d h_{c bbar}/dz_a| with derivatives by finite
/// differences of the given metric field.
double kahler_condition_check(const MetricField& field, const JacobiPoint& zeta, const WirtingerStencil& stencil = {});
double kahler_condition_check(const JacobiPoint& zeta, const ModelParams& params,
                              const WirtingerStencil& stencil = {});

}  // namespace jacobi_cs
