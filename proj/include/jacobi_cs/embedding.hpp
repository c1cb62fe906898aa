#pragma once

// Truncated projective embedding of the Siegel-Jacobi disk by the orthonormal
// basis, the Cayley distance on projective space, the coherent-state angle
// and the comparisons between them.

#include <vector>

#include "jacobi_cs/core.hpp"
#include "jacobi_cs/geodesics.hpp"
#include "jacobi_cs/geometry.hpp"
#include "jacobi_cs/kernels.hpp"

namespace jacobi_cs {

/// Homogeneous coordinates, not all zero.
class ProjectiveVector {
public:
    static ProjectiveVector make(std::vector<Complex> components);
    const std::vector<Complex>& components() const { return c_; }
    std::size_t size() const { return c_.size(); }
    double norm() const;

private:
    explicit ProjectiveVector(std::vector<Complex> c) : c_(std::move(c)) {}
    std::vector<Complex> c_;
};

/// Basis indices of a truncation in embedding order: n + m ascending, then n.
std::vector<BasisIndex> embedding_order(TruncationOrder trunc);

/// [f_{n,m}(zeta)] in embedding_order.
ProjectiveVector embed(const JacobiPoint& zeta, const ModelParams& params, TruncationOrder trunc);

/// sum conj(u_i) v_i.
Complex inner(const ProjectiveVector& u, const ProjectiveVector& v);

/// arccos(|<v1, v2>| / (|v1| |v2|)) in [0, pi/2]. Throws DimensionMismatch.
double cayley_distance(const ProjectiveVector& v1, const ProjectiveVector& v2);

/// arccos |normalized_kernel(zeta1, zeta2)|, evaluated through the closed-form
/// diastasis so that nearby points keep full relative precision.
double cs_angle(const JacobiPoint& zeta1, const JacobiPoint& zeta2, const ModelParams& params);

/// |normalized_kernel(zeta1, zeta2) - <embed(zeta2), embed(zeta1)> / (|.| |.|)|.
double cauchy_check(const JacobiPoint& zeta1, const JacobiPoint& zeta2, const ModelParams& params,
                    TruncationOrder trunc);

/// Relative gap 1 - |embed(zeta)|^2 / K(zeta, conj(zeta)).
double embedding_norm_tail(const JacobiPoint& zeta, const ModelParams& params, TruncationOrder trunc);

/// Largest entry of |metric - Wirtinger Hessian of ln sum |f_{n,m}|^2|.
double fubini_study_pullback_check(const JacobiPoint& zeta, const ModelParams& params, TruncationOrder trunc,
                                   const WirtingerStencil& stencil = {});

struct InequalityReport {
    double length = 0;  // curve length, an upper bound for the Bergman distance
    double angle = 0;   // coherent-state angle
    double margin = 0;  // length - angle
    bool holds = false; // length >= angle - 1e-9
};

/// Checks curve_length(path) >= cs_angle(zeta1, zeta2). The path must start
/// at zeta1 and end at zeta2 within 1e-6, else EndpointMismatch.
InequalityReport distance_angle_inequality_check(const JacobiPoint& zeta1, const JacobiPoint& zeta2,
                                                 const ModelParams& params, const GeodesicPath& path);

}  // namespace jacobi_cs
