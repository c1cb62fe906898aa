#pragma once

// Real-coordinate representation of (1,1)-forms on C^2, used to pull Kahler
// forms back through maps that are smooth but not holomorphic (the
// FC-transform mixes eta and conj(eta)).
//
// Coordinates are ordered (Re z, Im z, Re w, Im w). A Hermitian block h
// defines omega(u, v) = -2 Im sum h_{a bbar} u_a conj(v_b).

#include <array>
#include <functional>

#include "jacobi_cs/core.hpp"

namespace jacobi_cs {

using Real4 = std::array<double, 4>;
using Matrix4 = std::array<std::array<double, 4>, 4>;

struct RealTwoForm {
    Matrix4 omega{};  // antisymmetric

    static RealTwoForm from_hermitian(const HermitianMetric2& h);

    /// Hermitian coefficients of the (1,1) part.
    HermitianMetric2 hermitian_part() const;
    /// Largest entry of the (2,0) + (0,2) part; zero for a (1,1)-form.
    double non_hermitian_residual() const;
    /// omega(D., D.) for a real Jacobian D.
    RealTwoForm pullback(const Matrix4& jacobian) const;
};

using RealMap = std::function<Real4(const Real4&)>;

/// Central-difference Jacobian D_ij = d map_i / d x_j.
Matrix4 real_jacobian(const RealMap& map, const Real4& x, double step);

/// Holomorphic pullback h_src = J^T h_tgt conj(J), J_ij = d f_i / d zeta_j.
HermitianMetric2 pullback_holomorphic(const std::array<std::array<Complex, 2>, 2>& jacobian,
                                      const HermitianMetric2& target);

}  // namespace jacobi_cs
