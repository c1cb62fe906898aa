#include "jacobi_cs/forms.hpp"

#include <algorithm>
#include <cmath>

namespace jacobi_cs {

namespace {

// Complex unit vectors for the four real directions.
constexpr std::array<std::array<double, 4>, 4> kBasis = {{{1, 0, 0, 0}, {0, 1, 0, 0}, {0, 0, 1, 0}, {0, 0, 0, 1}}};

std::array<Complex, 2> as_complex(const std::array<double, 4>& v) { return {{{v[0], v[1]}, {v[2], v[3]}}}; }

Complex hermitian_pairing(const HermitianMetric2& h, const std::array<Complex, 2>& u,
                          const std::array<Complex, 2>& v) {
    return h.h_zz * u[0] * std::conj(v[0]) + h.h_zw * u[0] * std::conj(v[1]) +
           std::conj(h.h_zw) * u[1] * std::conj(v[0]) + h.h_ww * u[1] * std::conj(v[1]);
}

// Complex structure: multiplication by i in each complex coordinate.
constexpr Matrix4 kComplexStructure = {{{0, -1, 0, 0}, {1, 0, 0, 0}, {0, 0, 0, -1}, {0, 0, 1, 0}}};

}  // namespace

RealTwoForm RealTwoForm::from_hermitian(const HermitianMetric2& h) {
    RealTwoForm f;
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j)
            f.omega[i][j] = -2.0 * std::imag(hermitian_pairing(h, as_complex(kBasis[i]), as_complex(kBasis[j])));
    return f;
}

HermitianMetric2 RealTwoForm::hermitian_part() const {
    // H(u, v) = omega(u, Jv)/2 - i omega(u, v)/2. The mixed entries come in
    // pairs that agree for a (1,1)-form; averaging them drops the (2,0) part.
    HermitianMetric2 h;
    h.h_zz = 0.5 * omega[0][1];
    h.h_ww = 0.5 * omega[2][3];
    h.h_zw = {0.25 * (omega[0][3] - omega[1][2]), -0.25 * (omega[0][2] + omega[1][3])};
    return h;
}

double RealTwoForm::non_hermitian_residual() const {
    // A (1,1)-form satisfies omega(Ju, Jv) = omega(u, v).
    double worst = 0;
    for (int i = 0; i < 4; ++i) {
        for (int j = 0; j < 4; ++j) {
            double rotated = 0;
            for (int a = 0; a < 4; ++a)
                for (int b = 0; b < 4; ++b)
                    rotated += kComplexStructure[a][i] * omega[a][b] * kComplexStructure[b][j];
            worst = std::max(worst, 0.5 * std::abs(rotated - omega[i][j]));
        }
    }
    return worst;
}

RealTwoForm RealTwoForm::pullback(const Matrix4& d) const {
    RealTwoForm out;
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j) {
            double s = 0;
            for (int a = 0; a < 4; ++a)
                for (int b = 0; b < 4; ++b) s += d[a][i] * omega[a][b] * d[b][j];
            out.omega[i][j] = s;
        }
    return out;
}

Matrix4 real_jacobian(const RealMap& map, const Real4& x, double step) {
    Matrix4 d{};
    for (int j = 0; j < 4; ++j) {
        Real4 xp = x, xm = x;
        xp[j] += step;
        xm[j] -= step;
        const Real4 fp = map(xp), fm = map(xm);
        for (int i = 0; i < 4; ++i) d[i][j] = (fp[i] - fm[i]) / (2.0 * step);
    }
    return d;
}

HermitianMetric2 pullback_holomorphic(const std::array<std::array<Complex, 2>, 2>& jac,
                                      const HermitianMetric2& target) {
    const Complex t[2][2] = {{target.h_zz, target.h_zw}, {std::conj(target.h_zw), target.h_ww}};
    Complex src[2][2] = {};
    for (int a = 0; a < 2; ++a)
        for (int b = 0; b < 2; ++b)
            for (int c = 0; c < 2; ++c)
                for (int d = 0; d < 2; ++d) src[a][b] += jac[c][a] * t[c][d] * std::conj(jac[d][b]);
    return {src[0][0].real(), src[0][1], src[1][1].real()};
}

}  // namespace jacobi_cs
