#include "jacobi_cs/kernels.hpp"

#include <cmath>

namespace jacobi_cs {

TruncationOrder TruncationOrder::make(int n_max, int m_max) {
    if (n_max < 1 || m_max < 1) throw InvalidParams("truncation orders must be >= 1");
    return {n_max, m_max};
}

Complex heisenberg_kernel(Complex z, Complex z2, double mu) {
    if (!(mu > 0)) throw InvalidParams("mu must be positive");
    return std::exp(mu * z * std::conj(z2));
}

Complex disk_kernel(const DiskPoint& w, const DiskPoint& w2, double k) {
    // Re(1 - w conj(w2)) > 0 on the open bidisk, so the principal log is smooth.
    return std::exp(-2.0 * k * std::log(1.0 - w.value() * std::conj(w2.value())));
}

Complex cross_F(const JacobiPoint& zeta, const JacobiPoint& zeta2) {
    const Complex z = zeta.z(), w = zeta.w();
    const Complex z2c = std::conj(zeta2.z()), w2c = std::conj(zeta2.w());
    return (2.0 * z2c * z + z * z * w2c + z2c * z2c * w) / (2.0 * (1.0 - w * w2c));
}

double diagonal_F(const JacobiPoint& zeta) {
    const Complex z = zeta.z(), w = zeta.w();
    // 2|z|^2 + 2 Re(z^2 conj(w)), over 2P.
    return (std::norm(z) + std::real(z * z * std::conj(w))) / zeta.p();
}

Complex log_jacobi_kernel(const JacobiPoint& zeta, const JacobiPoint& zeta2, const ModelParams& params) {
    const Complex one_minus = 1.0 - zeta.w() * std::conj(zeta2.w());
    return -2.0 * params.k() * std::log(one_minus) + params.mu() * cross_F(zeta, zeta2);
}

Complex jacobi_kernel(const JacobiPoint& zeta, const JacobiPoint& zeta2, const ModelParams& params) {
    return std::exp(log_jacobi_kernel(zeta, zeta2, params));
}

double kahler_potential(const JacobiPoint& zeta, const ModelParams& params) {
    return params.mu() * diagonal_F(zeta) - 2.0 * params.k() * std::log(zeta.p());
}

Complex normalized_kernel(const JacobiPoint& zeta, const JacobiPoint& zeta2, const ModelParams& params) {
    const Complex log_cross = log_jacobi_kernel(zeta, zeta2, params);
    const double log_diag = 0.5 * (kahler_potential(zeta, params) + kahler_potential(zeta2, params));
    return std::exp(log_cross - log_diag);
}

double berezin_kernel(const JacobiPoint& zeta, const JacobiPoint& zeta2, const ModelParams& params) {
    const double log_modulus = std::real(log_jacobi_kernel(zeta, zeta2, params)) -
                               0.5 * (kahler_potential(zeta, params) + kahler_potential(zeta2, params));
    return std::exp(2.0 * log_modulus);
}

double diastasis(const JacobiPoint& zeta, const JacobiPoint& zeta2, const ModelParams& params) {
    // -ln b evaluated from log|kappa| directly; b itself underflows for far pairs.
    const double log_modulus = std::real(log_jacobi_kernel(zeta, zeta2, params)) -
                               0.5 * (kahler_potential(zeta, params) + kahler_potential(zeta2, params));
    return 0.0 - 2.0 * log_modulus;
}

double diastasis_closed_form(const JacobiPoint& zeta, const JacobiPoint& zeta2, const ModelParams& params) {
    // |1 - w conj(w2)|^2 = P P2 + |w - w2|^2, so the disk part is a log1p that
    // vanishes exactly on the diagonal; the F terms share one formula for the same reason.
    const double disk = std::log1p(std::norm(zeta.w() - zeta2.w()) / (zeta.p() * zeta2.p()));
    const double heis = 0.5 * (std::real(cross_F(zeta, zeta)) + std::real(cross_F(zeta2, zeta2))) -
                        std::real(cross_F(zeta, zeta2));
    return 2.0 * (params.k() * disk + params.mu() * heis);
}

Complex pn_polynomial(int n, Complex z, Complex w) {
    if (n < 0) throw InvalidParams("polynomial index must be non-negative");
    // Generating function exp(z t + w t^2 / 2) gives P_{n+1} = z P_n + n w P_{n-1}.
    Complex prev{}, cur = 1.0;
    for (int j = 0; j < n; ++j) {
        const Complex next = z * cur + static_cast<double>(j) * w * prev;
        prev = cur;
        cur = next;
    }
    return cur;
}

namespace {

// sqrt(Gamma(m + 2k') / (m! Gamma(2k'))) for m = 0..m_max, via log-gamma.
std::vector<double> disk_coefficients(double two_kp, int m_max) {
    std::vector<double> c(m_max + 1);
    const double lg_base = std::lgamma(two_kp);
    for (int m = 0; m <= m_max; ++m)
        c[m] = std::exp(0.5 * (std::lgamma(m + two_kp) - std::lgamma(m + 1.0) - lg_base));
    return c;
}

// Q_n = P_n(x, w) / sqrt(n!) for n = 0..n_max.
std::vector<Complex> normalized_hermite_like(Complex x, Complex w, int n_max) {
    std::vector<Complex> q(n_max + 1);
    q[0] = 1.0;
    if (n_max >= 1) q[1] = x;
    for (int n = 1; n < n_max; ++n) q[n + 1] = (x * q[n] + std::sqrt(static_cast<double>(n)) * w * q[n - 1]) /
                                              std::sqrt(n + 1.0);
    return q;
}

}  // namespace

Complex basis_function(BasisIndex idx, const JacobiPoint& zeta, const ModelParams& params) {
    params.require_quarter_basis();
    if (idx.n < 0 || idx.m < 0) throw InvalidParams("basis index must be non-negative");
    const double two_kp = 2.0 * params.shifted_index();
    const double coeff = std::exp(0.5 * (std::lgamma(idx.m + two_kp) - std::lgamma(idx.m + 1.0) - std::lgamma(two_kp)));
    const auto q = normalized_hermite_like(std::sqrt(params.mu()) * zeta.z(), zeta.w(), idx.n);
    Complex wm = 1.0;
    for (int j = 0; j < idx.m; ++j) wm *= zeta.w();
    return coeff * wm * q[idx.n];
}

BasisEvaluator::BasisEvaluator(const ModelParams& params, TruncationOrder trunc)
    : sqrt_mu_(std::sqrt(params.mu())), trunc_(trunc) {
    params.require_quarter_basis();
    coeff_ = disk_coefficients(2.0 * params.shifted_index(), trunc.m_max);
    disk_.resize(trunc.m_max + 1);
    q_.resize(trunc.n_max + 1);
}

void BasisEvaluator::evaluate(const JacobiPoint& zeta, std::vector<Complex>& out) {
    const Complex x = sqrt_mu_ * zeta.z(), w = zeta.w();
    q_[0] = 1.0;
    if (trunc_.n_max >= 1) q_[1] = x;
    for (int n = 1; n < trunc_.n_max; ++n)
        q_[n + 1] = (x * q_[n] + std::sqrt(static_cast<double>(n)) * w * q_[n - 1]) / std::sqrt(n + 1.0);
    Complex wm = 1.0;
    for (int m = 0; m <= trunc_.m_max; ++m) {
        disk_[m] = coeff_[m] * wm;
        wm *= w;
    }
    out.resize(trunc_.size());
    for (int n = 0; n <= trunc_.n_max; ++n)
        for (int m = 0; m <= trunc_.m_max; ++m) out[n * (trunc_.m_max + 1) + m] = disk_[m] * q_[n];
}

std::vector<Complex> basis_table(const JacobiPoint& zeta, const ModelParams& params, TruncationOrder trunc) {
    BasisEvaluator ev(params, trunc);
    std::vector<Complex> out;
    ev.evaluate(zeta, out);
    return out;
}

Complex kernel_series(const JacobiPoint& zeta, const JacobiPoint& zeta2, const ModelParams& params,
                      TruncationOrder trunc) {
    const auto a = basis_table(zeta, params, trunc);
    const auto b = basis_table(zeta2, params, trunc);
    Complex sum{};
    for (std::size_t i = 0; i < a.size(); ++i) sum += a[i] * std::conj(b[i]);
    return sum;
}

}  // namespace jacobi_cs
