#pragma once

// Reproducing kernels of the Heisenberg factor, the disk factor and the full
// Siegel-Jacobi disk, together with the quantities derived from them:
// Kahler potential, normalized and Berezin kernels, diastasis, and the
// orthonormal polynomial basis with its truncated kernel expansion.

#include <vector>

#include "jacobi_cs/core.hpp"

namespace jacobi_cs {

struct BasisIndex {
    int n = 0;  // Fock index
    int m = 0;  // SU(1,1) level
};

struct TruncationOrder {
    int n_max = 40;
    int m_max = 40;

    static TruncationOrder make(int n_max, int m_max);
    int size() const { return (n_max + 1) * (m_max + 1); }
};

/// exp(mu z conj(z2)).
Complex heisenberg_kernel(Complex z, Complex z2, double mu);

/// (1 - w conj(w2))^(-2k), principal branch.
Complex disk_kernel(const DiskPoint& w, const DiskPoint& w2, double k);

/// F(zeta, conj(zeta2)) = (2 conj(z2) z + z^2 conj(w2) + conj(z2)^2 w) / (2(1 - w conj(w2))).
Complex cross_F(const JacobiPoint& zeta, const JacobiPoint& zeta2);

/// Diagonal value F(zeta, conj(zeta)); always real.
double diagonal_F(const JacobiPoint& zeta);

/// Principal log of K(zeta, conj(zeta2)).
Complex log_jacobi_kernel(const JacobiPoint& zeta, const JacobiPoint& zeta2, const ModelParams& params);

/// K(zeta, conj(zeta2)) = (1 - w conj(w2))^(-2k) exp(mu F(zeta, conj(zeta2))).
Complex jacobi_kernel(const JacobiPoint& zeta, const JacobiPoint& zeta2, const ModelParams& params);

/// f = ln K(zeta, conj(zeta)) = mu F(zeta) - 2k ln(1 - |w|^2).
double kahler_potential(const JacobiPoint& zeta, const ModelParams& params);

/// K(zeta, conj(zeta2)) / sqrt(K(zeta) K(zeta2)), combined in log space.
Complex normalized_kernel(const JacobiPoint& zeta, const JacobiPoint& zeta2, const ModelParams& params);

/// |normalized_kernel|^2.
double berezin_kernel(const JacobiPoint& zeta, const JacobiPoint& zeta2, const ModelParams& params);

/// Calabi diastasis -ln b(zeta, zeta2).
double diastasis(const JacobiPoint& zeta, const JacobiPoint& zeta2, const ModelParams& params);

/// Same quantity assembled from the disk and Heisenberg closed forms:
/// D/2 = k ln(|1 - w conj(w2)|^2 / (P P2)) + mu[(F(zeta) + F(zeta2))/2 - Re F(zeta, conj(zeta2))].
double diastasis_closed_form(const JacobiPoint& zeta, const JacobiPoint& zeta2, const ModelParams& params);

/// P_n(z, w) = n! sum_{p <= n/2} (w/2)^p z^(n-2p) / (p! (n-2p)!).
Complex pn_polynomial(int n, Complex z, Complex w);

/// f_{n,m}(zeta) = sqrt(Gamma(m + 2k') / (m! Gamma(2k'))) w^m P_n(sqrt(mu) z, w) / sqrt(n!)
/// with k' = k - 1/4. Throws InvalidK when 2k' is not a positive integer.
Complex basis_function(BasisIndex idx, const JacobiPoint& zeta, const ModelParams& params);

/// Evaluates the f_{n,m} table repeatedly for fixed (params, trunc) with
/// the normalization coefficients computed once.
class BasisEvaluator {
public:
    BasisEvaluator(const ModelParams& params, TruncationOrder trunc);
    /// Fills out[n * (m_max + 1) + m]; out is resized as needed.
    void evaluate(const JacobiPoint& zeta, std::vector<Complex>& out);
    TruncationOrder truncation() const { return trunc_; }

private:
    double sqrt_mu_;
    TruncationOrder trunc_;
    std::vector<double> coeff_;
    std::vector<Complex> disk_, q_;
};

/// All f_{n,m}(zeta) for n <= n_max, m <= m_max, stored row-major as
/// values[n * (m_max + 1) + m].
std::vector<Complex> basis_table(const JacobiPoint& zeta, const ModelParams& params, TruncationOrder trunc);

/// sum_{n <= n_max, m <= m_max} f_{n,m}(zeta) conj(f_{n,m}(zeta2)).
Complex kernel_series(const JacobiPoint& zeta, const JacobiPoint& zeta2, const ModelParams& params,
                      TruncationOrder trunc);

}  // namespace jacobi_cs
