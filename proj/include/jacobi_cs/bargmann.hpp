#pragma once

// Bargmann transform between L^2(R) and the Fock space with scale mu = 1/hbar:
// the Gaussian kernel B(z, q), the Hermite functions and quadrature checks of
// the reproducing identity and of the monomial images of the number states.

#include <vector>

#include "jacobi_cs/core.hpp"

namespace jacobi_cs {

class HBarParams {
public:
    static HBarParams make(double hbar);
    double hbar() const { return hbar_; }
    double mu() const { return 1.0 / hbar_; }

private:
    explicit HBarParams(double hbar) : hbar_(hbar) {}
    double hbar_;
};

/// Nodes and positive weights of a 1D rule.
class QuadratureRule {
public:
    static QuadratureRule make(std::vector<double> nodes, std::vector<double> weights);
    /// n-point Gauss-Hermite rule for the weight exp(-u^2) on the real line.
    static QuadratureRule gauss_hermite(int n);
    /// n-point Gauss-Legendre rule on [-1, 1].
    static QuadratureRule gauss_legendre(int n);

    const std::vector<double>& nodes() const { return nodes_; }
    const std::vector<double>& weights() const { return weights_; }
    int size() const { return static_cast<int>(nodes_.size()); }

private:
    QuadratureRule(std::vector<double> nodes, std::vector<double> weights)
        : nodes_(std::move(nodes)), weights_(std::move(weights)) {}
    std::vector<double> nodes_;
    std::vector<double> weights_;
};

/// B(z, q) = (pi hbar)^(-1/4) exp((sqrt(2) q z - (z^2 + q^2)/2) / hbar).
Complex bargmann_kernel(Complex z, double q, const HBarParams& p);

/// |int B(z,q) B(conj(w),q) dq - exp(z conj(w) / hbar)| with the Gauss-Hermite
/// rule applied after q = u sqrt(hbar). Needs at least 32 nodes.
double reproducing_check(Complex z, Complex w, const HBarParams& p, const QuadratureRule& rule);

/// phi_n(q) = hbar^(-1/4) psi_n(q / sqrt(hbar)), psi_n the normalized Hermite
/// functions, built by the raising-operator recurrence from
/// phi_0 = (pi hbar)^(-1/4) exp(-q^2 / 2hbar).
double hermite_state(int n, double q, const HBarParams& p);

/// int phi_n phi_m dq by the rule (Gaussian absorbed exactly).
double hermite_overlap(int n, int m, const HBarParams& p, const QuadratureRule& rule);

/// int B(z, q) phi_n(q) dq.
Complex bargmann_image(int n, Complex z, const HBarParams& p, const QuadratureRule& rule);

/// |bargmann_image - (sqrt(mu) z)^n / sqrt(n!)|, n <= 20.
double bargmann_image_check(int n, Complex z, const HBarParams& p, const QuadratureRule& rule);

}  // namespace jacobi_cs
