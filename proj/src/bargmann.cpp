#include "jacobi_cs/bargmann.hpp"

#include <cmath>
#include <sstream>

namespace jacobi_cs {

HBarParams HBarParams::make(double hbar) {
    if (!std::isfinite(hbar)) throw NonFinite("hbar is not finite");
    if (!(hbar > 0)) throw InvalidParams("hbar must be positive");
    return HBarParams(hbar);
}

QuadratureRule QuadratureRule::make(std::vector<double> nodes, std::vector<double> weights) {
    if (nodes.size() != weights.size()) throw DimensionMismatch("nodes and weights differ in length");
    if (nodes.empty()) throw InvalidParams("empty quadrature rule");
    for (std::size_t i = 0; i < nodes.size(); ++i) {
        if (!std::isfinite(nodes[i]) || !std::isfinite(weights[i])) throw NonFinite("quadrature entry not finite");
        if (!(weights[i] > 0)) throw InvalidParams("quadrature weights must be positive");
    }
    return QuadratureRule(std::move(nodes), std::move(weights));
}

QuadratureRule QuadratureRule::gauss_hermite(int n) {
    if (n < 1 || n > 400) throw InvalidParams("Gauss-Hermite size must be in [1, 400]");
    const double pim4 = std::pow(kPi, -0.25);
    std::vector<double> x(n), w(n);
    const int half = (n + 1) / 2;
    double z = 0;
    for (int i = 0; i < half; ++i) {
        // initial guesses for the largest roots, then extrapolation
        if (i == 0)
            z = std::sqrt(2.0 * n + 1) - 1.85575 * std::pow(2.0 * n + 1, -0.16667);
        else if (i == 1)
            z -= 1.14 * std::pow(static_cast<double>(n), 0.426) / z;
        else if (i == 2)
            z = 1.86 * z - 0.86 * x[0];
        else if (i == 3)
            z = 1.91 * z - 0.91 * x[1];
        else
            z = 2.0 * z - x[i - 2];
        double pp = 0;
        for (int it = 0; it < 100; ++it) {
            double p1 = pim4, p2 = 0.0;
            for (int j = 0; j < n; ++j) {
                const double p3 = p2;
                p2 = p1;
                p1 = z * std::sqrt(2.0 / (j + 1)) * p2 - std::sqrt(static_cast<double>(j) / (j + 1)) * p3;
            }
            pp = std::sqrt(2.0 * n) * p2;
            const double z1 = z;
            z = z1 - p1 / pp;
            if (std::abs(z - z1) <= 1e-15 * std::max(1.0, std::abs(z))) break;
        }
        x[i] = z;
        x[n - 1 - i] = -z;
        w[i] = 2.0 / (pp * pp);
        w[n - 1 - i] = w[i];
    }
    return make(std::move(x), std::move(w));
}

QuadratureRule QuadratureRule::gauss_legendre(int n) {
    if (n < 1 || n > 1000) throw InvalidParams("Gauss-Legendre size must be in [1, 1000]");
    std::vector<double> x(n), w(n);
    const int half = (n + 1) / 2;
    for (int i = 0; i < half; ++i) {
        double z = std::cos(kPi * (i + 0.75) / (n + 0.5));
        double pp = 0;
        for (int it = 0; it < 100; ++it) {
            double p1 = 1.0, p2 = 0.0;
            for (int j = 0; j < n; ++j) {
                const double p3 = p2;
                p2 = p1;
                p1 = ((2.0 * j + 1) * z * p2 - j * p3) / (j + 1);
            }
            pp = n * (z * p1 - p2) / (z * z - 1.0);
            const double z1 = z;
            z = z1 - p1 / pp;
            if (std::abs(z - z1) <= 1e-15) break;
        }
        x[i] = -z;
        x[n - 1 - i] = z;
        w[i] = 2.0 / ((1.0 - z * z) * pp * pp);
        w[n - 1 - i] = w[i];
    }
    return make(std::move(x), std::move(w));
}

Complex bargmann_kernel(Complex z, double q, const HBarParams& p) {
    const double hbar = p.hbar();
    return std::pow(kPi * hbar, -0.25) * std::exp((std::sqrt(2.0) * q * z - 0.5 * (z * z + q * q)) / hbar);
}

namespace {

// psi_n(u) exp(u^2/2): the Hermite functions without their Gaussian.
double hermite_polynomial_part(int n, double u) {
    double prev = 0.0, cur = std::pow(kPi, -0.25);
    for (int j = 0; j < n; ++j) {
        const double next = std::sqrt(2.0 / (j + 1)) * u * cur - std::sqrt(static_cast<double>(j) / (j + 1)) * prev;
        prev = cur;
        cur = next;
    }
    return cur;
}

void require_order(int n) {
    if (n < 0) throw InvalidParams("Hermite index must be non-negative");
}

}  // namespace

double reproducing_check(Complex z, Complex w, const HBarParams& p, const QuadratureRule& rule) {
    if (rule.size() < 32) throw InvalidParams("reproducing_check needs at least 32 nodes");
    const double hbar = p.hbar();
    const double sh = std::sqrt(hbar);
    const Complex wc = std::conj(w);
    // B(z,q) B(wc,q) dq = (pi hbar)^(-1/2) exp((sqrt2 q (z + wc) - (z^2 + wc^2)/2 - q^2)/hbar) dq,
    // and with q = u sqrt(hbar) the exp(-u^2) is the rule's weight.
    const Complex shift = -0.5 * (z * z + wc * wc) / hbar;
    Complex sum = 0;
    for (int i = 0; i < rule.size(); ++i) {
        const double u = rule.nodes()[i];
        sum += rule.weights()[i] * std::exp(std::sqrt(2.0) * u * (z + wc) / sh + shift);
    }
    const Complex integral = sum * sh / std::sqrt(kPi * hbar);
    return std::abs(integral - std::exp(z * wc / hbar));
}

double hermite_state(int n, double q, const HBarParams& p) {
    require_order(n);
    const double u = q / std::sqrt(p.hbar());
    return std::pow(p.hbar(), -0.25) * hermite_polynomial_part(n, u) * std::exp(-0.5 * u * u);
}

double hermite_overlap(int n, int m, const HBarParams& p, const QuadratureRule& rule) {
    require_order(n);
    require_order(m);
    (void)p;  // dq = sqrt(hbar) du cancels hbar^(-1/4)^2
    double sum = 0;
    for (int i = 0; i < rule.size(); ++i) {
        const double u = rule.nodes()[i];
        sum += rule.weights()[i] * hermite_polynomial_part(n, u) * hermite_polynomial_part(m, u);
    }
    return sum;
}

Complex bargmann_image(int n, Complex z, const HBarParams& p, const QuadratureRule& rule) {
    require_order(n);
    const double hbar = p.hbar();
    const double sh = std::sqrt(hbar);
    // B(z, u sh) phi_n(u sh) sh du = pi^(-1/4) exp(sqrt2 u z/sh - z^2/2hbar) Hn~(u) exp(-u^2) du
    const Complex shift = -0.5 * z * z / hbar;
    Complex sum = 0;
    for (int i = 0; i < rule.size(); ++i) {
        const double u = rule.nodes()[i];
        sum += rule.weights()[i] * hermite_polynomial_part(n, u) * std::exp(std::sqrt(2.0) * u * z / sh + shift);
    }
    return std::pow(kPi, -0.25) * sum;
}

double bargmann_image_check(int n, Complex z, const HBarParams& p, const QuadratureRule& rule) {
    if (n < 0 || n > 20) throw InvalidParams("bargmann_image_check supports 0 <= n <= 20");
    Complex expected = 1.0;
    for (int j = 1; j <= n; ++j) expected *= std::sqrt(p.mu()) * z / std::sqrt(static_cast<double>(j));
    return std::abs(bargmann_image(n, z, p, rule) - expected);
}

}  // namespace jacobi_cs
