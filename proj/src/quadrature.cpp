#include "jacobi_cs/quadrature.hpp"

#include <algorithm>
#include <cmath>
#include <functional>

#include "jacobi_cs/bargmann.hpp"

namespace jacobi_cs {

double invariant_measure_density(const JacobiPoint& zeta, double mu) {
    if (!(mu > 0)) throw InvalidParams("mu must be positive");
    const double p = zeta.p();
    return mu / (p * p * p);
}

double normalization_constant(const ModelParams& params) {
    params.require_normalizable();
    return (4.0 * params.k() - 3.0) / (2.0 * kPi * kPi);
}

double weight_rho(const JacobiPoint& zeta, const ModelParams& params) {
    const double lambda = normalization_constant(params);
    return lambda * std::exp(2.0 * params.k() * std::log(zeta.p()) - params.mu() * diagonal_F(zeta));
}

McConfig McConfig::make(int n_samples, std::uint64_t seed, int rotations, bool integrate_z) {
    if (n_samples < kMinSamples) throw InvalidParams("n_samples must be at least 1000");
    if (rotations < 1) throw InvalidParams("rotations must be at least 1");
    McConfig c;
    c.n_samples = n_samples;
    c.seed = seed;
    c.rotations = rotations;
    c.integrate_z = integrate_z;
    return c;
}

namespace {

// Lower Cholesky factor of the z covariance (1/2mu) [[1 - u, -v], [-v, 1 + u]].
struct Factor {
    double l11, l21, l22;
    Complex apply(double g1, double g2) const { return {l11 * g1, l21 * g1 + l22 * g2}; }
};

Factor conditional_factor(Complex w, double mu) {
    const double u = w.real(), v = w.imag();
    const double c = 1.0 / (2.0 * mu);
    const double l11 = std::sqrt(c * (1.0 - u));
    const double l21 = -c * v / l11;
    return {l11, l21, std::sqrt(c * (1.0 + u) - l21 * l21)};
}

}  // namespace

WeightedSample sample_point(const ModelParams& params, std::mt19937_64& rng) {
    params.require_normalizable();
    std::uniform_real_distribution<double> uniform(0.0, 1.0);
    std::normal_distribution<double> normal(0.0, 1.0);
    const double k = params.k(), mu = params.mu();
    const double a = 2.0 * k - 1.5;  // |w|^2 ~ Beta(1, a)

    for (;;) {
        const double s = -std::expm1(std::log1p(-uniform(rng)) / a);  // 1 - U^(1/a)
        const double theta = 2.0 * kPi * uniform(rng);
        const double g1 = normal(rng), g2 = normal(rng);
        if (!(s < 1.0 - 2.0 * kDefaultBoundGuard)) continue;
        const Complex w = std::polar(std::sqrt(s), theta);
        const double p = 1.0 - s;

        const JacobiPoint zeta = make_jacobi_point(conditional_factor(w, mu).apply(g1, g2), w);
        const double f = diagonal_F(zeta);
        const double log_target = std::log(normalization_constant(params) * mu) + (2.0 * k - 3.0) * std::log(p) - mu * f;
        const double log_proposal = std::log(a / kPi) + (a - 1.0) * std::log(p) + std::log(mu / kPi) -
                                    0.5 * std::log(p) - mu * f;
        return {zeta, std::exp(log_target - log_proposal)};
    }
}

PointSampler::PointSampler(const ModelParams& params, std::uint64_t seed) : params_(params), rng_(seed) {
    params_.require_normalizable();
}

WeightedSample PointSampler::draw() { return sample_point(params_, rng_); }

namespace {

struct Accumulator {
    Complex sum{};
    double sum_sq = 0;
    long count = 0;

    void add(Complex y) {
        sum += y;
        sum_sq += std::norm(y);
        ++count;
    }
    McEstimate finish(std::uint64_t seed) const {
        McEstimate e;
        const double n = static_cast<double>(count);
        e.value = sum / n;
        const double var = std::max(0.0, (sum_sq - n * std::norm(e.value)) / (n - 1.0));
        e.std_error = std::sqrt(var / n);
        e.n_samples = static_cast<int>(count);
        e.seed = seed;
        return e;
    }
};

JacobiPoint rotated(const JacobiPoint& zeta, double t) {
    return JacobiPoint(std::polar(1.0, t) * zeta.z(), DiskPoint::make(std::polar(1.0, 2.0 * t) * zeta.w()));
}

struct ZNode {
    JacobiPoint point;
    double prob;
};

// Points carrying the z-expectation of a sample: its own z, or tensor
// Gauss-Hermite nodes of the conditional Gaussian (q nodes per axis, exact for
// polynomials of degree <= 2q - 1 in each real coordinate).
std::vector<ZNode> z_nodes(const WeightedSample& s, const ModelParams& params, const McConfig& cfg, int max_degree) {
    if (!cfg.integrate_z) return {{s.point, 1.0}};
    static thread_local std::vector<QuadratureRule> rules;
    const int q = max_degree / 2 + 1;
    while (static_cast<int>(rules.size()) < q) rules.push_back(QuadratureRule::gauss_hermite(static_cast<int>(rules.size()) + 1));
    const QuadratureRule& r = rules[q - 1];
    const Factor f = conditional_factor(s.point.w(), params.mu());
    std::vector<ZNode> out;
    out.reserve(q * q);
    for (int i = 0; i < q; ++i)
        for (int j = 0; j < q; ++j) {
            const Complex z = f.apply(std::sqrt(2.0) * r.nodes()[i], std::sqrt(2.0) * r.nodes()[j]);
            out.push_back({JacobiPoint(z, s.point.disk()), r.weights()[i] * r.weights()[j] / kPi});
        }
    return out;
}

// Sample average of weight * E_z[mean over rotations of integrand].
McEstimate run_mc(const ModelParams& params, const McConfig& cfg, int max_degree,
                  const std::function<Complex(const JacobiPoint&)>& integrand) {
    PointSampler sampler(params, cfg.seed);
    Accumulator acc;
    for (int i = 0; i < cfg.n_samples; ++i) {
        const WeightedSample s = sampler.draw();
        Complex y{};
        for (const auto& node : z_nodes(s, params, cfg, max_degree))
            for (int j = 0; j < cfg.rotations; ++j)
                y += node.prob * integrand(rotated(node.point, 2.0 * kPi * j / cfg.rotations));
        acc.add(s.weight * y / static_cast<double>(cfg.rotations));
    }
    return acc.finish(cfg.seed);
}

void check_config(const McConfig& cfg) { (void)McConfig::make(cfg.n_samples, cfg.seed, cfg.rotations, cfg.integrate_z); }

int max_n(const BasisCombination& c) {
    int n = 0;
    for (const auto& [idx, coeff] : c) n = std::max(n, idx.n);
    return n;
}

}  // namespace

McEstimate inner_product_mc(BasisIndex i1, BasisIndex i2, const ModelParams& params, const McConfig& cfg) {
    params.require_quarter_basis();
    params.require_normalizable();
    check_config(cfg);
    return run_mc(params, cfg, i1.n + i2.n, [&](const JacobiPoint& x) {
        return std::conj(basis_function(i1, x, params)) * basis_function(i2, x, params);
    });
}

ParsevalResult parseval_check(const BasisCombination& c1, const BasisCombination& c2, const ModelParams& params,
                              const McConfig& cfg) {
    params.require_quarter_basis();
    params.require_normalizable();
    check_config(cfg);
    auto psi = [&](const BasisCombination& c, const JacobiPoint& x) {
        Complex s{};
        for (const auto& [idx, coeff] : c) s += coeff * basis_function(idx, x, params);
        return s;
    };
    ParsevalResult r;
    r.estimate = run_mc(params, cfg, max_n(c1) + max_n(c2),
                        [&](const JacobiPoint& x) { return std::conj(psi(c1, x)) * psi(c2, x); });
    for (const auto& [i1, a] : c1)
        for (const auto& [i2, b] : c2)
            if (i1.n == i2.n && i1.m == i2.m) r.exact += std::conj(a) * b;
    r.deviation = std::abs(r.estimate.value - r.exact);
    return r;
}

OrthonormalityReport orthonormality_matrix(int n_max, int m_max, const ModelParams& params, const McConfig& cfg,
                                           double floor) {
    params.require_quarter_basis();
    params.require_normalizable();
    check_config(cfg);
    const TruncationOrder trunc = TruncationOrder::make(n_max, m_max);
    const int dim = trunc.size();
    auto charge = [&](int a) { return a / (m_max + 1) + 2 * (a % (m_max + 1)); };
    // mean over rotations of e^{i (c_b - c_a) t}
    std::vector<Complex> mask(static_cast<std::size_t>(dim) * dim);
    for (int a = 0; a < dim; ++a)
        for (int b = 0; b < dim; ++b) {
            Complex m{};
            for (int j = 0; j < cfg.rotations; ++j)
                m += std::polar(1.0, 2.0 * kPi * j * (charge(b) - charge(a)) / cfg.rotations);
            mask[a * dim + b] = m / static_cast<double>(cfg.rotations);
        }

    std::vector<Accumulator> acc(mask.size());
    std::vector<Complex> avg(mask.size()), f;
    BasisEvaluator basis(params, trunc);
    PointSampler sampler(params, cfg.seed);
    for (int i = 0; i < cfg.n_samples; ++i) {
        const WeightedSample s = sampler.draw();
        std::fill(avg.begin(), avg.end(), Complex{});
        for (const auto& node : z_nodes(s, params, cfg, 2 * n_max)) {
            basis.evaluate(node.point, f);
            // conj(f_a) f_b in real arithmetic; this loop dominates the run time
            for (int a = 0; a < dim; ++a) {
                const double ar = node.prob * f[a].real(), ai = -node.prob * f[a].imag();
                Complex* row = &avg[a * dim];
                for (int b = 0; b < dim; ++b) {
                    const double br = f[b].real(), bi = f[b].imag();
                    row[b] += Complex(ar * br - ai * bi, ar * bi + ai * br);
                }
            }
        }
        for (std::size_t e = 0; e < acc.size(); ++e) {
            const Complex m = mask[e], v = avg[e];
            acc[e].add(s.weight * Complex(m.real() * v.real() - m.imag() * v.imag(),
                                          m.real() * v.imag() + m.imag() * v.real()));
        }
    }

    OrthonormalityReport report;
    for (int a = 0; a < dim; ++a) {
        for (int b = 0; b < dim; ++b) {
            GramEntry g;
            g.row = {a / (m_max + 1), a % (m_max + 1)};
            g.col = {b / (m_max + 1), b % (m_max + 1)};
            g.estimate = acc[a * dim + b].finish(cfg.seed);
            g.expected = a == b ? 1.0 : 0.0;
            g.deviation = std::abs(g.estimate.value - g.expected);
            g.tolerance = std::max(3.0 * g.estimate.std_error, floor);
            g.pass = g.deviation <= g.tolerance;
            report.max_std_error = std::max(report.max_std_error, g.estimate.std_error);
            report.max_deviation = std::max(report.max_deviation, g.deviation);
            report.pass = report.pass && g.pass;
            report.entries.push_back(g);
        }
    }
    return report;
}

double disk_marginal_check(int m, const ModelParams& params, int nodes) {
    params.require_quarter_basis();
    if (m < 0) throw InvalidParams("m must be non-negative");
    const double kappa2 = 2.0 * params.shifted_index();
    if (kappa2 < 2.0 - 1e-12) throw InvalidK("disk marginal needs 2k' >= 2");
    const QuadratureRule rule = QuadratureRule::gauss_legendre(nodes);
    const double density = (kappa2 - 1.0) / kPi;
    double total = 0;
    for (int i = 0; i < rule.size(); ++i) {
        const double r = 0.5 * (rule.nodes()[i] + 1.0);
        const double p = 1.0 - r * r;
        for (int j = 0; j < rule.size(); ++j) {
            const double theta = kPi * (rule.nodes()[j] + 1.0);
            const JacobiPoint zeta = make_jacobi_point(0.0, std::polar(r, theta));
            const double f2 = std::norm(basis_function({0, m}, zeta, params));
            // dr dtheta Jacobian: (1/2) * pi * r
            total += rule.weights()[i] * rule.weights()[j] * 0.5 * kPi * r * f2 * density * std::pow(p, kappa2 - 2.0);
        }
    }
    return std::abs(total - 1.0);
}

}  // namespace jacobi_cs
