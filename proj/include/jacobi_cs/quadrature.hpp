#pragma once

// Invariant measure and weight of the scalar product on the Siegel-Jacobi
// disk, an exact-in-z importance sampler and Monte Carlo checks of the
// orthonormality of the basis and of the overcompleteness identity.

#include <cstdint>
#include <random>
#include <utility>
#include <vector>

#include "jacobi_cs/core.hpp"
#include "jacobi_cs/kernels.hpp"

namespace jacobi_cs {

/// mu / (1 - |w|^2)^3 against dRe(w) dIm(w) dRe(z) dIm(z).
double invariant_measure_density(const JacobiPoint& zeta, double mu);

/// Lambda = (4k - 3) / (2 pi^2). Throws InvalidK unless k > 3/4.
double normalization_constant(const ModelParams& params);

/// Lambda (1 - |w|^2)^(2k) exp(-mu F(zeta, conj(zeta))).
double weight_rho(const JacobiPoint& zeta, const ModelParams& params);

struct McConfig {
    static constexpr int kMinSamples = 1000;

    int n_samples = 1000000;
    std::uint64_t seed = 0;
    /// Each sample is averaged over this many rotations
    /// (z, w) -> (e^{i t} z, e^{2 i t} w), t = 2 pi j / rotations, which leave
    /// the measure invariant. 1 disables it.
    int rotations = 10;
    /// Replace the drawn z by the exact conditional expectation over z given
    /// w (tensor Gauss-Hermite under the conditional Gaussian, exact for the
    /// polynomial integrands used here), so only the w marginal is sampled.
    bool integrate_z = true;

    static McConfig make(int n_samples, std::uint64_t seed, int rotations = 10, bool integrate_z = true);
};

struct McEstimate {
    Complex value{};
    double std_error = 0;
    int n_samples = 0;
    std::uint64_t seed = 0;
};

struct WeightedSample {
    JacobiPoint point;
    double weight;  // target density / proposal density
};

/// Proposal: |w|^2 ~ Beta(1, 2k - 3/2) with uniform angle, then z from the
/// Gaussian conditional exp(-mu F) given w. This is the normalized
/// weight_rho * invariant_measure_density, so weights equal 1 up to rounding.
class PointSampler {
public:
    PointSampler(const ModelParams& params, std::uint64_t seed);
    WeightedSample draw();

private:
    ModelParams params_;
    std::mt19937_64 rng_;
};

WeightedSample sample_point(const ModelParams& params, std::mt19937_64& rng);

/// int conj(f_i1) f_i2 rho dnu.
McEstimate inner_product_mc(BasisIndex i1, BasisIndex i2, const ModelParams& params, const McConfig& cfg);

using BasisCombination = std::vector<std::pair<BasisIndex, Complex>>;

struct ParsevalResult {
    McEstimate estimate;  // int conj(psi1) psi2 rho dnu
    Complex exact{};      // sum conj(c1) c2
    double deviation = 0;
};

ParsevalResult parseval_check(const BasisCombination& c1, const BasisCombination& c2, const ModelParams& params,
                              const McConfig& cfg);

struct GramEntry {
    BasisIndex row;
    BasisIndex col;
    McEstimate estimate;
    double expected = 0;
    double deviation = 0;
    double tolerance = 0;  // max(3 std_error, floor)
    bool pass = false;
};

struct OrthonormalityReport {
    std::vector<GramEntry> entries;
    double max_std_error = 0;
    double max_deviation = 0;
    bool pass = true;
};

/// Gram matrix of f_{n,m}, n <= n_max, m <= m_max, from one sample stream.
/// Rotation averaging uses f_{n,m}(e^{it} z, e^{2it} w) = e^{i(n+2m)t} f_{n,m}(z, w).
/// An entry passes when |estimate - delta| <= max(3 std_error, floor).
OrthonormalityReport orthonormality_matrix(int n_max, int m_max, const ModelParams& params, const McConfig& cfg,
                                           double floor = 1e-10);

/// int |f_{0,m}(0, w)|^2 (2k' - 1)/pi (1 - |w|^2)^(2k' - 2) over the unit disk by
/// Gauss-Legendre in r and theta; returns |integral - 1|. Needs 2k' >= 2.
double disk_marginal_check(int m, const ModelParams& params, int nodes = 64);

}  // namespace jacobi_cs
