#pragma once

// Jacobi algebra generators realized as first-order holomorphic differential
// operators on polynomials in (z, w):
//
//   A    = (1/sqrt(mu)) d/dz
//   A^+  = sqrt(mu) z + (w/sqrt(mu)) d/dz
//   K-   = d/dw
//   K0   = k + (z/2) d/dz + w d/dw
//   K+   = (mu/2) z^2 + 2k w + z w d/dz + w^2 d/dw
//
// Each operator is a closed-form rewrite of the monomial z^i w^j, extended
// linearly.

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "jacobi_cs/core.hpp"

namespace jacobi_cs {

/// Sparse polynomial sum c_{ij} z^i w^j. Zero coefficients are never stored.
class BiPolynomial {
public:
    using Exponents = std::pair<int, int>;  // (deg_z, deg_w)

    BiPolynomial() = default;
    static BiPolynomial constant(Complex c);
    static BiPolynomial monomial(int deg_z, int deg_w, Complex c = 1.0);

    void add(int deg_z, int deg_w, Complex c);
    Complex coefficient(int deg_z, int deg_w) const;
    const std::map<Exponents, Complex>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    int total_degree() const;
    double max_abs_coefficient() const;

    Complex evaluate(Complex z, Complex w) const;

    BiPolynomial& operator+=(const BiPolynomial& o);
    BiPolynomial& operator-=(const BiPolynomial& o);
    BiPolynomial& operator*=(Complex s);

    friend BiPolynomial operator+(BiPolynomial a, const BiPolynomial& b) { return a += b; }
    friend BiPolynomial operator-(BiPolynomial a, const BiPolynomial& b) { return a -= b; }
    friend BiPolynomial operator*(Complex s, BiPolynomial a) { return a *= s; }

private:
    std::map<Exponents, Complex> terms_;
};

enum class Generator { A, ADag, KMinus, KZero, KPlus };

const char* generator_name(Generator g);

/// Optional deformation of K+, used as a negative control: the coefficient
/// 2k of the w-multiplication term becomes 2k + kplus_shift.
struct OperatorPerturbation {
    double kplus_shift = 0.0;
};

BiPolynomial apply_generator(Generator g, const BiPolynomial& p, const ModelParams& params,
                             OperatorPerturbation perturbation = {});

/// (g1 g2 - g2 g1) p.
BiPolynomial commutator(Generator g1, Generator g2, const BiPolynomial& p, const ModelParams& params,
                        OperatorPerturbation perturbation = {});

/// Right-hand side of a commutation relation: scale * (generator p), or
/// scale * p when `generator` is empty (the identity), or 0.
struct RelationRhs {
    enum class Kind { Zero, Identity, Generator } kind = Kind::Zero;
    Generator generator = Generator::A;
    double scale = 0.0;
};

struct CommutationRelation {
    std::string name;  // e.g. "[K-,K+]=2K0"
    Generator lhs;
    Generator rhs_of;
    RelationRhs rhs;
};

/// The ten individual brackets of the Jacobi algebra.
const std::vector<CommutationRelation>& jacobi_relations();

struct RelationEntry {
    std::string relation;
    int deg_z = 0;
    int deg_w = 0;
    double deviation = 0.0;
    bool pass = false;
};

struct RelationReport {
    std::vector<RelationEntry> entries;
    double tolerance = 0.0;
    bool pass = true;

    /// Names of relations with at least one failing monomial.
    std::vector<std::string> failed_relations() const;
};

/// Checks every relation on every monomial z^i w^j with i + j <= max_degree.
/// Deviation is the largest coefficient difference divided by
/// max(1, largest coefficient magnitude); entries pass at <= tolerance.
RelationReport check_relations(int max_degree, const ModelParams& params, OperatorPerturbation perturbation = {},
                               double tolerance = 1e-12);

}  // namespace jacobi_cs
