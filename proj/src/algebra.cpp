#include "jacobi_cs/algebra.hpp"

#include <algorithm>
#include <cmath>
#include <set>

namespace jacobi_cs {

BiPolynomial BiPolynomial::constant(Complex c) {
    BiPolynomial p;
    p.add(0, 0, c);
    return p;
}

BiPolynomial BiPolynomial::monomial(int deg_z, int deg_w, Complex c) {
    BiPolynomial p;
    p.add(deg_z, deg_w, c);
    return p;
}

void BiPolynomial::add(int deg_z, int deg_w, Complex c) {
    if (deg_z < 0 || deg_w < 0) throw InvalidParams("negative monomial degree");
    if (c == Complex{}) return;
    auto [it, inserted] = terms_.try_emplace({deg_z, deg_w}, c);
    if (!inserted) {
        it->second += c;
        if (it->second == Complex{}) terms_.erase(it);
    }
}

Complex BiPolynomial::coefficient(int deg_z, int deg_w) const {
    auto it = terms_.find({deg_z, deg_w});
    return it == terms_.end() ? Complex{} : it->second;
}

int BiPolynomial::total_degree() const {
    int d = -1;
    for (const auto& [e, c] : terms_) d = std::max(d, e.first + e.second);
    return d;
}

double BiPolynomial::max_abs_coefficient() const {
    double m = 0;
    for (const auto& [e, c] : terms_) m = std::max(m, std::abs(c));
    return m;
}

Complex BiPolynomial::evaluate(Complex z, Complex w) const {
    Complex sum{};
    for (const auto& [e, c] : terms_) sum += c * std::pow(z, e.first) * std::pow(w, e.second);
    return sum;
}

BiPolynomial& BiPolynomial::operator+=(const BiPolynomial& o) {
    for (const auto& [e, c] : o.terms_) add(e.first, e.second, c);
    return *this;
}

BiPolynomial& BiPolynomial::operator-=(const BiPolynomial& o) {
    for (const auto& [e, c] : o.terms_) add(e.first, e.second, -c);
    return *this;
}

BiPolynomial& BiPolynomial::operator*=(Complex s) {
    if (s == Complex{}) {
        terms_.clear();
        return *this;
    }
    for (auto& [e, c] : terms_) c *= s;
    return *this;
}

const char* generator_name(Generator g) {
    switch (g) {
        case Generator::A: return "a";
        case Generator::ADag: return "a+";
        case Generator::KMinus: return "K-";
        case Generator::KZero: return "K0";
        case Generator::KPlus: return "K+";
    }
    return "?";
}

namespace {

// Image of c z^i w^j under one generator, accumulated into `out`.
void apply_to_monomial(Generator g, int i, int j, Complex c, const ModelParams& params,
                       OperatorPerturbation perturbation, BiPolynomial& out) {
    const double k = params.k();
    const double mu = params.mu();
    const double sqrt_mu = std::sqrt(mu);
    switch (g) {
        case Generator::A:
            if (i > 0) out.add(i - 1, j, c * (i / sqrt_mu));
            break;
        case Generator::ADag:
            out.add(i + 1, j, c * sqrt_mu);
            if (i > 0) out.add(i - 1, j + 1, c * (i / sqrt_mu));
            break;
        case Generator::KMinus:
            if (j > 0) out.add(i, j - 1, c * static_cast<double>(j));
            break;
        case Generator::KZero:
            out.add(i, j, c * (k + 0.5 * i + j));
            break;
        case Generator::KPlus:
            // (mu/2) z^2 + 2k w + z w d/dz + w^2 d/dw
            out.add(i + 2, j, c * (0.5 * mu));
            out.add(i, j + 1, c * (2.0 * k + perturbation.kplus_shift + i + j));
            break;
    }
}

}  // namespace

BiPolynomial apply_generator(Generator g, const BiPolynomial& p, const ModelParams& params,
                             OperatorPerturbation perturbation) {
    BiPolynomial out;
    for (const auto& [e, c] : p.terms()) apply_to_monomial(g, e.first, e.second, c, params, perturbation, out);
    return out;
}

BiPolynomial commutator(Generator g1, Generator g2, const BiPolynomial& p, const ModelParams& params,
                        OperatorPerturbation perturbation) {
    BiPolynomial lhs = apply_generator(g1, apply_generator(g2, p, params, perturbation), params, perturbation);
    lhs -= apply_generator(g2, apply_generator(g1, p, params, perturbation), params, perturbation);
    return lhs;
}

const std::vector<CommutationRelation>& jacobi_relations() {
    using G = Generator;
    using K = RelationRhs::Kind;
    static const std::vector<CommutationRelation> relations = {
        {"[a,a+]=1", G::A, G::ADag, {K::Identity, G::A, 1.0}},
        {"[K0,K+]=K+", G::KZero, G::KPlus, {K::Generator, G::KPlus, 1.0}},
        {"[K0,K-]=-K-", G::KZero, G::KMinus, {K::Generator, G::KMinus, -1.0}},
        {"[K-,K+]=2K0", G::KMinus, G::KPlus, {K::Generator, G::KZero, 2.0}},
        {"[a,K+]=a+", G::A, G::KPlus, {K::Generator, G::ADag, 1.0}},
        {"[K-,a+]=a", G::KMinus, G::ADag, {K::Generator, G::A, 1.0}},
        {"[K+,a+]=0", G::KPlus, G::ADag, {K::Zero, G::A, 0.0}},
        {"[K-,a]=0", G::KMinus, G::A, {K::Zero, G::A, 0.0}},
        {"[K0,a+]=a+/2", G::KZero, G::ADag, {K::Generator, G::ADag, 0.5}},
        {"[K0,a]=-a/2", G::KZero, G::A, {K::Generator, G::A, -0.5}},
    };
    return relations;
}

std::vector<std::string> RelationReport::failed_relations() const {
    std::set<std::string> names;
    for (const auto& e : entries)
        if (!e.pass) names.insert(e.relation);
    return {names.begin(), names.end()};
}

RelationReport check_relations(int max_degree, const ModelParams& params, OperatorPerturbation perturbation,
                               double tolerance) {
    if (max_degree < 0) throw InvalidParams("max_degree must be non-negative");
    RelationReport report;
    report.tolerance = tolerance;
    for (const auto& rel : jacobi_relations()) {
        for (int total = 0; total <= max_degree; ++total) {
            for (int i = 0; i <= total; ++i) {
                const int j = total - i;
                const BiPolynomial p = BiPolynomial::monomial(i, j);
                BiPolynomial expected;
                switch (rel.rhs.kind) {
                    case RelationRhs::Kind::Zero: break;
                    case RelationRhs::Kind::Identity: expected = rel.rhs.scale * p; break;
                    case RelationRhs::Kind::Generator:
                        // The right-hand side uses the unperturbed operator.
                        expected = rel.rhs.scale * apply_generator(rel.rhs.generator, p, params);
                        break;
                }
                const BiPolynomial got = commutator(rel.lhs, rel.rhs_of, p, params, perturbation);
                const BiPolynomial diff = got - expected;
                const double norm = std::max({1.0, got.max_abs_coefficient(), expected.max_abs_coefficient()});
                RelationEntry entry;
                entry.relation = rel.name;
                entry.deg_z = i;
                entry.deg_w = j;
                entry.deviation = diff.max_abs_coefficient() / norm;
                entry.pass = entry.deviation <= tolerance;
                report.pass = report.pass && entry.pass;
                report.entries.push_back(std::move(entry));
            }
        }
    }
    return report;
}

}  // namespace jacobi_cs
