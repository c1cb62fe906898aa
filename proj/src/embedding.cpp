#include "jacobi_cs/embedding.hpp"

#include <algorithm>
#include <cmath>

namespace jacobi_cs {

ProjectiveVector ProjectiveVector::make(std::vector<Complex> components) {
    bool nonzero = false;
    for (const Complex& c : components) {
        if (!is_finite(c)) throw NonFinite("projective component not finite");
        nonzero = nonzero || c != Complex{};
    }
    if (!nonzero) throw InvalidParams("projective vector has no nonzero component");
    return ProjectiveVector(std::move(components));
}

double ProjectiveVector::norm() const {
    double s = 0;
    for (const Complex& c : c_) s += std::norm(c);
    return std::sqrt(s);
}

std::vector<BasisIndex> embedding_order(TruncationOrder trunc) {
    std::vector<BasisIndex> out;
    out.reserve(trunc.size());
    for (int total = 0; total <= trunc.n_max + trunc.m_max; ++total)
        for (int n = std::max(0, total - trunc.m_max); n <= std::min(total, trunc.n_max); ++n)
            out.push_back({n, total - n});
    return out;
}

ProjectiveVector embed(const JacobiPoint& zeta, const ModelParams& params, TruncationOrder trunc) {
    const auto table = basis_table(zeta, params, trunc);
    std::vector<Complex> c;
    c.reserve(table.size());
    for (const auto& idx : embedding_order(trunc)) c.push_back(table[idx.n * (trunc.m_max + 1) + idx.m]);
    return ProjectiveVector::make(std::move(c));
}

Complex inner(const ProjectiveVector& u, const ProjectiveVector& v) {
    if (u.size() != v.size()) throw DimensionMismatch("projective vectors differ in length");
    Complex s{};
    for (std::size_t i = 0; i < u.size(); ++i) s += std::conj(u.components()[i]) * v.components()[i];
    return s;
}

double cayley_distance(const ProjectiveVector& v1, const ProjectiveVector& v2) {
    const double c = std::abs(inner(v1, v2)) / (v1.norm() * v2.norm());
    return std::acos(std::clamp(c, 0.0, 1.0));
}

double cs_angle(const JacobiPoint& zeta1, const JacobiPoint& zeta2, const ModelParams& params) {
    // sin^2 = 1 - b = -expm1(-D)
    const double d = std::max(0.0, diastasis_closed_form(zeta1, zeta2, params));
    return std::asin(std::min(1.0, std::sqrt(-std::expm1(-d))));
}

double cauchy_check(const JacobiPoint& zeta1, const JacobiPoint& zeta2, const ModelParams& params,
                    TruncationOrder trunc) {
    const auto v1 = embed(zeta1, params, trunc);
    const auto v2 = embed(zeta2, params, trunc);
    // Coherent vectors carry conj(f), so <e_1, e_2> = sum f(zeta1) conj(f(zeta2)).
    const Complex series = inner(v2, v1) / (v1.norm() * v2.norm());
    return std::abs(normalized_kernel(zeta1, zeta2, params) - series);
}

double embedding_norm_tail(const JacobiPoint& zeta, const ModelParams& params, TruncationOrder trunc) {
    const double n = embed(zeta, params, trunc).norm();
    return -std::expm1(2.0 * std::log(n) - kahler_potential(zeta, params));
}

double fubini_study_pullback_check(const JacobiPoint& zeta, const ModelParams& params, TruncationOrder trunc,
                                   const WirtingerStencil& stencil) {
    const RealField log_norm = [&](const JacobiPoint& x) {
        double s = 0;
        for (const Complex& c : basis_table(x, params, trunc)) s += std::norm(c);
        return std::log(s);
    };
    return max_abs_diff(metric(zeta, params), wirtinger_hessian(log_norm, zeta, stencil));
}

namespace {

double point_gap(const JacobiPoint& a, const JacobiPoint& b) {
    return std::max(std::abs(a.z() - b.z()), std::abs(a.w() - b.w()));
}

}  // namespace

InequalityReport distance_angle_inequality_check(const JacobiPoint& zeta1, const JacobiPoint& zeta2,
                                                 const ModelParams& params, const GeodesicPath& path) {
    if (path.samples.empty()) throw EndpointMismatch("empty path");
    if (point_gap(path.front().pos, zeta1) > 1e-6 || point_gap(path.back().pos, zeta2) > 1e-6)
        throw EndpointMismatch("path endpoints do not match the given points");
    InequalityReport r;
    r.length = path.samples.size() < 2 ? 0.0 : curve_length(path, params);
    r.angle = cs_angle(zeta1, zeta2, params);
    r.margin = r.length - r.angle;
    r.holds = r.length >= r.angle - 1e-9;
    return r;
}

}  // namespace jacobi_cs
