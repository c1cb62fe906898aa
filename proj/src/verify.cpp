#include "jacobi_cs/verify.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <limits>
#include <random>

#include "jacobi_cs/algebra.hpp"
#include "jacobi_cs/bargmann.hpp"
#include "jacobi_cs/embedding.hpp"
#include "jacobi_cs/geodesics.hpp"
#include "jacobi_cs/geometry.hpp"
#include "jacobi_cs/group.hpp"
#include "jacobi_cs/quadrature.hpp"

namespace jacobi_cs {

double VerifyConfig::tolerance(const std::string& check, double fallback) const {
    const auto it = tolerances.find(check);
    return it == tolerances.end() ? fallback : it->second;
}

bool all_pass(const std::vector<CheckResult>& results) {
    return std::all_of(results.begin(), results.end(), [](const CheckResult& r) { return r.pass; });
}

namespace {

using Rng = std::mt19937_64;

class Suite {
public:
    Suite(const VerifyConfig& cfg, std::uint64_t salt) : cfg_(cfg), rng_(cfg.seed ^ (salt * 0x9E3779B97F4A7C15ULL)) {}

    void add(const std::string& check, const std::string& ref, double deviation, double default_tol) {
        CheckResult r;
        r.check = check;
        r.paper_ref = ref;
        r.deviation = deviation;
        r.tolerance = cfg_.tolerance(check, default_tol);
        r.pass = std::isfinite(deviation) && deviation <= r.tolerance;
        out_.push_back(r);
    }

    Complex disc(double radius) {
        const double r = radius * std::sqrt(u01_(rng_));
        return std::polar(r, 2.0 * kPi * u01_(rng_));
    }
    double uniform(double lo, double hi) { return lo + (hi - lo) * u01_(rng_); }
    JacobiPoint point(double zmax, double wmax) {
        const Complex z = disc(zmax);
        return make_jacobi_point(z, disc(wmax));
    }
    JacobiGroupElement element(double rmax, double amax) {
        JacobiGroupElement e;
        const double r = uniform(0.0, rmax);
        const double phi = uniform(-kPi, kPi);
        e.g = SU11Element::from_angles(r, phi, uniform(-kPi, kPi));
        e.alpha = disc(amax);
        e.t = uniform(-1.0, 1.0);
        return e;
    }

    const VerifyConfig& cfg() const { return cfg_; }
    WirtingerStencil stencil() const { return WirtingerStencil::make(cfg_.fd_step); }
    int points() const { return cfg_.random_points; }
    int rk4_steps(double t_end) const {
        return std::max(1, static_cast<int>(std::lround(t_end / cfg_.rk4_step)));
    }
    std::vector<CheckResult> take() { return std::move(out_); }

private:
    const VerifyConfig& cfg_;
    Rng rng_;
    std::uniform_real_distribution<double> u01_{0.0, 1.0};
    std::vector<CheckResult> out_;
};

double rel(Complex a, Complex b) { return std::abs(a - b) / std::max(std::abs(b), 1e-300); }

double rel_metric(const HermitianMetric2& a, const HermitianMetric2& b) {
    return max_abs_diff(a, b) / std::max(b.scale(), 1e-300);
}

// Configured parameters when they admit the orthonormal basis, else k = 5/4.
ModelParams basis_params(const VerifyConfig& cfg) {
    if (cfg.params.has_quarter_basis() && cfg.params.k() > 0.75) return cfg.params;
    return ModelParams::make(1.25, cfg.params.mu());
}

// ---------------------------------------------------------------------------

std::vector<CheckResult> algebra_suite(const VerifyConfig& cfg) {
    Suite s(cfg, 1);
    double worst = 0;
    std::vector<ModelParams> grid = {cfg.params};
    for (double k : {1.0, 1.5, 2.0})
        for (double mu : {0.5, 1.0, 2.0}) grid.push_back(ModelParams::make(k, mu));
    for (const auto& p : grid)
        for (const auto& e : check_relations(8, p).entries) worst = std::max(worst, e.deviation);
    s.add("algebra.commutation_relations", "Jacobi algebra brackets on monomials of degree <= 8", worst, 1e-12);

    const auto& p = cfg.params;
    const auto one = BiPolynomial::constant(1.0);
    const double lw = std::max({apply_generator(Generator::A, one, p).max_abs_coefficient(),
                                apply_generator(Generator::KMinus, one, p).max_abs_coefficient(),
                                std::abs(apply_generator(Generator::KZero, one, p).coefficient(0, 0) - p.k())});
    s.add("algebra.lowest_weight", "a 1 = 0, K- 1 = 0, K0 1 = k", lw, 1e-12);

    double violations = 0;
    for (int i = 0; i <= 6; ++i)
        for (int j = 0; j + i <= 6; ++j) {
            const auto m = BiPolynomial::monomial(i, j);
            if (apply_generator(Generator::KPlus, m, p).total_degree() > i + j + 2) violations += 1;
            const auto a = apply_generator(Generator::A, m, p);
            for (const auto& [e, c] : a.terms())
                if (e.first != i - 1) violations += 1;
        }
    s.add("algebra.degree_bookkeeping", "K+ raises degree by <= 2, a lowers deg_z by 1", violations, 0.0);
    return s.take();
}

std::vector<CheckResult> kernels_suite(const VerifyConfig& cfg) {
    Suite s(cfg, 2);
    const auto& p = cfg.params;
    double herm = 0, pos = 0, fact = 0, dia = 0;
    for (int i = 0; i < s.points(); ++i) {
        const auto a = s.point(1.0, 0.7), b = s.point(1.0, 0.7);
        herm = std::max(herm, rel(jacobi_kernel(a, b, p), std::conj(jacobi_kernel(b, a, p))));
        const Complex kd = jacobi_kernel(a, a, p);
        pos = std::max(pos, kd.real() > 0 ? std::abs(kd.imag()) / kd.real() : std::numeric_limits<double>::infinity());
        const auto a0 = make_jacobi_point(a.z(), 0.0), b0 = make_jacobi_point(b.z(), 0.0);
        fact = std::max(fact, rel(jacobi_kernel(a0, b0, p), heisenberg_kernel(a.z(), b.z(), p.mu())));
        const auto az = make_jacobi_point(0.0, a.w()), bz = make_jacobi_point(0.0, b.w());
        fact = std::max(fact, rel(jacobi_kernel(az, bz, p), disk_kernel(a.disk(), b.disk(), p.k())));
        const double d = diastasis(a, b, p);
        dia = std::max(dia, std::abs(d - diastasis_closed_form(a, b, p)) / std::max(1.0, std::abs(d)));
    }
    s.add("kernels.hermitian_symmetry", "K(zeta, zeta2bar) = conj K(zeta2, zetabar)", herm, 1e-12);
    s.add("kernels.diagonal_positivity", "K(zeta, zetabar) > 0", pos, 1e-12);
    s.add("kernels.factorization", "w = 0 gives the Heisenberg kernel, z = 0 the disk kernel", fact, 1e-12);
    s.add("kernels.diastasis_closed_form", "-ln Berezin kernel = closed-form diastasis", dia, 1e-10);

    double series = 0;
    for (int two_kp = 1; two_kp <= 4; ++two_kp)
        for (double mu : {0.5, 1.0, 2.0}) {
            const auto q = ModelParams::make(0.5 * two_kp + 0.25, mu);
            for (int i = 0; i < 20; ++i) {
                const auto a = s.point(1.0, 0.6), b = s.point(1.0, 0.6);
                series = std::max(series, rel(kernel_series(a, b, q, cfg.truncation), jacobi_kernel(a, b, q)));
            }
        }
    s.add("kernels.series_closed_form", "basis expansion of the kernel with k = k' + 1/4", series, 1e-8);
    return s.take();
}

std::vector<CheckResult> geometry_suite(const VerifyConfig& cfg) {
    Suite s(cfg, 3);
    const auto& p = cfg.params;
    const auto st = s.stencil();
    double mfd = 0, det = 0, curv = 0, einstein = 0, rfd = 0, kc = 0;
    double sum = 0, sum_sq = 0;
    for (int i = 0; i < s.points(); ++i) {
        const auto x = s.point(1.5, 0.6);
        const auto h = metric(x, p);
        mfd = std::max(mfd, rel_metric(metric_fd(x, p, st), h));
        det = std::max(det, std::abs(metric_det(x, p) / metric_det_closed_form(x, p) - 1.0));
        const double sc = scalar_curvature(x, p);
        curv = std::max(curv, std::abs(sc + 1.5 / p.k()));
        sum += sc;
        sum_sq += sc * sc;
        const auto r = ricci(x, p);
        if (!(r.r_zz == 0.0 && h.h_zz > 0 && r.r_ww < 0)) einstein += 1;
        const auto rf = ricci_fd(x, p, st);
        rfd = std::max(rfd, std::max({std::abs(rf.r_zz - r.r_zz), std::abs(rf.r_zw - r.r_zw),
                                      std::abs(rf.r_ww - r.r_ww)}) /
                                std::abs(r.r_ww));
        kc = std::max(kc, kahler_condition_check(x, p, st) / h.scale());
    }
    const double n = s.points();
    const double var = std::max(0.0, sum_sq / n - (sum / n) * (sum / n));
    s.add("geometry.metric_fd", "metric = ddbar of the Kahler potential", mfd, 1e-6);
    s.add("geometry.metric_det", "det h = 2 k mu / P^3", det, 1e-12);
    s.add("geometry.scalar_curvature", "scalar curvature = -3/(2k)", curv, 1e-10);
    s.add("geometry.scalar_curvature_variance", "scalar curvature is constant", var, 1e-18);
    s.add("geometry.not_einstein", "Ric_zzbar = 0 < h_zzbar and Ric_wwbar < 0", einstein, 0.0);
    s.add("geometry.ricci_fd", "Ric = -ddbar ln det h", rfd, 1e-6);
    s.add("geometry.kahler_condition", "dh is symmetric (closed Kahler form)", kc, 1e-6);
    return s.take();
}

std::vector<CheckResult> group_suite(const VerifyConfig& cfg) {
    Suite s(cfg, 4);
    const auto& p = cfg.params;
    const auto st = s.stencil();
    double ber = 0, dia = 0, equi = 0, minv = 0, cross = 0, diag = 0, resid = 0, split = 0, trip = 0;
    double det = 0, disk = 0;
    for (int i = 0; i < s.points(); ++i) {
        const auto e = s.element(0.8, 1.0);
        const auto a = s.point(1.0, 0.6), b = s.point(1.0, 0.6);
        const auto ia = jacobi_action(e, a, p), ib = jacobi_action(e, b, p);
        ber = std::max(ber, std::abs(berezin_kernel(ia.point, ib.point, p) - berezin_kernel(a, b, p)));
        const double d = diastasis(a, b, p);
        dia = std::max(dia, std::abs(diastasis(ia.point, ib.point, p) - d) / std::max(1.0, std::abs(d)));
        const Complex lhs = jacobi_kernel(ia.point, ib.point, p) * ia.multiplier * std::conj(ib.multiplier);
        equi = std::max(equi, rel(lhs, jacobi_kernel(a, b, p)));

        const auto jac = jacobi_action_jacobian(e, a, p, st);
        minv = std::max(minv, rel_metric(pullback_holomorphic(jac, metric(ia.point, p)), metric(a, p)));

        const Complex eta = s.disc(1.0);
        const auto w = DiskPoint::make(s.disc(0.6));
        const auto fc = fc_pullback(eta, w, p);
        const auto target = split_metric(w, p);
        cross = std::max(cross, std::abs(fc.coefficients.h_zw));
        diag = std::max({diag, std::abs(fc.coefficients.h_zz / target.h_zz - 1.0),
                         std::abs(fc.coefficients.h_ww / target.h_ww - 1.0)});
        resid = std::max(resid, fc.non_hermitian_residual / target.scale());

        const auto moved = split_form_pullback_under_action(e, eta, w, p);
        split = std::max(split, rel_metric(moved.coefficients, target));

        const auto back = eta_of(fc_forward(eta, w));
        trip = std::max(trip, std::abs(back - eta) / std::max(1.0, std::abs(eta)));

        const auto g2 = s.element(1.0, 0.0).g;
        det = std::max(det, std::abs((e.g * g2).determinant() - 1.0));
        if (!(std::abs(mobius(e.g, w).value()) < 1.0)) disk += 1;
    }
    s.add("group.berezin_invariance", "b(g zeta, g zeta2) = b(zeta, zeta2)", ber, 1e-10);
    s.add("group.diastasis_invariance", "D(g zeta, g zeta2) = D(zeta, zeta2)", dia, 1e-10);
    s.add("group.kernel_equivariance", "K(g zeta, g zeta2) lambda conj(lambda2) = K(zeta, zeta2)", equi, 1e-10);
    s.add("group.metric_invariance", "pullback of h under the action equals h", minv, 1e-5);
    s.add("group.fc_cross_term", "FC pullback has no eta-w cross term", cross, 1e-10);
    s.add("group.fc_diagonal", "FC pullback diagonal = (mu, 2k/P^2)", diag, 1e-8);
    s.add("group.fc_type_11", "FC pullback of the Kahler form is of type (1,1)", resid, 1e-8);
    s.add("group.split_form_invariance", "split form preserved by the action in (eta, w)", split, 1e-5);
    s.add("group.fc_round_trip", "eta(FC(eta, w)) = eta", trip, 1e-12);
    s.add("group.su11_composition", "|a|^2 - |b|^2 = 1 after composition", det, 1e-12);
    s.add("group.mobius_preserves_disk", "g maps the disk into itself", disk, 0.0);
    return s.take();
}

std::vector<CheckResult> geodesics_suite(const VerifyConfig& cfg) {
    Suite s(cfg, 5);
    const auto& p = cfg.params;
    const auto st = s.stencil();
    const auto ratio = ConnectionRatio::from(p);

    // Christoffel symbols against finite differences of the metric.
    double chris = 0, rhs = 0;
    for (int i = 0; i < 20; ++i) {
        const auto x = s.point(1.0, 0.6);
        const auto c = christoffel(x, ratio);
        const Complex gam[2][2][2] = {{{c.g_zzz, c.g_zzw}, {c.g_zzw, c.g_zww}},
                                      {{c.g_wzz, c.g_wwz}, {c.g_wwz, c.g_www}}};
        const auto h = metric(x, p);
        const Complex hm[2][2] = {{h.h_zz, h.h_zw}, {std::conj(h.h_zw), h.h_ww}};
        for (int k = 0; k < 2; ++k)
            for (int l = 0; l < 2; ++l) {
                const auto d = wirtinger_gradient(
                    [&](const JacobiPoint& y) {
                        const auto g = metric(y, p);
                        const Complex m[2][2] = {{g.h_zz, g.h_zw}, {std::conj(g.h_zw), g.h_ww}};
                        return m[k][l];
                    },
                    x, st);
                for (int j = 0; j < 2; ++j) {
                    Complex expect{};
                    for (int a = 0; a < 2; ++a) expect += hm[a][l] * gam[a][j][k];
                    chris = std::max(chris, std::abs(d[j] - expect) / h.scale());
                }
            }
        const GeodesicState gs{x, {s.disc(1.0), s.disc(1.0)}};
        const auto r1 = geodesic_rhs(gs, ratio), r2 = geodesic_rhs_christoffel(gs, ratio);
        rhs = std::max(rhs, std::max(std::abs(r1.dz - r2.dz), std::abs(r1.dw - r2.dw)) /
                                std::max({1.0, std::abs(r2.dz), std::abs(r2.dw)}));
    }
    s.add("geodesics.christoffel_fd", "h_{a lbar} Gamma^a_jk = d_j h_{k lbar}", chris, 1e-6);
    s.add("geodesics.rhs_forms_agree", "geodesic system = Christoffel contraction", rhs, 1e-12);

    // Energy conservation and covariance under the group.
    double drift = 0, cov = 0;
    const int n_steps = s.rk4_steps(1.0);
    for (int i = 0; i < 5; ++i) {
        const auto x = s.point(0.5, 0.3);
        const TangentVector v{s.disc(0.3), s.disc(0.3)};
        const auto path = integrate({x, v}, 1.0, n_steps, ratio);
        drift = std::max(drift, energy_drift(path, p));

        const auto e = s.element(0.4, 0.5);
        const auto jac = jacobi_action_jacobian(e, x, p, st);
        const TangentVector v1{jac[0][0] * v.dz + jac[0][1] * v.dw, jac[1][0] * v.dz + jac[1][1] * v.dw};
        const auto moved = integrate({jacobi_action(e, x, p).point, v1}, 1.0, n_steps, ratio);
        const auto expect = jacobi_action(e, path.back().pos, p).point;
        cov = std::max(cov, std::max(std::abs(moved.back().pos.z() - expect.z()),
                                     std::abs(moved.back().pos.w() - expect.w())));
    }
    s.add("geodesics.energy_drift", "h(v, v) conserved along geodesics", drift, 1e-8);
    s.add("geodesics.group_covariance", "g maps geodesics to geodesics", cov, 1e-6);

    // mu = 0 closed form on [0, 2].
    double mz = 0;
    for (int i = 0; i < 5; ++i) {
        const Complex z0dot = s.disc(1.0), z1 = s.disc(1.0), b = s.disc(1.0);
        const auto path = integrate({make_jacobi_point(z1, 0.0), {z0dot, b}}, 2.0, s.rk4_steps(2.0),
                                    ConnectionRatio::flat_heisenberg_limit());
        for (const auto& sm : path.samples) {
            const auto c = mu_zero_solution(z0dot, z1, b, sm.t);
            mz = std::max({mz, std::abs(sm.state.pos.z() - c.pos.z()), std::abs(sm.state.pos.w() - c.pos.w())});
        }
    }
    s.add("geodesics.mu_zero_closed_form", "mu = 0 geodesics: tanh closed form", mz, 1e-8);

    // Closed-form particular solution and the disk geodesic.
    double fcres = 0, g2 = 0;
    for (int i = 0; i < 20; ++i) {
        const Complex eta0 = s.disc(1.0), b = s.disc(1.0);
        const double t = s.uniform(0.0, 1.5);
        const auto st_fc = fc_particular_solution(eta0, b, t);
        const auto acc = fc_particular_acceleration(eta0, b, t);
        const auto ode = geodesic_rhs(st_fc, ratio);
        fcres = std::max({fcres, std::abs(acc.dz - ode.dz), std::abs(acc.dw - ode.dw)});
        const auto disk_st = fc_particular_solution(0.0, b, t);
        g2 = std::max(g2, std::abs(disk_residuals(disk_st, fc_particular_acceleration(0.0, b, t)).g2));
    }
    s.add("geodesics.fc_particular_residual", "w = tanh, z = eta0 - conj(eta0) w solves the system", fcres, 1e-9);
    s.add("geodesics.disk_geodesic", "w = (z/|z|) tanh(t|z|) solves G2 = 0", g2, 1e-12);

    const auto disk_path = integrate({make_jacobi_point(0.0, 0.0), {0.0, 1.0}}, 1.0, n_steps, ratio);
    s.add("geodesics.disk_length", "disk geodesic length sqrt(2k) t",
          std::abs(curve_length(disk_path, p) - std::sqrt(2.0 * p.k())), 1e-8);
    return s.take();
}

std::vector<CheckResult> bargmann_suite(const VerifyConfig& cfg) {
    Suite s(cfg, 6);
    const auto rule = QuadratureRule::gauss_hermite(96);
    double repro = 0, ortho = 0, image = 0, phi0 = 0;
    for (double hbar : {0.5, 1.0, 2.0}) {
        const auto hp = HBarParams::make(hbar);
        for (int i = 0; i < 30; ++i) repro = std::max(repro, reproducing_check(s.disc(1.5), s.disc(1.5), hp, rule));
        for (int n = 0; n <= 10; ++n)
            for (int m = 0; m <= 10; ++m)
                ortho = std::max(ortho, std::abs(hermite_overlap(n, m, hp, rule) - (n == m ? 1.0 : 0.0)));
        for (int n = 0; n <= 10; ++n)
            for (int i = 0; i < 5; ++i) image = std::max(image, bargmann_image_check(n, s.disc(1.5), hp, rule));
        // direct quadrature of phi_0^2
        double norm = 0;
        const double sh = std::sqrt(hbar);
        for (int i = 0; i < rule.size(); ++i) {
            const double u = rule.nodes()[i];
            const double f = hermite_state(0, u * sh, hp);
            norm += rule.weights()[i] * std::exp(u * u) * f * f * sh;
        }
        phi0 = std::max(phi0, std::abs(norm - 1.0));
    }
    s.add("bargmann.reproducing", "int B(z,q) B(wbar,q) dq = exp(z wbar / hbar)", repro, 1e-9);
    s.add("bargmann.hermite_orthonormal", "<phi_n, phi_m> = delta_nm", ortho, 1e-10);
    s.add("bargmann.monomial_images", "B phi_n = (sqrt(mu) z)^n / sqrt(n!)", image, 1e-8);
    s.add("bargmann.phi0_norm", "|phi_0| = 1 with prefactor (pi hbar)^(-1/4)", phi0, 1e-12);
    return s.take();
}

std::vector<CheckResult> embedding_suite(const VerifyConfig& cfg) {
    Suite s(cfg, 7);
    const auto p = basis_params(cfg);
    const auto tr = cfg.truncation;
    const std::string tag = " (k=" + std::to_string(p.k()).substr(0, 4) + ")";
    double cauchy = 0, tail = 0, fs = 0, cayley = 0, ber = 0, sym = 0, inv = 0, ineq = 0;
    for (int i = 0; i < 20; ++i) {
        const auto a = s.point(1.0, 0.5), b = s.point(1.0, 0.5);
        cauchy = std::max(cauchy, cauchy_check(a, b, p, tr));
        tail = std::max(tail, embedding_norm_tail(a, p, tr));
        const double d = cayley_distance(embed(a, p, tr), embed(b, p, tr));
        ber = std::max(ber, std::abs(berezin_kernel(a, b, p) - std::cos(d) * std::cos(d)));
        sym = std::max(sym, std::abs(cs_angle(a, b, p) - cs_angle(b, a, p)) + cs_angle(a, a, p));
        const auto e = s.element(0.8, 1.0);
        inv = std::max(inv, std::abs(cs_angle(jacobi_action(e, a, p).point, jacobi_action(e, b, p).point, p) -
                                     cs_angle(a, b, p)));
    }
    for (int i = 0; i < 5; ++i) fs = std::max(fs, fubini_study_pullback_check(s.point(0.5, 0.3), p, tr, s.stencil()));
    {
        const auto a = make_jacobi_point(0.0, 0.5), b = make_jacobi_point(0.0, 0.0);
        cayley = std::abs(cs_angle(a, b, p) - cayley_distance(embed(a, p, tr), embed(b, p, tr)));
    }
    for (int i = 0; i < s.points(); ++i) {
        const auto a = s.point(1.0, 0.6), b = s.point(1.0, 0.6);
        const auto r = distance_angle_inequality_check(a, b, p, straight_path(a, b, 201));
        ineq = std::max(ineq, std::max(0.0, -r.margin));
    }
    s.add("embedding.cauchy" + tag, "normalized kernel = normalized inner product of embeddings", cauchy, 1e-8);
    s.add("embedding.norm_tail" + tag, "|embedding|^2 -> K(zeta, zetabar)", tail, 1e-8);
    s.add("embedding.fubini_study" + tag, "metric = pullback of Fubini-Study", fs, 1e-5);
    s.add("embedding.angle_cayley" + tag, "coherent-state angle = Cayley distance", cayley, 1e-8);
    s.add("embedding.berezin_cayley" + tag, "Berezin kernel = cos^2 Cayley distance", ber, 1e-8);
    s.add("embedding.angle_symmetry" + tag, "angle symmetric and zero on the diagonal", sym, 1e-12);
    s.add("embedding.angle_invariance" + tag, "angle invariant under the group", inv, 1e-9);
    s.add("embedding.distance_angle" + tag, "curve length >= coherent-state angle", ineq, 1e-9);
    return s.take();
}

std::vector<CheckResult> quadrature_suite(const VerifyConfig& cfg) {
    Suite s(cfg, 8);
    const auto p = basis_params(cfg);
    const std::string tag = " (k=" + std::to_string(p.k()).substr(0, 4) + ")";
    const auto mc = McConfig::make(cfg.mc_samples, cfg.seed);

    const auto gram = orthonormality_matrix(3, 3, p, mc);
    double ratio = 0;
    for (const auto& g : gram.entries) ratio = std::max(ratio, g.deviation / g.tolerance);
    s.add("quadrature.orthonormality" + tag, "Gram matrix = identity within 3 standard errors", ratio, 1.0);
    s.add("quadrature.orthonormality_std_error" + tag, "Gram matrix standard errors", gram.max_std_error, 1e-2);

    const BasisCombination psi1 = {{{0, 0}, 1.0}};
    const BasisCombination psi2 = {{{1, 0}, 1.0}, {{0, 1}, Complex(0.0, 1.0)}};
    const auto small = McConfig::make(std::max(McConfig::kMinSamples, cfg.mc_samples / 10), cfg.seed + 1);
    const auto par1 = parseval_check(psi1, psi1, p, small);
    const auto par2 = parseval_check(psi1, psi2, p, small);
    s.add("quadrature.parseval" + tag, "overcompleteness: int |psi|^2 rho dnu = |c|^2",
          std::max(par1.deviation / std::max(3 * par1.estimate.std_error, 1e-10),
                   par2.deviation / std::max(3 * par2.estimate.std_error, 1e-10)),
          1.0);

    double marginal = 0;
    for (double kp2 : {2.0, 3.0, 4.0})
        for (int m = 0; m <= 5; ++m) marginal = std::max(marginal, disk_marginal_check(m, ModelParams::make(0.5 * kp2 + 0.25, 1.0)));
    s.add("quadrature.disk_marginal", "int |f_m|^2 rho over the disk = 1", marginal, 1e-6);

    Rng rng(cfg.seed);
    double wsum = 0;
    const int nw = 10000;
    for (int i = 0; i < nw; ++i) wsum += sample_point(p, rng).weight;
    s.add("quadrature.weight_mean" + tag, "sampler reproduces rho dnu exactly", std::abs(wsum / nw - 1.0), 1e-12);

    double dens = 0, rho = 0;
    for (int i = 0; i < s.points(); ++i) {
        const auto x = s.point(1.0, 0.6);
        const auto e = s.element(0.8, 1.0);
        const auto jac = jacobi_action_jacobian(e, x, p, s.stencil());
        const double det_c = std::norm(jac[0][0] * jac[1][1] - jac[0][1] * jac[1][0]);
        const double lhs = invariant_measure_density(jacobi_action(e, x, p).point, p.mu()) * det_c;
        dens = std::max(dens, std::abs(lhs / invariant_measure_density(x, p.mu()) - 1.0));
        const double viaf = normalization_constant(p) * std::exp(-kahler_potential(x, p));
        rho = std::max(rho, std::abs(weight_rho(x, p) / viaf - 1.0));
    }
    s.add("quadrature.measure_invariance", "mu/P^3 is invariant under the group", dens, 1e-6);
    s.add("quadrature.rho_identity", "rho = Lambda exp(-f)", rho, 1e-12);
    return s.take();
}

using SuiteFn = std::vector<CheckResult> (*)(const VerifyConfig&);

const std::map<std::string, SuiteFn>& registry() {
    static const std::map<std::string, SuiteFn> r = {
        {"algebra", algebra_suite},       {"bargmann", bargmann_suite}, {"embedding", embedding_suite},
        {"geodesics", geodesics_suite},   {"geometry", geometry_suite}, {"group", group_suite},
        {"kernels", kernels_suite},       {"quadrature", quadrature_suite},
    };
    return r;
}

}  // namespace

const std::vector<std::string>& suite_names() {
    static const std::vector<std::string> names = [] {
        std::vector<std::string> n;
        for (const auto& [k, v] : registry()) n.push_back(k);
        return n;
    }();
    return names;
}

std::vector<CheckResult> run_suite(const std::string& name, const VerifyConfig& cfg) {
    if (name == "all") {
        std::vector<CheckResult> out;
        for (const auto& [k, fn] : registry()) {
            auto r = fn(cfg);
            out.insert(out.end(), r.begin(), r.end());
        }
        return out;
    }
    const auto it = registry().find(name);
    if (it == registry().end()) throw InvalidParams("unknown suite: " + name);
    return it->second(cfg);
}

}  // namespace jacobi_cs
