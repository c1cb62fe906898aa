// jacobi-cs: evaluate, integrate, verify and tabulate.
//
// Exit codes: 0 ok, 1 verification failure, 2 input error, 3 domain escape.

#include <CLI11.hpp>
#include <json.hpp>

#include <cmath>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "jacobi_cs/embedding.hpp"
#include "jacobi_cs/geodesics.hpp"
#include "jacobi_cs/geometry.hpp"
#include "jacobi_cs/group.hpp"
#include "jacobi_cs/kernels.hpp"
#include "jacobi_cs/serialize.hpp"
#include "jacobi_cs/verify.hpp"

namespace {

using nlohmann::json;
using namespace jacobi_cs;

constexpr int kExitOk = 0;
constexpr int kExitVerifyFail = 1;
constexpr int kExitInput = 2;
constexpr int kExitEscape = 3;

struct InputError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

Complex parse_complex(const std::string& s) {
    std::stringstream in(s);
    std::string re, im;
    std::getline(in, re, ',');
    std::getline(in, im);
    try {
        std::size_t used = 0;
        const double r = std::stod(re, &used);
        if (used != re.size()) throw InputError("bad number: " + s);
        double i = 0;
        if (!im.empty()) {
            i = std::stod(im, &used);
            if (used != im.size()) throw InputError("bad number: " + s);
        }
        return {r, i};
    } catch (const std::logic_error&) {
        throw InputError("expected re[,im], got '" + s + "'");
    }
}

// Flags shared by every command; empty optionals fall back to the config file.
struct CommonFlags {
    std::optional<double> k, mu, fd_step, rk4_step;
    std::optional<std::uint64_t> seed;
    std::string truncation;
    std::string config;
    std::vector<std::string> tolerances;
};

void add_common(CLI::App* app, CommonFlags& f) {
    app->add_option("--k", f.k, "Bargmann index k (default 1)");
    app->add_option("--mu", f.mu, "Heisenberg scale mu (default 1)");
    app->add_option("--fd-step,--fd_step", f.fd_step, "finite-difference step (default 1e-4)");
    app->add_option("--rk4-step,--rk4_step", f.rk4_step, "RK4 step (default 1e-3)");
    app->add_option("--seed", f.seed, "random seed (default 0)");
    app->add_option("--truncation", f.truncation, "n_max,m_max (default 40,40)");
    app->add_option("--config", f.config, "JSON config file (else $JACOBI_CS_CONFIG)");
    app->add_option("--tol", f.tolerances, "tolerance override check=value (repeatable)");
}

VerifyConfig resolve(const CommonFlags& f) {
    json file = json::object();
    std::string path = f.config;
    if (path.empty())
        if (const char* env = std::getenv("JACOBI_CS_CONFIG")) path = env;
    if (!path.empty()) {
        std::ifstream in(path);
        if (!in) throw InputError("cannot read config " + path);
        try {
            in >> file;
        } catch (const json::exception& e) {
            throw InputError("bad config " + path + ": " + e.what());
        }
    }
    VerifyConfig c;
    try {
        const double k = f.k.value_or(file.value("k", 1.0));
        const double mu = f.mu.value_or(file.value("mu", 1.0));
        c.params = ModelParams::make(k, mu);
        c.fd_step = f.fd_step.value_or(file.value("fd_step", 1e-4));
        c.rk4_step = f.rk4_step.value_or(file.value("rk4_step", 1e-3));
        c.seed = f.seed.value_or(file.value("seed", std::uint64_t{0}));
        c.mc_samples = file.value("mc_samples", c.mc_samples);
        c.random_points = file.value("random_points", c.random_points);
        if (file.contains("truncation")) {
            const auto& t = file["truncation"];
            c.truncation = TruncationOrder::make(t.at(0).get<int>(), t.at(1).get<int>());
        }
        if (file.contains("tolerances"))
            for (const auto& [name, v] : file["tolerances"].items()) c.tolerances[name] = v.get<double>();
    } catch (const json::exception& e) {
        throw InputError(std::string("bad config value: ") + e.what());
    }
    if (!f.truncation.empty()) {
        const Complex t = parse_complex(f.truncation);
        c.truncation = TruncationOrder::make(static_cast<int>(t.real()), static_cast<int>(t.imag()));
    }
    for (const auto& item : f.tolerances) {
        const auto eq = item.find('=');
        if (eq == std::string::npos) throw InputError("--tol expects check=value");
        c.tolerances[item.substr(0, eq)] = parse_complex(item.substr(eq + 1)).real();
    }
    if (!(c.rk4_step > 0)) throw InputError("rk4_step must be positive");
    (void)WirtingerStencil::make(c.fd_step);
    return c;
}

json params_json(const ModelParams& p) { return {{"k", p.k()}, {"mu", p.mu()}}; }

// ---------------------------------------------------------------------------
// eval

const std::vector<std::string> kEvalQuantities = {"kernel",    "potential", "metric",     "ricci",   "scalar-curvature",
                                                  "diastasis", "berezin",   "christoffel", "volume", "eta"};

json evaluate(const std::string& q, const JacobiPoint& a, const JacobiPoint& b, const ModelParams& p) {
    if (q == "kernel") return complex_pair(jacobi_kernel(a, b, p));
    if (q == "potential") return kahler_potential(a, p);
    if (q == "metric") return to_json(metric(a, p));
    if (q == "ricci") {
        const auto r = ricci(a, p);
        return {{"r_zz", r.r_zz}, {"r_zw", complex_pair(r.r_zw)}, {"r_ww", r.r_ww}};
    }
    if (q == "scalar-curvature") return scalar_curvature(a, p);
    if (q == "diastasis") return diastasis(a, b, p);
    if (q == "berezin") return berezin_kernel(a, b, p);
    if (q == "christoffel") {
        const auto c = christoffel(a, p);
        return {{"z_zz", complex_pair(c.g_zzz)}, {"w_zz", complex_pair(c.g_wzz)}, {"z_zw", complex_pair(c.g_zzw)},
                {"w_wz", complex_pair(c.g_wwz)}, {"z_ww", complex_pair(c.g_zww)}, {"w_ww", complex_pair(c.g_www)}};
    }
    if (q == "volume") return volume_density(a, p);
    if (q == "eta") return complex_pair(eta_of(a));
    throw InputError("unknown quantity " + q);
}

// ---------------------------------------------------------------------------
// table

const std::vector<std::string> kTableQuantities = {"kernel",   "potential",  "scalar-curvature", "diastasis",
                                                   "berezin",  "volume",     "metric-det"};

struct Axis {
    std::vector<double> values;
};

Axis parse_axis(const std::string& spec) {
    // "v" or "lo:hi:n"
    Axis a;
    const auto c1 = spec.find(':');
    if (c1 == std::string::npos) {
        a.values.push_back(parse_complex(spec).real());
        return a;
    }
    const auto c2 = spec.find(':', c1 + 1);
    if (c2 == std::string::npos) throw InputError("range must be lo:hi:n, got " + spec);
    const double lo = parse_complex(spec.substr(0, c1)).real();
    const double hi = parse_complex(spec.substr(c1 + 1, c2 - c1 - 1)).real();
    const double nd = parse_complex(spec.substr(c2 + 1)).real();
    if (nd < 0 || nd != std::floor(nd)) throw InputError("range count must be a non-negative integer");
    const int n = static_cast<int>(nd);
    for (int i = 0; i < n; ++i) a.values.push_back(n == 1 ? lo : lo + (hi - lo) * i / (n - 1));
    return a;
}

double table_value(const std::string& q, const JacobiPoint& x, const JacobiPoint& ref, const ModelParams& p) {
    if (q == "kernel") return jacobi_kernel(x, x, p).real();
    if (q == "potential") return kahler_potential(x, p);
    if (q == "scalar-curvature") return scalar_curvature(x, p);
    if (q == "diastasis") return diastasis(ref, x, p);
    if (q == "berezin") return berezin_kernel(ref, x, p);
    if (q == "volume") return volume_density(x, p);
    if (q == "metric-det") return metric_det(x, p);
    throw InputError("unknown quantity " + q);
}

// ---------------------------------------------------------------------------

int run(int argc, char** argv) {
    CLI::App app{"Coherent-state geometry of the Siegel-Jacobi disk"};
    app.require_subcommand(1);
    app.set_help_all_flag("--help-all");

    CommonFlags eval_f, geo_f, ver_f, tab_f;

    auto* eval = app.add_subcommand("eval", "evaluate a quantity at a point; prints JSON");
    std::string eval_q, z_s = "0", w_s = "0", z2_s, w2_s;
    eval->add_option("quantity", eval_q, "quantity")->required()->check(CLI::IsMember(kEvalQuantities));
    eval->add_option("--z", z_s, "z as re,im");
    eval->add_option("--w", w_s, "w as re,im");
    eval->add_option("--z2", z2_s, "second point z (default: first point)");
    eval->add_option("--w2", w2_s, "second point w (default: first point)");
    add_common(eval, eval_f);

    auto* geo = app.add_subcommand("geodesic", "integrate a geodesic; CSV to --output, summary JSON to stdout");
    std::string gz = "0", gw = "0", gdz = "0", gdw = "0", out_path;
    double t_end = 1.0;
    std::optional<int> steps;
    geo->add_option("--z", gz, "initial z as re,im");
    geo->add_option("--w", gw, "initial w as re,im");
    geo->add_option("--dz", gdz, "initial z velocity as re,im");
    geo->add_option("--dw", gdw, "initial w velocity as re,im");
    geo->add_option("--t-end", t_end, "final time (default 1)");
    geo->add_option("--steps", steps, "RK4 steps (default t_end / rk4_step)");
    geo->add_option("--output,-o", out_path, "CSV path")->required();
    add_common(geo, geo_f);

    auto* ver = app.add_subcommand("verify", "run invariant suites; prints a JSON report");
    std::string suite = "all";
    std::optional<int> mc_samples, points;
    std::vector<std::string> suites = suite_names();
    suites.push_back("all");
    ver->add_option("suite", suite, "suite name or all")->check(CLI::IsMember(suites));
    ver->add_option("--mc-samples", mc_samples, "Monte Carlo samples (default 1e6)");
    ver->add_option("--points", points, "random points per check (default 100)");
    add_common(ver, ver_f);

    auto* tab = app.add_subcommand("table", "tabulate a quantity over a grid; CSV");
    std::string tab_q, rz = "0", iz = "0", rw = "0", iw = "0", tz2 = "0", tw2 = "0", tab_out;
    tab->add_option("quantity", tab_q, "quantity")->required()->check(CLI::IsMember(kTableQuantities));
    tab->add_option("--re-z", rz, "lo:hi:n or a single value");
    tab->add_option("--im-z", iz, "lo:hi:n or a single value");
    tab->add_option("--re-w", rw, "lo:hi:n or a single value");
    tab->add_option("--im-w", iw, "lo:hi:n or a single value");
    tab->add_option("--z2", tz2, "reference z for diastasis/berezin (default 0)");
    tab->add_option("--w2", tw2, "reference w for diastasis/berezin (default 0)");
    tab->add_option("--output,-o", tab_out, "CSV path (default stdout)");
    add_common(tab, tab_f);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? kExitOk : kExitInput;
    }

    try {
        if (*eval) {
            const auto cfg = resolve(eval_f);
            const auto a = make_jacobi_point(parse_complex(z_s), parse_complex(w_s));
            const auto b = make_jacobi_point(parse_complex(z2_s.empty() ? z_s : z2_s),
                                             parse_complex(w2_s.empty() ? w_s : w2_s));
            json inputs = params_json(cfg.params);
            inputs["z"] = complex_pair(a.z());
            inputs["w"] = complex_pair(a.w());
            inputs["z2"] = complex_pair(b.z());
            inputs["w2"] = complex_pair(b.w());
            std::cout << json{{"quantity", eval_q}, {"inputs", inputs}, {"value", evaluate(eval_q, a, b, cfg.params)}}
                             .dump(2)
                      << "\n";
            return kExitOk;
        }

        if (*geo) {
            const auto cfg = resolve(geo_f);
            const auto& p = cfg.params;
            if (!(t_end > 0) || !std::isfinite(t_end)) throw InputError("--t-end must be positive");
            const int n = steps.value_or(std::max(1, static_cast<int>(std::lround(t_end / cfg.rk4_step))));
            const GeodesicState s0{make_jacobi_point(parse_complex(gz), parse_complex(gw)),
                                   {parse_complex(gdz), parse_complex(gdw)}};
            const bool at_rest = s0.vel.dz == Complex{} && s0.vel.dw == Complex{};
            GeodesicPath path;
            if (at_rest) {
                path.append({0.0, s0});
                path.append({t_end, s0});
            } else {
                try {
                    path = integrate(s0, t_end, n, p);
                } catch (const BoundaryEscape& e) {
                    std::cerr << json{{"error", "boundary escape"}, {"last_valid_t", e.t()}, {"message", e.what()}}.dump()
                              << "\n";
                    return kExitEscape;
                }
            }
            std::ofstream out(out_path);
            if (!out) throw InputError("cannot write " + out_path);
            write_path_csv(out, path, p);

            // Closed form applies when w(0) = 0 and z'(0) = -conj(z(0)) w'(0).
            json residual = nullptr;
            const Complex eta0 = s0.pos.z();
            if (s0.pos.w() == Complex{} && std::abs(s0.vel.dz + std::conj(eta0) * s0.vel.dw) <= 1e-14) {
                double worst = 0;
                for (const auto& sm : path.samples) {
                    const auto c = fc_particular_solution(eta0, s0.vel.dw, sm.t);
                    worst = std::max({worst, std::abs(sm.state.pos.z() - c.pos.z()),
                                      std::abs(sm.state.pos.w() - c.pos.w())});
                }
                residual = worst;
            }
            const auto& end = path.back();
            json summary = {{"params", params_json(p)},
                            {"t_end", t_end},
                            {"steps", at_rest ? 1 : n},
                            {"rows", path.samples.size()},
                            {"final", {{"z", complex_pair(end.pos.z())}, {"w", complex_pair(end.pos.w())},
                                       {"dz", complex_pair(end.vel.dz)}, {"dw", complex_pair(end.vel.dw)}}},
                            {"length", curve_length(path, p)},
                            {"max_energy_drift", energy_drift(path, p)},
                            {"closed_form_residual", residual},
                            {"csv", out_path}};
            std::cout << summary.dump(2) << "\n";
            return kExitOk;
        }

        if (*ver) {
            auto cfg = resolve(ver_f);
            if (mc_samples) cfg.mc_samples = *mc_samples;
            if (points) cfg.random_points = *points;
            const auto results = run_suite(suite, cfg);
            json checks = json::array();
            for (const auto& r : results)
                checks.push_back({{"check", r.check},
                                  {"paper_ref", r.paper_ref},
                                  {"deviation", r.deviation},
                                  {"tolerance", r.tolerance},
                                  {"pass", r.pass}});
            const bool ok = all_pass(results);
            json report = {{"suite", suite},
                           {"config",
                            {{"k", cfg.params.k()},
                             {"mu", cfg.params.mu()},
                             {"truncation", {cfg.truncation.n_max, cfg.truncation.m_max}},
                             {"fd_step", cfg.fd_step},
                             {"rk4_step", cfg.rk4_step},
                             {"seed", cfg.seed},
                             {"mc_samples", cfg.mc_samples}}},
                           {"checks", checks},
                           {"pass", ok}};
            std::cout << report.dump(2) << "\n";
            return ok ? kExitOk : kExitVerifyFail;
        }

        if (*tab) {
            const auto cfg = resolve(tab_f);
            const Axis ax[4] = {parse_axis(rz), parse_axis(iz), parse_axis(rw), parse_axis(iw)};
            const auto ref = make_jacobi_point(parse_complex(tz2), parse_complex(tw2));
            std::vector<JacobiPoint> pts;
            for (double a : ax[0].values)
                for (double b : ax[1].values)
                    for (double c : ax[2].values)
                        for (double d : ax[3].values) {
                            try {
                                pts.push_back(make_jacobi_point({a, b}, {c, d}));
                            } catch (const DomainError& e) {
                                throw InputError("grid point (" + std::to_string(c) + ", " + std::to_string(d) +
                                                 ") outside the disk: " + e.what());
                            }
                        }
            std::ofstream file;
            if (!tab_out.empty()) {
                file.open(tab_out);
                if (!file) throw InputError("cannot write " + tab_out);
            }
            std::ostream& os = tab_out.empty() ? std::cout : file;
            std::string col = tab_q;
            for (char& ch : col)
                if (ch == '-') ch = '_';
            os << "re_z,im_z,re_w,im_w," << col << "\n";
            os.precision(17);
            for (const auto& x : pts)
                os << x.z().real() << ',' << x.z().imag() << ',' << x.w().real() << ',' << x.w().imag() << ','
                   << table_value(tab_q, x, ref, cfg.params) << "\n";
            return kExitOk;
        }
    } catch (const InputError& e) {
        std::cerr << "input error: " << e.what() << "\n";
        return kExitInput;
    } catch (const BoundaryEscape& e) {
        std::cerr << "boundary escape after t = " << e.t() << ": " << e.what() << "\n";
        return kExitEscape;
    } catch (const BoundaryProximity& e) {
        std::cerr << "domain escape: " << e.what() << "\n";
        return kExitEscape;
    } catch (const DomainError& e) {
        std::cerr << "input error: " << e.what() << "\n";
        return kExitInput;
    }
    return kExitInput;
}

}  // namespace

int main(int argc, char** argv) { return run(argc, argv); }
