#include "jacobi_cs/serialize.hpp"

namespace jacobi_cs {

using nlohmann::json;

json complex_pair(Complex c) { return json::array({c.real(), c.imag()}); }

json to_json(const RelationReport& r) {
    json entries = json::array();
    for (const auto& e : r.entries)
        entries.push_back({{"relation", e.relation},
                           {"deg_z", e.deg_z},
                           {"deg_w", e.deg_w},
                           {"deviation", e.deviation},
                           {"pass", e.pass}});
    return {{"tolerance", r.tolerance}, {"pass", r.pass}, {"failed", r.failed_relations()}, {"entries", entries}};
}

json to_json(const JacobiGroupElement& e) {
    return {{"a_re", e.g.a().real()},     {"a_im", e.g.a().imag()},         {"b_re", e.g.b().real()},
            {"b_im", e.g.b().imag()},     {"alpha_re", e.alpha.real()}, {"alpha_im", e.alpha.imag()},
            {"t", e.t}};
}

JacobiGroupElement group_element_from_json(const json& j) {
    JacobiGroupElement e;
    e.g = SU11Element::make({j.at("a_re").get<double>(), j.at("a_im").get<double>()},
                            {j.at("b_re").get<double>(), j.at("b_im").get<double>()});
    e.alpha = {j.at("alpha_re").get<double>(), j.at("alpha_im").get<double>()};
    e.t = j.at("t").get<double>();
    return e;
}

json to_json(const ProjectiveVector& v) {
    json out = json::array();
    for (const Complex& c : v.components()) out.push_back(complex_pair(c));
    return out;
}

json to_json(const McEstimate& e) {
    return {{"re", e.value.real()},
            {"im", e.value.imag()},
            {"std_error", e.std_error},
            {"n_samples", e.n_samples},
            {"seed", e.seed}};
}

json to_json(const HermitianMetric2& h) {
    return {{"h_zz", h.h_zz}, {"h_zw", complex_pair(h.h_zw)}, {"h_ww", h.h_ww}};
}

}  // namespace jacobi_cs
