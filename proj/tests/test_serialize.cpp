#include <doctest.h>

#include "jacobi_cs/serialize.hpp"

using namespace jacobi_cs;

TEST_CASE("group element round trip") {
    const JacobiGroupElement e{SU11Element::from_angles(0.4, 1.0, -2.0), {0.3, -0.1}, 0.25};
    const auto back = group_element_from_json(to_json(e));
    CHECK(std::abs(back.g.a() - e.g.a()) < 1e-15);
    CHECK(std::abs(back.g.b() - e.g.b()) < 1e-15);
    CHECK(back.alpha == e.alpha);
    CHECK(back.t == e.t);
    auto bad = to_json(e);
    bad["a_re"] = 5.0;
    CHECK_THROWS_AS(group_element_from_json(bad), InvalidParams);
}

TEST_CASE("json shapes") {
    CHECK(complex_pair({1.0, -2.0}) == nlohmann::json::array({1.0, -2.0}));
    const auto v = to_json(ProjectiveVector::make({1.0, {0.0, 1.0}}));
    CHECK(v.size() == 2);
    const McEstimate est{{0.5, 0.0}, 0.01, 1000, 3};
    const auto j = to_json(est);
    CHECK(j["std_error"] == 0.01);
    CHECK(j["n_samples"] == 1000);
    const auto r = to_json(check_relations(2, ModelParams::make(1.0, 1.0)));
    CHECK(r["pass"] == true);
}
