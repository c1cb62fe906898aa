#pragma once

// JSON forms of the library's report and value types.

#include <json.hpp>

#include "jacobi_cs/algebra.hpp"
#include "jacobi_cs/embedding.hpp"
#include "jacobi_cs/group.hpp"
#include "jacobi_cs/quadrature.hpp"

namespace jacobi_cs {

nlohmann::json complex_pair(Complex c);  // [re, im]

nlohmann::json to_json(const RelationReport& r);
nlohmann::json to_json(const JacobiGroupElement& e);  // {a_re, a_im, b_re, b_im, alpha_re, alpha_im, t}
JacobiGroupElement group_element_from_json(const nlohmann::json& j);
nlohmann::json to_json(const ProjectiveVector& v);  // [[re, im], ...]
nlohmann::json to_json(const McEstimate& e);        // {re, im, std_error, n_samples, seed}
nlohmann::json to_json(const HermitianMetric2& h);

}  // namespace jacobi_cs
