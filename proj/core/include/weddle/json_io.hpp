#pragma once

#include <json.hpp>

#include "weddle/linalg.hpp"
#include "weddle/poly.hpp"
#include "weddle/solve.hpp"
#include "weddle/system.hpp"
#include "weddle/tensor.hpp"

namespace weddle {

using Json = nlohmann::ordered_json;

// Rationals are written as strings ("-3/2"); integers are accepted on input.
Json rat_to_json(const Rat& r);
Rat rat_from_json(const Json& j);

Json matrix_to_json(const RatMatrix& m);
RatMatrix matrix_from_json(const Json& j);

Json point_to_json(const std::vector<Rat>& p);
std::vector<Rat> point_from_json(const Json& j);

// {"dim": d, "faces": [face_0, ..., face_{d-1}]}, face_k[i][j] = T_{ijk}
Json tensor_to_json(const Tensor3& t);
Tensor3 tensor_from_json(const Json& j);

// {"n": n, "quadrics": [Q_0, ..., Q_n]}
Json system_to_json(const LinearSystem& sys);
LinearSystem system_from_json(const Json& j);

// {"nvars": k, "poly": "x0*x1*x2"}
Json poly_to_json(const MultiPoly& p);
MultiPoly poly_from_json(const Json& j);

Json cpoint_to_json(const CPoint& p);
Json solution_set_to_json(const SolutionSet& s);

}  // namespace weddle
