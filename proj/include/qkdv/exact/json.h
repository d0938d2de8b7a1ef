#pragma once

#include <json.hpp>

#include "qkdv/exact/matrix.h"

namespace qkdv {

// {"vars":[...],"terms":[{"exp":[...],"num":"...","den":"..."}]}, terms in
// lexicographic exponent order, so equal polynomials serialize identically.
nlohmann::json poly_to_json(const ExactPoly& p);
ExactPoly poly_from_json(const nlohmann::json& j);

nlohmann::json matrix_to_json(const ExactMatrix& m);
ExactMatrix matrix_from_json(const nlohmann::json& j);

}  // namespace qkdv
