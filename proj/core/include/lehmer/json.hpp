#pragma once

#include <nlohmann/json.hpp>

#include "lehmer/poly.hpp"

namespace lehmer {

/// Ascending coefficients; entries that do not fit in int64 become decimal
/// strings.
nlohmann::json coeffs_to_json(const IntPoly& f);

/// Inverse of coeffs_to_json. Also accepts a polynomial string in either
/// parse_poly form. Throws std::invalid_argument on anything else.
IntPoly coeffs_from_json(const nlohmann::json& j);

/// Integer from a JSON number or decimal string.
Integer integer_from_json(const nlohmann::json& j);

}  // namespace lehmer
