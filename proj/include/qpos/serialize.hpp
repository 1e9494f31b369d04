#pragma once

#include <json.hpp>

#include "qpos/laurent_poly.hpp"

namespace qpos {

/// {"min_exp": e, "coeffs": ["c0", "c1", ...]} with decimal coefficient
/// strings so arbitrary precision survives the round trip.
nlohmann::json poly_to_json(const LaurentPoly& p);

/// Inverse of poly_to_json. Input need not be in normal form; it is
/// normalized. Throws ParseError on a malformed object.
LaurentPoly poly_from_json(const nlohmann::json& j);

}  // namespace qpos
