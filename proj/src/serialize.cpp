#include "qpos/serialize.hpp"

#include "qpos/errors.hpp"

namespace qpos {

nlohmann::json poly_to_json(const LaurentPoly& p) {
  nlohmann::json coeffs = nlohmann::json::array();
  for (const auto& c : p.coeffs()) coeffs.push_back(c.get_str());
  return {{"min_exp", p.min_exp()}, {"coeffs", std::move(coeffs)}};
}

LaurentPoly poly_from_json(const nlohmann::json& j) {
  if (!j.is_object() || !j.contains("min_exp") || !j.contains("coeffs") ||
      !j["min_exp"].is_number_integer() || !j["coeffs"].is_array()) {
    throw ParseError("polynomial JSON needs integer 'min_exp' and array 'coeffs'");
  }
  std::vector<Integer> coeffs;
  coeffs.reserve(j["coeffs"].size());
  for (const auto& c : j["coeffs"]) {
    if (!c.is_string()) throw ParseError("polynomial coefficients must be decimal strings");
    Integer v;
    if (v.set_str(c.get<std::string>(), 10) != 0) {
      throw ParseError("bad coefficient '" + c.get<std::string>() + "'");
    }
    coeffs.push_back(std::move(v));
  }
  return LaurentPoly(j["min_exp"].get<Exponent>(), std::move(coeffs));
}

}  // namespace qpos
