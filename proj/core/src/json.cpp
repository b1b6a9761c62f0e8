#include "lehmer/json.hpp"

#include <cstdint>
#include <stdexcept>
#include <string>

namespace lehmer {

nlohmann::json coeffs_to_json(const IntPoly& f) {
  auto out = nlohmann::json::array();
  for (const auto& c : f.coeffs()) {
    if (c.fits_slong_p()) {
      out.push_back(c.get_si());
    } else {
      out.push_back(c.get_str());
    }
  }
  return out;
}

Integer integer_from_json(const nlohmann::json& j) {
  if (j.is_number_unsigned()) return Integer(std::to_string(j.get<std::uint64_t>()));
  if (j.is_number_integer()) return Integer(j.get<long>());
  if (j.is_string()) {
    Integer out;
    if (out.set_str(j.get<std::string>(), 10) != 0) throw std::invalid_argument("not an integer: " + j.dump());
    return out;
  }
  throw std::invalid_argument("not an integer: " + j.dump());
}

IntPoly coeffs_from_json(const nlohmann::json& j) {
  if (j.is_string()) {
    try {
      return parse_poly(j.get<std::string>());
    } catch (const ParseError& e) {
      throw std::invalid_argument(std::string("bad polynomial: ") + e.what());
    }
  }
  if (!j.is_array()) throw std::invalid_argument("polynomial must be a coefficient array or a string");
  std::vector<Integer> c;
  c.reserve(j.size());
  for (const auto& x : j) c.push_back(integer_from_json(x));
  return IntPoly(std::move(c));
}

}  // namespace lehmer
