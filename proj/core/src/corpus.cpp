#include "lehmer/corpus.hpp"

#include <map>
#include <random>
#include <stdexcept>

#include "lehmer/cyclotomic.hpp"
#include "lehmer/json.hpp"
#include "lehmer/numtheory.hpp"

namespace lehmer {

namespace {

std::size_t size_field(const nlohmann::json& j, const char* key) {
  const auto& v = j.at(key);
  if (!v.is_number_integer() || v.get<long long>() < 1) {
    throw std::invalid_argument(std::string("field '") + key + "' must be a positive integer");
  }
  return v.get<std::size_t>();
}

}  // namespace

std::vector<NearCyclotomic> generate_near_cyclotomic(const GenOptions& o) {
  if (abs(o.m) < 2) throw std::invalid_argument("|m| >= 2 required");
  if (o.half_degree == 0) throw std::invalid_argument("N >= 1 required");
  if (o.d_max == 0) throw std::invalid_argument("d_max >= 1 required");

  std::vector<std::pair<std::uint64_t, std::size_t>> indices;  // (d, phi(d))
  for (std::uint64_t d = 1; d <= o.d_max; ++d) indices.emplace_back(d, totient(d));

  std::mt19937_64 rng(o.seed);
  const std::size_t degree = 2 * o.half_degree;
  const std::size_t max_attempts = 1000 * (o.count + 1);
  std::vector<NearCyclotomic> out;
  for (std::size_t attempt = 0; out.size() < o.count; ++attempt) {
    if (attempt >= max_attempts) throw std::runtime_error("generator gave up: too many rejected draws");
    std::map<std::uint64_t, std::size_t> mult;
    std::size_t left = degree;
    while (left > 0) {
      std::vector<std::pair<std::uint64_t, std::size_t>> fits;
      for (const auto& e : indices) {
        if (e.second <= left) fits.push_back(e);
      }
      const auto& pick = fits[rng() % fits.size()];
      ++mult[pick.first];
      left -= pick.second;
    }
    std::uint64_t n = 1;
    std::size_t r = 0;
    IntPoly t = IntPoly::constant(1);
    for (const auto& [d, k] : mult) {
      n = lcm_u64(n, d);
      r = std::max(r, k);
      t *= pow(cyclotomic(d), k);
    }
    if (n * r > o.max_nr) continue;

    IntPoly g = t + IntPoly::monomial(o.m, o.half_degree);
    if (!cyclo_profile(g).cyclotomic_free()) continue;
    auto cofactor = divide_exact(pow(x_pow_minus_one(n), r), t);
    if (!cofactor) throw std::logic_error("cyclotomic product does not divide (x^n - 1)^r");
    NearCyclotomic inst;
    inst.f = g * *cofactor;
    inst.g = std::move(g);
    inst.t = std::move(t);
    inst.m = abs(o.m);
    inst.n = n;
    inst.r = r;
    out.push_back(std::move(inst));
  }
  return out;
}

nlohmann::json to_json(const NearCyclotomic& inst) {
  return {{"f", coeffs_to_json(inst.f)}, {"g", coeffs_to_json(inst.g)}, {"T", coeffs_to_json(inst.t)},
          {"m", inst.m.fits_slong_p() ? nlohmann::json(inst.m.get_si()) : nlohmann::json(inst.m.get_str())},
          {"n", inst.n},                 {"r", inst.r}};
}

Instance instance_from_json(const nlohmann::json& j) {
  if (!j.is_object()) throw std::invalid_argument("instance must be a JSON object");
  try {
    Instance in;
    in.f = coeffs_from_json(j.at("f"));
    if (j.contains("g") && !j["g"].is_null()) in.g = coeffs_from_json(j["g"]);
    if (j.contains("T") && !j["T"].is_null()) in.t = coeffs_from_json(j["T"]);
    in.m = integer_from_json(j.at("m"));
    in.n = size_field(j, "n");
    in.r = j.contains("r") ? size_field(j, "r") : 1;
    if (in.f.is_zero()) throw std::invalid_argument("f must be nonzero");
    if (in.g && in.g->is_zero()) throw std::invalid_argument("g must be nonzero");
    return in;
  } catch (const nlohmann::json::exception& e) {
    throw std::invalid_argument(std::string("malformed instance: ") + e.what());
  }
}

}  // namespace lehmer
