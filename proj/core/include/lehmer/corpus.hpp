#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include <nlohmann/json.hpp>

#include "lehmer/bounds.hpp"

namespace lehmer {

/// One instance of the family g = T + M x^N, where T is a product of
/// cyclotomic polynomials of degree 2N. T divides (x^n - 1)^r for n the lcm of
/// its indices and r its largest multiplicity, and f = g (x^n - 1)^r / T is
/// congruent to (x^n - 1)^r mod |M|.
struct NearCyclotomic {
  IntPoly f;
  IntPoly g;
  IntPoly t;
  Integer m;  // |M|
  std::size_t n = 1;
  std::size_t r = 1;

  Instance instance() const { return {f, g, t, m, n, r}; }
};

struct GenOptions {
  Integer m = 2;          // the shift M; |M| >= 2
  std::size_t half_degree = 1;  // N
  std::size_t count = 1;
  std::uint64_t seed = 0;
  std::uint64_t d_max = 30;     // largest cyclotomic index drawn
  std::size_t max_nr = 360;     // keeps deg f = nr manageable
};

/// Deterministic in the options. Only g without cyclotomic factors are kept.
/// Throws std::invalid_argument on |M| < 2 or N = 0.
std::vector<NearCyclotomic> generate_near_cyclotomic(const GenOptions& options);

/// {"f", "g", "T", "m", "n", "r"} with ascending coefficient arrays.
nlohmann::json to_json(const NearCyclotomic& inst);

/// Reads {"f", "g"?, "T"?, "m", "n", "r"?}; g defaults to f and r to 1.
/// Throws std::invalid_argument on a malformed object.
Instance instance_from_json(const nlohmann::json& j);

}  // namespace lehmer
