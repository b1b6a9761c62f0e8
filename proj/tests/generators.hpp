#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include "lehmer/poly.hpp"

namespace gen {

using lehmer::Integer;
using lehmer::IntPoly;
using lehmer::Rat;

inline long uniform(std::mt19937_64& rng, long lo, long hi) {
  return std::uniform_int_distribution<long>(lo, hi)(rng);
}

/// Degree exactly `degree`, coefficients in [-bound, bound], nonzero lead.
inline IntPoly poly(std::mt19937_64& rng, std::size_t degree, long bound) {
  std::vector<Integer> c(degree + 1);
  for (auto& x : c) x = uniform(rng, -bound, bound);
  while (c.back() == 0) c.back() = uniform(rng, -bound, bound);
  return IntPoly(c);
}

inline IntPoly poly_upto(std::mt19937_64& rng, std::size_t max_degree, long bound) {
  return poly(rng, static_cast<std::size_t>(uniform(rng, 0, static_cast<long>(max_degree))), bound);
}

/// Nonzero constant term as well, so 0 is not a root.
inline IntPoly poly_unit_free(std::mt19937_64& rng, std::size_t degree, long bound) {
  IntPoly f = poly(rng, degree, bound);
  if (f[0] == 0) f += IntPoly::constant(uniform(rng, 1, bound));
  return f;
}

inline Integer big(std::mt19937_64& rng, unsigned bits) {
  Integer v = 0;
  for (unsigned k = 0; k < bits; k += 32) v = (v << 32) + static_cast<unsigned long>(rng() & 0xffffffffu);
  return rng() & 1 ? v : Integer(-v);
}

inline Rat rational(std::mt19937_64& rng, long bound) {
  Rat q(Integer(uniform(rng, -bound, bound)), Integer(uniform(rng, 1, bound)));
  q.canonicalize();
  return q;
}

}  // namespace gen
