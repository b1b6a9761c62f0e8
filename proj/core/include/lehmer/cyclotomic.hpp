#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "lehmer/poly.hpp"

namespace lehmer {

/// Phi_d, memoized per process. Thread-safe.
IntPoly cyclotomic(std::uint64_t d);

/// Largest k with g^k | t in Q[x].
std::size_t multiplicity(const IntPoly& t, const IntPoly& g);

/// Sum over j >= 0 of multiplicity(t, x^(n 2^j) + 1).
std::size_t gn_multiplicity(const IntPoly& t, std::size_t n);

struct CycloFactor {
  std::uint64_t d;
  std::size_t mult;
  friend bool operator==(const CycloFactor&, const CycloFactor&) = default;
};

struct CycloProfile {
  std::vector<CycloFactor> factors;  // ascending d
  IntPoly cofactor;

  bool cyclotomic_free() const { return factors.empty(); }
  std::size_t max_multiplicity() const;
};

/// Splits off every cyclotomic factor of f by trial division over all d with
/// phi(d) <= deg f (so d <= 2 (deg f)^2).
CycloProfile cyclo_profile(const IntPoly& f);

}  // namespace lehmer
