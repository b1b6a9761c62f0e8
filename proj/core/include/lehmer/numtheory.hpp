#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "lehmer/poly.hpp"

namespace lehmer {

bool is_prime(const Integer& n);
bool is_prime(std::uint64_t n);

std::uint64_t totient(std::uint64_t n);
std::vector<std::uint64_t> divisors(std::uint64_t n);
std::vector<std::uint64_t> prime_divisors(std::uint64_t n);
std::uint64_t lcm_u64(std::uint64_t a, std::uint64_t b);

/// Natural log of |n| for arbitrarily large n (n != 0).
double log_abs(const Integer& n);
/// Natural log of |x| for x != 0.
double log_abs(const Rat& x);

/// ord_p(n) for n != 0 and p > 1.
std::size_t valuation(const Integer& n, const Integer& p);

/// Support element for a set of integers: either a prime, or a composite we
/// could not split cheaply. Composite elements are pairwise coprime with every
/// other element, so each input is a product of powers of them.
struct SupportElement {
  Integer base;
  bool prime = false;
};

/// Pairwise-coprime support of the given nonzero integers: every |x| in the
/// input factors as prod base_i^{e_i}. Primes are split out by trial division
/// and a bounded Pollard-Brent search; what remains is refined into a coprime
/// base. Sorted by base.
std::vector<SupportElement> integer_support(const std::vector<Integer>& values);

}  // namespace lehmer
