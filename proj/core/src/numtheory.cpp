#include "lehmer/numtheory.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

namespace lehmer {

namespace {

constexpr std::uint32_t kTrialLimit = 1U << 16;
constexpr int kPrimeReps = 30;
constexpr std::size_t kRhoIterations = 1U << 12;

const std::vector<std::uint32_t>& small_primes() {
  static const std::vector<std::uint32_t> primes = [] {
    std::vector<bool> composite(kTrialLimit + 1, false);
    std::vector<std::uint32_t> out;
    for (std::uint32_t i = 2; i <= kTrialLimit; ++i) {
      if (composite[i]) continue;
      out.push_back(i);
      for (std::uint64_t j = static_cast<std::uint64_t>(i) * i; j <= kTrialLimit; j += i) composite[j] = true;
    }
    return out;
  }();
  return primes;
}

// Brent's variant of Pollard rho; returns a nontrivial factor or 0.
Integer pollard_brent(const Integer& n, unsigned long seed) {
  if (mpz_even_p(n.get_mpz_t())) return 2;
  const unsigned long c = seed % 31 + 1;
  auto step_fn = [&](Integer& v) {
    v = v * v + c;
    mpz_mod(v.get_mpz_t(), v.get_mpz_t(), n.get_mpz_t());
  };
  Integer y = seed % 97 + 2;
  Integer g = 1, q = 1, x, ys, diff;
  std::size_t r = 1, used = 0;
  while (g == 1 && used < kRhoIterations) {
    x = y;
    for (std::size_t i = 0; i < r; ++i) step_fn(y);
    std::size_t k = 0;
    while (k < r && g == 1) {
      ys = y;
      const std::size_t batch = std::min<std::size_t>(64, r - k);
      for (std::size_t i = 0; i < batch; ++i) {
        step_fn(y);
        diff = abs(x - y);
        q *= diff;
        mpz_mod(q.get_mpz_t(), q.get_mpz_t(), n.get_mpz_t());
      }
      mpz_gcd(g.get_mpz_t(), q.get_mpz_t(), n.get_mpz_t());
      k += batch;
      used += batch;
    }
    r *= 2;
  }
  if (g == n) {
    do {
      step_fn(ys);
      diff = abs(x - ys);
      mpz_gcd(g.get_mpz_t(), diff.get_mpz_t(), n.get_mpz_t());
    } while (g == 1);
  }
  if (g == 1 || g == n) return 0;
  return g;
}

void split_fully(const Integer& n, std::vector<Integer>& primes, std::vector<Integer>& stubborn, int depth = 0) {
  if (n == 1) return;
  if (is_prime(n)) {
    primes.push_back(n);
    return;
  }
  Integer f = 0;
  for (unsigned long seed = 1; seed <= 3 && f == 0 && depth < 64; ++seed) f = pollard_brent(n, seed);
  if (f == 0) {
    stubborn.push_back(n);
    return;
  }
  Integer cofactor = n / f;
  split_fully(f, primes, stubborn, depth + 1);
  split_fully(cofactor, primes, stubborn, depth + 1);
}

// Refines a multiset of integers > 1 into a pairwise coprime set generating
// all of them multiplicatively.
std::vector<Integer> coprime_base(std::vector<Integer> items) {
  std::vector<Integer> base;
  while (!items.empty()) {
    Integer a = std::move(items.back());
    items.pop_back();
    if (a == 1) continue;
    bool merged = false;
    for (std::size_t i = 0; i < base.size(); ++i) {
      Integer g;
      mpz_gcd(g.get_mpz_t(), a.get_mpz_t(), base[i].get_mpz_t());
      if (g == 1) continue;
      Integer b = std::move(base[i]);
      base.erase(base.begin() + static_cast<std::ptrdiff_t>(i));
      if (a == b) {
        items.push_back(std::move(a));
      } else {
        items.push_back(a / g);
        items.push_back(b / g);
        items.push_back(g);
      }
      merged = true;
      break;
    }
    if (!merged) base.push_back(std::move(a));
  }
  return base;
}

}  // namespace

bool is_prime(const Integer& n) {
  if (n < 2) return false;
  return mpz_probab_prime_p(n.get_mpz_t(), kPrimeReps) > 0;
}

bool is_prime(std::uint64_t n) { return is_prime(Integer(static_cast<unsigned long>(n))); }

std::uint64_t totient(std::uint64_t n) {
  if (n == 0) throw std::invalid_argument("totient(0)");
  std::uint64_t result = n;
  for (std::uint64_t p : prime_divisors(n)) result = result / p * (p - 1);
  return result;
}

std::vector<std::uint64_t> divisors(std::uint64_t n) {
  if (n == 0) throw std::invalid_argument("divisors(0)");
  std::vector<std::uint64_t> small, large;
  for (std::uint64_t d = 1; d * d <= n; ++d) {
    if (n % d != 0) continue;
    small.push_back(d);
    if (d * d != n) large.push_back(n / d);
  }
  small.insert(small.end(), large.rbegin(), large.rend());
  return small;
}

std::vector<std::uint64_t> prime_divisors(std::uint64_t n) {
  std::vector<std::uint64_t> out;
  for (std::uint64_t p = 2; p * p <= n; ++p) {
    if (n % p != 0) continue;
    out.push_back(p);
    while (n % p == 0) n /= p;
  }
  if (n > 1) out.push_back(n);
  return out;
}

std::uint64_t lcm_u64(std::uint64_t a, std::uint64_t b) { return a / std::gcd(a, b) * b; }

double log_abs(const Integer& n) {
  if (n == 0) throw std::domain_error("log of zero");
  // Exact doubles go straight to std::log so small values match it bit for bit.
  if (mpz_sizeinbase(n.get_mpz_t(), 2) <= 53) return std::log(std::fabs(n.get_d()));
  long exp = 0;
  const double mant = mpz_get_d_2exp(&exp, n.get_mpz_t());
  return std::log(std::fabs(mant)) + static_cast<double>(exp) * std::log(2.0);
}

double log_abs(const Rat& x) { return log_abs(x.get_num()) - log_abs(x.get_den()); }

std::size_t valuation(const Integer& n, const Integer& p) {
  if (n == 0) throw std::domain_error("valuation of zero");
  if (p < 2) throw std::invalid_argument("valuation base must exceed 1");
  Integer rest = n;
  return mpz_remove(rest.get_mpz_t(), n.get_mpz_t(), p.get_mpz_t());
}

std::vector<SupportElement> integer_support(const std::vector<Integer>& values) {
  std::vector<Integer> found_primes;
  std::vector<Integer> stubborn;
  for (const auto& v : values) {
    if (v == 0) throw std::invalid_argument("integer_support: zero value");
    Integer n = abs(v);
    for (std::uint32_t p : small_primes()) {
      if (n == 1) break;
      if (mpz_divisible_ui_p(n.get_mpz_t(), p)) {
        found_primes.emplace_back(p);
        mpz_remove(n.get_mpz_t(), n.get_mpz_t(), Integer(p).get_mpz_t());
      }
    }
    split_fully(n, found_primes, stubborn);
  }
  std::vector<Integer> items = found_primes;
  items.insert(items.end(), stubborn.begin(), stubborn.end());
  std::vector<Integer> base = coprime_base(std::move(items));
  std::sort(base.begin(), base.end());
  std::vector<SupportElement> out;
  out.reserve(base.size());
  for (auto& b : base) out.push_back({b, is_prime(b)});
  return out;
}

}  // namespace lehmer
