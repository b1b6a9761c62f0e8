#include "lehmer/cyclotomic.hpp"

#include <algorithm>
#include <map>
#include <mutex>

#include "lehmer/numtheory.hpp"

namespace lehmer {

namespace {

std::mutex g_memo_mutex;
std::map<std::uint64_t, IntPoly>& memo() {
  static std::map<std::uint64_t, IntPoly> table;
  return table;
}

std::vector<std::uint64_t> totient_table(std::uint64_t limit) {
  std::vector<std::uint64_t> phi(limit + 1);
  for (std::uint64_t i = 0; i <= limit; ++i) phi[i] = i;
  for (std::uint64_t p = 2; p <= limit; ++p) {
    if (phi[p] != p) continue;
    for (std::uint64_t k = p; k <= limit; k += p) phi[k] -= phi[k] / p;
  }
  return phi;
}

int moebius(std::uint64_t n) {
  int mu = 1;
  for (std::uint64_t p = 2; p * p <= n; ++p) {
    if (n % p != 0) continue;
    n /= p;
    if (n % p == 0) return 0;
    mu = -mu;
  }
  return n > 1 ? -mu : mu;
}

// a * (x^e - 1)
std::vector<Integer> times_binomial(const std::vector<Integer>& a, std::uint64_t e) {
  std::vector<Integer> out(a.size() + e);
  for (std::size_t k = 0; k < a.size(); ++k) {
    out[k + e] += a[k];
    out[k] -= a[k];
  }
  return out;
}

// a / (x^e - 1), exact.
std::vector<Integer> divide_binomial(const std::vector<Integer>& a, std::uint64_t e) {
  if (a.size() <= e) throw std::logic_error("cyclotomic: inexact binomial division");
  std::vector<Integer> q(a.size() - e);
  for (std::size_t k = a.size(); k-- > e;) {
    q[k - e] = a[k] + (k < q.size() ? q[k] : Integer(0));
  }
  for (std::size_t k = 0; k < e; ++k) {
    if (a[k] + (k < q.size() ? q[k] : Integer(0)) != 0) throw std::logic_error("cyclotomic: inexact binomial division");
  }
  return q;
}

constexpr std::uint64_t kFilterPrime = 2147483647ULL;

std::vector<std::uint64_t> residues(const IntPoly& f) {
  std::vector<std::uint64_t> out(f.coeffs().size());
  for (std::size_t k = 0; k < out.size(); ++k) out[k] = mpz_fdiv_ui(f.coeffs()[k].get_mpz_t(), kFilterPrime);
  return out;
}

// Whether the monic phi divides f modulo the filter prime. A divisor over Z
// always passes, so a failure rules out exact division.
bool divides_mod_prime(std::vector<std::uint64_t> f, const std::vector<std::uint64_t>& phi) {
  const std::uint64_t p = kFilterPrime;
  const std::size_t dp = phi.size() - 1;
  for (std::size_t top = f.size(); top-- > dp;) {
    const std::uint64_t lead = f[top];
    if (lead == 0) continue;
    const std::size_t shift = top - dp;
    for (std::size_t k = 0; k <= dp; ++k) f[shift + k] = (f[shift + k] + (p - lead) * phi[k]) % p;
  }
  for (std::size_t k = 0; k < std::min(dp, f.size()); ++k) {
    if (f[k] != 0) return false;
  }
  return true;
}

}  // namespace

IntPoly cyclotomic(std::uint64_t d) {
  if (d == 0) throw std::invalid_argument("cyclotomic: index must be >= 1");
  {
    std::lock_guard lock(g_memo_mutex);
    auto it = memo().find(d);
    if (it != memo().end()) return it->second;
  }
  // Phi_d = prod_{e | d} (x^e - 1)^{mu(d/e)}: the quotient of x^d - 1 by the
  // lower Phi_e, assembled from binomial factors so each step is O(d).
  std::vector<Integer> acc{Integer(1)};
  std::vector<std::uint64_t> denominators;
  for (std::uint64_t e : divisors(d)) {
    const int mu = moebius(d / e);
    if (mu == 1) {
      acc = times_binomial(acc, e);
    } else if (mu == -1) {
      denominators.push_back(e);
    }
  }
  for (std::uint64_t e : denominators) acc = divide_binomial(acc, e);
  IntPoly phi(std::move(acc));
  std::lock_guard lock(g_memo_mutex);
  return memo().emplace(d, std::move(phi)).first->second;
}

std::size_t multiplicity(const IntPoly& t, const IntPoly& g) {
  if (t.is_zero()) throw std::invalid_argument("multiplicity: zero polynomial");
  if (g.is_zero() || g.deg() == 0) throw std::invalid_argument("multiplicity: g must have positive degree");
  // Over Q[x], g | t iff pp(g) | t in Z[x] (Gauss).
  const IntPoly base = g.primitive_part();
  IntPoly rest = t;
  std::size_t k = 0;
  while (rest.deg() >= base.deg()) {
    auto q = divide_exact(rest, base);
    if (!q) break;
    rest = std::move(*q);
    ++k;
  }
  return k;
}

std::size_t gn_multiplicity(const IntPoly& t, std::size_t n) {
  if (t.is_zero()) throw std::invalid_argument("gn_multiplicity: zero polynomial");
  if (n == 0) throw std::invalid_argument("gn_multiplicity: n must be >= 1");
  std::size_t total = 0;
  for (std::size_t e = n; e <= t.deg(); e *= 2) {
    total += multiplicity(t, IntPoly::monomial(1, e) + IntPoly::constant(1));
  }
  return total;
}

std::size_t CycloProfile::max_multiplicity() const {
  std::size_t r = 0;
  for (const auto& f : factors) r = std::max(r, f.mult);
  return r;
}

CycloProfile cyclo_profile(const IntPoly& f) {
  if (f.is_zero()) throw std::invalid_argument("cyclo_profile: zero polynomial");
  CycloProfile out;
  out.cofactor = f;
  const std::uint64_t n = f.deg();
  // phi(d) >= sqrt(d/2), so phi(d) <= n forces d <= 2 n^2.
  const std::uint64_t d_limit = 2 * n * n;
  const std::vector<std::uint64_t> phi_table = totient_table(d_limit);
  auto reduced = residues(out.cofactor);
  for (std::uint64_t d = 1; d <= d_limit; ++d) {
    if (out.cofactor.deg() == 0) break;
    if (phi_table[d] > out.cofactor.deg()) continue;
    const IntPoly phi = cyclotomic(d);
    if (reduced.back() != 0 && !divides_mod_prime(reduced, residues(phi))) continue;
    std::size_t k = 0;
    while (out.cofactor.deg() >= phi.deg()) {
      auto q = divide_exact(out.cofactor, phi);
      if (!q) break;
      out.cofactor = std::move(*q);
      ++k;
    }
    if (k > 0) {
      out.factors.push_back({d, k});
      reduced = residues(out.cofactor);
    }
  }
  return out;
}

}  // namespace lehmer
