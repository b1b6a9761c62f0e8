#pragma once

// Slow, independent reference implementations used only by the tests. None of
// them call into the library's algorithms beyond the IntPoly container.

#include <complex>
#include <cstdint>
#include <map>
#include <vector>

#include "lehmer/poly.hpp"

namespace oracle {

using lehmer::Integer;
using lehmer::IntPoly;
using lehmer::Rat;
using Coeffs = std::vector<Integer>;

inline Coeffs trimmed(Coeffs c) {
  while (!c.empty() && c.back() == 0) c.pop_back();
  return c;
}

inline IntPoly make(const Coeffs& c) { return IntPoly(trimmed(c)); }

inline Coeffs mul(const Coeffs& a, const Coeffs& b) {
  if (a.empty() || b.empty()) return {};
  Coeffs out(a.size() + b.size() - 1);
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) out[i + j] += a[i] * b[j];
  return trimmed(out);
}

inline Coeffs add(const Coeffs& a, const Coeffs& b, int sign = 1) {
  Coeffs out(std::max(a.size(), b.size()));
  for (std::size_t i = 0; i < a.size(); ++i) out[i] += a[i];
  for (std::size_t i = 0; i < b.size(); ++i) out[i] += sign * b[i];
  return trimmed(out);
}

/// Determinant by fraction-free Gaussian elimination (Bareiss).
inline Integer determinant(std::vector<std::vector<Integer>> m) {
  const std::size_t n = m.size();
  if (n == 0) return 1;
  Integer prev = 1;
  int sign = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (m[k][k] == 0) {
      std::size_t swap = k + 1;
      while (swap < n && m[swap][k] == 0) ++swap;
      if (swap == n) return 0;
      std::swap(m[k], m[swap]);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        m[i][j] = (m[i][j] * m[k][k] - m[i][k] * m[k][j]) / prev;
      }
    }
    prev = m[k][k];
  }
  return sign * m[n - 1][n - 1];
}

/// Res(a, b) as the determinant of the Sylvester matrix.
inline Integer sylvester_resultant(const Coeffs& a, const Coeffs& b) {
  const std::size_t da = a.size() - 1;
  const std::size_t db = b.size() - 1;
  const std::size_t n = da + db;
  if (n == 0) return 1;
  std::vector<std::vector<Integer>> m(n, std::vector<Integer>(n));
  for (std::size_t i = 0; i < db; ++i)
    for (std::size_t k = 0; k <= da; ++k) m[i][i + k] = a[da - k];
  for (std::size_t i = 0; i < da; ++i)
    for (std::size_t k = 0; k <= db; ++k) m[db + i][i + k] = b[db - k];
  return determinant(m);
}

/// Monic gcd over Q by the plain Euclidean algorithm.
inline std::vector<Rat> gcd_over_q(std::vector<Rat> a, std::vector<Rat> b) {
  auto trim = [](std::vector<Rat>& v) {
    while (!v.empty() && v.back() == 0) v.pop_back();
  };
  trim(a);
  trim(b);
  while (!b.empty()) {
    while (a.size() >= b.size() && !a.empty()) {
      const Rat q = a.back() / b.back();
      const std::size_t shift = a.size() - b.size();
      for (std::size_t k = 0; k < b.size(); ++k) a[shift + k] -= q * b[k];
      trim(a);
    }
    std::swap(a, b);
  }
  if (!a.empty()) {
    const Rat lc = a.back();
    for (auto& x : a) x /= lc;
  }
  return a;
}

inline std::vector<Rat> to_rat(const IntPoly& f) { return {f.coeffs().begin(), f.coeffs().end()}; }

inline Integer binomial(unsigned long n, unsigned long k) {
  Integer out;
  mpz_bin_uiui(out.get_mpz_t(), n, k);
  return out;
}

/// T(x + c) from the binomial expansion of each monomial.
inline Coeffs shift(const Coeffs& t, const Integer& c) {
  Coeffs out(t.size());
  for (std::size_t k = 0; k < t.size(); ++k) {
    for (std::size_t j = 0; j <= k; ++j) {
      Integer power;
      mpz_pow_ui(power.get_mpz_t(), c.get_mpz_t(), k - j);
      out[j] += t[k] * binomial(k, j) * power;
    }
  }
  return trimmed(out);
}

/// T^(k)(1) / k! by differentiating k times and dividing by k!.
inline Integer taylor_at_one(const Coeffs& t, std::size_t k) {
  Coeffs d = t;
  Integer fact = 1;
  for (std::size_t i = 0; i < k; ++i) {
    Coeffs next;
    for (std::size_t j = 1; j < d.size(); ++j) next.push_back(d[j] * static_cast<unsigned long>(j));
    d = next;
    fact *= static_cast<unsigned long>(i + 1);
  }
  Integer v = 0;
  for (const auto& c : d) v += c;
  return v / fact;
}

/// log gcd{ m^k T^(k)(1)/k! } with zeros ignored.
inline double omega(const Coeffs& t, long m) {
  Integer g = 0;
  for (std::size_t k = 0; k < t.size(); ++k) {
    Integer mk;
    mpz_ui_pow_ui(mk.get_mpz_t(), static_cast<unsigned long>(m), k);
    Integer e = mk * taylor_at_one(t, k);
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), e.get_mpz_t());
  }
  return std::log(g.get_d());
}

/// Long division over Z by a monic divisor; returns the quotient, requires
/// exactness.
inline Coeffs divide_monic(Coeffs a, const Coeffs& b) {
  const std::size_t db = b.size() - 1;
  Coeffs q(a.size() - db);
  for (std::size_t top = a.size(); top-- > db;) {
    const Integer c = a[top];
    q[top - db] = c;
    for (std::size_t k = 0; k <= db; ++k) a[top - db + k] -= c * b[k];
  }
  for (const auto& r : a)
    if (r != 0) throw std::logic_error("divide_monic: not exact");
  return trimmed(q);
}

/// Phi_n by the textbook recursion (x^n - 1) / prod_{d | n, d < n} Phi_d.
inline const Coeffs& cyclotomic(std::uint64_t n) {
  static std::map<std::uint64_t, Coeffs> memo;
  auto it = memo.find(n);
  if (it != memo.end()) return it->second;
  Coeffs num(n + 1);
  num[0] = -1;
  num[n] = 1;
  for (std::uint64_t d = 1; d < n; ++d) {
    if (n % d == 0) num = divide_monic(num, cyclotomic(d));
  }
  return memo.emplace(n, num).first->second;
}

inline std::uint64_t totient(std::uint64_t n) {
  std::uint64_t count = 0;
  for (std::uint64_t k = 1; k <= n; ++k) {
    std::uint64_t a = k, b = n;
    while (b) {
      a %= b;
      std::swap(a, b);
    }
    if (a == 1) ++count;
  }
  return count;
}

/// Durand-Kerner roots in long double, for polynomials with a nonzero
/// constant term.
inline std::vector<std::complex<long double>> durand_kerner(const Coeffs& c) {
  using cl = std::complex<long double>;
  const std::size_t n = c.size() - 1;
  std::vector<long double> a(c.size());
  for (std::size_t k = 0; k < c.size(); ++k) a[k] = static_cast<long double>(c[k].get_d()) / static_cast<long double>(c[n].get_d());
  long double radius = 0;
  for (std::size_t k = 0; k < n; ++k) radius = std::max(radius, std::pow(std::fabs(a[k]), 1.0L / static_cast<long double>(n - k)));
  radius = std::max<long double>(radius, 0.5L) * 1.1L;
  std::vector<cl> z(n);
  for (std::size_t k = 0; k < n; ++k) z[k] = std::polar(radius, 0.4L + 6.283185307179586L * k / n);
  auto eval = [&](cl x) {
    cl p = 1;
    for (std::size_t k = n; k-- > 0;) p = p * x + a[k];
    return p;
  };
  for (int it = 0; it < 5000; ++it) {
    long double moved = 0;
    for (std::size_t i = 0; i < n; ++i) {
      cl den = 1;
      for (std::size_t j = 0; j < n; ++j)
        if (j != i) den *= z[i] - z[j];
      const cl step = eval(z[i]) / den;
      z[i] -= step;
      moved = std::max(moved, std::abs(step));
    }
    if (moved < 1e-17L) break;
  }
  return z;
}

inline double mahler(const Coeffs& c) {
  long double v = std::log(std::fabs(static_cast<long double>(c.back().get_d())));
  for (const auto& z : durand_kerner(c))
    if (std::abs(z) > 1) v += std::log(std::abs(z));
  return static_cast<double>(v);
}

/// max |T| over a uniform grid on the circle; a lower estimate of the sup.
inline double grid_sup_log(const Coeffs& t, std::size_t samples) {
  long double best = 0;
  for (std::size_t j = 0; j < samples; ++j) {
    const long double th = 6.283185307179586476925L * static_cast<long double>(j) / static_cast<long double>(samples);
    std::complex<long double> z = std::polar(1.0L, th), p = 0;
    for (std::size_t k = t.size(); k-- > 0;) p = p * z + static_cast<long double>(t[k].get_d());
    best = std::max(best, std::abs(p));
  }
  return static_cast<double>(std::log(best));
}

/// Prime factorization of a positive integer by trial division.
inline std::map<Integer, unsigned long> factor(Integer n) {
  std::map<Integer, unsigned long> out;
  for (Integer p = 2; p * p <= n; ++p) {
    while (n % p == 0) {
      ++out[p];
      n /= p;
    }
  }
  if (n > 1) ++out[n];
  return out;
}

}  // namespace oracle
