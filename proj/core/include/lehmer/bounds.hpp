#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <nlohmann/json.hpp>

#include "lehmer/poly.hpp"

namespace lehmer {

/// Listed in dispatcher tie-break order.
enum class Theorem { dubmoss_gen, dubmoss, padic, cyclos, cyclos2, universal, threshold, lowsup };

/// What a bound is a lower bound for.
enum class Target { height, mahler_measure };

std::string_view theorem_name(Theorem t);
/// Throws std::invalid_argument for an unknown name.
Theorem theorem_from_name(std::string_view name);

struct Hypothesis {
  std::string name;
  bool passed = false;
  std::string evidence;
};

struct BoundReport {
  Theorem theorem = Theorem::dubmoss_gen;
  Target target = Target::height;
  // Present only when every hypothesis passed.
  std::optional<double> value;
  // value / deg g for Mahler-measure bounds, value itself for height bounds.
  std::optional<double> per_degree;
  std::vector<Hypothesis> hypotheses;
  nlohmann::json inputs = nlohmann::json::object();

  bool all_passed() const;
  bool vacuous() const { return value && *value <= 0.0; }
};

void to_json(nlohmann::json& j, const BoundReport& r);

/// log gcd{ m^k T^(k)(1)/k! : 0 <= k <= deg T }, zero entries ignored.
/// Requires T != 0 and m >= 1.
double omega(const IntPoly& t, const Integer& m);

/// log |m|; m != 0.
double n_of_m(const Integer& m);

/// The positive root of c e^{c/2} log 3 = log(3/2) log 2.
double solve_c();

// All value formulas use the certified upper end of the sup-norm bracket.
// Structural input errors (deg T = 0, m < 2, p not prime, n or r zero) throw
// std::invalid_argument; unmet theorem hypotheses are reported instead.

/// h(alpha) >= (omega_m(T) - nu(T)) / (n deg T) for a root alpha of a degree-n
/// f congruent to x^n - 1 mod m with T(alpha^n) != 0 (recorded as assumed).
BoundReport bound_dubmoss_gen(std::size_t n, const Integer& m, const IntPoly& t);

/// mu(g) >= (omega_m(T) - nu(T)) / deg T * deg g / n with n = deg f,
/// f = x^n - 1 mod m, g | f and gcd(g, T(x^n)) = 1.
BoundReport bound_dubmoss(const IntPoly& f, const IntPoly& g, const IntPoly& t, const Integer& m);

/// h(alpha) >= (omega_p(T) - nu(T)) / ((p - 1) deg T) for a totally p-adic
/// unit alpha.
BoundReport bound_padic(const Integer& p, const IntPoly& t);

/// f = (x^n - 1)^r mod m, deg f = nr, g | f, gcd(T, g) = 1. For even m the
/// x^(n 2^j) + 1 factors of T contribute an extra log 2 each.
BoundReport bound_cyclos(const IntPoly& f, const IntPoly& g, const IntPoly& t, const Integer& m, std::size_t n,
                         std::size_t r);

/// The coefficient of deg g in bound_cyclos, which depends only on T, m, n, r.
struct CyclosRate {
  std::size_t mult = 0;               // multiplicity of x^n - 1 in T
  std::optional<std::size_t> mult_gn; // x^(n 2^j) + 1 factors, even m only
  double nu_hi = 0.0;
  double odd_value = 0.0;
  std::optional<double> even_value;
  double value = 0.0;                 // the larger of the two
};
CyclosRate cyclos_rate(const IntPoly& t, const Integer& m, std::size_t n, std::size_t r);

/// Prime-power variant with q the least power of p that is >= r:
/// (x^n - 1)^(q - r) f = (x^n - 1)^q mod p, g | f, gcd(T(x^q), g) = 1.
BoundReport bound_cyclos2(const IntPoly& f, const IntPoly& g, const IntPoly& t, const Integer& p, std::size_t n,
                          std::size_t r);

/// Best of log(m / 2^r), max over p | m of (1/p) log(p / 2), and (log 2)/4 when
/// m is even, each times deg g / (nr). g must have no cyclotomic factor.
BoundReport bound_universal(const IntPoly& f, const IntPoly& g, const Integer& m, std::size_t n, std::size_t r);

/// c deg g / (n 2^r) for cyclotomic-free g | f, f = (x^n - 1)^r mod m.
BoundReport bound_threshold(const IntPoly& f, const IntPoly& g, const Integer& m, std::size_t n, std::size_t r);

/// deg g (log m - nu(T)) / deg f for deg f = deg T, f = T mod m, g | f and
/// gcd(g, T) = 1.
BoundReport bound_lowsup(const IntPoly& f, const IntPoly& g, const IntPoly& t, const Integer& m);

/// Smallest power of p that is >= r.
std::size_t prime_power_at_least(std::size_t p, std::size_t r);

struct Instance {
  IntPoly f;
  std::optional<IntPoly> g;  // defaults to f
  std::optional<IntPoly> t;
  Integer m;
  std::size_t n = 1;
  std::size_t r = 1;

  const IntPoly& factor() const { return g ? *g : f; }
};

struct BestBound {
  enum class Status { bound, vacuous, none };
  Status status = Status::none;
  std::optional<BoundReport> best;   // the winning report, if any theorem applied
  std::vector<BoundReport> evaluated;
};

/// Evaluates every Mahler-measure theorem that fits the instance, with the
/// given T (if any) and the defaults x^n - 1 and x^(2n) - 1, and keeps the
/// largest value. Ties go to the theorem listed first in Theorem.
BestBound best_bound(const Instance& instance);

}  // namespace lehmer
