#pragma once

#include <string>
#include <vector>

#include "lehmer/poly.hpp"

namespace lehmer {

/// A place of Q: the archimedean one, or a prime p.
class Place {
 public:
  enum class Kind { archimedean, finite };

  static Place infinity() { return Place(Kind::archimedean, 0); }
  /// Throws std::invalid_argument unless p is prime.
  static Place prime(const Integer& p);

  Kind kind() const noexcept { return kind_; }
  bool is_archimedean() const noexcept { return kind_ == Kind::archimedean; }
  const Integer& p() const noexcept { return p_; }
  std::string name() const;

 private:
  Place(Kind kind, Integer p) : kind_(kind), p_(std::move(p)) {}
  Kind kind_;
  Integer p_;
};

/// log of a nonnegative exact quantity; minus infinity exactly when the
/// quantity is zero.
class LogValue {
 public:
  static LogValue minus_infinity() { return LogValue(true, 0.0); }
  static LogValue of(double nats) { return LogValue(false, nats); }

  bool is_minus_infinity() const noexcept { return minus_infinity_; }
  /// Throws std::domain_error for minus infinity.
  double value() const;

 private:
  LogValue(bool minus_inf, double v) : minus_infinity_(minus_inf), value_(v) {}
  bool minus_infinity_;
  double value_;
};

/// |x|_v with the normalization of Q: the usual |.| at infinity and
/// p^(ord_p(den) - ord_p(num)) at p.
Rat local_abs(const Rat& x, const Place& v);

/// h(x) = log max(|a|, b) for x = a/b in lowest terms.
double height_q(const Rat& x);

/// exp(U_v(N, alpha, T)) = |T(alpha)|_v / max(1, |alpha|_v)^N, exact.
/// Zero exactly when T(alpha) = 0. Requires deg T <= N.
Rat u_local_exp(long n, const Rat& alpha, const IntPoly& t, const Place& v);

/// U_v(N, alpha, T) = log|T(alpha)|_v - N log+|alpha|_v.
LogValue u_local(long n, const Rat& alpha, const IntPoly& t, const Place& v);

/// One factor of the global product: a prime place, or a coprime composite
/// whose prime factors were not split out. For a composite base b the value
/// is the exact product of exp(U_p) over all p | b.
struct PlaceTerm {
  Integer base;  // 0 for the archimedean place
  bool prime = false;
  Rat value;     // exp(U) at this place (or group of places)
};

struct GlobalU {
  std::vector<PlaceTerm> terms;
  Rat product;             // prod of term values
  Rat expected;            // H(alpha)^(-N)
  bool exact_identity;     // product == expected, checked in Q
  double nats;             // sum of log term values
};

/// Place-by-place evaluation of U(N, alpha, T) over the finitely many places
/// where it can be nonzero. Throws std::domain_error if T(alpha) = 0 and
/// std::invalid_argument if deg T > N.
GlobalU u_global_detail(long n, const Rat& alpha, const IntPoly& t);

/// U(N, alpha, T) in nats; equals -N h(alpha).
double u_global(long n, const Rat& alpha, const IntPoly& t);

/// prod_v |x|_v == 1, checked exactly. Throws std::domain_error on x = 0.
bool product_formula_check(const Rat& x);

}  // namespace lehmer
