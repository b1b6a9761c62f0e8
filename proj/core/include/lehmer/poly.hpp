#pragma once

#include <cstddef>
#include <initializer_list>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include <gmpxx.h>

namespace lehmer {

using Integer = mpz_class;

// mpq_class keeps num/den in lowest terms with den > 0 as long as every
// value is built through its arithmetic or canonicalize().
using Rat = mpq_class;

class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& message, std::size_t position);
  std::size_t position() const noexcept { return position_; }

 private:
  std::size_t position_;
};

/// Dense univariate polynomial over Z with ascending coefficients.
///
/// Stored coefficients never end in a zero; the zero polynomial has no
/// coefficients at all and its degree is reported as std::nullopt, which
/// stands for minus infinity.
class IntPoly {
 public:
  IntPoly() = default;
  explicit IntPoly(std::vector<Integer> coeffs);
  IntPoly(std::initializer_list<long> coeffs);

  static IntPoly constant(const Integer& c);
  static IntPoly monomial(const Integer& c, std::size_t k);

  bool is_zero() const noexcept { return coeffs_.empty(); }
  std::optional<std::size_t> degree() const noexcept;
  // Degree of a nonzero polynomial; throws std::domain_error on zero.
  std::size_t deg() const;

  const std::vector<Integer>& coeffs() const noexcept { return coeffs_; }
  const Integer& operator[](std::size_t k) const noexcept;
  const Integer& leading() const;
  // Index of the lowest nonzero coefficient (x-adic valuation).
  std::size_t low_order() const;

  Integer content() const;
  // Content-free with positive leading coefficient.
  IntPoly primitive_part() const;
  IntPoly derivative() const;

  Integer eval(const Integer& x) const;
  Rat eval(const Rat& x) const;

  IntPoly operator-() const;
  IntPoly& operator+=(const IntPoly& rhs);
  IntPoly& operator-=(const IntPoly& rhs);
  IntPoly& operator*=(const IntPoly& rhs);
  IntPoly& operator*=(const Integer& c);

  friend IntPoly operator+(IntPoly a, const IntPoly& b) { return a += b; }
  friend IntPoly operator-(IntPoly a, const IntPoly& b) { return a -= b; }
  friend IntPoly operator*(const IntPoly& a, const IntPoly& b);
  friend IntPoly operator*(IntPoly a, const Integer& c) { return a *= c; }
  friend IntPoly operator*(const Integer& c, IntPoly a) { return a *= c; }
  friend bool operator==(const IntPoly& a, const IntPoly& b) {
    return a.coeffs_ == b.coeffs_;
  }

  // Lexicographic order on the ascending coefficient vector.
  static bool lex_less(const IntPoly& a, const IntPoly& b);

 private:
  void normalize();
  std::vector<Integer> coeffs_;
};

enum class PolyOp { add, sub, mul };

IntPoly arith(const IntPoly& a, const IntPoly& b, PolyOp op);

/// x^n - 1.
IntPoly x_pow_minus_one(std::size_t n);
IntPoly pow(const IntPoly& base, std::size_t k);

/// Accepts an ascending comma-separated coefficient list ("-1,0,1") or a sum
/// of signed monomials ("x^2-1", "3*x^4 - 2*x + 7").
IntPoly parse_poly(std::string_view text);
/// Descending monomial form, e.g. "x^2-x-1"; "0" for the zero polynomial.
std::string format_poly(const IntPoly& f);
/// Ascending comma-separated list, the other accepted input form.
std::string format_coeffs(const IntPoly& f);

/// T(x^n).
IntPoly compose_xn(const IntPoly& t, std::size_t n);

/// Coefficients of T(x + c), by iterated synthetic division.
IntPoly taylor_shift(const IntPoly& t, const Integer& c);

/// [T^(k)(1)/k! for k = 0..deg T]; these are the coefficients of T(x+1).
std::vector<Integer> taylor_coeffs_at_one(const IntPoly& t);

/// Pseudo-remainder: lc(b)^(deg a - deg b + 1) * a = q*b + r.
IntPoly pseudo_remainder(const IntPoly& a, const IntPoly& b);

/// Quotient a / b when b divides a in Z[x]; nullopt otherwise.
std::optional<IntPoly> divide_exact(const IntPoly& a, const IntPoly& b);
bool divides(const IntPoly& b, const IntPoly& a);

/// Primitive gcd in Z[x] (content 1, positive leading coefficient), by the
/// subresultant PRS. gcd(f, 0) is the primitive part of f.
IntPoly poly_gcd(const IntPoly& a, const IntPoly& b);
bool coprime(const IntPoly& a, const IntPoly& b);
/// coprime(g, T(x^e)) without expanding T(x^e) when it is large.
bool coprime_composed(const IntPoly& g, const IntPoly& t, std::size_t e);

/// True iff every coefficient of a - b is divisible by m (m >= 2).
bool congruent_mod(const IntPoly& a, const IntPoly& b, const Integer& m);

/// Res(a, b) by the subresultant PRS.
Integer resultant(const IntPoly& a, const IntPoly& b);

/// Yun square-free decomposition of the primitive part of f:
/// pp(f) = +-prod s_i^{e_i} with each s_i primitive, square-free and pairwise
/// coprime. Only factors of positive degree are returned.
std::vector<std::pair<IntPoly, std::size_t>> squarefree_decomposition(const IntPoly& f);

}  // namespace lehmer
