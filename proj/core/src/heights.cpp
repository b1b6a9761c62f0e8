#include "lehmer/heights.hpp"

#include <algorithm>
#include <stdexcept>

#include "lehmer/numtheory.hpp"

namespace lehmer {

namespace {

Rat rat_pow(const Rat& x, unsigned long e) {
  Integer num, den;
  mpz_pow_ui(num.get_mpz_t(), x.get_num_mpz_t(), e);
  mpz_pow_ui(den.get_mpz_t(), x.get_den_mpz_t(), e);
  Rat out(num, den);
  out.canonicalize();
  return out;
}

// |x| restricted to the primes dividing `base`: base^(-e) when the base-part
// of x is base^e. `base` is coprime to every other support element, so e is
// well defined on num and den.
Rat group_abs(const Rat& x, const Integer& base) {
  if (x == 0) return Rat(0);
  Integer rest;
  const auto e_num = mpz_remove(rest.get_mpz_t(), x.get_num_mpz_t(), base.get_mpz_t());
  const auto e_den = mpz_remove(rest.get_mpz_t(), x.get_den_mpz_t(), base.get_mpz_t());
  Integer scale;
  if (e_den >= e_num) {
    mpz_pow_ui(scale.get_mpz_t(), base.get_mpz_t(), e_den - e_num);
    return Rat(scale);
  }
  mpz_pow_ui(scale.get_mpz_t(), base.get_mpz_t(), e_num - e_den);
  Rat out(Integer(1), scale);
  out.canonicalize();
  return out;
}

Rat archimedean_abs(const Rat& x) { return abs(x); }

Rat max_one(const Rat& x) { return x > 1 ? x : Rat(1); }

void check_degree(long n, const IntPoly& t) {
  if (!t.is_zero() && static_cast<long>(t.deg()) > n) {
    throw std::invalid_argument("U(N, alpha, T) requires deg T <= N");
  }
}

}  // namespace

Place Place::prime(const Integer& p) {
  if (!is_prime(p)) throw std::invalid_argument("Place::prime: " + p.get_str() + " is not prime");
  return Place(Kind::finite, p);
}

std::string Place::name() const { return is_archimedean() ? "inf" : "p" + p_.get_str(); }

double LogValue::value() const {
  if (minus_infinity_) throw std::domain_error("LogValue is minus infinity");
  return value_;
}

Rat local_abs(const Rat& x, const Place& v) {
  if (v.is_archimedean()) return archimedean_abs(x);
  return group_abs(x, v.p());
}

double height_q(const Rat& x) {
  if (x == 0) return 0.0;
  const Integer& a = x.get_num();
  const Integer& b = x.get_den();
  const Integer m = std::max<Integer>(abs(a), b);
  return log_abs(m);
}

Rat u_local_exp(long n, const Rat& alpha, const IntPoly& t, const Place& v) {
  check_degree(n, t);
  const Rat value = t.eval(alpha);
  if (value == 0) return Rat(0);
  return local_abs(value, v) / rat_pow(max_one(local_abs(alpha, v)), static_cast<unsigned long>(n));
}

LogValue u_local(long n, const Rat& alpha, const IntPoly& t, const Place& v) {
  const Rat e = u_local_exp(n, alpha, t, v);
  if (e == 0) return LogValue::minus_infinity();
  return LogValue::of(log_abs(e));
}

GlobalU u_global_detail(long n, const Rat& alpha, const IntPoly& t) {
  check_degree(n, t);
  if (n < 0) throw std::invalid_argument("U(N, alpha, T) requires N >= 0");
  const Rat value = t.eval(alpha);
  if (value == 0) throw std::domain_error("U(N, alpha, T) requires T(alpha) != 0");
  const auto un = static_cast<unsigned long>(n);

  GlobalU out;
  out.product = 1;
  out.nats = 0.0;

  auto add_term = [&](Integer base, bool prime, Rat term) {
    out.product *= term;
    out.nats += log_abs(term);
    out.terms.push_back({std::move(base), prime, std::move(term)});
  };

  add_term(0, false, archimedean_abs(value) / rat_pow(max_one(archimedean_abs(alpha)), un));

  std::vector<Integer> support_of;
  for (const Integer* z : {&value.get_num(), &value.get_den(), &alpha.get_num(), &alpha.get_den()}) {
    if (*z != 0 && abs(*z) != 1) support_of.push_back(*z);
  }
  for (const auto& el : integer_support(support_of)) {
    add_term(el.base, el.prime, group_abs(value, el.base) / rat_pow(max_one(group_abs(alpha, el.base)), un));
  }

  const Integer big = std::max<Integer>(abs(alpha.get_num()), alpha.get_den());
  Integer big_pow;
  mpz_pow_ui(big_pow.get_mpz_t(), big.get_mpz_t(), un);
  out.expected = Rat(Integer(1), big_pow);
  out.expected.canonicalize();
  out.exact_identity = out.product == out.expected;
  return out;
}

double u_global(long n, const Rat& alpha, const IntPoly& t) { return u_global_detail(n, alpha, t).nats; }

bool product_formula_check(const Rat& x) {
  if (x == 0) throw std::domain_error("product formula requires x != 0");
  Rat product = archimedean_abs(x);
  std::vector<Integer> values;
  if (abs(x.get_num()) != 1) values.push_back(x.get_num());
  if (x.get_den() != 1) values.push_back(x.get_den());
  for (const auto& el : integer_support(values)) {
    if (el.prime) {
      product *= local_abs(x, Place::prime(el.base));
    } else {
      product *= group_abs(x, el.base);
    }
  }
  return product == 1;
}

}  // namespace lehmer
