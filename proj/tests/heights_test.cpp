#include <gtest/gtest.h>

#include <cmath>
#include <random>

#include "generators.hpp"
#include "lehmer/heights.hpp"
#include "oracles.hpp"

using namespace lehmer;

namespace {

Rat R(long a, long b = 1) {
  Rat q(a, b);
  q.canonicalize();
  return q;
}

const Place inf = Place::infinity();

TEST(Place, Construction) {
  EXPECT_TRUE(inf.is_archimedean());
  EXPECT_EQ(Place::prime(7).p(), 7);
  EXPECT_THROW(Place::prime(9), std::invalid_argument);
  EXPECT_THROW(Place::prime(1), std::invalid_argument);
}

TEST(LocalAbs, Examples) {
  EXPECT_EQ(local_abs(R(12), Place::prime(2)), R(1, 4));
  EXPECT_EQ(local_abs(R(2, 3), inf), R(2, 3));
  EXPECT_EQ(local_abs(R(2, 3), Place::prime(3)), R(3));
  EXPECT_EQ(local_abs(R(0), Place::prime(5)), R(0));
  EXPECT_EQ(local_abs(R(-7, 5), inf), R(7, 5));
}

TEST(HeightQ, Examples) {
  EXPECT_EQ(height_q(R(1)), 0.0);
  EXPECT_DOUBLE_EQ(height_q(R(2, 3)), std::log(3.0));
  EXPECT_EQ(height_q(R(0)), 0.0);
  EXPECT_DOUBLE_EQ(height_q(R(-9, 4)), std::log(9.0));
}

TEST(HeightQ, InversionSymmetryAndKronecker) {
  std::mt19937_64 rng(41);
  for (int i = 0; i < 500; ++i) {
    const Rat x = gen::rational(rng, 1000000);
    EXPECT_GE(height_q(x), 0.0);
    EXPECT_EQ(height_q(x) == 0.0, x == 0 || x == 1 || x == -1);
    if (x != 0) EXPECT_EQ(height_q(x), height_q(1 / x));
  }
}

TEST(HeightQ, EqualsSumOfLocalLogPlus) {
  std::mt19937_64 rng(42);
  for (int i = 0; i < 100; ++i) {
    const Rat x = gen::rational(rng, 5000);
    if (x == 0) continue;
    double sum = std::max(0.0, std::log(std::fabs(x.get_d())));
    auto primes = oracle::factor(abs(x.get_num()) * x.get_den());
    for (const auto& [p, e] : primes) {
      (void)e;
      const Rat a = local_abs(x, Place::prime(p));
      if (a > 1) sum += std::log(a.get_d());
    }
    EXPECT_NEAR(sum, height_q(x), 1e-12);
  }
}

TEST(ULocal, Examples) {
  EXPECT_DOUBLE_EQ(u_local(1, R(2), IntPoly{1}, inf).value(), -std::log(2.0));
  EXPECT_EQ(u_local(1, R(2), IntPoly{1}, Place::prime(2)).value(), 0.0);
  EXPECT_TRUE(u_local(2, R(1), IntPoly{-1, 1}, inf).is_minus_infinity());
  EXPECT_TRUE(u_local(2, R(1), IntPoly{-1, 1}, Place::prime(3)).is_minus_infinity());
  EXPECT_THROW(u_local(2, R(1), IntPoly{-1, 1}, inf).value(), std::domain_error);
  EXPECT_THROW(u_local(1, R(3), IntPoly{0, 0, 1}, inf), std::invalid_argument);
}

TEST(ULocal, SplitsIntoValueTimesBase) {
  std::mt19937_64 rng(43);
  const std::vector<Place> places = {inf, Place::prime(2), Place::prime(3), Place::prime(5), Place::prime(7)};
  for (int i = 0; i < 300; ++i) {
    const long n = gen::uniform(rng, 0, 8);
    const IntPoly t = gen::poly_upto(rng, static_cast<std::size_t>(n), 50);
    const Rat a = gen::rational(rng, 200);
    for (const auto& v : places) {
      const Rat tv = t.eval(a);
      if (tv == 0) {
        EXPECT_TRUE(u_local(n, a, t, v).is_minus_infinity());
        continue;
      }
      EXPECT_EQ(u_local_exp(n, a, t, v), local_abs(tv, v) * u_local_exp(n, a, IntPoly{1}, v));
    }
  }
}

TEST(UGlobal, Examples) {
  EXPECT_NEAR(u_global(3, R(2, 3), IntPoly{1}), -3 * std::log(3.0), 1e-12);
  EXPECT_NEAR(u_global(1, R(5), IntPoly{1, 1}), -std::log(5.0), 1e-12);
  EXPECT_NEAR(u_global(2, R(1, 2), IntPoly{0, 0, 1}), -2 * std::log(2.0), 1e-12);
  EXPECT_THROW(u_global(2, R(1), IntPoly{-1, 1}), std::domain_error);
  EXPECT_THROW(u_global(1, R(1), IntPoly{0, 0, 1}), std::invalid_argument);
}

TEST(UGlobal, PlaceEnumerationForFivePlusOne) {
  const GlobalU u = u_global_detail(1, R(5), IntPoly{1, 1});
  EXPECT_TRUE(u.exact_identity);
  EXPECT_EQ(u.product, R(1, 5));
  std::map<Integer, Rat> by_base;
  for (const auto& t : u.terms) by_base[t.base] = t.value;
  EXPECT_EQ(by_base.at(0), R(6, 5));
  EXPECT_EQ(by_base.at(2), R(1, 2));
  EXPECT_EQ(by_base.at(3), R(1, 3));
}

TEST(UGlobal, IdentityOnRandomInputs) {
  std::mt19937_64 rng(44);
  for (int i = 0; i < 1000; ++i) {
    const long n = gen::uniform(rng, 0, 12);
    const IntPoly t = gen::poly_upto(rng, static_cast<std::size_t>(n), 1000);
    Rat a(Integer(gen::uniform(rng, -1000000, 1000000)), Integer(gen::uniform(rng, 1, 1000000)));
    a.canonicalize();
    if (t.eval(a) == 0) continue;
    const GlobalU u = u_global_detail(n, a, t);
    ASSERT_TRUE(u.exact_identity) << format_poly(t) << " at " << a.get_str();
    EXPECT_EQ(u.product, u_global_detail(n, a, IntPoly{1}).product);
    EXPECT_NEAR(u.nats, -static_cast<double>(n) * height_q(a), 1e-12 * std::max(1.0, std::fabs(u.nats)));
  }
}

TEST(ProductFormula, Examples) {
  EXPECT_TRUE(product_formula_check(R(6, 35)));
  EXPECT_TRUE(product_formula_check(R(-1)));
  Rat big(Integer(1) << 100, Integer("171792506910670443678820376588540424234035840667"));
  big.canonicalize();
  EXPECT_TRUE(product_formula_check(big));
  EXPECT_THROW(product_formula_check(R(0)), std::domain_error);
}

}  // namespace
