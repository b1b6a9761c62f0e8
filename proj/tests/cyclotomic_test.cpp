#include <gtest/gtest.h>

#include <random>
#include <thread>

#include "generators.hpp"
#include "lehmer/cyclotomic.hpp"
#include "lehmer/numtheory.hpp"
#include "oracles.hpp"

using namespace lehmer;

namespace {

IntPoly P(std::string_view s) { return parse_poly(s); }

TEST(NumberTheory, SmallFacts) {
  EXPECT_TRUE(is_prime(std::uint64_t{2}));
  EXPECT_TRUE(is_prime(std::uint64_t{97}));
  EXPECT_FALSE(is_prime(std::uint64_t{1}));
  EXPECT_FALSE(is_prime(std::uint64_t{91}));
  EXPECT_TRUE(is_prime(Integer("170141183460469231731687303715884105727")));
  EXPECT_EQ(divisors(12), (std::vector<std::uint64_t>{1, 2, 3, 4, 6, 12}));
  EXPECT_EQ(prime_divisors(360), (std::vector<std::uint64_t>{2, 3, 5}));
  EXPECT_EQ(valuation(Integer(48), Integer(2)), 4u);
  EXPECT_NEAR(log_abs(Integer(-5)), std::log(5.0), 1e-15);
  Integer huge;
  mpz_ui_pow_ui(huge.get_mpz_t(), 10, 400);
  EXPECT_NEAR(log_abs(huge), 400 * std::log(10.0), 1e-9);
}

TEST(NumberTheory, TotientMatchesCounting) {
  for (std::uint64_t n = 1; n <= 300; ++n) EXPECT_EQ(totient(n), oracle::totient(n)) << n;
}

TEST(NumberTheory, IntegerSupportIsCoprimeAndComplete) {
  std::mt19937_64 rng(21);
  for (int i = 0; i < 50; ++i) {
    std::vector<Integer> values;
    for (int k = 0; k < 4; ++k) {
      Integer v = gen::uniform(rng, 1, 1000000);
      if (k == 0) v *= Integer("1000000007") * Integer("998244353");
      values.push_back(v);
    }
    const auto support = integer_support(values);
    for (std::size_t a = 0; a < support.size(); ++a) {
      if (support[a].prime) EXPECT_TRUE(is_prime(support[a].base));
      for (std::size_t b = a + 1; b < support.size(); ++b) {
        Integer g;
        mpz_gcd(g.get_mpz_t(), support[a].base.get_mpz_t(), support[b].base.get_mpz_t());
        EXPECT_EQ(g, 1);
      }
    }
    for (Integer v : values) {
      for (const auto& el : support) {
        while (v % el.base == 0) v /= el.base;
      }
      EXPECT_EQ(v, 1);
    }
  }
}

TEST(Cyclotomic, Examples) {
  EXPECT_EQ(cyclotomic(1), P("x-1"));
  EXPECT_EQ(cyclotomic(6), P("x^2-x+1"));
  EXPECT_EQ(cyclotomic(12), P("x^4-x^2+1"));
  EXPECT_EQ(cyclotomic(105)[7], -2);
  EXPECT_THROW(cyclotomic(0), std::invalid_argument);
}

TEST(Cyclotomic, MatchesRecursiveDivision) {
  for (std::uint64_t d = 1; d <= 120; ++d) EXPECT_EQ(cyclotomic(d), oracle::make(oracle::cyclotomic(d))) << d;
}

TEST(Cyclotomic, ProductOverDivisorsIsXnMinusOne) {
  for (std::uint64_t n = 1; n <= 200; ++n) {
    IntPoly prod = IntPoly::constant(1);
    for (auto d : divisors(n)) prod *= cyclotomic(d);
    EXPECT_EQ(prod, x_pow_minus_one(n)) << n;
  }
}

TEST(Cyclotomic, DegreeIsTotient) {
  for (std::uint64_t d = 1; d <= 1000; ++d) EXPECT_EQ(cyclotomic(d).deg(), totient(d)) << d;
}

TEST(Cyclotomic, ConcurrentCacheAgrees) {
  std::vector<std::thread> pool;
  std::vector<std::vector<IntPoly>> seen(4);
  for (int w = 0; w < 4; ++w) {
    pool.emplace_back([w, &seen] {
      for (std::uint64_t d = 1500; d < 1540; ++d) seen[w].push_back(cyclotomic(d));
    });
  }
  for (auto& t : pool) t.join();
  for (int w = 1; w < 4; ++w) EXPECT_EQ(seen[w], seen[0]);
}

TEST(Multiplicity, Examples) {
  EXPECT_EQ(multiplicity(pow(P("x^2-1"), 2), P("x-1")), 2u);
  EXPECT_EQ(multiplicity(P("x^3-x+1"), P("x-1")), 0u);
  EXPECT_EQ(multiplicity(pow(P("x^3-1"), 2) * P("x+1"), P("x^3-1")), 2u);
  EXPECT_EQ(multiplicity(P("4*x^2-1"), P("2*x-1")), 1u);
  EXPECT_THROW(multiplicity(IntPoly{}, P("x")), std::invalid_argument);
  EXPECT_THROW(multiplicity(P("x"), P("3")), std::invalid_argument);
}

TEST(Multiplicity, PowerLawOnRandomInstances) {
  std::mt19937_64 rng(22);
  for (int i = 0; i < 80; ++i) {
    const IntPoly g = gen::poly(rng, static_cast<std::size_t>(gen::uniform(rng, 1, 3)), 6);
    const IntPoly h = gen::poly(rng, static_cast<std::size_t>(gen::uniform(rng, 0, 5)), 6);
    const std::size_t k = static_cast<std::size_t>(gen::uniform(rng, 0, 4));
    EXPECT_EQ(multiplicity(pow(g, k) * h, g), k + multiplicity(h, g));
  }
}

TEST(GnMultiplicity, Examples) {
  EXPECT_EQ(gn_multiplicity(P("x^2-1"), 1), 1u);
  EXPECT_EQ(gn_multiplicity(P("x^4-1"), 1), 2u);
  EXPECT_EQ(gn_multiplicity(P("x-1"), 1), 0u);
  EXPECT_EQ(gn_multiplicity(pow(P("x^3+1"), 2) * P("x^6+1"), 3), 3u);
  EXPECT_THROW(gn_multiplicity(IntPoly{}, 1), std::invalid_argument);
}

TEST(Profile, Examples) {
  const auto a = cyclo_profile(P("x^2-1"));
  EXPECT_EQ(a.factors, (std::vector<CycloFactor>{{1, 1}, {2, 1}}));
  EXPECT_EQ(a.cofactor, P("1"));
  const auto b = cyclo_profile(P("x^3-x+1"));
  EXPECT_TRUE(b.cyclotomic_free());
  EXPECT_EQ(b.cofactor, P("x^3-x+1"));
  const auto c = cyclo_profile(P("x^10+x^9-x^7-x^6-x^5-x^4-x^3+x+1"));
  EXPECT_TRUE(c.cyclotomic_free());
  EXPECT_THROW(cyclo_profile(IntPoly{}), std::invalid_argument);
}

TEST(Profile, ReconstructsRandomProducts) {
  std::mt19937_64 rng(23);
  for (int i = 0; i < 40; ++i) {
    IntPoly cof = gen::poly_unit_free(rng, static_cast<std::size_t>(gen::uniform(rng, 1, 5)), 7);
    // Drop any accidental cyclotomic content of the cofactor by brute force.
    for (std::uint64_t d = 1; d <= 2 * 25; ++d) {
      while (cof.deg() >= cyclotomic(d).deg() && divides(cyclotomic(d), cof)) cof = *divide_exact(cof, cyclotomic(d));
    }
    std::map<std::uint64_t, std::size_t> want;
    IntPoly f = cof;
    const int count = static_cast<int>(gen::uniform(rng, 0, 4));
    for (int k = 0; k < count; ++k) {
      const std::uint64_t d = static_cast<std::uint64_t>(gen::uniform(rng, 1, 30));
      ++want[d];
      f *= cyclotomic(d);
    }
    const auto prof = cyclo_profile(f);
    std::map<std::uint64_t, std::size_t> got;
    IntPoly rebuilt = prof.cofactor;
    for (const auto& [d, e] : prof.factors) {
      got[d] = e;
      rebuilt *= pow(cyclotomic(d), e);
      EXPECT_FALSE(prof.cofactor.deg() >= cyclotomic(d).deg() && divides(cyclotomic(d), prof.cofactor));
    }
    EXPECT_EQ(rebuilt, f);
    EXPECT_EQ(got, want);
  }
}

}  // namespace
