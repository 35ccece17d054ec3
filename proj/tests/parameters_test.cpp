#include <gtest/gtest.h>

#include <random>

#include "oracles.hpp"
#include "specht/parameters.hpp"

namespace specht {
namespace {

IntegerPolynomial poly(std::initializer_list<long> coeffs) {
  std::vector<BigInt> c;
  for (long x : coeffs) c.emplace_back(x);
  return IntegerPolynomial(std::move(c));
}

std::vector<ParameterPair> pairs(std::initializer_list<std::pair<long, long>> xs) {
  std::vector<ParameterPair> out;
  for (auto [t, p] : xs) out.push_back({BigInt(t), BigInt(p)});
  return out;
}

TEST(PrimeSequence, Examples) {
  EXPECT_EQ(prime_parameter_sequence(poly({-3, 1}), 3, 3), pairs({{8, 5}, {10, 7}, {14, 11}}));
  EXPECT_EQ(prime_parameter_sequence(poly({1, 0, 1}), 3, 2), pairs({{2, 5}, {4, 17}, {6, 37}}));
  EXPECT_EQ(prime_parameter_sequence(poly({-2, 0, 1}), 2, 5), pairs({{3, 7}, {5, 23}}));
  EXPECT_EQ(prime_parameter_sequence(parse_integer_polynomial("1,0,1"), 5, 2),
            pairs({{2, 5}, {4, 17}, {6, 37}, {9, 41}, {10, 101}}));
}

// Naive reference: for each step, the least t whose value has a prime factor
// above the last one, taking the smallest such factor.
std::vector<ParameterPair> naive_sequence(const std::vector<long>& coeffs, std::size_t count, std::uint64_t p_min) {
  std::vector<ParameterPair> out;
  std::uint64_t last = p_min;
  while (out.size() < count) {
    for (std::uint64_t t = 1;; ++t) {
      long long v = 0;
      for (auto it = coeffs.rbegin(); it != coeffs.rend(); ++it) v = v * static_cast<long long>(t) + *it;
      if (v <= 0) continue;
      std::uint64_t best = 0;
      for (auto f : oracle::trial_prime_factors(static_cast<std::uint64_t>(v))) {
        if (f > last) {
          best = f;
          break;
        }
      }
      if (best) {
        out.push_back({BigInt(t), BigInt(best)});
        last = best;
        break;
      }
    }
  }
  return out;
}

TEST(PrimeSequence, MatchesNaiveSearch) {
  const std::vector<std::vector<long>> qs{{1, 0, 1}, {-3, 1}, {-2, 0, 1}, {1, 1, 1}, {5, 3}, {-7, 0, 0, 1}, {41, 1, 1}};
  for (const auto& c : qs) {
    std::vector<BigInt> big(c.begin(), c.end());
    const IntegerPolynomial q(big);
    for (std::uint64_t p_min : {2u, 5u, 30u}) {
      const auto got = prime_parameter_sequence(q, 8, p_min);
      EXPECT_EQ(got, naive_sequence(c, 8, p_min)) << to_string(q) << " p_min=" << p_min;
    }
  }
}

TEST(PrimeSequence, Invariants) {
  const auto q = poly({1, 0, 1});
  const auto seq = prime_parameter_sequence(q, 25, 2);
  BigInt last = 2;
  for (const auto& [t, p] : seq) {
    EXPECT_GT(p, last);
    last = p;
    EXPECT_TRUE(oracle::is_prime_by_trial(static_cast<std::uint64_t>(p)));
    EXPECT_EQ(q(t) % p, 0);
  }
}

TEST(PrimeSequence, Errors) {
  ParameterSearch tiny;
  tiny.max_t = 5;
  try {
    prime_parameter_sequence(poly({1, 0, 1}), 10, 2, tiny);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::SearchExhausted);
  }
  EXPECT_THROW(prime_parameter_sequence(poly({1, 0, 1}), 0, 2), Error);
  EXPECT_THROW(poly({3}), Error);
  EXPECT_THROW(poly({1, -1}), Error);
  EXPECT_THROW(poly({1, 0, 0}), Error);
  for (const char* bad : {"", "1,,1", "a,1", "1.5,1", "5"}) EXPECT_THROW(parse_integer_polynomial(bad), Error) << bad;
  EXPECT_EQ(parse_integer_polynomial(" -3 , +1").coefficients(), (std::vector<BigInt>{-3, 1}));
}

TEST(Census, Examples) {
  EXPECT_EQ(divisor_prime_census(poly({0, 1}), 10), (std::set<BigInt>{2, 3, 5, 7}));
  EXPECT_EQ(divisor_prime_census(poly({1, 0, 1}), 3), (std::set<BigInt>{2, 5}));
  EXPECT_EQ(divisor_prime_census(poly({1, 0, 1}), 7), (std::set<BigInt>{2, 5, 13, 17, 37}));
}

TEST(Census, GrowsWithBound) {
  const auto q = poly({1, 0, 1});
  std::size_t previous = 0;
  for (std::uint64_t n : {1u, 10u, 100u, 1000u, 10000u}) {
    const auto census = divisor_prime_census(q, n);
    EXPECT_GE(census.size(), previous);
    previous = census.size();
  }
  EXPECT_GE(previous, 20u);
}

TEST(Census, MatchesTrialDivision) {
  for (const std::vector<long>& c : std::vector<std::vector<long>>{{1, 0, 1}, {-5, 2}, {1, 1, 1}}) {
    std::vector<BigInt> big(c.begin(), c.end());
    const IntegerPolynomial q(big);
    std::set<BigInt> expected;
    for (std::uint64_t t = 1; t <= 300; ++t) {
      const BigInt v = q(BigInt(t));
      if (v <= 0) continue;
      for (auto f : oracle::trial_prime_factors(static_cast<std::uint64_t>(v))) expected.insert(BigInt(f));
    }
    EXPECT_EQ(divisor_prime_census(q, 300), expected);
  }
}

TEST(NumberTheory, PrimalityAgreesWithTrialDivision) {
  for (std::uint64_t v = 0; v < 20000; ++v) EXPECT_EQ(is_prime(v), oracle::is_prime_by_trial(v)) << v;
  EXPECT_TRUE(is_prime(std::uint64_t{18446744073709551557ull}));
  EXPECT_FALSE(is_prime(std::uint64_t{3215031751ull}));  // strong pseudoprime to bases 2, 3, 5, 7
  EXPECT_THROW(require_prime(1), Error);
  EXPECT_NO_THROW(require_prime(2));
}

TEST(NumberTheory, PrimeFactors) {
  EXPECT_EQ(prime_factors(BigInt(1)), std::vector<BigInt>{});
  EXPECT_EQ(prime_factors(BigInt(360)), (std::vector<BigInt>{2, 3, 5}));
  // Two 31-bit primes: beyond the trial bound.
  const BigInt semiprime = BigInt(2147483647) * BigInt(2147483629);
  EXPECT_EQ(prime_factors(semiprime), (std::vector<BigInt>{2147483629, 2147483647}));
  // 2^64 + 1 = 274177 * 67280421310721
  const BigInt fermat = (BigInt(1) << 64) + 1;
  EXPECT_EQ(prime_factors(fermat), (std::vector<BigInt>{274177, BigInt("67280421310721")}));

  std::mt19937_64 rng(7);
  for (int i = 0; i < 300; ++i) {
    const std::uint64_t v = rng() % 1'000'000'000'000ull + 2;
    std::vector<BigInt> expected;
    for (auto f : oracle::trial_prime_factors(v)) expected.emplace_back(f);
    EXPECT_EQ(prime_factors(BigInt(v)), expected) << v;
  }
}

}  // namespace
}  // namespace specht
