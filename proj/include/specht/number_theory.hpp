#pragma once

#include <algorithm>
#include <array>
#include <cstdint>
#include <limits>
#include <map>
#include <numeric>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>
#include <boost/multiprecision/miller_rabin.hpp>

#include "error.hpp"

namespace specht {

using BigInt = boost::multiprecision::cpp_int;
using BigRational = boost::multiprecision::cpp_rational;

namespace detail {

inline std::uint64_t mul_mod(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
  return static_cast<std::uint64_t>(static_cast<unsigned __int128>(a) * b % m);
}

inline std::uint64_t pow_mod(std::uint64_t base, std::uint64_t exp, std::uint64_t m) {
  std::uint64_t result = 1 % m;
  base %= m;
  while (exp > 0) {
    if (exp & 1) result = mul_mod(result, base, m);
    base = mul_mod(base, base, m);
    exp >>= 1;
  }
  return result;
}

// Strong probable-prime test to one base; n odd and > 2.
inline bool sprp(std::uint64_t n, std::uint64_t a) {
  if (a % n == 0) return true;
  std::uint64_t d = n - 1;
  int s = 0;
  while ((d & 1) == 0) {
    d >>= 1;
    ++s;
  }
  std::uint64_t x = pow_mod(a, d, n);
  if (x == 1 || x == n - 1) return true;
  for (int r = 1; r < s; ++r) {
    x = mul_mod(x, x, n);
    if (x == n - 1) return true;
  }
  return false;
}

inline constexpr std::array<std::uint64_t, 12> kWitnesses = {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37};

}  // namespace detail

/// Deterministic for every 64-bit input (first twelve prime witnesses).
inline bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t p : detail::kWitnesses) {
    if (n % p == 0) return n == p;
  }
  for (std::uint64_t a : detail::kWitnesses) {
    if (!detail::sprp(n, a)) return false;
  }
  return true;
}

inline bool is_prime(const BigInt& n) {
  if (n <= std::numeric_limits<std::uint64_t>::max()) {
    return n >= 0 && is_prime(static_cast<std::uint64_t>(n));
  }
  // Beyond 2^64 the twelve witnesses are exact up to 3.3e24; past that this is a
  // strong probable-prime test.
  return boost::multiprecision::miller_rabin_test(n, 25);
}

inline void require_prime(std::uint64_t p) {
  if (!is_prime(p)) throw Error(ErrorKind::NotPrime, std::to_string(p) + " is not prime");
}

namespace detail {

inline std::uint64_t pollard_rho(std::uint64_t n) {
  if (n % 2 == 0) return 2;
  for (std::uint64_t c = 1;; ++c) {
    std::uint64_t x = 2, y = 2, d = 1;
    auto f = [&](std::uint64_t v) { return (mul_mod(v, v, n) + c) % n; };
    while (d == 1) {
      x = f(x);
      y = f(f(y));
      d = std::gcd(x > y ? x - y : y - x, n);
    }
    if (d != n) return d;
  }
}

inline void factor_into(std::uint64_t n, std::map<std::uint64_t, int>& out) {
  if (n == 1) return;
  if (is_prime(n)) {
    ++out[n];
    return;
  }
  std::uint64_t d = pollard_rho(n);
  factor_into(d, out);
  factor_into(n / d, out);
}

inline BigInt big_pollard_rho(const BigInt& n) {
  if ((n & 1) == 0) return 2;
  for (unsigned c = 1;; ++c) {
    BigInt x = 2, y = 2, d = 1;
    auto f = [&](const BigInt& v) { return BigInt((v * v + c) % n); };
    while (d == 1) {
      x = f(x);
      y = f(f(y));
      d = boost::multiprecision::gcd(x > y ? BigInt(x - y) : BigInt(y - x), n);
    }
    if (d != n) return d;
  }
}

inline void big_factor_into(const BigInt& n, std::map<BigInt, int>& out) {
  if (n == 1) return;
  if (n <= std::numeric_limits<std::uint64_t>::max()) {
    std::map<std::uint64_t, int> small;
    factor_into(static_cast<std::uint64_t>(n), small);
    for (auto [p, e] : small) out[BigInt(p)] += e;
    return;
  }
  if (is_prime(n)) {
    ++out[n];
    return;
  }
  BigInt d = big_pollard_rho(n);
  big_factor_into(d, out);
  big_factor_into(n / d, out);
}

}  // namespace detail

/// Distinct prime factors of |n| in increasing order; empty for 0 and ±1.
/// Trial division by primes below `trial_bound` first, then Pollard rho on the cofactor.
inline std::vector<BigInt> prime_factors(BigInt n, std::uint64_t trial_bound = 10000) {
  if (n < 0) n = -n;
  std::vector<BigInt> primes;
  if (n <= 1) return primes;
  for (std::uint64_t d = 2; d < trial_bound && BigInt(d) * d <= n; d += (d == 2 ? 1 : 2)) {
    if (n % d == 0) {
      primes.emplace_back(d);
      while (n % d == 0) n /= d;
    }
  }
  if (n > 1) {
    std::map<BigInt, int> rest;
    detail::big_factor_into(n, rest);
    for (const auto& [p, e] : rest) primes.push_back(p);
  }
  std::sort(primes.begin(), primes.end());
  primes.erase(std::unique(primes.begin(), primes.end()), primes.end());
  return primes;
}

}  // namespace specht
