#pragma once

// Pairs (t, p) with p prime dividing q(t) and p strictly increasing, for an
// integer polynomial q with positive leading coefficient.

#include <cstdint>
#include <set>
#include <string>
#include <vector>

#include "error.hpp"
#include "number_theory.hpp"
#include "polynomial.hpp"

namespace specht {

struct ParameterPair {
  BigInt t;
  BigInt p;
  friend bool operator==(const ParameterPair&, const ParameterPair&) = default;
};

struct ParameterSearch {
  /// Largest t examined before giving up with SearchExhausted.
  std::uint64_t max_t = 10'000'000;
  std::uint64_t trial_bound = 10'000;
};

/// Scans t = 1, 2, ...; at each t every prime factor of q(t) above the last
/// accepted prime is accepted in increasing order. Values q(t) <= 0 are skipped.
/// Each accepted p is paired with the least such t, because any earlier t with
/// p | q(t) would already have accepted it.
inline std::vector<ParameterPair> prime_parameter_sequence(const IntegerPolynomial& q, std::size_t count,
                                                           const BigInt& p_min, const ParameterSearch& search = {}) {
  if (count == 0) throw Error(ErrorKind::InvalidInput, "count must be positive");
  std::vector<ParameterPair> out;
  BigInt last = p_min;
  for (std::uint64_t t = 1; out.size() < count; ++t) {
    if (t > search.max_t) {
      throw Error(ErrorKind::SearchExhausted, "found " + std::to_string(out.size()) + " of " + std::to_string(count) +
                                                  " primes with t <= " + std::to_string(search.max_t));
    }
    const BigInt value = q(BigInt(t));
    if (value <= 0) continue;
    for (const BigInt& p : prime_factors(value, search.trial_bound)) {
      if (p <= last) continue;
      out.push_back({BigInt(t), p});
      last = p;
      if (out.size() == count) break;
    }
  }
  return out;
}

/// Every prime dividing some positive q(t) with 1 <= t <= bound.
inline std::set<BigInt> divisor_prime_census(const IntegerPolynomial& q, std::uint64_t bound,
                                             std::uint64_t trial_bound = 10'000) {
  std::set<BigInt> primes;
  for (std::uint64_t t = 1; t <= bound; ++t) {
    const BigInt value = q(BigInt(t));
    if (value <= 0) continue;
    for (auto& p : prime_factors(value, trial_bound)) primes.insert(std::move(p));
  }
  return primes;
}

}  // namespace specht
