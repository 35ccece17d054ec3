#pragma once

// Formula-vs-oracle harness: for each (mu, p, n) compare the chain-derived
// dimension polynomial at n with the Gram rank of (n - |mu|, mu) over F_p.

#include <cstdint>
#include <functional>
#include <future>
#include <map>
#include <mutex>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "decomposition.hpp"
#include "dimensions.hpp"
#include "error.hpp"
#include "parallel.hpp"
#include "partition.hpp"
#include "specht_oracle.hpp"

namespace specht {

struct VerificationRecord {
  Partition mu;
  std::uint64_t p = 0;
  int n = 0;
  int m = 0;
  std::optional<BigInt> formula_dim;
  std::optional<BigInt> oracle_dim;
  bool match = false;
  /// Shape valid, n > p and (n - |mu|, mu) p-regular.
  bool in_regime = false;
  /// p > k and n > 4k with k = |mu|.
  bool conjecture_hypothesis = false;
  /// Why the record is out of regime; empty when in regime.
  std::string note;
  std::optional<std::string> error;
  std::optional<ErrorKind> error_kind;

  /// Counts toward pass/fail.
  bool decisive() const noexcept { return in_regime && conjecture_hypothesis; }

  friend bool operator==(const VerificationRecord&, const VerificationRecord&) = default;
};

struct VerificationSummary {
  std::size_t records = 0;
  std::size_t in_regime = 0;
  std::size_t out_of_regime = 0;
  std::size_t matches = 0;
  std::size_t mismatches = 0;
  std::size_t conjecture_records = 0;
  std::size_t conjecture_mismatches = 0;
  std::size_t errors = 0;

  friend bool operator==(const VerificationSummary&, const VerificationSummary&) = default;
};

struct VerificationReport {
  std::vector<VerificationRecord> grid;
  VerificationSummary summary;

  /// A decisive record disagrees with the oracle.
  bool conjecture_violated() const noexcept { return summary.conjecture_mismatches > 0; }

  friend bool operator==(const VerificationReport&, const VerificationReport&) = default;
};

/// Matches and mismatches count in-regime records only.
inline VerificationSummary summarize(const std::vector<VerificationRecord>& grid) {
  VerificationSummary s;
  s.records = grid.size();
  for (const auto& r : grid) {
    if (r.error) ++s.errors;
    if (!r.in_regime) {
      ++s.out_of_regime;
      continue;
    }
    ++s.in_regime;
    if (r.match) {
      ++s.matches;
    } else {
      ++s.mismatches;
    }
    if (r.conjecture_hypothesis) {
      ++s.conjecture_records;
      if (!r.match) ++s.conjecture_mismatches;
    }
  }
  return s;
}

struct VerificationOptions {
  OracleOptions oracle;
  unsigned threads = 0;
};

namespace detail {

inline VerificationRecord verify_one(const Partition& mu, std::uint64_t p, int n, const OracleOptions& oracle,
                                     const std::function<RationalPolynomial(int)>& formula_for) {
  VerificationRecord rec;
  rec.mu = mu;
  rec.p = p;
  rec.n = n;
  rec.m = static_cast<int>(static_cast<std::uint64_t>(n) % p);
  const int k = mu.size();
  rec.conjecture_hypothesis = p > static_cast<std::uint64_t>(k) && n > 4 * k;
  const PaddedShape shape(mu);
  auto fail = [&rec](const Error& e) {
    if (!rec.error) {
      rec.error = e.what();
      rec.error_kind = e.kind();
    }
  };
  if (!shape.valid_at(n) || n == 0) {
    rec.note = "shape";
    return rec;
  }
  const Partition lambda = shape.at(n);
  const bool regular = is_p_regular(lambda, p);
  if (static_cast<std::uint64_t>(n) <= p) {
    rec.note = "n<=p";
  } else if (!regular) {
    rec.note = "p-singular";
  } else {
    rec.in_regime = true;
  }
  try {
    rec.oracle_dim = BigInt(gram_rank_mod_p(lambda, p, oracle));
  } catch (const Error& e) {
    fail(e);
  }
  try {
    const BigRational value = formula_for(rec.m)(BigRational(n));
    if (denominator(value) != 1) {
      throw Error(ErrorKind::InvalidInput, "dimension formula is not integral at n = " + std::to_string(n));
    }
    rec.formula_dim = numerator(value);
  } catch (const Error& e) {
    fail(e);
  }
  rec.match = rec.formula_dim && rec.oracle_dim && *rec.formula_dim == *rec.oracle_dim;
  return rec;
}

}  // namespace detail

/// Grid in (mu, p, n) order: mus and primes as given, n ascending over
/// [n_min, n_max]. Per-record failures are stored on the record.
inline VerificationReport run_verification(const std::vector<Partition>& mus, const std::vector<std::uint64_t>& primes,
                                           int n_min, int n_max, const VerificationOptions& opts = {}) {
  struct Cell {
    std::size_t mu;
    std::uint64_t p;
    int n;
  };
  std::vector<Cell> cells;
  for (std::size_t i = 0; i < mus.size(); ++i) {
    for (std::uint64_t p : primes) {
      for (int n = std::max(n_min, 0); n <= n_max; ++n) cells.push_back({i, p, n});
    }
  }

  // Formulas are shared across records with the same (mu, m).
  std::mutex cache_mutex;
  std::map<std::pair<std::size_t, int>, std::shared_future<RationalPolynomial>> cache;
  auto formula_for = [&](std::size_t mu_index) {
    return [&, mu_index](int m) {
      std::shared_future<RationalPolynomial> fut;
      std::optional<std::promise<RationalPolynomial>> owner;
      {
        std::lock_guard lock(cache_mutex);
        auto it = cache.find({mu_index, m});
        if (it == cache.end()) {
          owner.emplace();
          fut = owner->get_future().share();
          cache.emplace(std::make_pair(mu_index, m), fut);
        } else {
          fut = it->second;
        }
      }
      if (owner) {
        try {
          owner->set_value(irreducible_dimension_formula(PaddedShape(mus[mu_index]), m));
        } catch (...) {
          owner->set_exception(std::current_exception());
        }
      }
      return fut.get();
    };
  };

  OracleOptions oracle = opts.oracle;
  oracle.threads = 1;
  std::vector<VerificationRecord> grid(cells.size());
  parallel_for(cells.size(), opts.threads, [&](std::size_t i) {
    const Cell& c = cells[i];
    if (!is_prime(c.p)) {
      grid[i].mu = mus[c.mu];
      grid[i].p = c.p;
      grid[i].n = c.n;
      grid[i].note = "p not prime";
      grid[i].error = std::string(to_string(ErrorKind::NotPrime)) + ": " + std::to_string(c.p) + " is not prime";
      grid[i].error_kind = ErrorKind::NotPrime;
      return;
    }
    grid[i] = detail::verify_one(mus[c.mu], c.p, c.n, oracle, formula_for(c.mu));
  });

  VerificationReport report;
  report.summary = summarize(grid);
  report.grid = std::move(grid);
  return report;
}

}  // namespace specht
