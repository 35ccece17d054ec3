#pragma once

// Rim-hook chains A(lambda, m) and the alternating-sum expression of [D^lambda]
// in Specht classes; inversion back to Specht decompositions and the resulting
// dimension polynomials, piecewise in the residue of n.

#include <algorithm>
#include <cstdint>
#include <future>
#include <map>
#include <set>
#include <string>
#include <vector>

#include "dimensions.hpp"
#include "error.hpp"
#include "partition.hpp"
#include "polynomial.hpp"

namespace specht {

/// lambda^(0) > lambda^(1) > ... > lambda^(d) = lambda, strictly decreasing in dominance.
struct AChain {
  std::vector<Partition> elements;
  int m = 0;

  const Partition& base() const { return elements.back(); }
  /// d; zero for a singleton chain.
  int depth() const noexcept { return static_cast<int>(elements.size()) - 1; }
  std::size_t size() const noexcept { return elements.size(); }

  friend bool operator==(const AChain&, const AChain&) = default;
};

/// lambda together with every nu obtained by removing an (n-m)-rim hook from
/// lambda and adding one back so that nu strictly dominates lambda.
inline AChain a_set(const Partition& lambda, int m) {
  const int n = lambda.size();
  if (m < 0 || m >= n) {
    throw Error(ErrorKind::SizeError, "a_set needs 0 <= m < |lambda|, got m = " + std::to_string(m) +
                                          " for " + to_string(lambda));
  }
  const int h = n - m;
  std::set<Partition> found{lambda};
  for (const auto& removal : removable_rim_hooks(lambda, h)) {
    for (auto& nu : addable_rim_hooks(removal.remainder, h)) {
      if (dominance_compare(nu, lambda) == Dominance::Greater) found.insert(std::move(nu));
    }
  }
  // Descending lex order is a linear extension of dominance, so if the set is a
  // chain this is its decreasing order.
  AChain chain{{found.rbegin(), found.rend()}, m};
  for (std::size_t i = 0; i < chain.size(); ++i) {
    for (std::size_t j = i + 1; j < chain.size(); ++j) {
      if (dominance_compare(chain.elements[i], chain.elements[j]) != Dominance::Greater) {
        throw Error(ErrorKind::NotTotallyOrdered,
                    "A(" + to_string(lambda) + ", " + std::to_string(m) + ") contains incomparable " +
                        to_string(chain.elements[i]) + " and " + to_string(chain.elements[j]) +
                        "; n is not large enough");
      }
    }
  }
  return chain;
}

// ---------------------------------------------------------------------------
// Grothendieck group elements

enum class ClassLabel { Specht, Irreducible };

inline std::string_view label_letter(ClassLabel label) { return label == ClassLabel::Specht ? "S" : "D"; }

struct ClassKey {
  Partition partition;
  ClassLabel label = ClassLabel::Specht;
  // Ascending lex (a linear extension of dominance), Specht before Irreducible.
  friend auto operator<=>(const ClassKey&, const ClassKey&) = default;
};

/// Formal integer combination of [S^lambda] and [D^lambda] classes; no zero
/// coefficients are stored and all partitions have one size.
class GrothendieckVector {
 public:
  using Terms = std::map<ClassKey, std::int64_t>;

  GrothendieckVector() = default;

  static GrothendieckVector single(ClassLabel label, const Partition& p, std::int64_t coeff = 1) {
    GrothendieckVector v;
    v.add(label, p, coeff);
    return v;
  }

  void add(ClassLabel label, const Partition& p, std::int64_t coeff) {
    if (coeff == 0) return;
    if (!terms_.empty() && terms_.begin()->first.partition.size() != p.size()) {
      throw Error(ErrorKind::SizeMismatch, "Grothendieck vector mixes partitions of different sizes");
    }
    ClassKey key{p, label};
    auto [it, inserted] = terms_.try_emplace(key, coeff);
    if (!inserted && (it->second += coeff) == 0) terms_.erase(it);
  }

  std::int64_t coefficient(ClassLabel label, const Partition& p) const {
    auto it = terms_.find(ClassKey{p, label});
    return it == terms_.end() ? 0 : it->second;
  }

  const Terms& terms() const noexcept { return terms_; }
  bool empty() const noexcept { return terms_.empty(); }
  std::size_t size() const noexcept { return terms_.size(); }

  GrothendieckVector& operator+=(const GrothendieckVector& o) {
    for (const auto& [key, c] : o.terms_) add(key.label, key.partition, c);
    return *this;
  }
  friend GrothendieckVector operator+(GrothendieckVector a, const GrothendieckVector& b) { return a += b; }
  friend GrothendieckVector operator*(std::int64_t s, const GrothendieckVector& v) {
    GrothendieckVector out;
    for (const auto& [key, c] : v.terms_) out.add(key.label, key.partition, s * c);
    return out;
  }

  friend bool operator==(const GrothendieckVector&, const GrothendieckVector&) = default;

 private:
  Terms terms_;
};

/// "[S^(5,2)] - [S^(6,1)]"; "0" when empty.
inline std::string to_string(const GrothendieckVector& v) {
  if (v.empty()) return "0";
  std::string out;
  for (const auto& [key, c] : v.terms()) {
    const std::int64_t mag = c < 0 ? -c : c;
    if (out.empty()) {
      if (c < 0) out += "-";
    } else {
      out += c < 0 ? " - " : " + ";
    }
    if (mag != 1) out += std::to_string(mag) + "*";
    std::string shape = to_string(key.partition);
    shape.front() = '(';
    shape.back() = ')';
    out += "[" + std::string(label_letter(key.label)) + "^" + shape + "]";
  }
  return out;
}

/// [D^lambda] = sum over the chain of (-1)^(d-i) [S^lambda^(i)].
inline GrothendieckVector decompose_irreducible(const Partition& lambda, int m) {
  const AChain chain = a_set(lambda, m);
  GrothendieckVector v;
  const int d = chain.depth();
  for (int i = 0; i <= d; ++i) v.add(ClassLabel::Specht, chain.elements[i], (d - i) % 2 == 0 ? 1 : -1);
  return v;
}

namespace detail {

// Inverse of a lower unitriangular integer matrix by forward substitution.
inline std::vector<std::vector<std::int64_t>> invert_unitriangular(const std::vector<std::vector<std::int64_t>>& lower) {
  const std::size_t size = lower.size();
  std::vector<std::vector<std::int64_t>> inv(size, std::vector<std::int64_t>(size, 0));
  for (std::size_t i = 0; i < size; ++i) {
    inv[i][i] = 1;
    for (std::size_t j = 0; j < i; ++j) {
      std::int64_t acc = 0;
      for (std::size_t k = j; k < i; ++k) acc += lower[i][k] * inv[k][j];
      inv[i][j] = -acc;
    }
  }
  return inv;
}

}  // namespace detail

/// [S^lambda] as a combination of [D^nu], by inverting the unitriangular matrix
/// whose row nu is decompose_irreducible(nu, m). Only the rows reachable from
/// lambda through chain membership enter the inversion; all of them must lie
/// in `family`.
inline GrothendieckVector decompose_standard(const Partition& lambda, int m, const std::vector<Partition>& family) {
  const std::set<Partition> allowed(family.begin(), family.end());
  if (!allowed.count(lambda)) {
    throw Error(ErrorKind::FamilyIncomplete, to_string(lambda) + " is not in the family");
  }
  std::map<Partition, AChain> chains;
  std::vector<Partition> frontier{lambda};
  while (!frontier.empty()) {
    Partition nu = std::move(frontier.back());
    frontier.pop_back();
    if (chains.count(nu)) continue;
    AChain chain = a_set(nu, m);
    for (const Partition& el : chain.elements) {
      if (!allowed.count(el)) {
        throw Error(ErrorKind::FamilyIncomplete, "A(" + to_string(nu) + ", " + std::to_string(m) + ") contains " +
                                                     to_string(el) + " outside the family");
      }
      if (!chains.count(el)) frontier.push_back(el);
    }
    chains.emplace(std::move(nu), std::move(chain));
  }

  // Descending lex: dominating partitions first, so the matrix is lower unitriangular.
  std::vector<Partition> order;
  for (const auto& [nu, chain] : chains) order.push_back(nu);
  std::reverse(order.begin(), order.end());
  std::map<Partition, std::size_t> index;
  for (std::size_t i = 0; i < order.size(); ++i) index[order[i]] = i;

  std::vector<std::vector<std::int64_t>> matrix(order.size(), std::vector<std::int64_t>(order.size(), 0));
  for (std::size_t i = 0; i < order.size(); ++i) {
    const AChain& chain = chains.at(order[i]);
    const int d = chain.depth();
    for (int j = 0; j <= d; ++j) matrix[i][index.at(chain.elements[j])] = (d - j) % 2 == 0 ? 1 : -1;
  }
  const auto inverse = detail::invert_unitriangular(matrix);

  GrothendieckVector result;
  const std::size_t row = index.at(lambda);
  for (std::size_t j = 0; j < order.size(); ++j) result.add(ClassLabel::Irreducible, order[j], inverse[row][j]);
  return result;
}

/// Default family: every partition nu of |lambda| with |lambda| - nu_1 <= k.
inline GrothendieckVector decompose_standard(const Partition& lambda, int m, int k) {
  return decompose_standard(lambda, m, low_degree_partitions(lambda.size(), k));
}

/// Replace every [D^nu] by decompose_irreducible(nu, m); Specht terms pass through.
inline GrothendieckVector expand_irreducibles(const GrothendieckVector& v, int m) {
  GrothendieckVector out;
  for (const auto& [key, c] : v.terms()) {
    if (key.label == ClassLabel::Specht) {
      out.add(key.label, key.partition, c);
    } else {
      out += c * decompose_irreducible(key.partition, m);
    }
  }
  return out;
}

// ---------------------------------------------------------------------------
// Dimension formulas in n

/// Sample sizes used to read off the chain of (n - |mu|, mu) for symbolic n.
struct StabilizationSamples {
  int first = 0;
  int second = 0;
};

inline StabilizationSamples stabilization_samples(const PaddedShape& shape, int m) {
  const int first = std::max(4 * shape.degree(), shape.threshold()) + m + 2;
  return {first, first + 7};
}

/// Tails of the chain elements of (n - |mu|, mu) for large n, in chain order.
/// Throws NotStabilized when the two sample sizes disagree.
inline std::vector<Partition> stable_chain_tails(const PaddedShape& shape, int m) {
  const auto [n0, n1] = stabilization_samples(shape, m);
  auto tails_at = [&](int n) {
    std::vector<Partition> tails;
    for (const Partition& el : a_set(shape.at(n), m).elements) tails.push_back(el.tail());
    return tails;
  };
  auto tails = tails_at(n0);
  if (tails != tails_at(n1)) {
    throw Error(ErrorKind::NotStabilized, "chain of (n - |mu|, mu) for mu = " + to_string(shape.tail()) +
                                              ", m = " + std::to_string(m) + " differs between n = " +
                                              std::to_string(n0) + " and n = " + std::to_string(n1));
  }
  return tails;
}

/// dim D^(n - |mu|, mu) as a polynomial in n, for n congruent to m modulo a
/// large prime p.
inline RationalPolynomial irreducible_dimension_formula(const PaddedShape& shape, int m) {
  const auto tails = stable_chain_tails(shape, m);
  const int d = static_cast<int>(tails.size()) - 1;
  RationalPolynomial result;
  for (int i = 0; i <= d; ++i) {
    const auto poly = specht_dimension_polynomial(PaddedShape(tails[i]));
    if ((d - i) % 2 == 0) {
      result += poly;
    } else {
      result -= poly;
    }
  }
  return result;
}

/// Case split on n mod p with p symbolic: explicit residues whose formula
/// departs from the Specht dimension, plus the default.
struct PiecewiseCongruencePolynomial {
  std::map<int, RationalPolynomial> cases;
  RationalPolynomial default_case;
  int max_residue = 0;
  /// Residue max_residue + 1 was sampled and found to be generic.
  bool beyond_range_generic = true;

  const RationalPolynomial& for_residue(int m) const {
    auto it = cases.find(m);
    return it == cases.end() ? default_case : it->second;
  }
};

inline int default_max_residue(const PaddedShape& shape) { return 2 * (shape.degree() + 1); }

inline PiecewiseCongruencePolynomial irreducible_dimension_table(const PaddedShape& shape, int max_residue) {
  if (max_residue < 0) throw Error(ErrorKind::InvalidInput, "max_residue must be nonnegative");
  PiecewiseCongruencePolynomial table;
  table.default_case = specht_dimension_polynomial(shape);
  table.max_residue = max_residue;
  std::vector<std::future<RationalPolynomial>> pending;
  for (int m = 0; m <= max_residue + 1; ++m) {
    pending.push_back(std::async(std::launch::async, [&shape, m] { return irreducible_dimension_formula(shape, m); }));
  }
  for (int m = 0; m <= max_residue + 1; ++m) {
    RationalPolynomial poly = pending[static_cast<std::size_t>(m)].get();
    if (poly == table.default_case) continue;
    if (m == max_residue + 1) {
      table.beyond_range_generic = false;
    } else {
      table.cases.emplace(m, std::move(poly));
    }
  }
  return table;
}

inline PiecewiseCongruencePolynomial irreducible_dimension_table(const PaddedShape& shape) {
  return irreducible_dimension_table(shape, default_max_residue(shape));
}

/// One line per explicit residue in decreasing m, then the default.
inline std::string to_string(const PiecewiseCongruencePolynomial& table) {
  std::string out;
  for (auto it = table.cases.rbegin(); it != table.cases.rend(); ++it) {
    out += "n ≡ " + std::to_string(it->first) + " (mod p): " + to_string(it->second) + "\n";
  }
  out += "otherwise: " + to_string(table.default_case) + "\n";
  return out;
}

}  // namespace specht
