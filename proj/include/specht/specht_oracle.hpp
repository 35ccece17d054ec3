#pragma once

// Brute-force Specht modules: polytabloids of standard tableaux, the Gram
// matrix of the standard bilinear form (tabloids orthonormal), and its rank
// over F_p and over Q. For p-regular lambda the F_p rank is dim D^lambda.
//
// Nothing here depends on decomposition.hpp; it is the independent side of the
// formula-vs-oracle check.

#include <algorithm>
#include <cstdint>
#include <map>
#include <numeric>
#include <ostream>
#include <string>
#include <utility>
#include <vector>

#include "error.hpp"
#include "number_theory.hpp"
#include "parallel.hpp"
#include "partition.hpp"

namespace specht {

struct OracleOptions {
  /// Largest |lambda| accepted; 16 is also the packing limit of tabloid keys.
  int size_cap = 16;
  /// Above this many tableaux the F_p rank is computed from streamed Gram rows
  /// instead of a materialized matrix.
  std::size_t stream_threshold = 2000;
  /// Guard on |column stabilizer| per polytabloid.
  std::uint64_t column_group_cap = 10'000'000;
  /// 0 = hardware concurrency.
  unsigned threads = 0;
};

inline constexpr int kMaxPackedSize = 16;

inline void check_size_cap(const Partition& lambda, const OracleOptions& opts) {
  const int cap = std::min(opts.size_cap, kMaxPackedSize);
  if (lambda.size() > cap) {
    throw Error(ErrorKind::TooLarge, "|lambda| = " + std::to_string(lambda.size()) + " exceeds the oracle size cap " +
                                         std::to_string(cap));
  }
}

// ---------------------------------------------------------------------------
// Tableaux and tabloids

/// Filling of a Young diagram by 1..n, increasing along rows and down columns.
struct StandardTableau {
  std::vector<std::vector<int>> rows;

  Partition shape() const {
    std::vector<int> parts;
    for (const auto& r : rows) parts.push_back(static_cast<int>(r.size()));
    return Partition(std::move(parts));
  }

  std::vector<int> reading_word() const {
    std::vector<int> word;
    for (const auto& r : rows) word.insert(word.end(), r.begin(), r.end());
    return word;
  }

  friend bool operator==(const StandardTableau&, const StandardTableau&) = default;
};

inline bool is_standard(const StandardTableau& t) {
  std::vector<int> word = t.reading_word();
  std::sort(word.begin(), word.end());
  for (std::size_t i = 0; i < word.size(); ++i) {
    if (word[i] != static_cast<int>(i) + 1) return false;
  }
  for (std::size_t r = 0; r < t.rows.size(); ++r) {
    if (r > 0 && t.rows[r].size() > t.rows[r - 1].size()) return false;
    for (std::size_t c = 0; c < t.rows[r].size(); ++c) {
      if (c > 0 && t.rows[r][c] <= t.rows[r][c - 1]) return false;
      if (r > 0 && t.rows[r][c] <= t.rows[r - 1][c]) return false;
    }
  }
  return true;
}

inline std::string to_string(const StandardTableau& t) {
  std::string out = "[";
  for (std::size_t r = 0; r < t.rows.size(); ++r) {
    out += r ? ",[" : "[";
    for (std::size_t c = 0; c < t.rows[r].size(); ++c) {
      if (c) out += ',';
      out += std::to_string(t.rows[r][c]);
    }
    out += "]";
  }
  return out + "]";
}

/// All standard tableaux of shape lambda, sorted by row reading word.
inline std::vector<StandardTableau> standard_tableaux(const Partition& lambda, const OracleOptions& opts = {}) {
  check_size_cap(lambda, opts);
  std::vector<StandardTableau> out;
  StandardTableau current;
  current.rows.resize(static_cast<std::size_t>(lambda.length()));
  const int n = lambda.size();
  auto place = [&](auto&& self, int next) -> void {
    if (next > n) {
      out.push_back(current);
      return;
    }
    for (int r = 0; r < lambda.length(); ++r) {
      const std::size_t len = current.rows[r].size();
      if (static_cast<int>(len) >= lambda[r]) continue;
      if (r > 0 && current.rows[r - 1].size() <= len) continue;
      current.rows[r].push_back(next);
      self(self, next + 1);
      current.rows[r].pop_back();
    }
  };
  place(place, 1);
  std::sort(out.begin(), out.end(),
            [](const StandardTableau& a, const StandardTableau& b) { return a.reading_word() < b.reading_word(); });
  return out;
}

/// Row-equivalence class of a numbering: row_of[i] is the 0-based row holding i+1.
struct Tabloid {
  std::vector<std::uint8_t> row_of;

  std::vector<std::vector<int>> rows() const {
    int count = 0;
    for (auto r : row_of) count = std::max(count, r + 1);
    std::vector<std::vector<int>> out(static_cast<std::size_t>(count));
    for (std::size_t i = 0; i < row_of.size(); ++i) out[row_of[i]].push_back(static_cast<int>(i) + 1);
    return out;
  }

  friend auto operator<=>(const Tabloid&, const Tabloid&) = default;
};

/// "{12|3}"; entries are comma separated once n >= 10.
inline std::string to_string(const Tabloid& t) {
  const bool commas = t.row_of.size() >= 10;
  std::string out = "{";
  const auto rows = t.rows();
  for (std::size_t r = 0; r < rows.size(); ++r) {
    if (r) out += '|';
    for (std::size_t i = 0; i < rows[r].size(); ++i) {
      if (i && commas) out += ',';
      out += std::to_string(rows[r][i]);
    }
  }
  return out + "}";
}

using TabloidVector = std::map<Tabloid, std::int64_t>;

namespace detail {

// Tabloid packed as 4 bits per entry (row index), entry 1 in the low nibble.
using PackedTabloid = std::uint64_t;
using PackedVector = std::vector<std::pair<PackedTabloid, std::int64_t>>;

struct Permutation {
  std::vector<int> image;
  int sign = 1;
};

inline std::vector<Permutation> signed_permutations(int size) {
  std::vector<Permutation> out;
  std::vector<int> perm(static_cast<std::size_t>(size));
  std::iota(perm.begin(), perm.end(), 0);
  do {
    int inversions = 0;
    for (int i = 0; i < size; ++i) {
      for (int j = i + 1; j < size; ++j) inversions += perm[i] > perm[j];
    }
    out.push_back({perm, inversions % 2 ? -1 : 1});
  } while (std::next_permutation(perm.begin(), perm.end()));
  return out;
}

inline std::uint64_t column_group_order(const Partition& lambda) {
  std::uint64_t order = 1;
  const Partition conj = lambda.conjugate();
  for (int len : conj.parts()) {
    for (int i = 2; i <= len; ++i) order *= static_cast<std::uint64_t>(i);
  }
  return order;
}

// Visits every element of the column stabilizer of t as (row_of, sign): the entry
// in row r of column c moves to row perm[r].
template <class Visit>
void for_each_column_permutation(const StandardTableau& t, Visit&& visit) {
  const Partition shape = t.shape();
  const Partition conj = shape.conjugate();
  const int n = shape.size();
  std::map<int, std::vector<Permutation>> perms_by_length;
  for (int len : conj.parts()) {
    if (!perms_by_length.count(len)) perms_by_length.emplace(len, signed_permutations(len));
  }
  std::vector<std::uint8_t> row_of(static_cast<std::size_t>(n));
  auto rec = [&](auto&& self, int col, int sign) -> void {
    if (col == conj.length()) {
      visit(row_of, sign);
      return;
    }
    for (const Permutation& perm : perms_by_length.at(conj[col])) {
      for (int r = 0; r < conj[col]; ++r) {
        row_of[t.rows[r][col] - 1] = static_cast<std::uint8_t>(perm.image[r]);
      }
      self(self, col + 1, sign * perm.sign);
    }
  };
  rec(rec, 0, 1);
}

inline PackedVector packed_polytabloid(const StandardTableau& t) {
  PackedVector out;
  for_each_column_permutation(t, [&](const std::vector<std::uint8_t>& row_of, int sign) {
    PackedTabloid key = 0;
    for (std::size_t i = 0; i < row_of.size(); ++i) key |= static_cast<PackedTabloid>(row_of[i]) << (4 * i);
    out.emplace_back(key, sign);
  });
  std::sort(out.begin(), out.end());
  PackedVector merged;
  for (const auto& [key, c] : out) {
    if (!merged.empty() && merged.back().first == key) {
      merged.back().second += c;
    } else {
      merged.emplace_back(key, c);
    }
  }
  std::erase_if(merged, [](const auto& term) { return term.second == 0; });
  return merged;
}

inline std::int64_t inner_product(const PackedVector& a, const PackedVector& b) {
  std::int64_t acc = 0;
  auto i = a.begin();
  auto j = b.begin();
  while (i != a.end() && j != b.end()) {
    if (i->first < j->first) {
      ++i;
    } else if (j->first < i->first) {
      ++j;
    } else {
      acc += i->second * j->second;
      ++i;
      ++j;
    }
  }
  return acc;
}

inline void check_column_group(const Partition& lambda, const OracleOptions& opts) {
  if (column_group_order(lambda) > opts.column_group_cap) {
    throw Error(ErrorKind::TooLarge, "column stabilizer of " + to_string(lambda) + " has more than " +
                                         std::to_string(opts.column_group_cap) + " elements");
  }
}

inline std::vector<PackedVector> packed_polytabloids(const std::vector<StandardTableau>& tableaux,
                                                     const OracleOptions& opts) {
  std::vector<PackedVector> out(tableaux.size());
  parallel_for(tableaux.size(), opts.threads, [&](std::size_t i) { out[i] = packed_polytabloid(tableaux[i]); });
  return out;
}

}  // namespace detail

/// e_T = sum over the column stabilizer of T of sign(sigma) {T sigma}.
inline TabloidVector polytabloid(const StandardTableau& t) {
  if (!is_standard(t)) throw Error(ErrorKind::InvalidInput, "polytabloid needs a standard tableau");
  TabloidVector out;
  detail::for_each_column_permutation(t, [&](const std::vector<std::uint8_t>& row_of, int sign) {
    auto [it, inserted] = out.try_emplace(Tabloid{row_of}, sign);
    if (!inserted && (it->second += sign) == 0) out.erase(it);
  });
  return out;
}

// ---------------------------------------------------------------------------
// Gram matrix

/// Symmetric matrix of <e_S, e_T> over the standard tableaux in reading-word order.
/// Entries are bounded by the column group order, so 64 bits are exact.
class GramMatrix {
 public:
  GramMatrix() = default;
  explicit GramMatrix(std::size_t dim) : dim_(dim), entries_(dim * dim, 0) {}

  std::size_t dim() const noexcept { return dim_; }
  std::int64_t operator()(std::size_t i, std::size_t j) const { return entries_[i * dim_ + j]; }
  std::int64_t& operator()(std::size_t i, std::size_t j) { return entries_[i * dim_ + j]; }

  std::vector<std::vector<std::int64_t>> rows() const {
    std::vector<std::vector<std::int64_t>> out(dim_);
    for (std::size_t i = 0; i < dim_; ++i) out[i].assign(entries_.begin() + i * dim_, entries_.begin() + (i + 1) * dim_);
    return out;
  }

  bool symmetric() const {
    for (std::size_t i = 0; i < dim_; ++i) {
      for (std::size_t j = 0; j < i; ++j) {
        if ((*this)(i, j) != (*this)(j, i)) return false;
      }
    }
    return true;
  }

  friend bool operator==(const GramMatrix&, const GramMatrix&) = default;

 private:
  std::size_t dim_ = 0;
  std::vector<std::int64_t> entries_;
};

/// Gram matrix over an explicit list of standard tableaux (any order).
inline GramMatrix gram_matrix(const std::vector<StandardTableau>& tableaux, const OracleOptions& opts = {}) {
  const auto polys = detail::packed_polytabloids(tableaux, opts);
  GramMatrix g(tableaux.size());
  parallel_for(tableaux.size(), opts.threads, [&](std::size_t i) {
    for (std::size_t j = 0; j <= i; ++j) {
      const std::int64_t v = detail::inner_product(polys[i], polys[j]);
      g(i, j) = v;
      g(j, i) = v;
    }
  });
  return g;
}

inline GramMatrix gram_matrix(const Partition& lambda, const OracleOptions& opts = {}) {
  detail::check_column_group(lambda, opts);
  return gram_matrix(standard_tableaux(lambda, opts), opts);
}

// ---------------------------------------------------------------------------
// Ranks

/// Row echelon form over F_p built one row at a time.
class EchelonModP {
 public:
  explicit EchelonModP(std::uint64_t p) : p_(p) {}

  /// Returns true when the row was independent of those already inserted.
  bool insert(std::vector<std::uint64_t> row) {
    for (const auto& [pivot_col, pivot_row] : basis_) {
      const std::uint64_t factor = row[pivot_col];
      if (factor == 0) continue;
      for (std::size_t c = pivot_col; c < row.size(); ++c) {
        row[c] = (row[c] + p_ - detail::mul_mod(factor, pivot_row[c], p_)) % p_;
      }
    }
    const auto lead = std::find_if(row.begin(), row.end(), [](std::uint64_t v) { return v != 0; });
    if (lead == row.end()) return false;
    const std::size_t col = static_cast<std::size_t>(lead - row.begin());
    const std::uint64_t inv = detail::pow_mod(row[col], p_ - 2, p_);
    for (std::size_t c = col; c < row.size(); ++c) row[c] = detail::mul_mod(row[c], inv, p_);
    // Keep pivots reduced against the new row so later inserts see a consistent basis.
    for (auto& [other_col, other_row] : basis_) {
      const std::uint64_t factor = other_row[col];
      if (factor == 0) continue;
      for (std::size_t c = col; c < other_row.size(); ++c) {
        other_row[c] = (other_row[c] + p_ - detail::mul_mod(factor, row[c], p_)) % p_;
      }
    }
    basis_.emplace_back(col, std::move(row));
    return true;
  }

  std::size_t rank() const noexcept { return basis_.size(); }

 private:
  std::uint64_t p_;
  std::vector<std::pair<std::size_t, std::vector<std::uint64_t>>> basis_;
};

inline std::uint64_t reduce_mod(std::int64_t v, std::uint64_t p) {
  const std::int64_t sp = static_cast<std::int64_t>(p);
  return static_cast<std::uint64_t>(((v % sp) + sp) % sp);
}

/// Rank over F_p by Gaussian elimination, pivot = first nonzero entry in the column.
inline std::size_t rank_mod_p(const std::vector<std::vector<std::int64_t>>& rows, std::uint64_t p) {
  require_prime(p);
  if (rows.empty()) return 0;
  std::vector<std::vector<std::uint64_t>> a;
  a.reserve(rows.size());
  for (const auto& r : rows) {
    std::vector<std::uint64_t> red(r.size());
    std::transform(r.begin(), r.end(), red.begin(), [p](std::int64_t v) { return reduce_mod(v, p); });
    a.push_back(std::move(red));
  }
  const std::size_t cols = a.front().size();
  std::size_t rank = 0;
  for (std::size_t col = 0; col < cols && rank < a.size(); ++col) {
    std::size_t pivot = rank;
    while (pivot < a.size() && a[pivot][col] == 0) ++pivot;
    if (pivot == a.size()) continue;
    std::swap(a[rank], a[pivot]);
    const std::uint64_t inv = detail::pow_mod(a[rank][col], p - 2, p);
    for (std::size_t c = col; c < cols; ++c) a[rank][c] = detail::mul_mod(a[rank][c], inv, p);
    for (std::size_t r = rank + 1; r < a.size(); ++r) {
      const std::uint64_t factor = a[r][col];
      if (factor == 0) continue;
      for (std::size_t c = col; c < cols; ++c) a[r][c] = (a[r][c] + p - detail::mul_mod(factor, a[rank][c], p)) % p;
    }
    ++rank;
  }
  return rank;
}

/// Rank over Q via fraction-free (Bareiss) elimination on exact integers.
inline std::size_t rank_rational(const std::vector<std::vector<std::int64_t>>& rows) {
  if (rows.empty()) return 0;
  std::vector<std::vector<BigInt>> a;
  for (const auto& r : rows) a.emplace_back(r.begin(), r.end());
  const std::size_t cols = a.front().size();
  BigInt prev = 1;
  std::size_t rank = 0;
  for (std::size_t col = 0; col < cols && rank < a.size(); ++col) {
    std::size_t pivot = rank;
    while (pivot < a.size() && a[pivot][col] == 0) ++pivot;
    if (pivot == a.size()) continue;
    std::swap(a[rank], a[pivot]);
    for (std::size_t r = rank + 1; r < a.size(); ++r) {
      for (std::size_t c = col + 1; c < cols; ++c) {
        a[r][c] = (a[rank][col] * a[r][c] - a[r][col] * a[rank][c]) / prev;
      }
      a[r][col] = 0;
    }
    prev = a[rank][col];
    ++rank;
  }
  return rank;
}

/// Rank of the Gram form of S^lambda reduced mod p.
inline std::size_t gram_rank_mod_p(const Partition& lambda, std::uint64_t p, const OracleOptions& opts = {}) {
  require_prime(p);
  detail::check_column_group(lambda, opts);
  const auto tableaux = standard_tableaux(lambda, opts);
  if (tableaux.size() <= opts.stream_threshold) return rank_mod_p(gram_matrix(tableaux, opts).rows(), p);

  const auto polys = detail::packed_polytabloids(tableaux, opts);
  EchelonModP echelon(p);
  std::vector<std::uint64_t> row(tableaux.size());
  for (std::size_t i = 0; i < tableaux.size(); ++i) {
    parallel_for(tableaux.size(), opts.threads,
                 [&](std::size_t j) { row[j] = reduce_mod(detail::inner_product(polys[i], polys[j]), p); });
    echelon.insert(row);
    if (echelon.rank() == tableaux.size()) break;
  }
  return echelon.rank();
}

inline std::size_t gram_rank_rational(const Partition& lambda, const OracleOptions& opts = {}) {
  return rank_rational(gram_matrix(lambda, opts).rows());
}

/// "d p" then d rows of residues mod p.
inline void write_matrix_dump(std::ostream& os, const GramMatrix& g, std::uint64_t p) {
  os << g.dim() << ' ' << p << '\n';
  for (std::size_t i = 0; i < g.dim(); ++i) {
    for (std::size_t j = 0; j < g.dim(); ++j) {
      if (j) os << ' ';
      os << reduce_mod(g(i, j), p);
    }
    os << '\n';
  }
}

// ---------------------------------------------------------------------------
// (n-1,1) cross-check

struct HookFamilyCheck {
  std::size_t expected = 0;
  std::size_t actual = 0;
  bool agrees() const noexcept { return expected == actual; }
};

/// expected: dim of K / (K ∩ <1>) over F_p, K the augmentation kernel of F_p^n,
/// computed by linear algebra on explicit vectors; actual: Gram rank of (n-1,1).
inline HookFamilyCheck irreducible_dim_hook_family_check(int n, std::uint64_t p, const OracleOptions& opts = {}) {
  require_prime(p);
  if (n < 3) throw Error(ErrorKind::InvalidInput, "hook family check needs n >= 3");
  std::vector<std::vector<std::int64_t>> kernel;
  for (int i = 0; i + 1 < n; ++i) {
    std::vector<std::int64_t> v(static_cast<std::size_t>(n), 0);
    v[i] = 1;
    v[n - 1] = -1;
    kernel.push_back(std::move(v));
  }
  const std::size_t dim_kernel = rank_mod_p(kernel, p);
  auto with_ones = kernel;
  with_ones.emplace_back(static_cast<std::size_t>(n), 1);
  const std::size_t dim_sum = rank_mod_p(with_ones, p);
  const std::size_t dim_meet = dim_kernel + 1 - dim_sum;
  return {dim_kernel - dim_meet, gram_rank_mod_p(Partition{n - 1, 1}, p, opts)};
}

}  // namespace specht
