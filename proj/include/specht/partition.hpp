#pragma once

// Integer partitions and Young-diagram combinatorics: dominance order, hook
// lengths, border strips (rim hooks), p-regularity.

#include <algorithm>
#include <compare>
#include <cstdint>
#include <map>
#include <numeric>
#include <ostream>
#include <set>
#include <sstream>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "error.hpp"
#include "number_theory.hpp"

namespace specht {

/// Weakly decreasing sequence of positive parts. Stored without trailing zeros,
/// so two partitions are equal iff their part sequences are equal.
class Partition {
 public:
  Partition() = default;

  explicit Partition(std::vector<int> parts) : parts_(std::move(parts)) {
    while (!parts_.empty() && parts_.back() == 0) parts_.pop_back();
    for (std::size_t i = 0; i < parts_.size(); ++i) {
      if (parts_[i] <= 0) throw Error(ErrorKind::InvalidInput, "partition parts must be positive");
      if (i > 0 && parts_[i] > parts_[i - 1]) {
        throw Error(ErrorKind::InvalidInput, "partition parts must be weakly decreasing");
      }
    }
  }

  Partition(std::initializer_list<int> parts) : Partition(std::vector<int>(parts)) {}

  const std::vector<int>& parts() const noexcept { return parts_; }
  int size() const noexcept { return std::accumulate(parts_.begin(), parts_.end(), 0); }
  int length() const noexcept { return static_cast<int>(parts_.size()); }
  bool empty() const noexcept { return parts_.empty(); }

  /// 0-based row access, zero past the last row.
  int operator[](std::size_t row) const noexcept { return row < parts_.size() ? parts_[row] : 0; }

  /// Rows 2 and below.
  Partition tail() const {
    return parts_.empty() ? Partition{} : Partition(std::vector<int>(parts_.begin() + 1, parts_.end()));
  }

  Partition conjugate() const {
    std::vector<int> conj(parts_.empty() ? 0 : parts_.front(), 0);
    for (int part : parts_) {
      for (int j = 0; j < part; ++j) ++conj[j];
    }
    return Partition(std::move(conj));
  }

  bool contains(const Partition& inner) const noexcept {
    if (inner.length() > length()) return false;
    for (int i = 0; i < inner.length(); ++i) {
      if (inner.parts_[i] > parts_[i]) return false;
    }
    return true;
  }

  friend bool operator==(const Partition&, const Partition&) = default;
  /// Lexicographic on parts; a linear extension of dominance within a fixed size.
  friend std::strong_ordering operator<=>(const Partition& a, const Partition& b) {
    return a.parts_ <=> b.parts_;
  }

 private:
  std::vector<int> parts_;
};

/// "[5,2]"; "[]" for the empty partition.
inline std::string to_string(const Partition& p) {
  std::string out = "[";
  for (int i = 0; i < p.length(); ++i) {
    if (i) out += ',';
    out += std::to_string(p[i]);
  }
  return out + "]";
}

inline std::ostream& operator<<(std::ostream& os, const Partition& p) { return os << to_string(p); }

/// Accepts "[5,2]", "5,2", "[]" and "" (whitespace ignored).
inline Partition parse_partition(std::string_view text) {
  std::string body;
  for (char c : text) {
    if (c != ' ' && c != '\t') body += c;
  }
  if (!body.empty() && body.front() == '[') {
    if (body.back() != ']') throw Error(ErrorKind::InvalidInput, "unbalanced brackets in '" + std::string(text) + "'");
    body = body.substr(1, body.size() - 2);
  }
  std::vector<int> parts;
  if (body.empty()) return Partition{};
  std::stringstream ss(body);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (item.empty() || item.find_first_not_of("0123456789") != std::string::npos || item.size() > 6) {
      throw Error(ErrorKind::InvalidInput, "bad partition part '" + item + "' in '" + std::string(text) + "'");
    }
    parts.push_back(std::stoi(item));
  }
  if (!body.empty() && body.back() == ',') throw Error(ErrorKind::InvalidInput, "trailing comma in '" + std::string(text) + "'");
  if (std::find(parts.begin(), parts.end(), 0) != parts.end()) {
    throw Error(ErrorKind::InvalidInput, "partition parts must be positive: '" + std::string(text) + "'");
  }
  return Partition(std::move(parts));
}

/// 1-based diagram coordinates.
struct Cell {
  int row = 1;
  int col = 1;
  friend auto operator<=>(const Cell&, const Cell&) = default;
};

inline std::string to_string(const Cell& c) {
  return "(" + std::to_string(c.row) + "," + std::to_string(c.col) + ")";
}

inline std::vector<Cell> cells(const Partition& p) {
  std::vector<Cell> out;
  out.reserve(static_cast<std::size_t>(p.size()));
  for (int i = 0; i < p.length(); ++i) {
    for (int j = 1; j <= p[i]; ++j) out.push_back({i + 1, j});
  }
  return out;
}

/// Descending lexicographic order: (n), (n-1,1), ..., (1^n).
inline std::vector<Partition> partitions_of(int n) {
  std::vector<Partition> out;
  if (n < 0) return out;
  std::vector<int> current;
  auto rec = [&](auto&& self, int remaining, int max_part) -> void {
    if (remaining == 0) {
      out.emplace_back(current);
      return;
    }
    for (int part = std::min(remaining, max_part); part >= 1; --part) {
      current.push_back(part);
      self(self, remaining - part, part);
      current.pop_back();
    }
  };
  rec(rec, n, n);
  return out;
}

/// Partitions of n with n - first part <= k, descending lexicographic.
inline std::vector<Partition> low_degree_partitions(int n, int k) {
  std::vector<Partition> out;
  for (auto& p : partitions_of(n)) {
    if (n - p[0] <= k) out.push_back(std::move(p));
  }
  return out;
}

// ---------------------------------------------------------------------------
// Dominance order

enum class Dominance { Greater, Less, Equal, Incomparable };

inline std::string_view to_string(Dominance d) {
  switch (d) {
    case Dominance::Greater: return "Greater";
    case Dominance::Less: return "Less";
    case Dominance::Equal: return "Equal";
    case Dominance::Incomparable: return "Incomparable";
  }
  return "?";
}

inline Dominance dominance_compare(const Partition& a, const Partition& b) {
  if (a.size() != b.size()) {
    throw Error(ErrorKind::SizeMismatch,
                "dominance needs equal sizes, got " + to_string(a) + " and " + to_string(b));
  }
  if (a == b) return Dominance::Equal;
  bool some_greater = false;
  bool some_less = false;
  int sum_a = 0;
  int sum_b = 0;
  const int rows = std::max(a.length(), b.length());
  for (int i = 0; i < rows; ++i) {
    sum_a += a[i];
    sum_b += b[i];
    some_greater |= sum_a > sum_b;
    some_less |= sum_a < sum_b;
  }
  if (some_greater && some_less) return Dominance::Incomparable;
  return some_greater ? Dominance::Greater : Dominance::Less;
}

// ---------------------------------------------------------------------------
// Hooks and border strips

inline int hook_length(const Partition& p, Cell c) {
  const Partition conj = p.conjugate();
  const int arm = p[c.row - 1] - c.col;
  const int leg = conj[c.col - 1] - c.row;
  return arm + leg + 1;
}

inline std::map<Cell, int> hook_lengths(const Partition& p) {
  const Partition conj = p.conjugate();
  std::map<Cell, int> out;
  for (const Cell& c : cells(p)) {
    out[c] = (p[c.row - 1] - c.col) + (conj[c.col - 1] - c.row) + 1;
  }
  return out;
}

/// Skew shape outer/inner, stored as its cells in (row, col) order.
struct BorderStrip {
  std::vector<Cell> cells;
  Cell anchor;

  int size() const noexcept { return static_cast<int>(cells.size()); }
};

/// True iff outer/inner is a nonempty edge-connected skew shape with no 2x2 block.
inline bool is_border_strip(const Partition& outer, const Partition& inner) {
  if (!outer.contains(inner) || outer.size() == inner.size()) return false;
  std::set<Cell> skew;
  for (int i = 0; i < outer.length(); ++i) {
    for (int j = inner[i] + 1; j <= outer[i]; ++j) skew.insert({i + 1, j});
  }
  for (const Cell& c : skew) {
    if (skew.count({c.row + 1, c.col}) && skew.count({c.row, c.col + 1}) &&
        skew.count({c.row + 1, c.col + 1})) {
      return false;
    }
  }
  std::set<Cell> seen;
  std::vector<Cell> stack{*skew.begin()};
  seen.insert(*skew.begin());
  while (!stack.empty()) {
    Cell c = stack.back();
    stack.pop_back();
    for (Cell nb : {Cell{c.row - 1, c.col}, Cell{c.row + 1, c.col}, Cell{c.row, c.col - 1}, Cell{c.row, c.col + 1}}) {
      if (skew.count(nb) && seen.insert(nb).second) stack.push_back(nb);
    }
  }
  return seen.size() == skew.size();
}

/// Partition left after removing the rim hook attached to `anchor`: rows
/// anchor.row .. r-1 become the next row's length minus one and the bottom row r
/// of the hook is cut back to anchor.col - 1.
inline Partition remove_rim_hook(const Partition& p, Cell anchor) {
  const Partition conj = p.conjugate();
  const int top = anchor.row - 1;
  const int bottom = conj[anchor.col - 1] - 1;
  std::vector<int> parts = p.parts();
  for (int r = top; r < bottom; ++r) parts[r] = p[r + 1] - 1;
  parts[bottom] = anchor.col - 1;
  return Partition(std::move(parts));
}

inline BorderStrip rim_hook_strip(const Partition& p, Cell anchor) {
  const Partition rest = remove_rim_hook(p, anchor);
  BorderStrip strip;
  strip.anchor = anchor;
  for (int i = 0; i < p.length(); ++i) {
    for (int j = rest[i] + 1; j <= p[i]; ++j) strip.cells.push_back({i + 1, j});
  }
  return strip;
}

struct RimHookRemoval {
  Cell anchor;
  Partition remainder;
  friend bool operator==(const RimHookRemoval&, const RimHookRemoval&) = default;
};

/// One entry per cell of hook length h, ordered by anchor (row, col).
inline std::vector<RimHookRemoval> removable_rim_hooks(const Partition& p, int h) {
  std::vector<RimHookRemoval> out;
  if (h <= 0 || h > p.size()) return out;
  for (const auto& [cell, hook] : hook_lengths(p)) {
    if (hook == h) out.push_back({cell, remove_rim_hook(p, cell)});
  }
  return out;
}

namespace detail {

// First-column hook lengths of p padded to `count` rows (beta numbers).
inline std::vector<int> beta_set(const Partition& p, int count) {
  std::vector<int> beta(static_cast<std::size_t>(count));
  for (int i = 0; i < count; ++i) beta[i] = p[i] + (count - 1 - i);
  return beta;
}

inline Partition from_beta_set(std::vector<int> beta) {
  std::sort(beta.rbegin(), beta.rend());
  const int count = static_cast<int>(beta.size());
  std::vector<int> parts(beta.size());
  for (int i = 0; i < count; ++i) parts[i] = beta[i] - (count - 1 - i);
  return Partition(std::move(parts));
}

}  // namespace detail

/// All nu with nu/p a border strip of size h, descending lexicographic.
/// Adding an h-strip is sliding one bead of the beta set h places up.
inline std::vector<Partition> addable_rim_hooks(const Partition& p, int h) {
  std::vector<Partition> out;
  if (h <= 0) return out;
  const std::vector<int> beta = detail::beta_set(p, p.length() + h);
  const std::set<int> occupied(beta.begin(), beta.end());
  for (std::size_t i = 0; i < beta.size(); ++i) {
    if (occupied.count(beta[i] + h)) continue;
    std::vector<int> moved = beta;
    moved[i] += h;
    out.push_back(detail::from_beta_set(std::move(moved)));
  }
  std::sort(out.rbegin(), out.rend());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

/// No part value occurs p or more times.
inline bool is_p_regular(const Partition& lambda, std::uint64_t p) {
  require_prime(p);
  int run = 0;
  for (int i = 0; i < lambda.length(); ++i) {
    run = (i > 0 && lambda[i] == lambda[i - 1]) ? run + 1 : 1;
    if (static_cast<std::uint64_t>(run) >= p) return false;
  }
  return true;
}

}  // namespace specht
