#pragma once

// Specht-module dimensions via the hook length formula and their lift to
// polynomials in n for the padded family (n - |mu|, mu).

#include <vector>

#include "error.hpp"
#include "number_theory.hpp"
#include "partition.hpp"
#include "polynomial.hpp"

namespace specht {

/// The family (n - |tail|, tail) for variable n.
class PaddedShape {
 public:
  PaddedShape() = default;
  explicit PaddedShape(Partition tail) : tail_(std::move(tail)) {}

  const Partition& tail() const noexcept { return tail_; }
  int degree() const noexcept { return tail_.size(); }

  /// Least n for which (n - |tail|, tail) is a partition.
  int threshold() const noexcept { return tail_.empty() ? 0 : tail_.size() + tail_[0]; }

  bool valid_at(int n) const noexcept { return n >= threshold(); }

  /// Throws SizeError below the threshold.
  Partition at(int n) const {
    if (!valid_at(n)) {
      throw Error(ErrorKind::SizeError, "(n - |mu|, mu) with mu = " + to_string(tail_) + " needs n >= " +
                                            std::to_string(threshold()) + ", got n = " + std::to_string(n));
    }
    std::vector<int> parts{n - tail_.size()};
    parts.insert(parts.end(), tail_.parts().begin(), tail_.parts().end());
    return Partition(std::move(parts));
  }

  friend bool operator==(const PaddedShape&, const PaddedShape&) = default;

 private:
  Partition tail_;
};

inline BigInt factorial(int n) {
  BigInt out = 1;
  for (int i = 2; i <= n; ++i) out *= i;
  return out;
}

/// n! / prod(hooks).
inline BigInt specht_dimension(const Partition& lambda) {
  if (lambda.empty()) throw Error(ErrorKind::EmptyPartition, "specht_dimension needs a nonempty partition");
  BigInt hooks = 1;
  for (const auto& [cell, h] : hook_lengths(lambda)) hooks *= h;
  return factorial(lambda.size()) / hooks;
}

/// Degree-|mu| polynomial P with P(n) = dim S^(n-|mu|, mu) for n >= threshold.
/// Built by interpolation at |mu|+1 consecutive valid n and checked at three more.
inline RationalPolynomial specht_dimension_polynomial(const PaddedShape& shape) {
  const int first = std::max(shape.threshold(), 1);
  const int samples = shape.degree() + 1;
  std::vector<BigRational> xs;
  std::vector<BigRational> ys;
  for (int n = first; n < first + samples; ++n) {
    xs.emplace_back(n);
    ys.emplace_back(specht_dimension(shape.at(n)));
  }
  RationalPolynomial poly = RationalPolynomial::interpolate(xs, ys);
  for (int n = first + samples; n < first + samples + 3; ++n) {
    if (poly(BigRational(n)) != BigRational(specht_dimension(shape.at(n)))) {
      throw Error(ErrorKind::NotStabilized,
                  "interpolated dimension polynomial for " + to_string(shape.tail()) + " fails at n = " + std::to_string(n));
    }
  }
  return poly;
}

}  // namespace specht
