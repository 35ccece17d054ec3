#pragma once

#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "error.hpp"
#include "number_theory.hpp"

namespace specht {

/// Univariate polynomial in n with exact rational coefficients; index = degree.
/// The zero polynomial has no coefficients.
class RationalPolynomial {
 public:
  RationalPolynomial() = default;
  explicit RationalPolynomial(std::vector<BigRational> coeffs) : coeffs_(std::move(coeffs)) { trim(); }
  RationalPolynomial(std::initializer_list<BigRational> coeffs) : coeffs_(coeffs) { trim(); }

  static RationalPolynomial constant(const BigRational& c) { return RationalPolynomial({c}); }

  const std::vector<BigRational>& coefficients() const noexcept { return coeffs_; }
  bool is_zero() const noexcept { return coeffs_.empty(); }
  /// -1 for the zero polynomial.
  int degree() const noexcept { return static_cast<int>(coeffs_.size()) - 1; }

  BigRational coefficient(std::size_t i) const { return i < coeffs_.size() ? coeffs_[i] : BigRational(0); }

  BigRational operator()(const BigRational& x) const {
    BigRational acc = 0;
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + *it;
    return acc;
  }

  RationalPolynomial& operator+=(const RationalPolynomial& o) {
    if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size());
    for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] += o.coeffs_[i];
    trim();
    return *this;
  }
  RationalPolynomial& operator-=(const RationalPolynomial& o) { return *this += -o; }
  RationalPolynomial& operator*=(const RationalPolynomial& o) {
    *this = *this * o;
    return *this;
  }

  friend RationalPolynomial operator-(RationalPolynomial a) {
    for (auto& c : a.coeffs_) c = -c;
    return a;
  }
  friend RationalPolynomial operator+(RationalPolynomial a, const RationalPolynomial& b) { return a += b; }
  friend RationalPolynomial operator-(RationalPolynomial a, const RationalPolynomial& b) { return a -= b; }
  friend RationalPolynomial operator*(const RationalPolynomial& a, const RationalPolynomial& b) {
    if (a.is_zero() || b.is_zero()) return {};
    std::vector<BigRational> out(a.coeffs_.size() + b.coeffs_.size() - 1);
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
      for (std::size_t j = 0; j < b.coeffs_.size(); ++j) out[i + j] += a.coeffs_[i] * b.coeffs_[j];
    }
    return RationalPolynomial(std::move(out));
  }
  friend RationalPolynomial operator*(const BigRational& s, RationalPolynomial a) {
    for (auto& c : a.coeffs_) c *= s;
    a.trim();
    return a;
  }

  friend bool operator==(const RationalPolynomial&, const RationalPolynomial&) = default;

  /// Lagrange interpolation through (xs[i], ys[i]); xs pairwise distinct.
  static RationalPolynomial interpolate(const std::vector<BigRational>& xs, const std::vector<BigRational>& ys) {
    if (xs.size() != ys.size()) throw Error(ErrorKind::InvalidInput, "interpolation needs equally many x and y values");
    RationalPolynomial result;
    for (std::size_t i = 0; i < xs.size(); ++i) {
      RationalPolynomial basis = constant(1);
      BigRational denom = 1;
      for (std::size_t j = 0; j < xs.size(); ++j) {
        if (j == i) continue;
        basis *= RationalPolynomial({-xs[j], BigRational(1)});
        denom *= xs[i] - xs[j];
      }
      result += (ys[i] / denom) * basis;
    }
    return result;
  }

 private:
  void trim() {
    while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
  }

  std::vector<BigRational> coeffs_;
};

namespace detail {

inline std::string rational_string(const BigRational& r) {
  using boost::multiprecision::denominator;
  using boost::multiprecision::numerator;
  std::string out = numerator(r).str();
  if (denominator(r) != 1) out += "/" + denominator(r).str();
  return out;
}

}  // namespace detail

/// Descending degree, lowest-terms coefficients: "1/2*n^2 - 5/2*n + 1".
inline std::string to_string(const RationalPolynomial& poly, std::string_view var = "n") {
  if (poly.is_zero()) return "0";
  std::string out;
  for (int d = poly.degree(); d >= 0; --d) {
    BigRational c = poly.coefficient(static_cast<std::size_t>(d));
    if (c == 0) continue;
    const bool negative = c < 0;
    if (negative) c = -c;
    if (out.empty()) {
      if (negative) out += "-";
    } else {
      out += negative ? " - " : " + ";
    }
    std::string mono;
    if (d >= 1) {
      mono = std::string(var);
      if (d >= 2) mono += "^" + std::to_string(d);
    }
    if (d == 0) {
      out += detail::rational_string(c);
    } else if (c == 1) {
      out += mono;
    } else {
      out += detail::rational_string(c) + "*" + mono;
    }
  }
  return out;
}

/// Integer coefficients, constant term first; nonconstant with positive leading coefficient.
class IntegerPolynomial {
 public:
  explicit IntegerPolynomial(std::vector<BigInt> coeffs) : coeffs_(std::move(coeffs)) {
    while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
    if (coeffs_.size() < 2) throw Error(ErrorKind::InvalidInput, "polynomial must be nonconstant");
    if (coeffs_.back() < 0) throw Error(ErrorKind::InvalidInput, "leading coefficient must be positive");
  }

  const std::vector<BigInt>& coefficients() const noexcept { return coeffs_; }
  int degree() const noexcept { return static_cast<int>(coeffs_.size()) - 1; }

  BigInt operator()(const BigInt& x) const {
    BigInt acc = 0;
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + *it;
    return acc;
  }

 private:
  std::vector<BigInt> coeffs_;
};

/// "1,0,1" is x^2 + 1.
inline IntegerPolynomial parse_integer_polynomial(std::string_view text) {
  std::vector<BigInt> coeffs;
  std::stringstream ss{std::string(text)};
  std::string item;
  while (std::getline(ss, item, ',')) {
    const auto start = item.find_first_not_of(" \t");
    const auto end = item.find_last_not_of(" \t");
    if (start == std::string::npos) throw Error(ErrorKind::InvalidInput, "empty coefficient in '" + std::string(text) + "'");
    item = item.substr(start, end - start + 1);
    const std::size_t digits_from = (item[0] == '-' || item[0] == '+') ? 1 : 0;
    if (digits_from == item.size() || item.find_first_not_of("0123456789", digits_from) != std::string::npos) {
      throw Error(ErrorKind::InvalidInput, "bad coefficient '" + item + "' in '" + std::string(text) + "'");
    }
    coeffs.emplace_back(item[0] == '+' ? item.substr(1) : item);
  }
  return IntegerPolynomial(std::move(coeffs));
}

inline std::string to_string(const IntegerPolynomial& q) {
  std::vector<BigRational> rc(q.coefficients().begin(), q.coefficients().end());
  return to_string(RationalPolynomial(std::move(rc)), "x");
}

}  // namespace specht
