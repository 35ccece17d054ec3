#include <gtest/gtest.h>

#include "oracles.hpp"
#include "specht/dimensions.hpp"

namespace specht {
namespace {

BigRational frac(long num, long den = 1) { return BigRational(num) / den; }

TEST(SpechtDimension, Examples) {
  EXPECT_EQ(specht_dimension({2, 1}), 2);
  EXPECT_EQ(specht_dimension({5, 2}), 14);
  EXPECT_EQ(oracle::count_standard_tableaux({5, 2}), 14);
  EXPECT_EQ(specht_dimension({7}), 1);
  try {
    specht_dimension({});
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::EmptyPartition);
  }
}

TEST(SpechtDimension, CountsStandardTableaux) {
  for (int n = 1; n <= 10; ++n) {
    for (const auto& p : partitions_of(n)) EXPECT_EQ(specht_dimension(p), oracle::count_standard_tableaux(p.parts())) << p;
  }
}

TEST(SpechtDimension, SumOfSquaresIsFactorial) {
  for (int n = 1; n <= 8; ++n) {
    BigInt sum = 0;
    for (const auto& p : partitions_of(n)) sum += specht_dimension(p) * specht_dimension(p);
    EXPECT_EQ(sum, factorial(n));
  }
}

TEST(SpechtDimension, ConjugateInvariant) {
  for (int n = 1; n <= 10; ++n) {
    for (const auto& p : partitions_of(n)) EXPECT_EQ(specht_dimension(p), specht_dimension(p.conjugate()));
  }
}

TEST(PaddedShape, Threshold) {
  EXPECT_EQ(PaddedShape(Partition{}).threshold(), 0);
  EXPECT_EQ(PaddedShape({2}).threshold(), 4);
  EXPECT_EQ(PaddedShape({2, 1}).threshold(), 5);
  EXPECT_EQ(PaddedShape({2}).at(7), Partition({5, 2}));
  EXPECT_THROW(PaddedShape({2}).at(3), Error);
}

TEST(DimensionPolynomial, Examples) {
  EXPECT_EQ(specht_dimension_polynomial(PaddedShape(Partition{})), RationalPolynomial({frac(1)}));
  EXPECT_EQ(specht_dimension_polynomial(PaddedShape({1})), RationalPolynomial({frac(-1), frac(1)}));
  EXPECT_EQ(specht_dimension_polynomial(PaddedShape({2})), RationalPolynomial({frac(0), frac(-3, 2), frac(1, 2)}));
  // (n-1)(n-2)/2
  EXPECT_EQ(specht_dimension_polynomial(PaddedShape({1, 1})), RationalPolynomial({frac(1), frac(-3, 2), frac(1, 2)}));
}

// Every mu with |mu| <= 4, checked against the tableau count over ten more n.
TEST(DimensionPolynomial, MatchesTableauCount) {
  for (int k = 0; k <= 4; ++k) {
    for (const auto& mu : partitions_of(k)) {
      const PaddedShape shape(mu);
      const auto poly = specht_dimension_polynomial(shape);
      EXPECT_EQ(poly.degree(), k);
      for (int n = std::max(shape.threshold(), 1); n <= shape.threshold() + 10; ++n) {
        const BigRational value = poly(BigRational(n));
        EXPECT_EQ(denominator(value), 1) << "non-integral at n=" << n;
        EXPECT_EQ(value, BigRational(oracle::count_standard_tableaux(shape.at(n).parts()))) << mu << " n=" << n;
      }
    }
  }
}

TEST(RationalPolynomial, Rendering) {
  EXPECT_EQ(to_string(RationalPolynomial({frac(1), frac(-5, 2), frac(1, 2)})), "1/2*n^2 - 5/2*n + 1");
  EXPECT_EQ(to_string(RationalPolynomial({frac(-1), frac(1)})), "n - 1");
  EXPECT_EQ(to_string(RationalPolynomial({frac(0), frac(-1)})), "-n");
  EXPECT_EQ(to_string(RationalPolynomial{}), "0");
  EXPECT_EQ(to_string(RationalPolynomial({frac(3)})), "3");
  EXPECT_EQ(to_string(RationalPolynomial({frac(2), frac(0), frac(-4, 6)})), "-2/3*n^2 + 2");
}

TEST(RationalPolynomial, Arithmetic) {
  const RationalPolynomial a({frac(1), frac(1)});
  const RationalPolynomial b({frac(-1), frac(1)});
  EXPECT_EQ(a * b, RationalPolynomial({frac(-1), frac(0), frac(1)}));
  EXPECT_TRUE((a - a).is_zero());
  EXPECT_EQ((a - a).degree(), -1);
  EXPECT_EQ(a + b, RationalPolynomial({frac(0), frac(2)}));
  const auto interp = RationalPolynomial::interpolate({frac(0), frac(1), frac(2)}, {frac(0), frac(1), frac(4)});
  EXPECT_EQ(interp, RationalPolynomial({frac(0), frac(0), frac(1)}));
}

}  // namespace
}  // namespace specht
