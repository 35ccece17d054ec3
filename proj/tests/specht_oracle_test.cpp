#include <gtest/gtest.h>

#include <algorithm>
#include <random>
#include <sstream>

#include "oracles.hpp"
#include "specht/dimensions.hpp"
#include "specht/specht_oracle.hpp"

namespace specht {
namespace {

Tabloid tabloid(std::vector<std::uint8_t> row_of) { return Tabloid{std::move(row_of)}; }

TEST(StandardTableaux, Examples) {
  const auto two_one = standard_tableaux({2, 1});
  ASSERT_EQ(two_one.size(), 2u);
  EXPECT_EQ(two_one[0].rows, (std::vector<std::vector<int>>{{1, 2}, {3}}));
  EXPECT_EQ(two_one[1].rows, (std::vector<std::vector<int>>{{1, 3}, {2}}));
  EXPECT_EQ(standard_tableaux({3, 1}).size(), 3u);
  EXPECT_EQ(standard_tableaux({4}).size(), 1u);
}

TEST(StandardTableaux, CountAndOrder) {
  for (int n = 1; n <= 8; ++n) {
    for (const auto& lambda : partitions_of(n)) {
      const auto all = standard_tableaux(lambda);
      EXPECT_EQ(BigInt(all.size()), oracle::count_standard_tableaux(lambda.parts()));
      for (std::size_t i = 0; i < all.size(); ++i) {
        EXPECT_TRUE(is_standard(all[i]));
        EXPECT_EQ(all[i].shape(), lambda);
        if (i > 0) {
          EXPECT_LT(all[i - 1].reading_word(), all[i].reading_word());
        }
      }
    }
  }
}

TEST(StandardTableaux, SizeCap) {
  OracleOptions opts;
  opts.size_cap = 5;
  try {
    standard_tableaux({3, 3}, opts);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::TooLarge);
  }
  EXPECT_THROW(standard_tableaux({17}), Error);
}

TEST(Polytabloid, Examples) {
  // {12|3} - {23|1}
  const TabloidVector first{{tabloid({0, 0, 1}), 1}, {tabloid({1, 0, 0}), -1}};
  EXPECT_EQ(polytabloid({{{1, 2}, {3}}}), first);
  // {13|2} - {23|1}
  const TabloidVector second{{tabloid({0, 1, 0}), 1}, {tabloid({1, 0, 0}), -1}};
  EXPECT_EQ(polytabloid({{{1, 3}, {2}}}), second);
  EXPECT_EQ(polytabloid({{{1, 2, 3}}}), (TabloidVector{{tabloid({0, 0, 0}), 1}}));
  EXPECT_EQ(to_string(tabloid({1, 0, 0})), "{23|1}");
  EXPECT_THROW(polytabloid({{{2, 1}, {3}}}), Error);
}

TEST(Polytabloid, SupportSizeIsColumnGroupOrder) {
  for (int n = 1; n <= 7; ++n) {
    for (const auto& lambda : partitions_of(n)) {
      std::uint64_t order = 1;
      const Partition columns = lambda.conjugate();
      for (int len : columns.parts()) {
        for (int i = 2; i <= len; ++i) order *= static_cast<std::uint64_t>(i);
      }
      for (const auto& t : standard_tableaux(lambda)) {
        const auto e = polytabloid(t);
        EXPECT_EQ(e.size(), order);
        // The tabloid of T itself appears with sign +1.
        std::vector<std::uint8_t> row_of(static_cast<std::size_t>(n));
        for (std::size_t r = 0; r < t.rows.size(); ++r) {
          for (int entry : t.rows[r]) row_of[entry - 1] = static_cast<std::uint8_t>(r);
        }
        EXPECT_EQ(e.at(Tabloid{row_of}), 1);
      }
    }
  }
}

TEST(GramMatrix, Examples) {
  const GramMatrix g = gram_matrix(Partition{2, 1});
  ASSERT_EQ(g.dim(), 2u);
  EXPECT_EQ(g.rows(), (std::vector<std::vector<std::int64_t>>{{2, 1}, {1, 2}}));
  EXPECT_EQ(gram_matrix(Partition{5}).rows(), (std::vector<std::vector<std::int64_t>>{{1}}));
  EXPECT_EQ(gram_matrix(Partition{1, 1}).rows(), (std::vector<std::vector<std::int64_t>>{{2}}));
}

// Entries equal the inner product of the map-based polytabloids.
TEST(GramMatrix, MatchesExplicitInnerProducts) {
  for (const Partition& lambda : {Partition{3, 2}, Partition{2, 2, 1}, Partition{3, 1, 1}, Partition{4, 2}}) {
    const auto tabs = standard_tableaux(lambda);
    const auto g = gram_matrix(lambda);
    EXPECT_TRUE(g.symmetric());
    for (std::size_t i = 0; i < tabs.size(); ++i) {
      const auto ei = polytabloid(tabs[i]);
      for (std::size_t j = 0; j < tabs.size(); ++j) {
        const auto ej = polytabloid(tabs[j]);
        std::int64_t acc = 0;
        for (const auto& [t, c] : ei) {
          if (auto it = ej.find(t); it != ej.end()) acc += c * it->second;
        }
        EXPECT_EQ(g(i, j), acc);
      }
    }
  }
}

TEST(GramMatrix, ParallelMatchesSequential) {
  OracleOptions seq;
  seq.threads = 1;
  OracleOptions par;
  par.threads = 4;
  for (const Partition& lambda : {Partition{4, 2, 1}, Partition{5, 3}, Partition{3, 3, 2}}) {
    EXPECT_EQ(gram_matrix(lambda, seq), gram_matrix(lambda, par));
  }
}

TEST(GramRank, Examples) {
  EXPECT_EQ(gram_rank_mod_p({2, 1}, 3), 1u);
  EXPECT_EQ(gram_rank_mod_p({2, 1}, 5), 2u);
  EXPECT_EQ(gram_rank_mod_p({5, 2}, 5), 8u);
  try {
    gram_rank_mod_p({2, 1}, 4);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::NotPrime);
  }
}

// Characteristic zero: the form is nondegenerate; large p behaves the same.
TEST(GramRank, FullRankOverRationalsAndLargePrimes) {
  for (int n = 1; n <= 8; ++n) {
    for (const auto& lambda : partitions_of(n)) {
      const auto dim = static_cast<std::size_t>(specht_dimension(lambda));
      const auto g = gram_matrix(lambda);
      EXPECT_EQ(rank_rational(g.rows()), dim) << lambda;
      for (std::uint64_t p : {11u, 13u}) EXPECT_EQ(rank_mod_p(g.rows(), p), dim) << lambda << " p=" << p;
      for (std::uint64_t p : {2u, 3u, 5u, 7u}) EXPECT_LE(rank_mod_p(g.rows(), p), dim);
    }
  }
}

TEST(GramRank, IndependentOfTableauOrder) {
  std::mt19937 rng(12345);
  for (const Partition& lambda : {Partition{4, 2}, Partition{3, 2, 1}, Partition{5, 2, 1}, Partition{4, 4}}) {
    auto tabs = standard_tableaux(lambda);
    const auto sorted_g = gram_matrix(tabs);
    std::shuffle(tabs.begin(), tabs.end(), rng);
    const auto shuffled_g = gram_matrix(tabs);
    EXPECT_TRUE(shuffled_g.symmetric());
    for (std::uint64_t p : {2u, 3u, 5u, 7u}) EXPECT_EQ(rank_mod_p(sorted_g.rows(), p), rank_mod_p(shuffled_g.rows(), p));
    EXPECT_EQ(rank_rational(sorted_g.rows()), rank_rational(shuffled_g.rows()));
  }
}

TEST(GramRank, StreamedMatchesMaterialized) {
  OracleOptions streamed;
  streamed.stream_threshold = 0;
  for (const Partition& lambda : {Partition{4, 2}, Partition{3, 2, 1}, Partition{6, 2}, Partition{5, 1, 1}}) {
    for (std::uint64_t p : {2u, 3u, 5u, 7u}) {
      EXPECT_EQ(gram_rank_mod_p(lambda, p, streamed), gram_rank_mod_p(lambda, p)) << lambda << " p=" << p;
    }
  }
}

TEST(Rank, SmallMatrices) {
  const std::vector<std::vector<std::int64_t>> singular{{1, 2}, {2, 4}};
  EXPECT_EQ(rank_mod_p(singular, 7), 1u);
  EXPECT_EQ(rank_rational(singular), 1u);
  const std::vector<std::vector<std::int64_t>> det3{{2, 1}, {1, 2}};
  EXPECT_EQ(rank_mod_p(det3, 3), 1u);
  EXPECT_EQ(rank_rational(det3), 2u);
  EXPECT_EQ(rank_rational({{0, 0}, {0, 0}}), 0u);
  EXPECT_EQ(rank_rational({{0, 1, 2}, {0, 2, 4}, {1, 0, 0}}), 2u);
  EchelonModP e(5);
  EXPECT_TRUE(e.insert({1, 2, 3}));
  EXPECT_FALSE(e.insert({2, 4, 6}));
  EXPECT_TRUE(e.insert({0, 0, 1}));
  EXPECT_EQ(e.rank(), 2u);
}

TEST(HookFamilyCheck, Examples) {
  const auto a = irreducible_dim_hook_family_check(10, 5);
  EXPECT_EQ(a.expected, 8u);
  EXPECT_EQ(a.actual, 8u);
  const auto b = irreducible_dim_hook_family_check(7, 5);
  EXPECT_EQ(b.expected, 6u);
  EXPECT_EQ(b.actual, 6u);
  const auto c = irreducible_dim_hook_family_check(4, 5);
  EXPECT_EQ(c.expected, 3u);
  EXPECT_EQ(c.actual, 3u);
  EXPECT_THROW(irreducible_dim_hook_family_check(2, 5), Error);
}

TEST(HookFamilyCheck, AllSmallCases) {
  for (int n = 3; n <= 14; ++n) {
    for (std::uint64_t p : {2u, 3u, 5u, 7u, 11u, 13u}) {
      const auto r = irreducible_dim_hook_family_check(n, p);
      EXPECT_TRUE(r.agrees()) << "n=" << n << " p=" << p;
      EXPECT_EQ(r.expected, static_cast<std::size_t>(n - 1 - (n % p == 0 ? 1 : 0)));
    }
  }
}

TEST(MatrixDump, Format) {
  std::ostringstream os;
  write_matrix_dump(os, gram_matrix(Partition{2, 1}), 3);
  EXPECT_EQ(os.str(), "2 3\n2 1\n1 2\n");
}

}  // namespace
}  // namespace specht
