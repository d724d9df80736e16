#include <gtest/gtest.h>

#include <set>

#include "aks/combinat.hpp"
#include "aks/error.hpp"

using namespace aks;

namespace {

// Pascal's rule, independent of the closed form.
Natural pascal(std::uint64_t x, std::uint64_t y) {
  std::vector<Natural> row{1};
  for (std::uint64_t i = 1; i <= x; ++i) {
    std::vector<Natural> next(i + 1, 1);
    for (std::uint64_t j = 1; j < i; ++j) next[j] = row[j - 1] + row[j];
    row = std::move(next);
  }
  return y <= x ? row[y] : Natural(0);
}

}  // namespace

TEST(Binom, Examples) {
  EXPECT_EQ(binom(5, 2), 10);
  EXPECT_EQ(binom(0, 0), 1);
  EXPECT_EQ(binom(3, 4), 0);
  EXPECT_EQ(binom(100, 50), Natural("100891344545564193334812497256"));
  for (std::uint64_t x = 0; x <= 40; ++x) {
    for (std::uint64_t y = 0; y <= x + 1; ++y) ASSERT_EQ(binom(x, y), pascal(x, y)) << x << "," << y;
  }
  EXPECT_EQ(factorial(0), 1);
  EXPECT_EQ(factorial(20), Natural("2432902008176640000"));
}

TEST(BinomialExpand, Examples) {
  EXPECT_EQ(binomial_expand(1, 2, 7), ModPoly(7, {1, 2, 1}));
  EXPECT_EQ(binomial_expand(0, 3, 7), ModPoly::monomial(7, 1, 3));
  EXPECT_EQ(binomial_expand(2, 0, 7), ModPoly::constant(7, 1));
  // Frobenius: (X + a)^p = X^p + a over Z/p.
  EXPECT_EQ(binomial_expand(3, 5, 5), ModPoly(5, {3, 0, 0, 0, 0, 1}));
  ModPoly acc = ModPoly::constant(12, 1);
  for (int i = 0; i < 9; ++i) acc = acc * ModPoly::linear(12, 5);
  EXPECT_EQ(binomial_expand(5, 9, 12), acc);
  EXPECT_EQ(binomial_expand(Natural("100000000000000000007"), 2, 10), ModPoly(10, {9, 4, 1}));
  EXPECT_THROW(binomial_expand(1, 2, 1), PreconditionError);
}

TEST(Cns, Examples) {
  EXPECT_EQ(cns_rank_to_subset(2, 3, 1), 3);
  EXPECT_EQ(cns_rank_to_subset(2, 3, 2), 5);
  EXPECT_EQ(cns_rank_to_subset(2, 3, 3), 6);
  EXPECT_EQ(cns_rank_to_subset(0, 0, 1), 0);
  EXPECT_EQ(cns_rank_to_subset(0, 5, 1), 0);
  EXPECT_EQ(cns_rank_to_subset(4, 4, 1), 15);
  EXPECT_THROW(cns_rank_to_subset(2, 3, 0), OutOfRangeError);
  EXPECT_THROW(cns_rank_to_subset(2, 3, 4), OutOfRangeError);
  EXPECT_THROW(cns_rank_to_subset(4, 3, 1), OutOfRangeError);
}

TEST(Cns, BijectionOntoFixedWeightMasks) {
  for (std::uint64_t m = 0; m <= 12; ++m) {
    for (std::uint64_t k = 0; k <= m; ++k) {
      std::set<unsigned long> seen;
      const std::uint64_t count = binom(m, k).get_ui();
      Natural prev = -1;
      for (std::uint64_t i = 1; i <= count; ++i) {
        const Natural x = cns_rank_to_subset(k, m, i);
        ASSERT_EQ(popcount(x), k);
        ASSERT_LE(bitlen(x), m);
        ASSERT_GT(x, prev);  // colex order is numeric order
        prev = x;
        seen.insert(x.get_ui());
      }
      ASSERT_EQ(seen.size(), count);
    }
  }
}

TEST(Sop, Examples) {
  EXPECT_EQ(bits_to_sop(2, 1, 5).values, (std::vector<std::uint32_t>{1, 3}));
  EXPECT_EQ(sop_to_exponents(2, 1, {{1, 3}}).e, (std::vector<std::uint64_t>{0, 1}));
  EXPECT_EQ(sop_to_exponents(3, 1, {{2, 4}}).e, (std::vector<std::uint64_t>{1, 1}));
  EXPECT_THROW(bits_to_sop(2, 1, 7), PreconditionError);
  EXPECT_THROW(bits_to_sop(2, 1, 9), PreconditionError);
  EXPECT_THROW(sop_to_exponents(2, 1, {{3, 1}}), PreconditionError);
  EXPECT_THROW(sop_to_exponents(2, 1, {{1, 4}}), PreconditionError);
  EXPECT_THROW(sop_to_exponents(2, 1, {{1}}), PreconditionError);
}

TEST(Sigma, Examples) {
  // t = 2, l = 1: masks 3, 5, 6 over three bits.
  EXPECT_EQ(sigma(2, 1, 1).e, (std::vector<std::uint64_t>{0, 0}));
  EXPECT_EQ(sigma(2, 1, 2).e, (std::vector<std::uint64_t>{0, 1}));
  EXPECT_EQ(sigma(2, 1, 3).e, (std::vector<std::uint64_t>{1, 0}));
  EXPECT_THROW(sigma(0, 1, 1), OutOfRangeError);
  EXPECT_THROW(sigma(2, 1, 4), OutOfRangeError);
}

TEST(Sigma, InjectiveWithBoundedSum) {
  for (std::uint64_t t = 1; t <= 7; ++t) {
    for (std::uint64_t l = 0; l <= 6; ++l) {
      std::set<ExponentTuple> seen;
      const std::uint64_t count = binom(t + l, l + 1).get_ui();
      for (std::uint64_t i = 1; i <= count; ++i) {
        const ExponentTuple e = sigma(t, l, i);
        ASSERT_EQ(e.e.size(), l + 1);
        ASSERT_LE(e.sum(), t - 1);
        ASSERT_TRUE(seen.insert(e).second);
      }
    }
  }
}

TEST(Grid, Examples) {
  EXPECT_EQ(grid_rank(2, 1), (GridPoint{0, 0}));
  EXPECT_EQ(grid_rank(2, 4), (GridPoint{1, 0}));
  EXPECT_EQ(grid_rank(2, 9), (GridPoint{2, 2}));
  EXPECT_EQ(grid_rank(0, 1), (GridPoint{0, 0}));
  EXPECT_THROW(grid_rank(2, 0), OutOfRangeError);
  EXPECT_THROW(grid_rank(2, 10), OutOfRangeError);
  EXPECT_NO_THROW(grid_rank(~0ull >> 1, 1));
}
