#include <gtest/gtest.h>

#include <numeric>
#include <set>

#include "aks/error.hpp"
#include "aks/numtheory.hpp"

using namespace aks;

namespace {

std::uint64_t brute_gcd(std::uint64_t x, std::uint64_t y) {
  std::uint64_t best = 0;
  for (std::uint64_t d = 1; d <= std::max(x, y); ++d) {
    if (x % d == 0 && y % d == 0) best = d;
  }
  return best;
}

std::uint64_t strip(std::uint64_t p, std::uint64_t x) {
  std::uint64_t k = 0;
  while (x != 0 && x % p == 0) {
    x /= p;
    ++k;
  }
  return k;
}

std::uint64_t order_by_iteration(std::uint64_t y, std::uint64_t r) {
  std::uint64_t acc = y % r;
  for (std::uint64_t i = 1;; ++i) {
    if (acc == 1) return i;
    acc = acc * y % r;
  }
}

}  // namespace

TEST(Natural, BitlenMatchesCeilLog) {
  EXPECT_EQ(bitlen(Natural(0)), 0u);
  for (std::uint64_t x = 1; x < 5000; ++x) {
    std::size_t expected = 0;
    while ((std::uint64_t{1} << expected) < x + 1) ++expected;
    EXPECT_EQ(bitlen(from_u64(x)), expected) << x;
    EXPECT_EQ(bitlen(x), expected) << x;
  }
}

TEST(Natural, Parse) {
  EXPECT_EQ(*parse_natural("12345678901234567890123"), Natural("12345678901234567890123"));
  EXPECT_EQ(*parse_natural("0x1F"), 31);
  EXPECT_EQ(*parse_natural("0"), 0);
  EXPECT_FALSE(parse_natural("abc"));
  EXPECT_FALSE(parse_natural(""));
  EXPECT_FALSE(parse_natural("-7"));
  EXPECT_FALSE(parse_natural("+7"));
  EXPECT_FALSE(parse_natural(" 7"));
  EXPECT_FALSE(parse_natural("0x"));
  EXPECT_FALSE(parse_natural("12a"));
}

TEST(Xgcd, Examples) {
  EXPECT_EQ(xgcd(12, 0).g, 12);
  const Bezout b = xgcd(12, 8);
  EXPECT_EQ(b.g, brute_gcd(12, 8));
  EXPECT_EQ(b.u * 12 + b.v * 8, 4);
  for (std::uint64_t r = 1; r < 97; ++r) EXPECT_EQ(xgcd(from_u64(r), 97).g, 1);
  EXPECT_THROW(xgcd(0, 0), ZeroDivisorError);
}

TEST(Xgcd, BezoutInvariantsExhaustive) {
  for (std::uint64_t x = 0; x <= 60; ++x) {
    for (std::uint64_t y = 0; y <= 60; ++y) {
      if (x == 0 && y == 0) continue;
      const Bezout b = xgcd(from_u64(x), from_u64(y));
      ASSERT_EQ(b.g, brute_gcd(x, y)) << x << "," << y;
      ASSERT_EQ(b.u * from_u64(x) + b.v * from_u64(y), b.g) << x << "," << y;
    }
  }
}

TEST(Valuation, Examples) {
  EXPECT_EQ(padic_valuation(2, 24), strip(2, 24));
  EXPECT_EQ(padic_valuation(2, 24), 3u);
  EXPECT_EQ(padic_valuation(5, 7), 0u);
  EXPECT_EQ(padic_valuation(5, 0), 0u);
  EXPECT_EQ(padic_valuation(3, pow(Natural(3), 200) * 2), 200u);
}

TEST(Valuation, Multiplicative) {
  for (std::uint64_t p : {2, 3, 5, 7}) {
    for (std::uint64_t n = 1; n <= 60; ++n) {
      for (std::uint64_t m = 1; m <= 60; ++m) {
        ASSERT_EQ(padic_valuation(from_u64(p), from_u64(n * m)),
                  padic_valuation(from_u64(p), from_u64(n)) + padic_valuation(from_u64(p), from_u64(m)));
      }
    }
  }
}

TEST(Legendre, Examples) {
  std::uint64_t sum = 0;
  for (std::uint64_t i = 1; i <= 10; ++i) sum += strip(2, i);
  EXPECT_EQ(legendre_valuation(2, 10), sum);
  EXPECT_EQ(legendre_valuation(2, 10), 8u);
  EXPECT_EQ(legendre_valuation(3, 2), 0u);
  EXPECT_EQ(legendre_valuation(2, 4), 4 / 2 + 4 / 4);
}

TEST(LcmRange, Examples) {
  EXPECT_EQ(lcm_range(1), 1);
  std::uint64_t fold = 1;
  for (std::uint64_t i = 1; i <= 10; ++i) fold = std::lcm(fold, i);
  EXPECT_EQ(lcm_range(10), fold);
  EXPECT_EQ(lcm_range(10), 2520);
  EXPECT_EQ(lcm_range(8), 840);
  EXPECT_GE(lcm_range(8), pow2(4));
}

TEST(LcmRange, DividesEverything) {
  const Natural l = lcm_range(300);
  for (unsigned long i = 1; i <= 300; ++i) EXPECT_TRUE(mpz_divisible_ui_p(l.get_mpz_t(), i));
  EXPECT_FALSE(mpz_divisible_ui_p(l.get_mpz_t(), 307));  // next prime not included
}

TEST(Totient, Examples) {
  EXPECT_EQ(totient(1), 1u);
  std::uint64_t count = 0;
  for (std::uint64_t i = 1; i <= 12; ++i) count += std::gcd(i, std::uint64_t{12}) == 1;
  EXPECT_EQ(totient(12), count);
  EXPECT_EQ(totient(7), 6u);
  for (std::uint64_t p : {11, 13, 101, 997}) EXPECT_EQ(totient(p), p - 1);
}

TEST(MultOrder, Examples) {
  EXPECT_EQ(mult_order(std::uint64_t{2}, 7), order_by_iteration(2, 7));
  EXPECT_EQ(mult_order(std::uint64_t{2}, 7), 3u);
  for (std::uint64_t r = 2; r < 50; ++r) EXPECT_EQ(mult_order(std::uint64_t{1}, r), 1u);
  EXPECT_THROW(mult_order(std::uint64_t{2}, 4), PreconditionError);
  EXPECT_EQ(mult_order(Natural("1000000000000000000000007"), 13),
            order_by_iteration(to_u64(Natural(Natural("1000000000000000000000007") % 13)), 13));
}

TEST(PerfectPower, Examples) {
  const auto one = is_perfect_power(1);
  ASSERT_TRUE(one);
  EXPECT_EQ(one->base, 1);
  EXPECT_TRUE(is_perfect_power(0));
  const auto w = is_perfect_power(36);
  ASSERT_TRUE(w);
  EXPECT_EQ(pow(w->base, w->exponent), 36);
  EXPECT_EQ(w->base, 6);
  EXPECT_EQ(w->exponent, 2u);
  EXPECT_FALSE(is_perfect_power(12));
  const Natural big = pow(Natural("123456789"), 7);
  const auto bw = is_perfect_power(big);
  ASSERT_TRUE(bw);
  EXPECT_EQ(pow(bw->base, bw->exponent), big);
  EXPECT_FALSE(is_perfect_power(big + 1));
}

TEST(PerfectPower, AgreesWithExhaustiveSearch) {
  constexpr std::uint64_t kMax = 5000;
  std::set<std::uint64_t> powers;
  for (std::uint64_t a = 2; a * a <= kMax; ++a) {
    for (std::uint64_t v = a * a; v <= kMax; v *= a) powers.insert(v);
  }
  for (std::uint64_t x = 2; x <= kMax; ++x) {
    const auto w = is_perfect_power(from_u64(x));
    ASSERT_EQ(w.has_value(), powers.count(x) == 1) << x;
    if (w) {
      EXPECT_GE(w->exponent, 2u);
      EXPECT_EQ(pow(w->base, w->exponent), x);
    }
  }
}

TEST(FindR, Examples) {
  const OrderWitness two = find_r(2);
  EXPECT_LE(two.r, 128u);
  EXPECT_EQ(two.order, order_by_iteration(2, two.r));
  EXPECT_GT(two.order, 4u);
  const OrderWitness three = find_r(3);
  EXPECT_GT(order_by_iteration(3, three.r), 4u);
  const OrderWitness big = find_r(7919);
  EXPECT_LE(big.r, 2u * 13 * 13 * 13 * 13 * 13 * 13);
  EXPECT_GT(order_by_iteration(7919 % big.r, big.r), 13u * 13);
  EXPECT_EQ(find_r_bound(7919), 2 * pow(Natural(13), 6));
}

TEST(FindR, SmallestQualifyingR) {
  for (std::uint64_t n = 2; n <= 400; ++n) {
    const OrderWitness w = find_r(from_u64(n));
    const std::uint64_t b = bitlen(n);
    for (std::uint64_t r = 2; r < w.r; ++r) {
      if (std::gcd(n, r) != 1) continue;
      ASSERT_LE(order_by_iteration(n % r, r), b * b) << "n=" << n << " r=" << r;
    }
  }
}

TEST(TrialFactorize, Examples) {
  EXPECT_EQ(trial_factorize(2), (Factorization{{2, 1}}));
  EXPECT_EQ(trial_factorize(60), (Factorization{{2, 2}, {3, 1}, {5, 1}}));
  EXPECT_EQ(trial_factorize(561), (Factorization{{3, 1}, {11, 1}, {17, 1}}));
  EXPECT_THROW(trial_factorize(1), PreconditionError);
}

TEST(TrialFactorize, ProductAndPrimality) {
  for (std::uint64_t n = 2; n < 3000; ++n) {
    Natural product = 1;
    for (const auto& pp : trial_factorize(from_u64(n))) {
      ASSERT_TRUE(is_prime_trial(pp.prime));
      product *= pow(pp.prime, pp.multiplicity);
    }
    ASSERT_EQ(product, n);
  }
}

TEST(Isqrt, Floors) {
  for (std::uint64_t x = 0; x < 10000; ++x) {
    const std::uint64_t s = isqrt(x);
    ASSERT_LE(s * s, x);
    ASSERT_GT((s + 1) * (s + 1), x);
  }
  EXPECT_EQ(isqrt(~std::uint64_t{0}), 0xFFFFFFFFull);
}
