#include <gtest/gtest.h>

#include <random>

#include "aks/error.hpp"
#include "aks/modpoly.hpp"

using namespace aks;

namespace {

ModPoly P(std::uint64_t m, std::vector<Residue> c) { return ModPoly(m, std::move(c)); }

ModPoly random_poly(std::mt19937_64& rng, std::uint64_t m, std::size_t deg) {
  std::vector<Residue> c(deg + 1);
  for (auto& x : c) x = rng() % m;
  c[deg] = 1 + rng() % (m - 1);
  return ModPoly(m, std::move(c));
}

// Per-term mulmod with no accumulation tricks.
std::vector<Residue> reference_product(const ModPoly& a, const ModPoly& b) {
  const Zmod z{a.modulus()};
  std::vector<Residue> c(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i) {
    for (std::size_t j = 0; j < b.size(); ++j) {
      c[i + j] = static_cast<Residue>((static_cast<unsigned __int128>(a[i]) * b[j] + c[i + j]) % a.modulus());
    }
  }
  return c;
}

}  // namespace

TEST(ModPoly, NormalizationAndDegree) {
  const ModPoly zero(7);
  EXPECT_TRUE(zero.is_zero());
  EXPECT_FALSE(zero.degree());
  EXPECT_EQ(P(7, {1, 2, 0, 0}).degree(), Degree{1});
  EXPECT_EQ(P(7, {8, 14}), P(7, {1}));
  EXPECT_TRUE(degree_less(zero.degree(), Degree{0}));
  EXPECT_FALSE(degree_less(Degree{0}, zero.degree()));
}

TEST(ModPoly, Arithmetic) {
  const ModPoly f = P(5, {1, 2, 3});
  EXPECT_EQ(f + ModPoly(5), f);
  EXPECT_EQ(f - f, ModPoly(5));
  EXPECT_EQ(ModPoly::linear(2, 1) * ModPoly::linear(2, 1), P(2, {1, 0, 1}));
  EXPECT_EQ(compose_xk(ModPoly::monomial(5, 1, 2), 3), ModPoly::monomial(5, 1, 6));
  EXPECT_EQ(compose_xk(f, 0), ModPoly::constant(5, 1));
  EXPECT_EQ(scale(f, 2), P(5, {2, 4, 1}));
  EXPECT_THROW(f + P(7, {1}), ModulusMismatchError);
  EXPECT_THROW(f * P(7, {1}), ModulusMismatchError);
}

TEST(ModPoly, ConvolutionPathsAgree) {
  std::mt19937_64 rng(7);
  const std::uint64_t moduli[] = {2, 97, 2147483647, 4294967291ull, (1ull << 40) + 15, 18446744073709551557ull};
  for (std::uint64_t m : moduli) {
    for (int trial = 0; trial < 10; ++trial) {
      const ModPoly a = random_poly(rng, m, rng() % 300);
      const ModPoly b = random_poly(rng, m, rng() % 300);
      ASSERT_EQ(a * b, ModPoly(m, reference_product(a, b))) << "m=" << m;
      ASSERT_EQ(a * a, ModPoly(m, reference_product(a, a))) << "m=" << m;
    }
  }
}

TEST(LongDiv, Examples) {
  const DivMod d = poly_long_div(P(5, {4, 0, 1}), P(5, {4, 1}));
  EXPECT_EQ(d.quotient, ModPoly::linear(5, 1));
  EXPECT_TRUE(d.remainder.is_zero());
  const DivMod small = poly_long_div(P(5, {1, 2}), P(5, {1, 1, 1}));
  EXPECT_TRUE(small.quotient.is_zero());
  EXPECT_EQ(small.remainder, P(5, {1, 2}));
  const ModPoly dividend = P(5, {1, 2, 0, 1});
  const ModPoly divisor = ModPoly::linear(5, 1);
  const DivMod e = poly_long_div(dividend, divisor);
  EXPECT_EQ(divisor * e.quotient + e.remainder, dividend);
  EXPECT_EQ(e.quotient, P(5, {3, 4, 1}));
  EXPECT_EQ(e.remainder, ModPoly::constant(5, 3));
  EXPECT_THROW(poly_long_div(dividend, ModPoly(5)), ZeroDivisorError);
}

TEST(LongDiv, RandomIdentity) {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 200; ++trial) {
    const std::uint64_t m = trial % 2 ? 101 : 2147483647;
    const ModPoly a = random_poly(rng, m, rng() % 40);
    const ModPoly b = random_poly(rng, m, rng() % 20);
    const DivMod d = poly_long_div(a, b);
    ASSERT_EQ(b * d.quotient + d.remainder, a);
    ASSERT_TRUE(degree_less(d.remainder.degree(), b.degree()));
  }
}

TEST(ReduceByXrMinusOne, MatchesLongDivision) {
  std::mt19937_64 rng(3);
  for (std::uint64_t r = 1; r < 20; ++r) {
    const ModPoly f = random_poly(rng, 15, rng() % 60);
    const ModPoly g = ModPoly::x_pow_minus_one(15, r);
    EXPECT_EQ(reduce(f, g), poly_long_div(f, g).remainder);
    EXPECT_EQ(g.as_x_pow_minus_one(), r);
  }
}

TEST(Xgcd, Examples) {
  const ModPoly f = P(5, {3, 1});  // X + 3
  const PolyBezout z = poly_xgcd(scale(f, 2), ModPoly(5));
  EXPECT_EQ(z.h, f);
  const PolyBezout b = poly_xgcd(P(5, {4, 0, 1}), P(5, {0, 4, 1}));
  EXPECT_EQ(b.h, P(5, {4, 1}));
  EXPECT_EQ(b.u * P(5, {4, 0, 1}) + b.v * P(5, {0, 4, 1}), b.h);
  EXPECT_EQ(poly_gcd(ModPoly::x_pow_minus_one(7, 12), ModPoly::x_pow_minus_one(7, 18)), ModPoly::x_pow_minus_one(7, 6));
  EXPECT_THROW(poly_xgcd(ModPoly(5), ModPoly(5)), ZeroDivisorError);
}

TEST(Derivative, Examples) {
  EXPECT_TRUE(poly_derivative(ModPoly::constant(5, 3)).is_zero());
  EXPECT_EQ(poly_derivative(P(5, {0, 1, 0, 1})), P(5, {1, 0, 3}));
  EXPECT_TRUE(poly_derivative(ModPoly::monomial(5, 1, 5)).is_zero());
}

TEST(Powmod, Examples) {
  const ModPoly g = ModPoly::x_pow_minus_one(3, 2);
  EXPECT_TRUE(powmod(P(3, {1, 2, 1}), std::uint64_t{0}, g).is_one());
  // (X+1)^3 = X^3 + 3X^2 + 3X + 1 = X^3 + 1 over Z/3, and X^3 = X mod X^2 - 1.
  EXPECT_EQ(powmod(ModPoly::linear(3, 1), std::uint64_t{3}, g), ModPoly::linear(3, 1));
  for (std::uint64_t p : {5, 7, 11, 13}) {
    for (std::size_t r = 1; r < 9; ++r) {
      EXPECT_EQ(powmod(ModPoly::monomial(p, 1, 1), p, ModPoly::x_pow_minus_one(p, r)),
                reduce(ModPoly::monomial(p, 1, p % r), ModPoly::x_pow_minus_one(p, r)));
    }
  }
}

TEST(Powmod, CompositeModulusAndNonUnitLead) {
  const ModPoly g = ModPoly::x_pow_minus_one(15, 4);
  ModPoly naive = ModPoly::constant(15, 1);
  for (int i = 0; i < 37; ++i) naive = reduce(naive * ModPoly::linear(15, 2), g);
  EXPECT_EQ(powmod(ModPoly::linear(15, 2), std::uint64_t{37}, g), naive);
  EXPECT_EQ(powmod(ModPoly::linear(15, 2), Natural(37), g), naive);
  EXPECT_THROW(powmod(ModPoly::linear(15, 2), std::uint64_t{3}, P(15, {1, 3})), PreconditionError);
}

TEST(Evaluate, Horner) {
  std::mt19937_64 rng(5);
  const ModPoly f = random_poly(rng, 101, 9);
  for (Residue x = 0; x < 101; ++x) {
    std::uint64_t sum = 0, power = 1;
    for (std::size_t i = 0; i < f.size(); ++i) {
      sum = (sum + f[i] * power) % 101;
      power = power * x % 101;
    }
    EXPECT_EQ(evaluate(f, x), sum);
  }
}

TEST(Zmod, InverseAndPow) {
  const Zmod z{18446744073709551557ull};
  for (Residue a : {2ull, 3ull, 123456789012345ull}) {
    EXPECT_EQ(z.mul(a, *z.inverse(a)), 1u);
    EXPECT_EQ(z.pow(a, z.m - 1), 1u);
  }
  EXPECT_FALSE(Zmod{12}.inverse(4));
  EXPECT_THROW(Zmod{12}.inverse_or_throw(4, "test"), PreconditionError);
}

TEST(ModPoly, ToString) {
  EXPECT_EQ(P(5, {3, 0, 1}).to_string(), "X^2 + 3");
  EXPECT_EQ(ModPoly(5).to_string(), "0");
}
