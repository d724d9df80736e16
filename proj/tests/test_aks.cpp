#include <gtest/gtest.h>

#include <nlohmann/json.hpp>
#include <set>

#include "aks/aks.hpp"
#include "aks/error.hpp"
#include "aks/numtheory.hpp"
#include "aks/trace_json.hpp"

using namespace aks;

namespace {

// (X + a)^n mod (X^r - 1, n) by repeated multiplication.
bool naive_congruence(std::uint64_t n, std::uint64_t r, std::uint64_t a) {
  std::vector<std::uint64_t> acc(r, 0);
  acc[0] = 1;
  for (std::uint64_t k = 0; k < n; ++k) {
    std::vector<std::uint64_t> next(r, 0);
    for (std::uint64_t i = 0; i < r; ++i) {
      next[(i + 1) % r] = (next[(i + 1) % r] + acc[i]) % n;
      next[i] = (next[i] + acc[i] * (a % n)) % n;
    }
    acc = std::move(next);
  }
  std::vector<std::uint64_t> rhs(r, 0);
  rhs[n % r] = 1;
  rhs[0] = (rhs[0] + a) % n;
  return acc == rhs;
}

}  // namespace

TEST(Aks, Verdicts) {
  const auto nine = aks_is_prime(9);
  EXPECT_EQ(nine.verdict, Verdict::composite);
  ASSERT_TRUE(nine.trace.perfect_power);
  EXPECT_EQ(nine.trace.perfect_power->base, 3);
  EXPECT_EQ(nine.trace.perfect_power->exponent, 2u);
  EXPECT_FALSE(nine.trace.r);

  const auto seven = aks_is_prime(7);
  EXPECT_EQ(seven.verdict, Verdict::prime);
  EXPECT_TRUE(seven.trace.small_n_shortcut);

  EXPECT_EQ(aks_is_prime(561).verdict, Verdict::composite);
  EXPECT_EQ(aks_is_prime(0).verdict, Verdict::composite);
  EXPECT_EQ(aks_is_prime(1).verdict, Verdict::composite);
  EXPECT_EQ(aks_is_prime(2).verdict, Verdict::prime);
  EXPECT_EQ(to_string(Verdict::prime), "PRIME");
  EXPECT_EQ(to_string(Verdict::composite), "COMPOSITE");
}

TEST(Aks, LargePrimesReachCongruences) {
  for (std::uint64_t n : {10007ull, 1000003ull}) {
    const auto res = aks_is_prime(from_u64(n));
    EXPECT_EQ(res.verdict, Verdict::prime) << n;
    ASSERT_TRUE(res.trace.ell);
    EXPECT_EQ(res.trace.congruence_checks.size(), res.trace.ell->get_ui() + 1);
  }
  // A semiprime with both factors above r gets past the gcd scan.
  const auto semi = aks_is_prime(from_u64(1000003ull * 1000033ull));
  EXPECT_EQ(semi.verdict, Verdict::composite);
  EXPECT_FALSE(semi.trace.gcd_hit);
  ASSERT_FALSE(semi.trace.congruence_checks.empty());
  EXPECT_FALSE(semi.trace.congruence_checks.back().ok);
}

TEST(Aks, TraceInvariantsAgainstTrialDivision) {
  for (std::uint64_t n = 0; n <= 3000; ++n) {
    const auto res = aks_is_prime(from_u64(n));
    const AksTrace& t = res.trace;
    ASSERT_EQ(res.verdict == Verdict::prime, is_prime_trial(n)) << n;
    ASSERT_EQ(res.verdict, t.verdict);
    if (t.perfect_power) {
      ASSERT_FALSE(t.r);
      continue;
    }
    ASSERT_TRUE(t.r && t.ord_r_n);
    const std::uint64_t r = t.r->get_ui();
    ASSERT_EQ(mult_order(from_u64(n), r), t.ord_r_n->get_ui());
    ASSERT_GT(t.ord_r_n->get_ui(), t.order_threshold());
    ASSERT_EQ(t.order_threshold(), bitlen(n) * bitlen(n));
    ASSERT_EQ(t.log_threshold(), (bitlen(n) - 1) * (bitlen(n) - 1));
    if (t.gcd_hit) {
      ASSERT_EQ(res.verdict, Verdict::composite);
      ASSERT_EQ(gcd_u64(n, t.gcd_hit->a.get_ui()), t.gcd_hit->g.get_ui());
      ASSERT_FALSE(t.ell);
      continue;
    }
    if (t.small_n_shortcut) {
      ASSERT_LE(n, r);
      ASSERT_FALSE(t.ell);
      continue;
    }
    ASSERT_TRUE(t.ell);
    ASSERT_EQ(t.ell->get_ui(), isqrt(totient(r)) * (bitlen(n) - 1));
    for (std::size_t i = 0; i < t.congruence_checks.size(); ++i) {
      ASSERT_EQ(t.congruence_checks[i].a, i);
      ASSERT_EQ(t.congruence_checks[i].ok, i + 1 < t.congruence_checks.size() || res.verdict == Verdict::prime);
    }
  }
}

TEST(Aks, CheckCongruence) {
  EXPECT_TRUE(check_congruence(15, 4, 0));
  EXPECT_TRUE(check_congruence(7, 5, 1));
  EXPECT_TRUE(naive_congruence(7, 5, 1));
  bool some_false = false;
  for (std::uint64_t a = 1; a <= 5; ++a) {
    EXPECT_EQ(check_congruence(6, 5, a), naive_congruence(6, 5, a)) << a;
    some_false |= !check_congruence(6, 5, a);
  }
  EXPECT_TRUE(some_false);
  for (std::uint64_t n = 2; n <= 60; ++n) {
    for (std::uint64_t r = 2; r <= 7; ++r) {
      for (std::uint64_t a = 0; a <= 4; ++a) ASSERT_EQ(check_congruence(n, r, a), naive_congruence(n, r, a));
    }
  }
  EXPECT_THROW(check_congruence(7, 1, 1), PreconditionError);
  EXPECT_THROW(check_congruence(1, 3, 1), PreconditionError);
}

TEST(Aks, NoBigIntegerCongruenceStage) {
  // 2^89 - 1 is prime, so the run reaches the congruences.
  EXPECT_THROW(aks_is_prime(pow2(89) - 1), OutOfRangeError);
  // Composites with a small factor still resolve.
  EXPECT_EQ(aks_is_prime(pow2(89) + 1).verdict, Verdict::composite);
}

TEST(TraceJson, RoundTrip) {
  for (std::uint64_t n : {0ull, 9ull, 7ull, 561ull, 1000003ull, 1000003ull * 1000033ull}) {
    const AksTrace t = aks_is_prime(from_u64(n)).trace;
    EXPECT_EQ(trace_from_json(trace_to_json(t)), t) << n;
    EXPECT_EQ(trace_from_json(trace_to_json(t, -1)), t) << n;
  }
}

TEST(TraceJson, Layout) {
  const auto j = nlohmann::json::parse(trace_to_json(aks_is_prime(9).trace));
  const std::set<std::string> keys{"schema_version", "n", "perfect_power", "r", "ord_r_n", "gcd_hit",
                                   "small_n_shortcut", "ell", "congruence_checks", "verdict"};
  std::set<std::string> got;
  for (const auto& [k, v] : j.items()) got.insert(k);
  EXPECT_EQ(got, keys);
  EXPECT_EQ(j["schema_version"], "1");
  EXPECT_EQ(j["n"], "9");
  EXPECT_EQ(j["perfect_power"]["base"], "3");
  EXPECT_TRUE(j["r"].is_null());
  EXPECT_TRUE(j["gcd_hit"].is_null());
  EXPECT_TRUE(j["ell"].is_null());
  EXPECT_EQ(j["verdict"], "COMPOSITE");
  const auto big = nlohmann::json::parse(trace_to_json(aks_is_prime(pow2(100)).trace));
  EXPECT_EQ(big["n"], "1267650600228229401496703205376");
}

TEST(TraceJson, RejectsBadDocuments) {
  auto doc = nlohmann::json::parse(trace_to_json(aks_is_prime(7).trace));
  EXPECT_THROW(trace_from_json("{"), PreconditionError);
  EXPECT_THROW(trace_from_json("[]"), PreconditionError);
  auto v2 = doc;
  v2["schema_version"] = "2";
  EXPECT_THROW(trace_from_json(v2.dump()), PreconditionError);
  auto numeric = doc;
  numeric["n"] = 7;
  EXPECT_THROW(trace_from_json(numeric.dump()), PreconditionError);
  auto negative = doc;
  negative["n"] = "-7";
  EXPECT_THROW(trace_from_json(negative.dump()), PreconditionError);
  auto verdict = doc;
  verdict["verdict"] = "MAYBE";
  EXPECT_THROW(trace_from_json(verdict.dump()), PreconditionError);
  auto missing = doc;
  missing.erase("ell");
  EXPECT_THROW(trace_from_json(missing.dump()), PreconditionError);
}
