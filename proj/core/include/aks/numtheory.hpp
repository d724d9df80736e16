#pragma once

// Integer-side primitives used by the primality test and its lemma checks.

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "aks/natural.hpp"

namespace aks {

struct Bezout {
  Natural g;
  Integer u;
  Integer v;
};

/// Extended Euclid: g = gcd(x, y) = u*x + v*y. Throws ZeroDivisorError
/// when both inputs are zero.
Bezout xgcd(const Natural& x, const Natural& y);

std::uint64_t gcd_u64(std::uint64_t a, std::uint64_t b);

/// Largest k with p^k | x. By convention nu_p(0) = 0.
std::uint64_t padic_valuation(const Natural& p, const Natural& x);

/// nu_p(n!) computed as sum_{i>=1} floor(n / p^i).
std::uint64_t legendre_valuation(std::uint64_t p, std::uint64_t n);

/// lcm(1, ..., m) by the fold lcm(a, b) = a*b / gcd(a, b). Requires m >= 1.
Natural lcm_range(std::uint64_t m);

/// Euler's phi by direct count of 1 <= i <= r with gcd(i, r) = 1.
std::uint64_t totient(std::uint64_t r);

/// Least i > 0 with y^i = 1 (mod r), found by iterating multiplication.
/// Throws PreconditionError when r < 2 or gcd(y, r) != 1.
std::uint64_t mult_order(const Natural& y, std::uint64_t r);
std::uint64_t mult_order(std::uint64_t y, std::uint64_t r);

struct PerfectPower {
  Natural base;
  std::uint64_t exponent;
};

/// A witness a^b = x with b >= 2, or nullopt. Values x <= 1 count as
/// perfect powers and are reported as (x, 2).
std::optional<PerfectPower> is_perfect_power(const Natural& x);

struct OrderWitness {
  std::uint64_t r;
  std::uint64_t order;
};

/// Smallest r >= 2 coprime to n with ord_r(n) > bitlen(n)^2. Throws
/// PropertyViolation if no such r exists below 2*bitlen(n)^6.
OrderWitness find_r(const Natural& n);

/// 2 * bitlen(n)^6, the guaranteed ceiling for find_r.
Natural find_r_bound(const Natural& n);

struct PrimePower {
  Natural prime;
  std::uint64_t multiplicity;

  friend bool operator==(const PrimePower&, const PrimePower&) = default;
};

using Factorization = std::vector<PrimePower>;

/// Ascending trial division up to sqrt(n). Requires n >= 2.
Factorization trial_factorize(const Natural& n);

/// Primality by trial division; the ground-truth oracle.
bool is_prime_trial(const Natural& n);
bool is_prime_trial(std::uint64_t n);

/// Floor of the square root, by binary search.
std::uint64_t isqrt(std::uint64_t x);

}  // namespace aks
