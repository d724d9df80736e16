#pragma once

// Binomial coefficients and the chain of injections
//   rank -> bitmask -> strictly increasing map -> exponent tuple
// built on the combinatorial number system, plus the (i, j) grid ranking.

#include <cstdint>
#include <utility>
#include <vector>

#include "aks/modpoly.hpp"
#include "aks/natural.hpp"

namespace aks {

/// Exact binomial coefficient; 0 when y > x.
Natural binom(std::uint64_t x, std::uint64_t y);

/// x! (exact)
Natural factorial(std::uint64_t x);

/// (X + a)^b over Z/modulus via the binomial theorem.
ModPoly binomial_expand(const Natural& a, std::uint64_t b, std::uint64_t modulus);

/// Strictly increasing values f(1) < ... < f(l+1), 1-based bit positions.
struct SopFunction {
  std::vector<std::uint32_t> values;
  friend bool operator==(const SopFunction&, const SopFunction&) = default;
};

/// (e_0, ..., e_l)
struct ExponentTuple {
  std::vector<std::uint64_t> e;
  std::uint64_t sum() const;
  friend bool operator==(const ExponentTuple&, const ExponentTuple&) = default;
  friend auto operator<=>(const ExponentTuple&, const ExponentTuple&) = default;
};

std::uint64_t popcount(const Natural& x);

/// Unranks i in 1..binom(m, k) to a mask x < 2^m with k bits set, by the
/// recursion f_k^{m}(i) = f_k^{m-1}(i) for i <= binom(m-1, k) and
/// f_{k-1}^{m-1}(i - binom(m-1, k)) + 2^{m-1} otherwise, anchored at
/// f_0^0(1) = 0.
Natural cns_rank_to_subset(std::uint64_t k, std::uint64_t m, const Natural& i);

/// Positions of the set bits of x, lowest first, for x with popcount l+1
/// and bitlen(x) <= t + l.
SopFunction bits_to_sop(std::uint64_t t, std::uint64_t l, const Natural& x);

/// Gap lengths e_0 = f(1) - 1, e_i = f(i+1) - f(i) - 1.
ExponentTuple sop_to_exponents(std::uint64_t t, std::uint64_t l, const SopFunction& f);

/// sop_to_exponents(bits_to_sop(cns_rank_to_subset(l+1, t+l, i))) for
/// 1 <= i <= binom(t+l, l+1).
ExponentTuple sigma(std::uint64_t t, std::uint64_t l, const Natural& i);

struct GridPoint {
  std::uint64_t i;
  std::uint64_t j;
  friend bool operator==(const GridPoint&, const GridPoint&) = default;
};

/// l -> (floor((l-1)/(k+1)), (l-1) mod (k+1)) for 1 <= l <= (k+1)^2.
GridPoint grid_rank(std::uint64_t k, std::uint64_t l);

}  // namespace aks
