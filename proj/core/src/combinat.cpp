#include "aks/combinat.hpp"

#include <numeric>
#include <string>

#include "aks/error.hpp"

namespace aks {

Natural binom(std::uint64_t x, std::uint64_t y) {
  if (y > x) return 0;
  y = std::min(y, x - y);
  Natural acc = 1;
  // After step i the accumulator is binom(x - y + i, i), so each division is exact.
  for (std::uint64_t i = 1; i <= y; ++i) {
    acc *= from_u64(x - y + i);
    mpz_divexact_ui(acc.get_mpz_t(), acc.get_mpz_t(), i);
  }
  return acc;
}

Natural factorial(std::uint64_t x) {
  Natural acc = 1;
  for (std::uint64_t i = 2; i <= x; ++i) acc *= from_u64(i);
  return acc;
}

ModPoly binomial_expand(const Natural& a, std::uint64_t b, std::uint64_t modulus) {
  if (modulus < 2) throw PreconditionError("binomial_expand: modulus must be >= 2");
  const Natural m = from_u64(modulus);
  const Natural a_mod = a % m;
  std::vector<Residue> coeffs(b + 1);
  Natural a_pow;
  for (std::uint64_t i = 0; i <= b; ++i) {
    mpz_powm_ui(a_pow.get_mpz_t(), a_mod.get_mpz_t(), b - i, m.get_mpz_t());
    const Natural c = binom(b, i) * a_pow % m;
    coeffs[i] = to_u64(c);
  }
  return ModPoly(modulus, std::move(coeffs));
}

std::uint64_t ExponentTuple::sum() const { return std::accumulate(e.begin(), e.end(), std::uint64_t{0}); }

std::uint64_t popcount(const Natural& x) { return mpz_popcount(x.get_mpz_t()); }

Natural cns_rank_to_subset(std::uint64_t k, std::uint64_t m, const Natural& i) {
  if (k > m) throw OutOfRangeError("cns_rank_to_subset: requires k <= m");
  if (i < 1 || i > binom(m, k)) {
    throw OutOfRangeError("cns_rank_to_subset: rank " + to_string(i) + " outside 1..binom(" +
                          std::to_string(m) + ", " + std::to_string(k) + ")");
  }
  Natural rank = i;
  Natural mask = 0;
  // Unroll the recursion from the top bit down to f_0^0(1) = 0, keeping
  // lower = binom(top - 1, k) up to date with exact small multiplications.
  Natural lower = m > 0 ? binom(m - 1, k) : Natural(0);
  for (std::uint64_t top = m; top > 0; --top) {
    const std::uint64_t n = top - 1;
    if (rank <= lower) {
      // binom(n - 1, k) = binom(n, k) * (n - k) / n
      if (n > 0 && sgn(lower) != 0) {
        lower *= from_u64(n - k);
        mpz_divexact_ui(lower.get_mpz_t(), lower.get_mpz_t(), n);
      }
      continue;
    }
    rank -= lower;
    mpz_setbit(mask.get_mpz_t(), n);
    // binom(n - 1, k - 1) = binom(n, k) * k / n
    if (n > 0 && sgn(lower) != 0) {
      lower *= from_u64(k);
      mpz_divexact_ui(lower.get_mpz_t(), lower.get_mpz_t(), n);
    }
    --k;
  }
  if (k != 0 || rank != 1) throw PropertyViolation("cns_rank_to_subset: recursion did not reach f_0^0(1)");
  return mask;
}

SopFunction bits_to_sop(std::uint64_t t, std::uint64_t l, const Natural& x) {
  if (sgn(x) < 0 || popcount(x) != l + 1) {
    throw PreconditionError("bits_to_sop: mask must have exactly l + 1 bits set");
  }
  if (bitlen(x) > t + l) throw PreconditionError("bits_to_sop: mask wider than t + l bits");
  SopFunction f;
  f.values.reserve(l + 1);
  mp_bitcnt_t pos = 0;
  for (std::uint64_t n = 0; n <= l; ++n) {
    pos = mpz_scan1(x.get_mpz_t(), pos);
    f.values.push_back(static_cast<std::uint32_t>(pos + 1));
    ++pos;
  }
  return f;
}

ExponentTuple sop_to_exponents(std::uint64_t t, std::uint64_t l, const SopFunction& f) {
  if (f.values.size() != l + 1) throw PreconditionError("sop_to_exponents: f must have l + 1 values");
  for (std::size_t i = 0; i < f.values.size(); ++i) {
    if (f.values[i] < 1 || f.values[i] > t + l || (i > 0 && f.values[i] <= f.values[i - 1])) {
      throw PreconditionError("sop_to_exponents: f is not strictly increasing into 1..t+l");
    }
  }
  ExponentTuple out;
  out.e.reserve(l + 1);
  out.e.push_back(f.values[0] - 1);
  for (std::size_t i = 1; i <= l; ++i) out.e.push_back(f.values[i] - f.values[i - 1] - 1);
  return out;
}

ExponentTuple sigma(std::uint64_t t, std::uint64_t l, const Natural& i) {
  if (t < 1) throw OutOfRangeError("sigma: t must be >= 1");
  const Natural mask = cns_rank_to_subset(l + 1, t + l, i);
  return sop_to_exponents(t, l, bits_to_sop(t, l, mask));
}

GridPoint grid_rank(std::uint64_t k, std::uint64_t l) {
  const unsigned __int128 side = static_cast<unsigned __int128>(k) + 1;
  if (l < 1 || l > side * side) {
    throw OutOfRangeError("grid_rank: l outside 1..(k+1)^2");
  }
  return {(l - 1) / (k + 1), (l - 1) % (k + 1)};
}

}  // namespace aks
