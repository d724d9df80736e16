#include "aks/aks.hpp"

#include "aks/error.hpp"
#include "aks/modpoly.hpp"

namespace aks {

std::string to_string(Verdict v) { return v == Verdict::prime ? "PRIME" : "COMPOSITE"; }

std::uint64_t AksTrace::order_threshold() const {
  const std::uint64_t len = bitlen(n);
  return len * len;
}

std::uint64_t AksTrace::log_threshold() const {
  const std::uint64_t len = bitlen(n);
  return len == 0 ? 0 : (len - 1) * (len - 1);
}

bool check_congruence(std::uint64_t n, std::uint64_t r, std::uint64_t a) {
  if (r < 2) throw PreconditionError("check_congruence: r must be >= 2");
  if (n < 2) throw PreconditionError("check_congruence: n must be >= 2");
  const ModPoly modulus = ModPoly::x_pow_minus_one(n, r);
  const ModPoly lhs = powmod(ModPoly::linear(n, a % n), n, modulus);
  const ModPoly rhs = ModPoly::monomial(n, 1, n % r) + ModPoly::constant(n, a % n);
  return lhs == rhs;
}

AksResult aks_is_prime(const Natural& n) {
  AksTrace trace;
  trace.n = n;
  auto finish = [&](Verdict v) {
    trace.verdict = v;
    return AksResult{v, trace};
  };

  // Perfect powers, including the conventional n <= 1.
  if (auto pp = is_perfect_power(n)) {
    trace.perfect_power = *pp;
    return finish(Verdict::composite);
  }

  // Smallest r with ord_r(n) > bitlen(n)^2.
  const OrderWitness w = find_r(n);
  trace.r = from_u64(w.r);
  trace.ord_r_n = from_u64(w.order);

  // A nontrivial gcd with some a <= r exposes a factor.
  for (std::uint64_t a = 1; a <= w.r; ++a) {
    const std::uint64_t g = mpz_gcd_ui(nullptr, n.get_mpz_t(), a);
    if (g > 1 && cmp(n, g) > 0) {
      trace.gcd_hit = GcdHit{from_u64(a), from_u64(g)};
      return finish(Verdict::composite);
    }
  }

  if (cmp(n, w.r) <= 0) {
    trace.small_n_shortcut = true;
    return finish(Verdict::prime);
  }

  if (!fits_u64(n)) {
    throw OutOfRangeError("aks_is_prime: congruence stage supports n < 2^64 only");
  }
  const std::uint64_t nn = to_u64(n);
  const std::uint64_t ell = isqrt(totient(w.r)) * (bitlen(n) - 1);
  trace.ell = from_u64(ell);
  for (std::uint64_t a = 0; a <= ell; ++a) {
    const bool ok = check_congruence(nn, w.r, a);
    trace.congruence_checks.push_back({from_u64(a), ok});
    if (!ok) return finish(Verdict::composite);
  }
  return finish(Verdict::prime);
}

}  // namespace aks
