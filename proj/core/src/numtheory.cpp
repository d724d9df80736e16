#include "aks/numtheory.hpp"

#include <algorithm>
#include <string>

#include "aks/error.hpp"

namespace aks {

Bezout xgcd(const Natural& x, const Natural& y) {
  if (sgn(x) == 0 && sgn(y) == 0) {
    throw ZeroDivisorError("xgcd: gcd(0, 0) is undefined");
  }
  Integer old_r = x, r = y;
  Integer old_s = 1, s = 0;
  Integer old_t = 0, t = 1;
  Integer q, tmp;
  while (sgn(r) != 0) {
    mpz_fdiv_q(q.get_mpz_t(), old_r.get_mpz_t(), r.get_mpz_t());
    tmp = old_r - q * r;
    old_r = r;
    r = tmp;
    tmp = old_s - q * s;
    old_s = s;
    s = tmp;
    tmp = old_t - q * t;
    old_t = t;
    t = tmp;
  }
  return {old_r, old_s, old_t};
}

std::uint64_t gcd_u64(std::uint64_t a, std::uint64_t b) {
  while (b != 0) {
    const std::uint64_t t = a % b;
    a = b;
    b = t;
  }
  return a;
}

std::uint64_t padic_valuation(const Natural& p, const Natural& x) {
  if (p < 2) throw PreconditionError("padic_valuation: p must be prime");
  if (sgn(x) == 0) return 0;
  Natural rest = x;
  std::uint64_t k = 0;
  while (mpz_divisible_p(rest.get_mpz_t(), p.get_mpz_t()) != 0) {
    mpz_divexact(rest.get_mpz_t(), rest.get_mpz_t(), p.get_mpz_t());
    ++k;
  }
  return k;
}

std::uint64_t legendre_valuation(std::uint64_t p, std::uint64_t n) {
  if (p < 2) throw PreconditionError("legendre_valuation: p must be prime");
  // floor(n / p^i) == floor(floor(n / p^(i-1)) / p)
  std::uint64_t sum = 0;
  for (std::uint64_t q = n / p; q != 0; q /= p) sum += q;
  return sum;
}

Natural lcm_range(std::uint64_t m) {
  if (m < 1) throw PreconditionError("lcm_range: m must be >= 1");
  Natural acc = 1;
  Natural g;
  for (std::uint64_t i = 2; i <= m; ++i) {
    const Natural b = from_u64(i);
    mpz_gcd(g.get_mpz_t(), acc.get_mpz_t(), b.get_mpz_t());
    acc = acc * b / g;
  }
  return acc;
}

std::uint64_t totient(std::uint64_t r) {
  if (r < 1) throw PreconditionError("totient: r must be >= 1");
  std::uint64_t count = 0;
  for (std::uint64_t i = 1; i <= r; ++i) {
    if (gcd_u64(i, r) == 1) ++count;
  }
  return count;
}

std::uint64_t mult_order(std::uint64_t y, std::uint64_t r) {
  if (r < 2) throw PreconditionError("mult_order: r must be >= 2");
  const std::uint64_t base = y % r;
  if (gcd_u64(base, r) != 1) {
    throw PreconditionError("mult_order: gcd(" + std::to_string(y) + ", " +
                            std::to_string(r) + ") != 1");
  }
  std::uint64_t x = base;
  std::uint64_t i = 1;
  while (x != 1) {
    x = static_cast<std::uint64_t>(static_cast<unsigned __int128>(x) * base % r);
    ++i;
  }
  return i;
}

std::uint64_t mult_order(const Natural& y, std::uint64_t r) {
  if (r < 2) throw PreconditionError("mult_order: r must be >= 2");
  const Natural reduced = y % from_u64(r);
  return mult_order(to_u64(reduced), r);
}

std::optional<PerfectPower> is_perfect_power(const Natural& x) {
  if (x <= 1) return PerfectPower{x, 2};
  const std::size_t len = bitlen(x);
  Natural lo, hi, mid, value;
  for (std::uint64_t b = 2; b <= len + 1; ++b) {
    // a^b = x forces a < 2^ceil(len / b).
    lo = 1;
    hi = pow2((len + b - 1) / b);
    while (lo <= hi) {
      mid = (lo + hi) / 2;
      mpz_pow_ui(value.get_mpz_t(), mid.get_mpz_t(), b);
      const int c = cmp(value, x);
      if (c == 0) return PerfectPower{mid, b};
      if (c < 0) {
        lo = mid + 1;
      } else {
        hi = mid - 1;
      }
    }
  }
  return std::nullopt;
}

Natural find_r_bound(const Natural& n) {
  return 2 * pow(from_u64(bitlen(n)), 6);
}

OrderWitness find_r(const Natural& n) {
  if (n < 2) throw PreconditionError("find_r: n must be >= 2");
  const std::uint64_t len = bitlen(n);
  const std::uint64_t threshold = len * len;
  const Natural bound = find_r_bound(n);
  for (std::uint64_t r = 2; cmp(bound, r) >= 0; ++r) {
    const std::uint64_t residue = to_u64(Natural(n % from_u64(r)));
    if (gcd_u64(residue, r) != 1) continue;
    const std::uint64_t ord = mult_order(residue, r);
    if (ord > threshold) return {r, ord};
  }
  throw PropertyViolation("find_r: no r <= 2*bitlen(n)^6 with ord_r(n) > bitlen(n)^2 for n = " +
                          to_string(n));
}

Factorization trial_factorize(const Natural& n) {
  if (n < 2) throw PreconditionError("trial_factorize: n must be >= 2");
  Factorization out;
  Natural rest = n;
  for (std::uint64_t d = 2; cmp(rest, static_cast<unsigned long>(1)) > 0; d += (d == 2 ? 1 : 2)) {
    const Natural dd = from_u64(d);
    if (dd * dd > rest) {
      out.push_back({rest, 1});
      break;
    }
    std::uint64_t k = 0;
    while (mpz_divisible_ui_p(rest.get_mpz_t(), d) != 0) {
      mpz_divexact_ui(rest.get_mpz_t(), rest.get_mpz_t(), d);
      ++k;
    }
    if (k > 0) out.push_back({dd, k});
  }
  return out;
}

bool is_prime_trial(std::uint64_t n) {
  if (n < 2) return false;
  if (n < 4) return true;
  if (n % 2 == 0) return false;
  for (std::uint64_t d = 3; d <= n / d; d += 2) {
    if (n % d == 0) return false;
  }
  return true;
}

bool is_prime_trial(const Natural& n) {
  if (n < 2) return false;
  if (fits_u64(n)) return is_prime_trial(to_u64(n));
  const Factorization f = trial_factorize(n);
  return f.size() == 1 && f.front().multiplicity == 1;
}

std::uint64_t isqrt(std::uint64_t x) {
  std::uint64_t lo = 0, hi = std::min<std::uint64_t>(x, 0xFFFFFFFFull);
  while (lo < hi) {
    const std::uint64_t mid = lo + (hi - lo + 1) / 2;
    if (mid * mid <= x) {
      lo = mid;
    } else {
      hi = mid - 1;
    }
  }
  return lo;
}

}  // namespace aks
