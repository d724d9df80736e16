#include "aks/cyclotomic.hpp"

#include <map>
#include <random>
#include <string>

#include "aks/error.hpp"
#include "aks/numtheory.hpp"

namespace aks {

namespace {

void require_prime_modulus(std::uint64_t p, const char* what) {
  if (!is_prime_trial(p)) {
    throw PreconditionError(std::string(what) + ": modulus " + std::to_string(p) + " is not prime");
  }
}

ModPoly cyclotomic_memo(std::uint64_t p, std::uint64_t r, std::map<std::uint64_t, ModPoly>& memo) {
  if (auto it = memo.find(r); it != memo.end()) return it->second;
  ModPoly q = ModPoly::linear(p, p - 1);
  if (r > 1) {
    ModPoly divisor = ModPoly::constant(p, 1);
    for (std::uint64_t d = 1; d < r; ++d) {
      if (r % d == 0) divisor = divisor * cyclotomic_memo(p, d, memo);
    }
    DivMod qr = poly_long_div(ModPoly::x_pow_minus_one(p, r), divisor);
    if (!qr.remainder.is_zero()) {
      throw PropertyViolation("cyclotomic: X^" + std::to_string(r) + " - 1 is not divisible by the product of Q_d over Z/" +
                              std::to_string(p));
    }
    q = std::move(qr.quotient);
  }
  memo.emplace(r, q);
  return q;
}

// Coefficients of the Frobenius map g -> g^p on Z/p[X]/(f), column i holding X^{ip} mod f.
class Frobenius {
 public:
  explicit Frobenius(const ModPoly& f) : f_(f), d_(*f.degree()) {
    const std::uint64_t p = f.modulus();
    const ModPoly xp = powmod(ModPoly::monomial(p, 1, 1), p, f);
    columns_.reserve(d_);
    ModPoly col = ModPoly::constant(p, 1);
    for (std::size_t i = 0; i < d_; ++i) {
      columns_.push_back(col);
      col = mulmod(col, xp, f);
    }
  }

  ModPoly apply(const ModPoly& g) const {
    const std::uint64_t p = f_.modulus();
    const bool small_modulus = p <= 0xFFFFFFFFull;
    std::vector<unsigned __int128> acc(d_, 0);
    for (std::size_t i = 0; i < g.size(); ++i) {
      const Residue gi = g[i];
      if (gi == 0) continue;
      const ModPoly& col = columns_[i];
      for (std::size_t j = 0; j < col.size(); ++j) {
        const unsigned __int128 term = static_cast<unsigned __int128>(gi) * col[j];
        acc[j] += small_modulus ? term : term % p;
      }
    }
    std::vector<Residue> out(d_);
    for (std::size_t j = 0; j < d_; ++j) out[j] = static_cast<Residue>(acc[j] % p);
    return ModPoly(p, std::move(out));
  }

 private:
  ModPoly f_;
  std::size_t d_;
  std::vector<ModPoly> columns_;
};

std::vector<std::uint64_t> prime_divisors(std::uint64_t n) {
  std::vector<std::uint64_t> out;
  for (const auto& pp : trial_factorize(from_u64(n))) out.push_back(to_u64(pp.prime));
  return out;
}

// Rank order of monic polynomials of equal degree: constant term first.
bool canonical_less(const ModPoly& a, const ModPoly& b) {
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] != b[i]) return a[i] < b[i];
  }
  return false;
}

// Splits a monic squarefree g whose irreducible factors all have degree k
// (Cantor-Zassenhaus; the trace map in characteristic 2).
void split_equal_degree(const ModPoly& g, std::size_t k, std::vector<ModPoly>& out) {
  const std::size_t d = *g.degree();
  if (d == k) {
    out.push_back(g);
    return;
  }
  const std::uint64_t p = g.modulus();
  std::mt19937_64 rng(0x5eed0000 + d);
  std::uniform_int_distribution<std::uint64_t> coeff(0, p - 1);
  const Natural half = (pow(from_u64(p), k) - 1) / 2;
  for (;;) {
    std::vector<Residue> c(d);
    for (auto& ci : c) ci = coeff(rng);
    const ModPoly a(p, std::move(c));
    if (a.is_zero() || *a.degree() == 0) continue;
    ModPoly b(p);
    if (p == 2) {
      ModPoly term = a;
      b = a;
      for (std::size_t i = 1; i < k; ++i) {
        term = mulmod(term, term, g);
        b = b + term;
      }
    } else {
      b = powmod(a, half, g) - ModPoly::constant(p, 1);
    }
    const ModPoly h = poly_gcd(g, b);
    if (h.is_zero() || *h.degree() == 0 || *h.degree() == d) continue;
    split_equal_degree(h, k, out);
    split_equal_degree(poly_long_div(g, h).quotient, k, out);
    return;
  }
}

}  // namespace

ModPoly cyclotomic(std::uint64_t p, std::uint64_t r) {
  require_prime_modulus(p, "cyclotomic");
  if (r < 1 || r >= p) {
    throw PreconditionError("cyclotomic: requires 1 <= r < p, got r = " + std::to_string(r) +
                            ", p = " + std::to_string(p));
  }
  std::map<std::uint64_t, ModPoly> memo;
  return cyclotomic_memo(p, r, memo);
}

bool is_irreducible(const ModPoly& f) {
  require_prime_modulus(f.modulus(), "is_irreducible");
  if (!f.degree() || *f.degree() == 0) return false;
  const std::size_t d = *f.degree();
  if (d == 1) return true;
  const ModPoly monic = make_monic(f);
  const Frobenius frob(monic);
  const ModPoly x = ModPoly::monomial(f.modulus(), 1, 1);

  // powers[k] = X^{p^k} mod f
  std::vector<ModPoly> powers{x};
  for (std::size_t k = 1; k <= d; ++k) powers.push_back(frob.apply(powers.back()));
  if (powers[d] != x) return false;
  if (d > 1) {
    for (std::uint64_t q : prime_divisors(d)) {
      if (!poly_gcd(monic, powers[d / q] - x).is_one()) return false;
    }
  }
  return true;
}

ModPoly irreducible_factor(const ModPoly& f) {
  require_prime_modulus(f.modulus(), "irreducible_factor");
  if (!f.degree() || *f.degree() == 0) {
    throw PreconditionError("irreducible_factor: requires deg f >= 1");
  }
  const ModPoly monic = make_monic(f);
  if (is_irreducible(monic)) return monic;
  // At the least degree k carrying a factor, the monic degree-k divisors of f
  // are exactly its distinct irreducible degree-k factors, so the first one
  // in canonical order is the smallest of those.
  const std::uint64_t p = f.modulus();
  const std::size_t n = *monic.degree();
  const Frobenius frob(monic);
  const ModPoly x = ModPoly::monomial(p, 1, 1);
  ModPoly xpk = reduce(x, monic);
  for (std::size_t k = 1; k <= n / 2; ++k) {
    xpk = frob.apply(xpk);
    const ModPoly g = poly_gcd(monic, xpk - x);
    if (*g.degree() == 0) continue;
    std::vector<ModPoly> factors;
    split_equal_degree(g, k, factors);
    const ModPoly* best = &factors.front();
    for (const ModPoly& c : factors) {
      if (canonical_less(c, *best)) best = &c;
    }
    return *best;
  }
  throw PropertyViolation("irreducible_factor: reducible polynomial " + f.to_string() +
                          " has no factor of degree <= deg/2");
}

QuotientField build_cyclotomic_field(std::uint64_t p, std::uint64_t r) {
  require_prime_modulus(p, "build_cyclotomic_field");
  if (r < 1 || r >= p) throw PreconditionError("build_cyclotomic_field: requires 1 <= r < p");
  if ((p - 1) % r == 0) throw PreconditionError("build_cyclotomic_field: requires r not dividing p - 1");
  if (gcd_u64(p, r) != 1) throw PreconditionError("build_cyclotomic_field: requires gcd(p, r) = 1");

  const ModPoly h = irreducible_factor(cyclotomic(p, r));
  if (*h.degree() < 2) {
    throw PropertyViolation("build_cyclotomic_field: irreducible factor of Q_" + std::to_string(r) +
                            " has degree < 2");
  }
  // X^{r'} mod h for r' = 1 .. r-1 must never be 1.
  const ModPoly x = ModPoly::monomial(p, 1, 1);
  ModPoly power = reduce(x, h);
  for (std::uint64_t rp = 1; rp < r; ++rp) {
    if (power.is_one()) {
      throw PropertyViolation("build_cyclotomic_field: h divides X^" + std::to_string(rp) + " - 1");
    }
    power = mulmod(power, x, h);
  }
  return QuotientField(p, h);
}

}  // namespace aks
