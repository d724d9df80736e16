#include "aks/verify.hpp"

#include <algorithm>
#include <atomic>
#include <cstdio>
#include <functional>
#include <map>
#include <random>
#include <set>
#include <sstream>
#include <thread>

#include "aks/aks.hpp"
#include "aks/combinat.hpp"
#include "aks/cyclotomic.hpp"
#include "aks/error.hpp"
#include "aks/fastdiv.hpp"
#include "aks/field.hpp"
#include "aks/instruments.hpp"
#include "aks/modpoly.hpp"
#include "aks/numtheory.hpp"
#include "aks/rub.hpp"
#include "aks/trace_json.hpp"

namespace aks {

namespace {

using Rng = std::mt19937_64;

std::ostream& operator<<(std::ostream& os, const ModPoly& f) { return os << f.to_string(); }

std::ostream& operator<<(std::ostream& os, const ExponentTuple& e) {
  os << '(';
  for (std::size_t i = 0; i < e.e.size(); ++i) os << (i ? "," : "") << e.e[i];
  return os << ')';
}

template <class... Args>
std::string cat(const Args&... args) {
  std::ostringstream os;
  (os << ... << args);
  return os.str();
}

struct CaseOutcome {
  std::vector<VerifyFailure> failures;
  std::uint64_t checks = 1;

  void fail(std::string inputs, std::string expected, std::string got) {
    failures.push_back({std::move(inputs), std::move(expected), std::move(got)});
  }
};

/// Independent generator per case so that results do not depend on --jobs.
Rng case_rng(std::uint64_t seed, std::uint64_t index) {
  std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                    static_cast<std::uint32_t>(index), static_cast<std::uint32_t>(index >> 32)};
  return Rng(seq);
}

std::uint64_t uniform(Rng& rng, std::uint64_t lo, std::uint64_t hi) {
  return std::uniform_int_distribution<std::uint64_t>(lo, hi)(rng);
}

/// Runs fn(0..count-1) on a worker pool; outcomes are merged in case order.
void run_cases(VerifyReport& report, std::uint64_t count, unsigned jobs,
               const std::function<CaseOutcome(std::uint64_t)>& fn) {
  std::vector<CaseOutcome> outcomes(count);
  std::atomic<std::uint64_t> next{0};
  auto worker = [&] {
    for (;;) {
      const std::uint64_t i = next.fetch_add(1);
      if (i >= count) return;
      try {
        outcomes[i] = fn(i);
      } catch (const std::exception& e) {
        outcomes[i].fail(cat("case #", i), "no exception", e.what());
      }
    }
  };
  const unsigned threads = static_cast<unsigned>(std::min<std::uint64_t>(std::max(jobs, 1u), std::max<std::uint64_t>(count, 1)));
  std::vector<std::thread> pool;
  for (unsigned k = 1; k < threads; ++k) pool.emplace_back(worker);
  worker();
  for (auto& t : pool) t.join();
  for (auto& o : outcomes) {
    report.cases_run += o.checks;
    for (auto& f : o.failures) report.failures.push_back(std::move(f));
  }
}

std::vector<std::uint64_t> primes_up_to(std::uint64_t n) {
  std::vector<bool> composite(n + 1, false);
  std::vector<std::uint64_t> out;
  for (std::uint64_t i = 2; i <= n; ++i) {
    if (composite[i]) continue;
    out.push_back(i);
    for (std::uint64_t j = i * i; j <= n; j += i) composite[j] = true;
  }
  return out;
}

ModPoly random_poly(Rng& rng, std::uint64_t p, std::size_t degree, bool monic = false) {
  std::vector<Residue> c(degree + 1);
  for (auto& x : c) x = uniform(rng, 0, p - 1);
  c[degree] = monic ? 1 : uniform(rng, 1, p - 1);
  return ModPoly(p, std::move(c));
}

/// Naive power: e successive multiplications, reducing mod g each time.
ModPoly naive_pow(const ModPoly& f, std::uint64_t e, const ModPoly& g) {
  ModPoly acc = reduce(ModPoly::constant(f.modulus(), 1), g);
  for (std::uint64_t i = 0; i < e; ++i) acc = poly_long_div(acc * f, g).remainder;
  return acc;
}

/// F(G) mod g by Horner's rule.
ModPoly compose_mod(const ModPoly& f, const ModPoly& inner, const ModPoly& g) {
  ModPoly acc(f.modulus());
  for (std::size_t i = f.size(); i-- > 0;) {
    acc = poly_long_div(acc * inner + ModPoly::constant(f.modulus(), f[i]), g).remainder;
  }
  return acc;
}

std::uint64_t naive_order(std::uint64_t x, std::uint64_t r) {
  const std::uint64_t base = x % r;
  std::uint64_t y = base;
  for (std::uint64_t i = 1; i <= r; ++i) {
    if (y == 1 % r) return i;
    y = y * base % r;
  }
  return 0;
}

// ---------------------------------------------------------------------------

void suite_oracle(VerifyReport& rep, const VerifyOptions& o) {
  const std::uint64_t max_n = o.max_n.value_or(20000);
  rep.ranges = {{"max-n", std::to_string(max_n)}};
  if (max_n < 2) return;
  run_cases(rep, max_n - 1, o.jobs, [](std::uint64_t i) {
    CaseOutcome out;
    const std::uint64_t n = i + 2;
    const AksResult res = aks_is_prime(from_u64(n));
    const Verdict truth = is_prime_trial(n) ? Verdict::prime : Verdict::composite;
    if (res.verdict != truth) out.fail(cat("n=", n), to_string(truth), to_string(res.verdict));
    const AksTrace& tr = res.trace;
    if (tr.verdict != res.verdict) out.fail(cat("n=", n), "trace verdict matches result", to_string(tr.verdict));
    if (tr.r && tr.ord_r_n && to_u64(*tr.ord_r_n) != naive_order(n, to_u64(*tr.r))) {
      out.fail(cat("n=", n), "ord_r(n) by iteration", to_string(*tr.ord_r_n));
    }
    for (const auto& c : tr.congruence_checks) {
      if (!c.ok && res.verdict == Verdict::prime) out.fail(cat("n=", n), "no failed congruence on PRIME", cat("a=", c.a));
    }
    if (trace_from_json(trace_to_json(tr)) != tr) out.fail(cat("n=", n), "trace JSON round trip", "differs");
    return out;
  });
}

void suite_legendre(VerifyReport& rep, const VerifyOptions& o) {
  const std::uint64_t max_n = o.max_n.value_or(500);
  const std::uint64_t max_p = o.max_p.value_or(100);
  rep.ranges = {{"max-n", std::to_string(max_n)}, {"max-p", std::to_string(max_p)}};
  const auto primes = primes_up_to(max_p);
  run_cases(rep, primes.size(), o.jobs, [&](std::uint64_t idx) {
    CaseOutcome out;
    out.checks = 0;
    const std::uint64_t p = primes[idx];
    const Natural np = from_u64(p);
    std::uint64_t lhs = 0;
    Natural fact = 1;
    for (std::uint64_t n = 0; n <= max_n; ++n) {
      if (n > 0) {
        lhs += padic_valuation(np, from_u64(n));
        fact *= static_cast<unsigned long>(n);
      }
      const std::uint64_t rhs = legendre_valuation(p, n);
      Natural stripped;
      const std::uint64_t direct = mpz_remove(stripped.get_mpz_t(), fact.get_mpz_t(), np.get_mpz_t());
      if (lhs != rhs) out.fail(cat("p=", p, " n=", n), cat("sum nu_p(i) = ", lhs), cat(rhs));
      if (direct != rhs) out.fail(cat("p=", p, " n=", n), cat("nu_p(n!) = ", direct), cat(rhs));
      ++out.checks;
    }
    // Valuation against its definition: p^k | x and p^{k+1} does not.
    for (std::uint64_t x = 1; x <= max_n; ++x) {
      const std::uint64_t k = padic_valuation(np, from_u64(x));
      const Natural pk = pow(np, k);
      if (x % to_u64(pk) != 0 || (x / to_u64(pk)) % p == 0) {
        out.fail(cat("p=", p, " x=", x), "largest k with p^k | x", cat(k));
      }
    }
    return out;
  });
}

void suite_lcm_bound(VerifyReport& rep, const VerifyOptions& o) {
  const std::uint64_t max_m = o.max_m.value_or(2000);
  rep.ranges = {{"max-m", std::to_string(max_m)}};
  const auto primes = primes_up_to(max_m);
  run_cases(rep, max_m, o.jobs, [&](std::uint64_t idx) {
    CaseOutcome out;
    const std::uint64_t m = idx + 1;
    const Natural l = lcm_range(m);
    if (pow2(m / 2) > l) out.fail(cat("m=", m), cat("2^", m / 2, " <= lcm"), to_string(l));
    Natural oracle = 1;
    for (std::uint64_t p : primes) {
      if (p > m) break;
      std::uint64_t pk = p;
      while (pk <= m / p) pk *= p;
      oracle *= from_u64(pk);
    }
    if (oracle != l) out.fail(cat("m=", m), cat("prod of maximal prime powers = ", oracle), to_string(l));
    return out;
  });
}

void suite_lemma_d(VerifyReport& rep, const VerifyOptions& o) {
  const std::uint64_t max_n = o.max_n.value_or(5000);
  rep.ranges = {{"max-n", std::to_string(max_n)}};
  if (max_n < 2) return;
  run_cases(rep, max_n - 1, o.jobs, [](std::uint64_t idx) {
    CaseOutcome out;
    const std::uint64_t x = idx + 2;
    const std::uint64_t b = bitlen(x);
    const OrderWitness w = find_r(from_u64(x));
    const std::uint64_t bound = 2 * b * b * b * b * b * b;
    if (w.r > bound) out.fail(cat("x=", x), cat("r <= ", bound), cat(w.r));
    const std::uint64_t ord = naive_order(x, w.r);
    if (gcd_u64(x, w.r) != 1) out.fail(cat("x=", x), "gcd(x, r) = 1", cat("r=", w.r));
    if (ord != w.order) out.fail(cat("x=", x, " r=", w.r), cat("order by iteration ", ord), cat(w.order));
    if (ord <= b * b) out.fail(cat("x=", x, " r=", w.r), cat("order > ", b * b), cat(ord));
    Natural check;
    const Natural nx = from_u64(x), nr = from_u64(w.r), ne = from_u64(ord);
    mpz_powm(check.get_mpz_t(), nx.get_mpz_t(), ne.get_mpz_t(), nr.get_mpz_t());
    if (check != 1) out.fail(cat("x=", x, " r=", w.r), "x^ord = 1 mod r", to_string(check));
    for (std::uint64_t rp = 2; rp < w.r; ++rp) {
      if (gcd_u64(x, rp) != 1) continue;
      if (naive_order(x, rp) > b * b) {
        out.fail(cat("x=", x), cat("smallest r is ", rp), cat(w.r));
        break;
      }
    }
    return out;
  });
}

void suite_totient_sum(VerifyReport& rep, const VerifyOptions& o) {
  const std::uint64_t max_r = o.max_r.value_or(2000);
  rep.ranges = {{"max-r", std::to_string(max_r)}};
  run_cases(rep, max_r, o.jobs, [](std::uint64_t idx) {
    CaseOutcome out;
    const std::uint64_t r = idx + 1;
    std::uint64_t sum = 0;
    for (std::uint64_t d = 1; d <= r; ++d) {
      if (r % d == 0) sum += totient(d);
    }
    if (sum != r) out.fail(cat("r=", r), cat(r), cat(sum));
    std::uint64_t product = r;
    if (r > 1) {
      for (const auto& pp : trial_factorize(from_u64(r))) {
        const std::uint64_t p = to_u64(pp.prime);
        product = product / p * (p - 1);
      }
    }
    if (product != totient(r)) out.fail(cat("r=", r), cat("phi by product formula ", product), cat(totient(r)));
    return out;
  });
}

void suite_cyclotomic(VerifyReport& rep, const VerifyOptions& o) {
  const std::uint64_t max_p = o.max_p.value_or(60);
  rep.ranges = {{"max-p", std::to_string(max_p)}};
  std::vector<std::pair<std::uint64_t, std::uint64_t>> cases;
  for (std::uint64_t p : primes_up_to(max_p)) {
    for (std::uint64_t r = 1; r < p; ++r) cases.emplace_back(p, r);
  }
  run_cases(rep, cases.size(), o.jobs, [&](std::uint64_t idx) {
    CaseOutcome out;
    const auto [p, r] = cases[idx];
    const std::string in = cat("p=", p, " r=", r);
    const ModPoly q = cyclotomic(p, r);
    ModPoly product = ModPoly::constant(p, 1);
    std::vector<std::uint64_t> divisors;
    for (std::uint64_t d = 1; d <= r; ++d) {
      if (r % d == 0) {
        divisors.push_back(d);
        product = product * (d == r ? q : cyclotomic(p, d));
      }
    }
    if (product != ModPoly::x_pow_minus_one(p, r)) out.fail(in, "prod_{d|r} Q_d = X^r - 1", product.to_string());
    if (*q.degree() != totient(r)) out.fail(in, cat("deg Q_r = phi(r) = ", totient(r)), cat(*q.degree()));
    for (std::uint64_t rp = 1; rp < r; ++rp) {
      const ModPoly g = poly_gcd(q, ModPoly::x_pow_minus_one(p, rp));
      if (!g.is_one()) out.fail(in, cat("gcd(Q_r, X^", rp, " - 1) = 1"), g.to_string());
    }
    if (r >= 2 && (p - 1) % r != 0) {
      const QuotientField f = build_cyclotomic_field(p, r);
      const ModPoly& h = f.modulus_poly();
      if (!divides(h, q)) out.fail(in, "h | Q_r", h.to_string());
      if (f.degree() != mult_order(p, r)) out.fail(in, cat("deg h = ord_r(p) = ", mult_order(p, r)), cat(f.degree()));
    }
    return out;
  });
}

void suite_xk_identities(VerifyReport& rep, const VerifyOptions& o) {
  const std::uint64_t max_p = o.max_p.value_or(13);
  const std::uint64_t max_r = o.max_r.value_or(30);
  const std::uint64_t samples = o.max_n.value_or(500);
  rep.ranges = {{"max-p", std::to_string(max_p)}, {"max-r", std::to_string(max_r)}, {"max-n", std::to_string(samples)}};
  const auto primes = primes_up_to(max_p);
  if (primes.empty()) return;
  // Exhaustive: X^k - 1 | X^l - 1 iff k | l, and gcd = X^{gcd(k,l)} - 1.
  run_cases(rep, primes.size(), o.jobs, [&](std::uint64_t idx) {
    CaseOutcome out;
    out.checks = 0;
    const std::uint64_t p = primes[idx];
    for (std::uint64_t k = 1; k <= max_r; ++k) {
      for (std::uint64_t l = 1; l <= max_r; ++l) {
        ++out.checks;
        const ModPoly xk = ModPoly::x_pow_minus_one(p, k), xl = ModPoly::x_pow_minus_one(p, l);
        const std::string in = cat("p=", p, " k=", k, " l=", l);
        if (divides(xk, xl) != (l % k == 0)) out.fail(in, cat("divides = ", l % k == 0), cat(!(l % k == 0)));
        const PolyBezout bz = poly_xgcd(xk, xl);
        if (bz.h != ModPoly::x_pow_minus_one(p, gcd_u64(k, l))) out.fail(in, cat("X^", gcd_u64(k, l), " - 1"), bz.h.to_string());
        if (bz.u * xk + bz.v * xl != bz.h) out.fail(in, "u f + v g = h", "identity broken");
      }
    }
    return out;
  });
  // Random: Bezout, derivative, squarefree criterion, factor theorem and the
  // square-and-multiply laws.
  run_cases(rep, samples, o.jobs, [&](std::uint64_t idx) {
    CaseOutcome out;
    out.checks = 8;
    Rng rng = case_rng(o.seed, idx);
    const std::uint64_t p = primes[uniform(rng, 0, primes.size() - 1)];
    const ModPoly f = random_poly(rng, p, uniform(rng, 0, 8));
    const ModPoly g = random_poly(rng, p, uniform(rng, 0, 8));
    const std::string in = cat("p=", p, " f=", f, " g=", g);
    const PolyBezout bz = poly_xgcd(f, g);
    if (bz.u * f + bz.v * g != bz.h || !divides(bz.h, f) || !divides(bz.h, g)) out.fail(in, "h = uf + vg, h | f, h | g", bz.h.to_string());
    const ModPoly df = poly_derivative(f), dg = poly_derivative(g);
    if (poly_derivative(f * g) != df * g + f * dg) out.fail(in, "(fg)' = f'g + fg'", "differs");
    if (poly_derivative(f + g) != df + dg) out.fail(in, "(f+g)' = f' + g'", "differs");
    // A square factor always shows up in gcd(f, f').
    const ModPoly sq = random_poly(rng, p, uniform(rng, 1, 3), true);
    const ModPoly nonsf = sq * sq * g;
    if (poly_gcd(nonsf, poly_derivative(nonsf)).is_one()) out.fail(cat(in, " s=", sq), "gcd(s^2 g, (s^2 g)') != 1", "1");
    // Squarefree by derivative agrees with a brute-force square-divisor scan.
    if (f.degree() && *f.degree() >= 1 && *f.degree() <= 6) {
      const bool coprime = poly_gcd(f, df).is_one();
      bool has_square = false;
      for (std::size_t d = 1; 2 * d <= *f.degree() && !has_square; ++d) {
        const std::uint64_t count = to_u64(pow(from_u64(p), d));
        for (std::uint64_t rank = 0; rank < count && !has_square; ++rank) {
          std::vector<Residue> c(d + 1, 0);
          c[d] = 1;
          std::uint64_t rest = rank;
          for (std::size_t i = 0; i < d; ++i, rest /= p) c[i] = rest % p;
          const ModPoly cand(p, std::move(c));
          has_square = divides(cand * cand, f);
        }
      }
      if (coprime == has_square) out.fail(cat(in), cat("square-free = ", !has_square), cat("gcd(f,f')=1 is ", coprime));
    }
    for (Residue alpha = 0; alpha < p; ++alpha) {
      const bool root = evaluate(f, alpha) == 0;
      if (root != divides(ModPoly::linear(p, (p - alpha) % p), f)) {
        out.fail(cat(in, " alpha=", alpha), "f(alpha) = 0 iff X - alpha | f", cat(root));
      }
    }
    const ModPoly g0 = random_poly(rng, p, uniform(rng, 1, 3), true);
    const ModPoly g1 = random_poly(rng, p, uniform(rng, 1, 3), true);
    const ModPoly mod = g0 * g1;
    const std::uint64_t l = uniform(rng, 0, 40), k = uniform(rng, 0, 40);
    const ModPoly fl = powmod(f, l, mod);
    if (fl != naive_pow(f, l, mod)) out.fail(cat(in, " l=", l, " mod=", mod), "powmod = repeated product", fl.to_string());
    if (l >= 1 && fl != mulmod(powmod(f, l - 1, mod), f, mod)) out.fail(cat(in, " l=", l), "f^l = f^{l-1} f", "differs");
    if (reduce(fl, g0) != powmod(f, l, g0)) out.fail(cat(in, " l=", l, " g0=", g0), "(f^l mod g) mod g0 = f^l mod g0", "differs");
    const ModPoly f2 = f + random_poly(rng, p, 3) * mod;
    if (powmod(f2, l, mod) != fl) out.fail(cat(in, " l=", l), "f = f2 mod g implies f^l = f2^l", "differs");
    if (powmod(fl, k, mod) != powmod(f, l * k, mod)) out.fail(cat(in, " l=", l, " k=", k), "(f^l)^k = f^{lk}", "differs");
    const ModPoly inner = random_poly(rng, p, uniform(rng, 0, 4));
    const ModPoly left = compose_mod(powmod(f, l, ModPoly::monomial(p, 1, 8 * (l + 1) + 1)), inner, mod);
    const ModPoly right = powmod(compose_mod(f, inner, mod), l, mod);
    if (left != right) out.fail(cat(in, " l=", l, " inner=", inner), "[f^l](u) = [f](u)^l mod g", "differs");
    return out;
  });
}

void suite_gflt(VerifyReport& rep, const VerifyOptions& o) {
  const std::uint64_t max_p = o.max_p.value_or(31);
  rep.ranges = {{"max-p", std::to_string(max_p)}};
  std::vector<std::pair<std::uint64_t, std::uint64_t>> cases;
  for (std::uint64_t p : primes_up_to(max_p)) {
    for (std::uint64_t a = 1; a < p; ++a) cases.emplace_back(p, a);
  }
  run_cases(rep, cases.size(), o.jobs, [&](std::uint64_t idx) {
    CaseOutcome out;
    out.checks = 0;
    const auto [p, a] = cases[idx];
    for (std::uint64_t r = 1; r < p; ++r) {
      ++out.checks;
      if (!gflt_check(p, a, r)) out.fail(cat("p=", p, " a=", a, " r=", r), "(X+a)^p = X^{p mod r} + a", "false");
      // Independent route: binomial expansion, then fold by X^r - 1.
      const ModPoly expanded = reduce(binomial_expand(from_u64(a), p, p), ModPoly::x_pow_minus_one(p, r));
      const ModPoly rhs = reduce(ModPoly::monomial(p, 1, p % r) + ModPoly::constant(p, a), ModPoly::x_pow_minus_one(p, r));
      if (expanded != rhs) out.fail(cat("p=", p, " a=", a, " r=", r), rhs.to_string(), expanded.to_string());
    }
    return out;
  });
}

void suite_division(VerifyReport& rep, const VerifyOptions& o) {
  const std::uint64_t pairs = o.max_n.value_or(10000);
  const std::uint64_t max_deg = o.max_m.value_or(256);
  const std::uint64_t literal = std::max<std::uint64_t>(1000, pairs / 10);
  constexpr std::uint64_t kLiteralDegree = 64;
  rep.ranges = {{"max-n", std::to_string(pairs)}, {"max-m", std::to_string(max_deg)},
                {"literal-cases", std::to_string(literal)}};
  std::vector<std::uint64_t> pool{2, 3, 5, 7, 65537};
  {
    Rng rng = case_rng(o.seed, ~0ull);
    while (pool.size() < 64) {
      const std::uint64_t c = uniform(rng, 1ull << 30, (1ull << 31) - 1) | 1;
      if (is_prime_trial(c)) pool.push_back(c);
    }
  }
  rep.notes.push_back(cat("prime pool: ", pool.size(), " moduli (5 small, the rest random 31-bit)"));
  run_cases(rep, pairs, o.jobs, [&](std::uint64_t idx) {
    CaseOutcome out;
    Rng rng = case_rng(o.seed, idx);
    const std::uint64_t p = pool[uniform(rng, 0, pool.size() - 1)];
    const ModPoly P = random_poly(rng, p, uniform(rng, 0, max_deg));
    const ModPoly S = random_poly(rng, p, uniform(rng, 0, max_deg));
    const DivisionResult ks = ks_divide(P, S);
    const DivMod sb = poly_long_div(P, S);
    const std::string in = cat("p=", p, " deg P=", *P.degree(), " deg S=", *S.degree(), " case=", idx);
    if (ks.quotient != sb.quotient) out.fail(in, "quotients agree", "differ");
    if (ks.remainder != sb.remainder) out.fail(in, "remainders agree", "differ");
    if (S * ks.quotient + ks.remainder != P || !degree_less(ks.remainder.degree(), S.degree())) {
      out.fail(in, "P = S Q + R, deg R < deg S", "violated");
    }
    return out;
  });
  run_cases(rep, literal, o.jobs, [&](std::uint64_t idx) {
    CaseOutcome out;
    Rng rng = case_rng(o.seed ^ 0x9e3779b97f4a7c15ull, idx);
    const std::uint64_t p = pool[uniform(rng, 0, pool.size() - 1)];
    std::vector<Residue> c(uniform(rng, 0, kLiteralDegree) + 1);
    for (auto& x : c) x = uniform(rng, 0, p - 1);
    c[0] = 1;
    const ModPoly s(p, std::move(c));
    const std::size_t k = uniform(rng, 0, kLiteralDegree);
    const ModPoly geom = truncated_geom_inverse(s, k);
    const ModPoly newton = newton_inverse(s, k);
    const std::string in = cat("p=", p, " s=", s, " k=", k);
    if (geom != newton) out.fail(in, "literal sum = precision doubling", cat(geom, " vs ", newton));
    if (!truncate(s * newton, k + 1).is_one()) out.fail(in, "s * inverse = 1 mod X^{k+1}", "not one");
    const std::size_t ds = *s.degree();
    const ModPoly P = random_poly(rng, p, ds + k);
    const ModPoly S = reverse(s, ds);
    if (S.degree() && *S.degree() == ds) {
      const DivisionResult lit = ks_divide(P, S, InverseMethod::geometric_series);
      const DivMod sb = poly_long_div(P, S);
      if (lit.quotient != sb.quotient || lit.remainder != sb.remainder) out.fail(in, "literal-sum division = long division", "differs");
    }
    return out;
  });
}

void suite_cns(VerifyReport& rep, const VerifyOptions& o) {
  const std::uint64_t max_m = o.max_m.value_or(16);
  if (max_m > 26) throw OutOfRangeError("verify cns: --max-m must be at most 26");
  rep.ranges = {{"max-m", std::to_string(max_m)}};
  std::vector<std::pair<std::uint64_t, std::uint64_t>> cases;
  for (std::uint64_t m = 0; m <= max_m; ++m) {
    for (std::uint64_t k = 0; k <= m; ++k) cases.emplace_back(m, k);
  }
  run_cases(rep, cases.size(), o.jobs, [&](std::uint64_t idx) {
    CaseOutcome out;
    const auto [m, k] = cases[idx];
    const std::string in = cat("m=", m, " k=", k);
    const std::uint64_t total = to_u64(binom(m, k));
    std::vector<bool> hit(std::size_t{1} << m, false);
    std::uint64_t expected = 0;
    for (std::uint64_t x = 0; x < (std::uint64_t{1} << m); ++x) expected += __builtin_popcountll(x) == static_cast<int>(k);
    if (expected != total) out.fail(in, cat("#popcount-k masks = ", expected), cat("binom = ", total));
    Natural prev = -1;
    for (std::uint64_t i = 1; i <= total; ++i) {
      const Natural x = cns_rank_to_subset(k, m, from_u64(i));
      if (!fits_u64(x) || to_u64(x) >= (std::uint64_t{1} << m) || popcount(x) != k) {
        out.fail(cat(in, " i=", i), "mask < 2^m with k bits", to_string(x));
        continue;
      }
      if (hit[to_u64(x)]) out.fail(cat(in, " i=", i), "injective", cat("repeat ", x));
      hit[to_u64(x)] = true;
      if (x <= prev) out.fail(cat(in, " i=", i), "increasing in rank", to_string(x));
      prev = x;
    }
    out.checks = total + 1;
    return out;
  });
}

void suite_sigma(VerifyReport& rep, const VerifyOptions& o) {
  const std::uint64_t max_tl = o.max_m.value_or(16);
  const std::uint64_t cap = o.max_n.value_or(100000);
  if (max_tl > 31) throw OutOfRangeError("verify sigma: --max-m must be at most 31");
  rep.ranges = {{"max-m (t, l)", std::to_string(max_tl)}, {"max-n (binomial cap)", std::to_string(cap)}};
  std::vector<std::pair<std::uint64_t, std::uint64_t>> cases;
  std::uint64_t skipped = 0;
  for (std::uint64_t t = 1; t <= max_tl; ++t) {
    for (std::uint64_t l = 0; l <= max_tl; ++l) {
      if (binom(t + l, l + 1) <= from_u64(cap)) {
        cases.emplace_back(t, l);
      } else {
        ++skipped;
      }
    }
  }
  rep.notes.push_back(cat(cases.size(), " (t, l) pairs enumerated, ", skipped, " above the binomial cap"));
  run_cases(rep, cases.size(), o.jobs, [&](std::uint64_t idx) {
    CaseOutcome out;
    const auto [t, l] = cases[idx];
    const std::string in = cat("t=", t, " l=", l);
    const std::uint64_t total = to_u64(binom(t + l, l + 1));
    std::set<std::uint64_t> masks;
    std::set<std::vector<std::uint32_t>> sops;
    std::set<ExponentTuple> tuples;
    for (std::uint64_t i = 1; i <= total; ++i) {
      const Natural x = cns_rank_to_subset(l + 1, t + l, from_u64(i));
      const SopFunction f = bits_to_sop(t, l, x);
      const ExponentTuple e = sop_to_exponents(t, l, f);
      masks.insert(to_u64(x));
      sops.insert(f.values);
      tuples.insert(e);
      if (e.e.size() != l + 1 || e.sum() > t - 1) out.fail(cat(in, " i=", i), "l+1 entries summing to <= t-1", cat(e));
      if (sigma(t, l, from_u64(i)) != e) out.fail(cat(in, " i=", i), "sigma = composition", cat(e));
      // Prefix sums give f back.
      std::uint64_t acc = 0;
      for (std::size_t j = 0; j < e.e.size(); ++j) {
        acc += e.e[j] + 1;
        if (acc != f.values[j]) {
          out.fail(cat(in, " i=", i), "prefix sums recover f", cat(e));
          break;
        }
      }
    }
    if (masks.size() != total) out.fail(in, "rank -> mask injective", cat(masks.size(), " of ", total));
    if (sops.size() != total) out.fail(in, "mask -> f injective", cat(sops.size(), " of ", total));
    if (tuples.size() != total) out.fail(in, "f -> e injective", cat(tuples.size(), " of ", total));
    out.checks = total;
    return out;
  });
  // Distinct multisets give distinct products of linear factors over Z/p,
  // p above every element.
  constexpr std::uint64_t kMaxElement = 6, kMaxSize = 4, kP = 7;
  run_cases(rep, 1, 1, [&](std::uint64_t) {
    CaseOutcome out;
    std::map<std::vector<Residue>, std::vector<std::uint64_t>> seen;
    std::vector<std::uint64_t> ms;
    std::function<void(std::uint64_t)> rec = [&](std::uint64_t from) {
      ModPoly prod = ModPoly::constant(kP, 1);
      for (auto b : ms) prod = prod * ModPoly::linear(kP, b);
      auto coeffs = std::vector<Residue>(prod.coeffs().begin(), prod.coeffs().end());
      if (auto [it, fresh] = seen.emplace(coeffs, ms); !fresh) {
        out.fail("multisets", "distinct products", cat(prod));
      }
      ++out.checks;
      if (ms.size() == kMaxSize) return;
      for (std::uint64_t b = from; b <= kMaxElement; ++b) {
        ms.push_back(b);
        rec(b);
        ms.pop_back();
      }
    };
    out.checks = 0;
    rec(0);
    return out;
  });
}

void suite_grid(VerifyReport& rep, const VerifyOptions& o) {
  const std::uint64_t max_k = o.max_n.value_or(64);
  rep.ranges = {{"max-n (k)", std::to_string(max_k)}};
  run_cases(rep, max_k + 1, o.jobs, [](std::uint64_t k) {
    CaseOutcome out;
    const std::uint64_t side = k + 1;
    std::vector<bool> hit(side * side, false);
    for (std::uint64_t l = 1; l <= side * side; ++l) {
      const GridPoint g = grid_rank(k, l);
      if (g.i > k || g.j > k || g.i * side + g.j + 1 != l) {
        out.fail(cat("k=", k, " l=", l), "l = i(k+1) + j + 1 with i, j <= k", cat("(", g.i, ",", g.j, ")"));
        continue;
      }
      if (hit[g.i * side + g.j]) out.fail(cat("k=", k, " l=", l), "injective", "repeat");
      hit[g.i * side + g.j] = true;
    }
    out.checks = side * side;
    // x^i y^j is injective on the grid for multiplicatively independent x, y.
    if (k <= 16) {
      const std::pair<unsigned long, unsigned long> bases[] = {{2, 3}, {3, 5}, {2, 7}, {6, 35}};
      for (auto [x, y] : bases) {
        std::set<Natural> values;
        for (std::uint64_t l = 1; l <= side * side; ++l) {
          const GridPoint g = grid_rank(k, l);
          values.insert(pow(Natural(x), g.i) * pow(Natural(y), g.j));
        }
        if (values.size() != side * side) out.fail(cat("k=", k, " x=", x, " y=", y), "x^i y^j distinct", cat(values.size()));
      }
    }
    return out;
  });
}

template <class Field>
void check_root_index(CaseOutcome& out, const std::string& in, const RootIndex<typename Field::Element>& idx,
                      const std::vector<std::uint64_t>& oracle_ranks, const Natural& degree) {
  if (idx.root_count() != oracle_ranks.size()) out.fail(in, cat(oracle_ranks.size(), " roots"), cat(idx.root_count()));
  for (std::size_t k = 0; k < idx.entries().size() && k < oracle_ranks.size(); ++k) {
    const auto& e = idx.entries()[k];
    if (e.rank != oracle_ranks[k]) out.fail(in, cat("root rank ", oracle_ranks[k]), cat(e.rank));
    if (e.index != k + 1) out.fail(in, cat("index ", k + 1), cat(e.index));
  }
  if (cmp(degree, static_cast<unsigned long>(idx.max_index())) < 0) out.fail(in, cat("max index <= ", degree), cat(idx.max_index()));
}

void suite_rub(VerifyReport& rep, const VerifyOptions& o) {
  const std::uint64_t count = o.max_n.value_or(1000);
  const std::uint64_t max_p = o.max_p.value_or(101);
  rep.ranges = {{"max-n", std::to_string(count)}, {"max-p", std::to_string(max_p)}};
  const auto primes = primes_up_to(max_p);
  if (primes.empty()) return;
  run_cases(rep, count, o.jobs, [&](std::uint64_t idx) {
    CaseOutcome out;
    Rng rng = case_rng(o.seed, idx);
    const std::uint64_t p = primes[uniform(rng, 0, primes.size() - 1)];
    const std::size_t deg = uniform(rng, 0, 10);
    ModPoly g = random_poly(rng, p, deg);
    if (idx % 2 == 1 && deg > 0) {
      // Plant roots so that the index is exercised.
      const std::size_t planted = uniform(rng, 1, deg);
      g = random_poly(rng, p, deg - planted);
      for (std::size_t i = 0; i < planted; ++i) g = g * ModPoly::linear(p, uniform(rng, 0, p - 1));
    }
    const PrimeField field(p);
    const auto idx_roots = rub_index(field, g);
    std::vector<std::uint64_t> oracle;
    for (std::uint64_t x = 0; x < p; ++x) {
      std::uint64_t sum = 0, power = 1;
      for (std::size_t i = 0; i < g.size(); ++i) {
        sum = (sum + g[i] * power) % p;
        power = power * x % p;
      }
      if (sum == 0) oracle.push_back(x);
    }
    check_root_index<PrimeField>(out, cat("p=", p, " G=", g), idx_roots, oracle, from_u64(*g.degree()));
    return out;
  });
  // Extension fields: dense Horner evaluation against term-by-term powers.
  const std::pair<std::uint64_t, std::uint64_t> fields[] = {{5, 3}, {7, 4}, {11, 3}, {13, 5}, {17, 3}};
  run_cases(rep, 40, o.jobs, [&](std::uint64_t idx) {
    CaseOutcome out;
    Rng rng = case_rng(o.seed ^ 0xf1e1dull, idx);
    const auto [p, r] = fields[idx % std::size(fields)];
    const QuotientField f = build_cyclotomic_field(p, r);
    const ModPoly g = idx < std::size(fields)
                          ? ModPoly::monomial(p, 1, 1)  // X itself: single root 0
                          : random_poly(rng, p, uniform(rng, 1, 10));
    std::vector<SparseTerm<ModPoly>> terms;
    for (std::size_t i = 0; i < g.size(); ++i) {
      if (g[i] != 0) terms.push_back({from_u64(i), f.from_residue(g[i])});
    }
    const auto dense = rub_index(f, g);
    const auto sparse = rub_index(f, SparsePoly<ModPoly>(terms));
    std::vector<std::uint64_t> ranks;
    for (const auto& e : sparse.entries()) ranks.push_back(e.rank);
    check_root_index<QuotientField>(out, cat("F_", p, "^", f.degree(), " G=", g), dense, ranks, from_u64(*g.degree()));
    // Y^{|F|} - Y vanishes on all of F.
    if (idx == 0) {
      const Natural q = f.order();
      const auto all = rub_index(f, SparsePoly<ModPoly>({{1, f.from_residue(p - 1)}, {q, f.one()}}));
      if (all.root_count() != f.size()) out.fail(cat("F_", q, " Y^q - Y"), cat(q, " roots"), cat(all.root_count()));
    }
    return out;
  });
}

void suite_introspectivity(VerifyReport& rep, const VerifyOptions& o) {
  const std::uint64_t count = o.max_n.value_or(500);
  const std::uint64_t max_p = o.max_p.value_or(13);
  const std::uint64_t max_r = o.max_r.value_or(12);
  rep.ranges = {{"max-n", std::to_string(count)}, {"max-p", std::to_string(max_p)}, {"max-r", std::to_string(max_r)}};
  const auto primes = primes_up_to(max_p);
  if (primes.empty() || max_r < 2) return;
  std::atomic<std::uint64_t> attempts{0};
  run_cases(rep, count, o.jobs, [&](std::uint64_t idx) {
    CaseOutcome out;
    Rng rng = case_rng(o.seed, idx);
    for (int attempt = 0; attempt < 1000; ++attempt) {
      ++attempts;
      const std::uint64_t p = primes[uniform(rng, 0, primes.size() - 1)];
      const std::uint64_t r = uniform(rng, 2, max_r);
      if (r % p == 0) continue;
      // Exponents p^j (1 + c L), L = lcm(r, p^d - 1), fix every element of
      // the semisimple ring Z/p[X]/(X^r - 1) up to Frobenius; monomials X^k
      // accept every exponent.
      const std::uint64_t d = mult_order(p, r);
      const Natural pd1 = pow(from_u64(p), d) - 1;
      Natural big_l;
      mpz_lcm_ui(big_l.get_mpz_t(), pd1.get_mpz_t(), r);
      const bool monomials = uniform(rng, 0, 3) == 0;
      auto exponent = [&]() -> Natural {
        if (monomials) return from_u64(uniform(rng, 1, 1000000));
        return pow(from_u64(p), uniform(rng, 0, 3)) * (1 + from_u64(uniform(rng, 0, 3)) * big_l);
      };
      auto poly = [&] {
        if (monomials) return ModPoly::monomial(p, 1, uniform(rng, 0, r - 1));
        return random_poly(rng, p, uniform(rng, 0, r - 1));
      };
      const ModPoly f = poly(), g = poly();
      const Natural m = exponent(), m2 = exponent();
      if (!is_introspective(f, m, r) || !is_introspective(f, m2, r) || !is_introspective(g, m, r)) continue;
      const std::string in = cat("p=", p, " r=", r, " f=", f, " g=", g, " m=", m, " m'=", m2);
      if (!is_introspective(f, m * m2, r)) out.fail(in, "m m' introspective for f", "false");
      if (!is_introspective(f * g, m, r)) out.fail(in, "m introspective for f g", "false");
      return out;
    }
    out.fail(cat("case ", idx), "hypotheses established within 1000 draws", "gave up");
    return out;
  });
  rep.notes.push_back(cat(attempts.load(), " draws to establish ", count, " hypothesis sets"));
}

void suite_congruence(VerifyReport& rep, const VerifyOptions& o) {
  const std::uint64_t max_n = o.max_n.value_or(3000);
  const std::uint64_t max_r = o.max_r.value_or(10);
  const std::uint64_t max_a = 10;
  rep.ranges = {{"max-n", std::to_string(max_n)}, {"max-r", std::to_string(max_r)}};
  std::atomic<std::uint64_t> established{0}, composite{0};
  if (max_n < 4) return;
  run_cases(rep, max_n - 3, o.jobs, [&](std::uint64_t idx) {
    CaseOutcome out;
    out.checks = 0;
    const std::uint64_t n = idx + 4;
    const auto factors = trial_factorize(from_u64(n));
    const bool is_prime = factors.size() == 1 && factors[0].multiplicity == 1;
    for (std::uint64_t r = 2; r <= max_r; ++r) {
      for (std::uint64_t a = 1; a <= max_a; ++a) {
        const bool holds = check_congruence(n, r, a);
        if (n <= 200 && a < n) {
          const ModPoly xr = ModPoly::x_pow_minus_one(n, r);
          const bool naive = naive_pow(ModPoly::linear(n, a), n, xr) ==
                             reduce(ModPoly::monomial(n, 1, n % r) + ModPoly::constant(n, a), xr);
          if (naive != holds) out.fail(cat("n=", n, " r=", r, " a=", a), cat("congruence by repeated product = ", naive), cat(holds));
        }
        if (!holds) continue;
        for (const auto& pp : factors) {
          const std::uint64_t p = to_u64(pp.prime);
          if (a % p == 0 || r % p == 0) continue;
          ++out.checks;
          ++established;
          if (!is_prime) ++composite;
          if (!congruence_lemma_check(n, p, r, a)) out.fail(cat("n=", n, " p=", p, " r=", r, " a=", a), "(X+a)^{n/p} = X^{n/p} + a mod p", "false");
        }
      }
    }
    return out;
  });
  rep.notes.push_back(cat(established.load(), " hypothesis sets established, ", composite.load(), " with composite n"));
}

/// Accepted primes through the congruence stage, ascending, with their runs.
struct Harvest {
  std::uint64_t n;
  AksTrace trace;
};

std::vector<Harvest> harvest_primes(std::uint64_t max_n, unsigned jobs) {
  const auto primes = primes_up_to(max_n);
  std::vector<std::optional<Harvest>> slots(primes.size());
  VerifyReport scratch;
  run_cases(scratch, primes.size(), jobs, [&](std::uint64_t idx) {
    const AksResult res = aks_is_prime(from_u64(primes[idx]));
    if (res.verdict == Verdict::prime && !res.trace.small_n_shortcut) slots[idx] = Harvest{primes[idx], res.trace};
    return CaseOutcome{};
  });
  if (!scratch.failures.empty()) throw PropertyViolation("harvest: " + scratch.failures.front().got);
  std::vector<Harvest> out;
  for (auto& s : slots) {
    if (s) out.push_back(std::move(*s));
  }
  return out;
}

void suite_lemma_f(VerifyReport& rep, const VerifyOptions& o) {
  const std::uint64_t want = o.max_n.value_or(20);
  const std::uint64_t pairs = o.max_m.value_or(200);
  rep.ranges = {{"max-n (primes)", std::to_string(want)}, {"max-m (pairs per prime)", std::to_string(pairs)}};
  // ord_r(n) = phi(r) makes Q_r irreducible, so F is Q_r itself.
  std::vector<std::uint64_t> chosen;
  std::uint64_t skipped = 0;
  for (std::uint64_t limit = 1024; chosen.size() < want; limit *= 2) {
    chosen.clear();
    skipped = 0;
    for (const Harvest& h : harvest_primes(limit, o.jobs)) {
      const std::uint64_t r = to_u64(*h.trace.r);
      if (r >= h.n) continue;
      if (mult_order(h.n, r) != totient(r)) {
        ++skipped;
        continue;
      }
      chosen.push_back(h.n);
      if (chosen.size() == want) break;
    }
    if (limit > (1ull << 24)) break;
  }
  rep.notes.push_back(cat("harvested primes ", chosen.empty() ? 0 : chosen.front(), "..",
                          chosen.empty() ? 0 : chosen.back(), "; ", skipped, " skipped with Q_r reducible"));
  run_cases(rep, chosen.size(), o.jobs, [&](std::uint64_t idx) {
    CaseOutcome out;
    out.checks = 0;
    const std::uint64_t n = chosen[idx];
    const LemmaContext ctx = harvest_lemma_context(from_u64(n));
    const Natural total = binom(ctx.t + ctx.ell, ctx.ell + 1);
    gmp_randclass gen(gmp_randinit_mt);
    gen.seed(Natural(from_u64(o.seed)) * 1000003 + n);
    for (std::uint64_t k = 0; k < pairs; ++k) {
      const Natural x = gen.get_z_range(total) + 1;
      Natural y = gen.get_z_range(total - 1) + 1;
      if (y >= x) y += 1;
      const std::string in = cat("n=", n, " r=", ctx.r, " t=", ctx.t, " l=", ctx.ell, " x=", x, " y=", y);
      const ModPoly tx = tau(x, ctx), ty = tau(y, ctx);
      ++out.checks;
      if (tx == ty) out.fail(in, "tau(x) != tau(y) mod (h, p)", "collision");
      if (k < 3) {
        const auto member = p_hat_membership(tx, ctx.t, ctx.ell, ctx.field);
        if (!member || *member != sigma(ctx.t, ctx.ell, x)) out.fail(in, "tau(x) in P_t with exponents sigma(x)", "not recovered");
      }
    }
    return out;
  });
}

struct GFixture {
  std::uint64_t p, r, d, q;
};

void suite_lemma_g(VerifyReport& rep, const VerifyOptions& o) {
  const std::uint64_t max_p = o.max_p.value_or(13);
  const std::uint64_t max_field = o.max_m.value_or(30000);
  rep.ranges = {{"max-p", std::to_string(max_p)}, {"max-m (field size)", std::to_string(max_field)}};
  // n = p q with q = p mod (p^d - 1): every element of F = F_{p^d} is then a
  // root of Y^q - Y^p, and (q, p) is the first grid collision.
  std::vector<GFixture> fixtures;
  for (std::uint64_t p : primes_up_to(max_p)) {
    for (std::uint64_t r = 2; r < p; ++r) {
      if ((p - 1) % r == 0) continue;
      const std::uint64_t d = mult_order(p, r);
      const Natural size = pow(from_u64(p), d);
      if (size > from_u64(max_field)) continue;
      const std::uint64_t step = to_u64(size) - 1;
      std::uint64_t q = p + step;
      while (!is_prime_trial(q)) q += step;
      fixtures.push_back({p, r, d, q});
    }
  }
  rep.notes.push_back(cat(fixtures.size(), " fixtures n = p q"));
  run_cases(rep, fixtures.size(), o.jobs, [&](std::uint64_t idx) {
    CaseOutcome out;
    out.checks = 0;
    const GFixture fx = fixtures[idx];
    const Natural n = from_u64(fx.p) * from_u64(fx.q);
    const std::uint64_t ell = std::min<std::uint64_t>(fx.p - 1, 4);
    const LemmaContext ctx = make_lemma_context(n, fx.p, fx.r, ell);
    const GhatFunction g(ctx);
    const std::string base = cat("n=", n, " p=", fx.p, " r=", fx.r, " t=", ctx.t, " l=", ell);
    const std::uint64_t k = isqrt(ctx.t);
    if (g.m1() > pow(n, k)) out.fail(base, cat("m1 <= n^", k), to_string(g.m1()));
    if ((k + 1) * (k + 1) <= ctx.t) out.fail(base, "(k+1)^2 > t", cat(k));
    const std::uint64_t total = to_u64(binom(ctx.t + ell, ell + 1));
    std::set<std::uint64_t> ranks, indices;
    for (std::uint64_t x = 1; x <= total; ++x) {
      ++out.checks;
      const ModPoly f = tau(from_u64(x), ctx);
      const std::string in = cat(base, " x=", x);
      const auto member = p_hat_membership(f, ctx.t, ell, ctx.field);
      if (!member || *member != sigma(ctx.t, ell, from_u64(x))) out.fail(in, "tau(x) in P_t", "not recovered");
      const std::uint64_t v = g(f);
      if (v < 1 || from_u64(v) > g.m1()) out.fail(in, cat("1 <= ghat <= ", g.m1()), cat(v));
      const bool fresh_f = ranks.insert(ctx.field.rank(f)).second;
      const bool fresh_v = indices.insert(v).second;
      if (!fresh_f) out.fail(in, "distinct tuples give distinct residues", "repeat");
      if (fresh_f != fresh_v) out.fail(in, "ghat injective", cat("repeat index ", v));
    }
    return out;
  });
}

void suite_lemma_h(VerifyReport& rep, const VerifyOptions& o) {
  const std::uint64_t max_n = o.max_n.value_or(5000);
  const std::uint64_t max_kls = o.max_m.value_or(40);
  rep.ranges = {{"max-n", std::to_string(max_n)}, {"max-m (k, l, s)", std::to_string(max_kls)}};
  const auto harvest = harvest_primes(max_n, o.jobs);
  std::vector<std::array<std::uint64_t, 4>> sets;  // n, r, t, ell
  std::uint64_t small_s = 0;
  for (const Harvest& h : harvest) {
    const std::uint64_t r = to_u64(*h.trace.r);
    const std::uint64_t t = g_set(from_u64(h.n), h.n, r).t();
    const std::uint64_t s = isqrt(t) * (bitlen(h.n) - 1);
    if (s < 6) {
      ++small_s;
      continue;
    }
    sets.push_back({h.n, r, t, to_u64(*h.trace.ell)});
  }
  std::array<std::atomic<std::uint64_t>, 4> step_fail{};
  std::atomic<std::uint64_t> end_to_end{0};
  const std::uint64_t before = rep.failures.size();
  run_cases(rep, sets.size(), o.jobs, [&](std::uint64_t idx) {
    CaseOutcome out;
    const auto [n, r, t, ell] = sets[idx];
    const std::string in = cat("n=", n, " r=", r, " t=", t, " l=", ell);
    const std::uint64_t b = bitlen(n);
    if (t <= b * b) out.fail(in, cat("t > bitlen(n)^2 = ", b * b), cat(t));
    const LemmaHChain c = lemma_h_inequality_chain(from_u64(n), r, t, ell);
    if (c.end_to_end) ++end_to_end;
    static const char* const kRel[] = {">=", ">=", ">", ">="};
    for (int k = 0; k < 4; ++k) {
      if (c.steps[k]) continue;
      ++step_fail[k];
      out.fail(cat(in, " s=", c.s), cat("step ", k + 1, ": ", bitlen(c.values[k]), "-bit value ", kRel[k], " ", bitlen(c.values[k + 1]), "-bit value"),
               cat(k == 3 ? cat("2^(s+2) = ", c.values[3], " < 2 n^floor(sqrt t) = ", c.values[4]) : std::string("violated")));
    }
    return out;
  });
  rep.notes.push_back(cat(sets.size(), " harvested parameter sets with s >= 6 (", small_s, " with s < 6 skipped)"));
  rep.notes.push_back(cat("chain step failures: ", step_fail[0].load(), ", ", step_fail[1].load(), ", ", step_fail[2].load(), ", ",
                          step_fail[3].load()));
  rep.notes.push_back(cat("end-to-end binom(t+l, t-1) >= 2 n^floor(sqrt t) holds for ", end_to_end.load(), " of ", sets.size()));
  rep.notes.push_back(cat(rep.failures.size() - before, " parameter sets with a failing step"));
  // Standalone binomial bounds.
  run_cases(rep, max_kls + 1, o.jobs, [&](std::uint64_t s) {
    CaseOutcome out;
    out.checks = 0;
    for (std::uint64_t k = s; k <= max_kls; ++k) {
      for (std::uint64_t l = 0; l <= max_kls; ++l) {
        ++out.checks;
        if (binom(k + l, k) < binom(s + l, s)) out.fail(cat("k=", k, " l=", l, " s=", s), "binom(k+l, k) >= binom(s+l, s)", "smaller");
      }
    }
    return out;
  });
  run_cases(rep, 64 - 6 + 1, o.jobs, [](std::uint64_t idx) {
    CaseOutcome out;
    const std::uint64_t k = idx + 6;
    if (binom(2 * k + 1, k) <= pow2(k + 2)) out.fail(cat("k=", k), "binom(2k+1, k) > 2^{k+2}", to_string(binom(2 * k + 1, k)));
    return out;
  });
}

void suite_pascal(VerifyReport& rep, const VerifyOptions& o) {
  const std::uint64_t max_x = o.max_n.value_or(64);
  rep.ranges = {{"max-n", std::to_string(max_x)}};
  run_cases(rep, max_x + 1, o.jobs, [](std::uint64_t x) {
    CaseOutcome out;
    out.checks = 0;
    for (std::uint64_t y = 0; y <= x + 2; ++y) {
      ++out.checks;
      const Natural b = binom(x, y);
      Natural oracle;
      mpz_bin_uiui(oracle.get_mpz_t(), x, y);
      if (b != oracle) out.fail(cat("x=", x, " y=", y), to_string(oracle), to_string(b));
      if (x >= 1 && y >= 1 && b != binom(x - 1, y) + binom(x - 1, y - 1)) {
        out.fail(cat("x=", x, " y=", y), "binom(x-1, y) + binom(x-1, y-1)", to_string(b));
      }
      if (y <= x && b * factorial(y) * factorial(x - y) != factorial(x)) out.fail(cat("x=", x, " y=", y), "binom y! (x-y)! = x!", to_string(b));
    }
    return out;
  });
}

void suite_binomial(VerifyReport& rep, const VerifyOptions& o) {
  const std::uint64_t max_b = o.max_n.value_or(64);
  constexpr std::uint64_t kPerExponent = 16;
  rep.ranges = {{"max-n (b)", std::to_string(max_b)}};
  run_cases(rep, (max_b + 1) * kPerExponent, o.jobs, [&](std::uint64_t idx) {
    CaseOutcome out;
    Rng rng = case_rng(o.seed, idx);
    const std::uint64_t b = idx / kPerExponent;
    const std::uint64_t modulus = idx % 4 == 0 ? uniform(rng, 2, 50) : idx % 4 == 1 ? uniform(rng, 2, 1ull << 32) : uniform(rng, 2, ~0ull);
    const Natural a = from_u64(rng()) * from_u64(rng()) + from_u64(rng() % 97);
    const ModPoly expanded = binomial_expand(a, b, modulus);
    const ModPoly linear = ModPoly::linear(modulus, to_u64(Natural(a % from_u64(modulus))));
    ModPoly product = ModPoly::constant(modulus, 1);
    for (std::uint64_t i = 0; i < b; ++i) product = product * linear;
    if (expanded != product) out.fail(cat("a=", a, " b=", b, " m=", modulus), product.to_string(), expanded.to_string());
    return out;
  });
}

void suite_binom_div(VerifyReport& rep, const VerifyOptions& o) {
  const std::uint64_t max_p = o.max_p.value_or(500);
  rep.ranges = {{"max-p", std::to_string(max_p)}};
  const auto primes = primes_up_to(max_p);
  run_cases(rep, primes.size(), o.jobs, [&](std::uint64_t idx) {
    CaseOutcome out;
    out.checks = 0;
    const std::uint64_t p = primes[idx];
    for (std::uint64_t m = 1; m < p; ++m) {
      ++out.checks;
      if (mpz_divisible_ui_p(binom(p, m).get_mpz_t(), p) == 0) out.fail(cat("p=", p, " m=", m), "p | binom(p, m)", "not divisible");
    }
    return out;
  });
}

using SuiteFn = void (*)(VerifyReport&, const VerifyOptions&);

const std::vector<std::pair<std::string, SuiteFn>>& registry() {
  static const std::vector<std::pair<std::string, SuiteFn>> suites = {
      {"oracle", suite_oracle},
      {"legendre", suite_legendre},
      {"lcm-bound", suite_lcm_bound},
      {"lemma-d", suite_lemma_d},
      {"totient-sum", suite_totient_sum},
      {"cyclotomic", suite_cyclotomic},
      {"xk-identities", suite_xk_identities},
      {"gflt", suite_gflt},
      {"division", suite_division},
      {"cns", suite_cns},
      {"sigma", suite_sigma},
      {"grid", suite_grid},
      {"rub", suite_rub},
      {"introspectivity", suite_introspectivity},
      {"congruence", suite_congruence},
      {"lemma-f", suite_lemma_f},
      {"lemma-g", suite_lemma_g},
      {"lemma-h", suite_lemma_h},
      {"pascal", suite_pascal},
      {"binomial", suite_binomial},
      {"binom-div", suite_binom_div},
  };
  return suites;
}

}  // namespace

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names = [] {
    std::vector<std::string> out;
    for (const auto& [name, fn] : registry()) out.push_back(name);
    return out;
  }();
  return names;
}

bool is_suite(const std::string& name) {
  const auto& names = suite_names();
  return std::find(names.begin(), names.end(), name) != names.end();
}

VerifyReport run_suite(const std::string& name, const VerifyOptions& options) {
  for (const auto& [suite, fn] : registry()) {
    if (suite != name) continue;
    VerifyReport report;
    report.suite = name;
    const auto start = std::chrono::steady_clock::now();
    fn(report, options);
    report.elapsed = std::chrono::steady_clock::now() - start;
    return report;
  }
  throw PreconditionError("unknown suite '" + name + "'");
}

std::string format_report(const VerifyReport& report, std::size_t max_failures) {
  std::ostringstream os;
  os << "suite    " << report.suite << '\n';
  for (const auto& [key, value] : report.ranges) os << "range    " << key << " = " << value << '\n';
  os << "cases    " << report.cases_run << '\n';
  os << "failures " << report.failures.size() << '\n';
  for (const auto& note : report.notes) os << "note     " << note << '\n';
  for (std::size_t i = 0; i < report.failures.size() && i < max_failures; ++i) {
    const auto& f = report.failures[i];
    os << "  FAIL " << f.inputs << "\n    expected: " << f.expected << "\n    got:      " << f.got << '\n';
  }
  if (report.failures.size() > max_failures) os << "  ... " << report.failures.size() - max_failures << " more\n";
  char elapsed[32];
  std::snprintf(elapsed, sizeof elapsed, "%.2f", report.elapsed.count());
  os << "elapsed  " << elapsed << " s\n";
  os << "result   " << (report.passed() ? "PASS" : "FAIL") << '\n';
  return os.str();
}

}  // namespace aks
