#include "aks/instruments.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <tuple>
#include <string>

#include "aks/aks.hpp"
#include "aks/cyclotomic.hpp"
#include "aks/error.hpp"
#include "aks/numtheory.hpp"

namespace aks {

namespace {

// (X + a) * f mod h for monic h and deg f < deg h, in O(deg h).
ModPoly mul_linear_mod(const ModPoly& f, Residue a, const ModPoly& h) {
  const Zmod z = f.ring();
  const std::size_t d = *h.degree();
  std::vector<Residue> c(d + 1, 0);
  for (std::size_t i = 0; i < f.size(); ++i) {
    c[i + 1] = z.add(c[i + 1], f[i]);
    c[i] = z.add(c[i], z.mul(a, f[i]));
  }
  const Residue top = c[d];
  if (top != 0) {
    for (std::size_t i = 0; i < d; ++i) c[i] = z.sub(c[i], z.mul(top, h[i]));
  }
  c.resize(d);
  return ModPoly(f.modulus(), std::move(c));
}

// f / (X + a), assuming f(-a) = 0.
ModPoly divide_by_linear(const ModPoly& f, Residue a) {
  const Zmod z = f.ring();
  std::vector<Residue> q(f.size() - 1, 0);
  Residue carry = 0;
  for (std::size_t i = f.size(); i-- > 1;) {
    carry = z.sub(f[i], z.mul(a, carry));
    q[i - 1] = carry;
  }
  return ModPoly(f.modulus(), std::move(q));
}

ModPoly reduced_binomial_rhs(std::uint64_t m, const Natural& exponent, std::uint64_t r, std::uint64_t a) {
  const std::uint64_t shift = to_u64(Natural(exponent % from_u64(r)));
  return ModPoly::monomial(m, 1, shift) + ModPoly::constant(m, a % m);
}

bool has_prime_other_than(const Natural& n, std::uint64_t p) {
  for (const auto& pp : trial_factorize(n)) {
    if (pp.prime != from_u64(p)) return true;
  }
  return false;
}

}  // namespace

bool gflt_check(std::uint64_t p, std::uint64_t a, std::uint64_t r) {
  if (!is_prime_trial(p)) throw PreconditionError("gflt_check: p must be prime");
  if (gcd_u64(a, p) != 1) throw PreconditionError("gflt_check: requires gcd(a, p) = 1");
  if (r < 1 || r >= p) throw PreconditionError("gflt_check: requires 1 <= r < p");
  const ModPoly lhs = powmod(ModPoly::linear(p, a), p, ModPoly::x_pow_minus_one(p, r));
  return lhs == reduced_binomial_rhs(p, from_u64(p), r, a);
}

bool congruence_lemma_check(std::uint64_t n, std::uint64_t p, std::uint64_t r, std::uint64_t a) {
  if (!is_prime_trial(p) || n % p != 0) {
    throw PreconditionError("congruence_lemma_check: p must be a prime divisor of n");
  }
  if (gcd_u64(a, p) != 1) throw PreconditionError("congruence_lemma_check: requires gcd(a, p) = 1");
  if (r < 2) throw PreconditionError("congruence_lemma_check: requires r >= 2");
  if (gcd_u64(p, r) != 1) throw PreconditionError("congruence_lemma_check: requires gcd(p, r) = 1");
  if (!check_congruence(n, r, a)) {
    throw PreconditionError("congruence_lemma_check: (X + a)^n != X^n + a mod (X^r - 1, n)");
  }
  const std::uint64_t q = n / p;
  const ModPoly lhs = powmod(ModPoly::linear(p, a), q, ModPoly::x_pow_minus_one(p, r));
  return lhs == reduced_binomial_rhs(p, from_u64(q), r, a);
}

bool is_introspective(const ModPoly& f, const Natural& m, std::uint64_t r) {
  if (r < 1) throw PreconditionError("is_introspective: requires r >= 1");
  const ModPoly xr = ModPoly::x_pow_minus_one(f.modulus(), r);
  const ModPoly lhs = powmod(f, m, xr);
  const std::uint64_t shift = to_u64(Natural(m % from_u64(r)));
  const ModPoly rhs = reduce(compose_xk(f, shift), xr);
  return lhs == rhs;
}

GSet g_set(const Natural& n, std::uint64_t p, std::uint64_t r) {
  if (r < 2) throw PreconditionError("g_set: requires r >= 2");
  if (mpz_gcd_ui(nullptr, n.get_mpz_t(), r) != 1) throw PreconditionError("g_set: requires gcd(n, r) = 1");
  if (p == 0 || mpz_divisible_ui_p(n.get_mpz_t(), p) == 0) throw PreconditionError("g_set: requires p | n");
  const Natural q = n / from_u64(p);
  const std::uint64_t gens[2] = {to_u64(Natural(q % from_u64(r))), p % r};
  std::set<std::uint64_t> seen{1 % r};
  std::vector<std::uint64_t> frontier{1 % r};
  while (!frontier.empty()) {
    const std::uint64_t x = frontier.back();
    frontier.pop_back();
    for (std::uint64_t g : gens) {
      const std::uint64_t y = static_cast<std::uint64_t>(static_cast<unsigned __int128>(x) * g % r);
      if (seen.insert(y).second) frontier.push_back(y);
    }
  }
  return {std::vector<std::uint64_t>(seen.begin(), seen.end())};
}

std::uint64_t choose_prime_divisor(const Natural& n, std::uint64_t r) {
  const Factorization f = trial_factorize(n);
  for (auto it = f.rbegin(); it != f.rend(); ++it) {
    if (!fits_u64(it->prime)) continue;
    const std::uint64_t p = to_u64(it->prime);
    if (gcd_u64(p, r) != 1) continue;
    if (mult_order(p, r) > 1) return p;
  }
  throw PropertyViolation("choose_prime_divisor: no prime divisor of n has ord_r(p) > 1");
}

LemmaContext make_lemma_context(const Natural& n, std::uint64_t p, std::uint64_t r, std::uint64_t ell) {
  if (!is_prime_trial(p) || mpz_divisible_ui_p(n.get_mpz_t(), p) == 0) {
    throw PreconditionError("make_lemma_context: p must be a prime divisor of n");
  }
  if (ell >= p) throw PreconditionError("make_lemma_context: requires ell < p");
  QuotientField field = build_cyclotomic_field(p, r);
  const std::uint64_t t = g_set(n, p, r).t();
  if (binom(t + ell, ell + 1) != binom(t + ell, t - 1)) {
    throw PropertyViolation("make_lemma_context: binom(t+l, l+1) != binom(t+l, t-1)");
  }
  return LemmaContext{n, p, r, t, ell, std::move(field)};
}

LemmaContext harvest_lemma_context(const Natural& n) {
  const AksResult run = aks_is_prime(n);
  if (run.verdict != Verdict::prime || run.trace.small_n_shortcut) {
    throw PreconditionError("harvest_lemma_context: run on " + to_string(n) +
                            " did not accept through the congruence stage");
  }
  const std::uint64_t r = to_u64(*run.trace.r);
  const std::uint64_t ell = to_u64(*run.trace.ell);
  return make_lemma_context(n, choose_prime_divisor(n, r), r, ell);
}

ModPoly product_of_linears(const ExponentTuple& e, const QuotientField& field) {
  const ModPoly& h = field.modulus_poly();
  ModPoly acc = field.one();
  for (std::size_t a = 0; a < e.e.size(); ++a) {
    for (std::uint64_t k = 0; k < e.e[a]; ++k) acc = mul_linear_mod(acc, a, h);
  }
  return acc;
}

std::optional<ExponentTuple> p_hat_membership(const ModPoly& f, std::uint64_t t, std::uint64_t ell,
                                              const QuotientField& field) {
  const std::uint64_t p = field.characteristic();
  if (f.modulus() != p) throw ModulusMismatchError("p_hat_membership: f is not over Z/p");
  if (!degree_less(f.degree(), field.modulus_poly().degree())) {
    throw PreconditionError("p_hat_membership: requires deg f < deg h");
  }
  if (ell >= p) throw PreconditionError("p_hat_membership: requires ell < p");
  if (t < 1 || f.is_zero()) return std::nullopt;
  ExponentTuple e{std::vector<std::uint64_t>(ell + 1, 0)};
  ModPoly rest = f;
  for (std::uint64_t steps = 0;; ++steps) {
    if (rest.is_one()) return e;
    if (steps == t - 1) return std::nullopt;
    std::optional<std::uint64_t> hit;
    for (std::uint64_t a = 0; a <= ell; ++a) {
      if (evaluate(rest, (p - a % p) % p) == 0) {
        hit = a;
        break;
      }
    }
    if (!hit || !rest.degree() || *rest.degree() == 0) return std::nullopt;
    rest = divide_by_linear(rest, *hit);
    ++e.e[*hit];
  }
}

ModPoly tau(const Natural& x, const LemmaContext& ctx) {
  return product_of_linears(sigma(ctx.t, ctx.ell, x), ctx.field);
}

namespace {

std::pair<Natural, Natural> first_collision(const LemmaContext& ctx) {
  const Natural p = from_u64(ctx.p);
  const Natural q = ctx.n / p;
  const std::uint64_t k = isqrt(ctx.t);
  std::map<std::uint64_t, Natural> by_residue;
  const Natural r = from_u64(ctx.r);
  for (std::uint64_t l = 1; l <= (k + 1) * (k + 1); ++l) {
    const GridPoint g = grid_rank(k, l);
    const Natural y = pow(q, g.i) * pow(p, g.j);
    const std::uint64_t res = to_u64(Natural(y % r));
    auto [it, inserted] = by_residue.emplace(res, y);
    if (!inserted && it->second != y) {
      return y > it->second ? std::pair{y, it->second} : std::pair{it->second, y};
    }
  }
  throw PropertyViolation("ghat: no two values (n/p)^i p^j with i, j <= floor(sqrt t) collide mod r");
}

RootIndex<ModPoly> collision_roots(const QuotientField& field, const Natural& m1, const Natural& m2) {
  const std::uint64_t p = field.characteristic();
  SparsePoly<ModPoly> g({{m2, field.from_residue(p - 1)}, {m1, field.one()}});
  return rub_index(field, g);
}

}  // namespace

GhatFunction::GhatFunction(const LemmaContext& ctx)
    : field_(ctx.field), roots_({}, Natural(0)) {
  if (!has_prime_other_than(ctx.n, ctx.p)) {
    throw PreconditionError("ghat: n must not be a power of p");
  }
  std::tie(m1_, m2_) = first_collision(ctx);
  if (m1_ > pow(ctx.n, isqrt(ctx.t))) {
    throw PropertyViolation("ghat: m1 exceeds n^floor(sqrt t)");
  }
  roots_ = collision_roots(field_, m1_, m2_);
}

std::uint64_t GhatFunction::operator()(const ModPoly& f) const {
  const auto idx = roots_.index_of_rank(field_.rank(field_.reduce(f)));
  if (!idx) throw PropertyViolation("ghat: " + f.to_string() + " is not a root of Y^m1 - Y^m2");
  return *idx;
}

std::uint64_t ghat(const ModPoly& f, const LemmaContext& ctx) {
  if (!p_hat_membership(f, ctx.t, ctx.ell, ctx.field)) {
    throw PreconditionError("ghat: f is not in P_t");
  }
  return GhatFunction(ctx)(f);
}

int LemmaHChain::first_failure() const {
  for (int i = 0; i < 4; ++i) {
    if (!steps[i]) return i + 1;
  }
  return 0;
}

LemmaHChain lemma_h_inequality_chain(const Natural& n, std::uint64_t r, std::uint64_t t, std::uint64_t ell) {
  if (n < 2) throw PreconditionError("lemma_h_inequality_chain: requires n >= 2");
  if (t < 1 || t > totient(r)) throw PreconditionError("lemma_h_inequality_chain: requires 1 <= t <= phi(r)");
  const std::uint64_t root_t = isqrt(t);
  LemmaHChain c;
  c.s = root_t * (bitlen(n) - 1);
  if (c.s < 6) throw PreconditionError("lemma_h_inequality_chain: requires floor(sqrt t) * floor(log n) >= 6");
  c.values[0] = binom(t + ell, t - 1);
  c.values[1] = binom(ell + 1 + c.s, c.s);
  c.values[2] = binom(2 * c.s + 1, c.s);
  c.values[3] = pow2(c.s + 2);
  c.values[4] = 2 * pow(n, root_t);
  c.steps[0] = c.values[0] >= c.values[1];
  c.steps[1] = c.values[1] >= c.values[2];
  c.steps[2] = c.values[2] > c.values[3];
  c.steps[3] = c.values[3] >= c.values[4];
  c.end_to_end = c.values[0] >= c.values[4];
  return c;
}

}  // namespace aks
