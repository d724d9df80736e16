#pragma once

// Executable forms of the facts the correctness argument for the AKS test
// rests on: the generalized Fermat congruence, introspective exponents, the
// residue group G_r, and the two counting maps whose incompatible sizes
// force an accepted n to be prime.

#include <array>
#include <cstdint>
#include <optional>
#include <vector>

#include "aks/combinat.hpp"
#include "aks/field.hpp"
#include "aks/modpoly.hpp"
#include "aks/natural.hpp"
#include "aks/rub.hpp"

namespace aks {

/// (X + a)^p == X^{p mod r} + a in Z/p[X]/(X^r - 1). Requires p prime,
/// gcd(a, p) = 1 and 1 <= r < p.
bool gflt_check(std::uint64_t p, std::uint64_t a, std::uint64_t r);

/// (X + a)^{n/p} == X^{n/p} + a mod (X^r - 1, p), given that the AKS
/// congruence for a holds mod (X^r - 1, n). Throws PreconditionError when a
/// hypothesis fails: p prime dividing n, gcd(a, p) = gcd(p, r) = 1, the
/// congruence mod n.
bool congruence_lemma_check(std::uint64_t n, std::uint64_t p, std::uint64_t r, std::uint64_t a);

/// f(X)^m == f(X^m) mod (X^r - 1, p), where p is the modulus of f.
bool is_introspective(const ModPoly& f, const Natural& m, std::uint64_t r);

struct GSet {
  std::vector<std::uint64_t> residues;  ///< ascending
  std::uint64_t t() const { return residues.size(); }
};

/// { (n/p)^i p^j mod r }, the subgroup of (Z/r)^* generated by n/p and p.
/// Requires gcd(n, r) = 1 and p | n.
GSet g_set(const Natural& n, std::uint64_t p, std::uint64_t r);

/// Everything the counting maps need about one run.
struct LemmaContext {
  Natural n;
  std::uint64_t p;
  std::uint64_t r;
  std::uint64_t t;    ///< |G_r|
  std::uint64_t ell;  ///< number of linear factors minus one
  QuotientField field;
};

/// Largest prime p | n with ord_r(p) > 1.
std::uint64_t choose_prime_divisor(const Natural& n, std::uint64_t r);

/// Builds the context for a given prime divisor p: F from Q_r over Z/p and
/// t from g_set. Requires r < p and r not dividing p - 1.
LemmaContext make_lemma_context(const Natural& n, std::uint64_t p, std::uint64_t r, std::uint64_t ell);

/// Context harvested from an accepted AKS run on n: r from the run,
/// ell = floor(sqrt(phi(r))) * (bitlen(n) - 1) and p from
/// choose_prime_divisor. Throws PreconditionError if the run did not reach
/// the congruence stage or did not accept.
LemmaContext harvest_lemma_context(const Natural& n);

/// prod_a (X + a)^{e_a} reduced mod h.
ModPoly product_of_linears(const ExponentTuple& e, const QuotientField& field);

/// Greedy membership test for P_t: repeatedly strip the smallest X + a
/// (a <= ell) dividing f until reaching 1, for at most t - 1 divisions.
std::optional<ExponentTuple> p_hat_membership(const ModPoly& f, std::uint64_t t, std::uint64_t ell,
                                              const QuotientField& field);

/// tau(x) = sigma_t^ell(x) materialized in F, for 1 <= x <= binom(t+ell, ell+1).
ModPoly tau(const Natural& x, const LemmaContext& ctx);

/// The injection from P_t into {1, ..., n^floor(sqrt t)}: index of f among
/// the roots of Y^{m1} - Y^{m2} in F, where m1 > m2 is the first pair of
/// values (n/p)^i p^j (grid order, i, j <= floor(sqrt t)) congruent mod r.
class GhatFunction {
 public:
  /// Requires n not a power of p. Throws PropertyViolation if no collision
  /// exists or m1 > n^floor(sqrt t).
  explicit GhatFunction(const LemmaContext& ctx);

  const Natural& m1() const { return m1_; }
  const Natural& m2() const { return m2_; }
  const RootIndex<ModPoly>& roots() const { return roots_; }

  /// Throws PropertyViolation when f is not a root of Y^{m1} - Y^{m2}.
  std::uint64_t operator()(const ModPoly& f) const;

 private:
  QuotientField field_;
  Natural m1_;
  Natural m2_;
  RootIndex<ModPoly> roots_;
};

/// One-shot ghat; also verifies f is in P_t.
std::uint64_t ghat(const ModPoly& f, const LemmaContext& ctx);

struct LemmaHChain {
  std::uint64_t s = 0;  ///< floor(sqrt t) * floor(log2 n)
  /// binom(t+l, t-1), binom(l+1+s, s), binom(2s+1, s), 2^{s+2}, 2 n^{floor(sqrt t)}
  std::array<Natural, 5> values;
  /// >=, >=, >, >= between consecutive values
  std::array<bool, 4> steps{};
  /// binom(t+l, t-1) >= 2 n^{floor(sqrt t)}
  bool end_to_end = false;

  bool holds() const { return steps[0] && steps[1] && steps[2] && steps[3]; }
  /// 1-based index of the first failing step, 0 when all hold.
  int first_failure() const;
};

/// Evaluates the inequality chain by exact arithmetic. Requires s >= 6 and
/// t <= phi(r).
LemmaHChain lemma_h_inequality_chain(const Natural& n, std::uint64_t r, std::uint64_t t, std::uint64_t ell);

}  // namespace aks
