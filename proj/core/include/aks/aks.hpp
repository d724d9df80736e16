#pragma once

// The AKS primality test with a structured record of every decision.

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "aks/natural.hpp"
#include "aks/numtheory.hpp"

namespace aks {

enum class Verdict { prime, composite };

std::string to_string(Verdict v);

struct GcdHit {
  Natural a;
  Natural g;
  friend bool operator==(const GcdHit&, const GcdHit&) = default;
};

struct CongruenceCheck {
  Natural a;
  bool ok;
  friend bool operator==(const CongruenceCheck&, const CongruenceCheck&) = default;
};

inline bool operator==(const PerfectPower& x, const PerfectPower& y) {
  return x.base == y.base && x.exponent == y.exponent;
}

struct AksTrace {
  static constexpr const char* kSchemaVersion = "1";

  std::string schema_version = kSchemaVersion;
  Natural n;
  std::optional<PerfectPower> perfect_power;
  // Unset when the run stopped before the corresponding step.
  std::optional<Natural> r;
  std::optional<Natural> ord_r_n;
  std::optional<GcdHit> gcd_hit;
  bool small_n_shortcut = false;
  std::optional<Natural> ell;
  std::vector<CongruenceCheck> congruence_checks;  ///< in a-order; a = 0 is vacuous
  Verdict verdict = Verdict::composite;

  /// bitlen(n)^2, the order threshold the test enforces.
  std::uint64_t order_threshold() const;
  /// floor(log2 n)^2 = (bitlen(n) - 1)^2, the weaker textbook threshold.
  std::uint64_t log_threshold() const;

  friend bool operator==(const AksTrace&, const AksTrace&) = default;
};

struct AksResult {
  Verdict verdict;
  AksTrace trace;
};

/// Runs the test: perfect-power check, r-search with ord_r(n) > bitlen(n)^2,
/// gcd scan over a <= r, the n <= r shortcut, then the congruences
/// (X + a)^n = X^n + a mod (X^r - 1, n) for a = 0 .. floor(sqrt(phi(r))) *
/// (bitlen(n) - 1). n = 0 and n = 1 are reported COMPOSITE. The congruence
/// stage needs n < 2^64 and throws OutOfRangeError otherwise.
AksResult aks_is_prime(const Natural& n);

/// Does (X + a)^n equal X^{n mod r} + a in Z/n[X]/(X^r - 1)? Requires r >= 2,
/// 2 <= n < 2^64.
bool check_congruence(std::uint64_t n, std::uint64_t r, std::uint64_t a);

}  // namespace aks
