#pragma once

#include <cstdint>

#include "aks/field.hpp"
#include "aks/modpoly.hpp"

namespace aks {

/// Q_r over Z/p: Q_1 = X - 1 and Q_r = (X^r - 1) / prod_{d | r, d < r} Q_d.
/// Requires p prime and 1 <= r < p. Throws PropertyViolation if a division
/// that must be exact leaves a remainder.
ModPoly cyclotomic(std::uint64_t p, std::uint64_t r);

/// Rabin's irreducibility test over a prime field. Linear polynomials are
/// irreducible, constants are not.
bool is_irreducible(const ModPoly& f);

/// A monic irreducible divisor of f over a prime field: the first monic
/// polynomial of degree 1, 2, ..., floor(deg f / 2) in canonical order that
/// divides f, or monic f itself when none does.
ModPoly irreducible_factor(const ModPoly& f);

/// F = Z/p[X]/(h) with h an irreducible factor of Q_r that divides no
/// X^{r'} - 1 for r' < r. Requires 1 <= r < p, r not dividing p - 1 and
/// gcd(p, r) = 1.
QuotientField build_cyclotomic_field(std::uint64_t p, std::uint64_t r);

}  // namespace aks
