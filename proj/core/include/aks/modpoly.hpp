#pragma once

// Dense univariate polynomials over Z/m for word-sized m.

#include <compare>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "aks/natural.hpp"

namespace aks {

using Residue = std::uint64_t;

/// Arithmetic in Z/m for 2 <= m < 2^64.
struct Zmod {
  std::uint64_t m;

  Residue reduce(std::uint64_t x) const { return x % m; }
  Residue add(Residue a, Residue b) const { return a >= m - b ? a - (m - b) : a + b; }
  Residue sub(Residue a, Residue b) const { return a >= b ? a - b : a + (m - b); }
  Residue neg(Residue a) const { return a == 0 ? 0 : m - a; }
  Residue mul(Residue a, Residue b) const {
    if (m <= 0xFFFFFFFFull) return a * b % m;
    return static_cast<Residue>(static_cast<unsigned __int128>(a) * b % m);
  }
  Residue pow(Residue base, std::uint64_t exp) const;
  /// Inverse of a, or nullopt when gcd(a, m) != 1.
  std::optional<Residue> inverse(Residue a) const;
  /// Inverse of a; throws PreconditionError when a is not a unit.
  Residue inverse_or_throw(Residue a, const char* what) const;
};

/// Polynomial degree. The zero polynomial has no degree, which orders below
/// every natural number.
using Degree = std::optional<std::size_t>;

inline bool degree_less(Degree a, Degree b) {
  if (!b) return false;
  if (!a) return true;
  return *a < *b;
}

class ModPoly {
 public:
  /// The zero polynomial over Z/modulus.
  explicit ModPoly(std::uint64_t modulus);
  /// Coefficients indexed by exponent; reduced mod modulus and normalized.
  ModPoly(std::uint64_t modulus, std::vector<Residue> coeffs);

  static ModPoly constant(std::uint64_t modulus, Residue c);
  static ModPoly monomial(std::uint64_t modulus, Residue c, std::size_t k);
  /// X + a
  static ModPoly linear(std::uint64_t modulus, Residue a);
  /// X^k - 1
  static ModPoly x_pow_minus_one(std::uint64_t modulus, std::size_t k);

  std::uint64_t modulus() const { return modulus_; }
  Zmod ring() const { return Zmod{modulus_}; }
  std::span<const Residue> coeffs() const { return coeffs_; }
  std::size_t size() const { return coeffs_.size(); }

  Degree degree() const {
    return coeffs_.empty() ? Degree{} : Degree{coeffs_.size() - 1};
  }
  bool is_zero() const { return coeffs_.empty(); }
  bool is_one() const { return coeffs_.size() == 1 && coeffs_[0] == 1; }
  bool is_monic() const { return !coeffs_.empty() && coeffs_.back() == 1; }
  /// Coefficient of X^i (zero past the degree).
  Residue operator[](std::size_t i) const { return i < coeffs_.size() ? coeffs_[i] : 0; }
  Residue lead() const { return coeffs_.empty() ? 0 : coeffs_.back(); }

  /// Is this exactly X^r - 1 for some r >= 1?
  std::optional<std::size_t> as_x_pow_minus_one() const;

  std::string to_string() const;

  friend bool operator==(const ModPoly&, const ModPoly&) = default;

 private:
  void normalize();

  std::uint64_t modulus_;
  std::vector<Residue> coeffs_;
};

ModPoly operator+(const ModPoly& f, const ModPoly& g);
ModPoly operator-(const ModPoly& f, const ModPoly& g);
ModPoly operator-(const ModPoly& f);
ModPoly operator*(const ModPoly& f, const ModPoly& g);
ModPoly scale(const ModPoly& f, Residue c);

/// f(X^k); k = 0 gives the constant f(1).
ModPoly compose_xk(const ModPoly& f, std::size_t k);

struct DivMod {
  ModPoly quotient;
  ModPoly remainder;
};

/// Schoolbook long division: P = S*Q + R with deg R < deg S. The leading
/// coefficient of S must be a unit (always true over a prime field).
DivMod poly_long_div(const ModPoly& p, const ModPoly& s);

/// Remainder of f modulo g; g must have a unit leading coefficient.
/// X^r - 1 is reduced by folding exponents.
ModPoly reduce(const ModPoly& f, const ModPoly& g);

bool divides(const ModPoly& d, const ModPoly& f);

struct PolyBezout {
  ModPoly h;  ///< monic gcd
  ModPoly u;
  ModPoly v;
};

/// Extended Euclid over a prime field: h = u*f + v*g, h monic.
PolyBezout poly_xgcd(const ModPoly& f, const ModPoly& g);
ModPoly poly_gcd(const ModPoly& f, const ModPoly& g);

/// Formal derivative sum (i+1) a_{i+1} X^i.
ModPoly poly_derivative(const ModPoly& f);

ModPoly make_monic(const ModPoly& f);

/// (a * b) mod g
ModPoly mulmod(const ModPoly& a, const ModPoly& b, const ModPoly& g);

/// f^e mod (g, m) by left-to-right square and multiply, reducing after each
/// product. Throws PreconditionError if lead(g) is not a unit mod m.
ModPoly powmod(const ModPoly& f, const Natural& e, const ModPoly& g);
ModPoly powmod(const ModPoly& f, std::uint64_t e, const ModPoly& g);

/// f(x) by Horner's rule.
Residue evaluate(const ModPoly& f, Residue x);

/// Raw product of coefficient sequences mod m, delaying reductions when
/// the accumulated sums provably fit in a machine word.
std::vector<Residue> convolve(std::span<const Residue> a, std::span<const Residue> b,
                              std::uint64_t m);

}  // namespace aks
