#pragma once

// Finite fields with a canonical total enumeration of their elements.

#include <cstdint>

#include "aks/modpoly.hpp"
#include "aks/natural.hpp"

namespace aks {

/// Z/p for prime p. Elements are enumerated 0, 1, ..., p-1.
class PrimeField {
 public:
  using Element = Residue;

  /// Throws PreconditionError unless p is prime.
  explicit PrimeField(std::uint64_t p);

  std::uint64_t characteristic() const { return p_; }
  std::uint64_t size() const { return p_; }
  Element element(std::uint64_t rank) const { return rank; }
  std::uint64_t rank(Element x) const { return x; }

  Element zero() const { return 0; }
  Element one() const { return 1; }
  Element from_residue(Residue c) const { return c % p_; }
  Element add(Element a, Element b) const { return z_.add(a, b); }
  Element sub(Element a, Element b) const { return z_.sub(a, b); }
  Element mul(Element a, Element b) const { return z_.mul(a, b); }
  Element pow(Element a, const Natural& e) const;
  bool is_zero(Element a) const { return a == 0; }

 private:
  std::uint64_t p_;
  Zmod z_;
};

/// F = Z/p[X]/(h) for monic irreducible h with deg h >= 2. Elements are
/// residues of degree < deg h, enumerated lexicographically on the
/// coefficient sequence read from the constant term upward (the constant
/// term is the most significant digit of the rank).
class QuotientField {
 public:
  using Element = ModPoly;

  /// Throws PreconditionError unless p is prime and h is monic, of degree
  /// at least 2 and irreducible over Z/p.
  QuotientField(std::uint64_t p, ModPoly h);

  std::uint64_t characteristic() const { return p_; }
  const ModPoly& modulus_poly() const { return h_; }
  std::size_t degree() const { return *h_.degree(); }
  /// p^deg h
  Natural order() const;
  /// Field size as a machine word; throws OutOfRangeError if it does not fit.
  std::uint64_t size() const;

  Element element(std::uint64_t rank) const;
  std::uint64_t rank(const Element& x) const;

  Element zero() const { return ModPoly(p_); }
  Element one() const { return ModPoly::constant(p_, 1); }
  Element from_residue(Residue c) const { return ModPoly::constant(p_, c); }
  Element reduce(const ModPoly& f) const;
  Element add(const Element& a, const Element& b) const { return a + b; }
  Element sub(const Element& a, const Element& b) const { return a - b; }
  Element mul(const Element& a, const Element& b) const;
  Element pow(const Element& a, const Natural& e) const;
  bool is_zero(const Element& a) const { return a.is_zero(); }

 private:
  std::uint64_t p_;
  ModPoly h_;
};

}  // namespace aks
