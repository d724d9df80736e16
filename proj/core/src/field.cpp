#include "aks/field.hpp"

#include <string>

#include "aks/cyclotomic.hpp"
#include "aks/error.hpp"
#include "aks/numtheory.hpp"

namespace aks {

PrimeField::PrimeField(std::uint64_t p) : p_(p), z_{p} {
  if (!is_prime_trial(p)) throw PreconditionError("PrimeField: " + std::to_string(p) + " is not prime");
}

PrimeField::Element PrimeField::pow(Element a, const Natural& e) const {
  const Natural reduced = e % from_u64(p_ - 1);
  // a^e with e >= 1 equals a^(e mod (p-1)) for units; zero stays zero.
  if (a == 0) return sgn(e) == 0 ? 1 : 0;
  return z_.pow(a, to_u64(reduced));
}

QuotientField::QuotientField(std::uint64_t p, ModPoly h) : p_(p), h_(std::move(h)) {
  if (!is_prime_trial(p)) throw PreconditionError("QuotientField: " + std::to_string(p) + " is not prime");
  if (h_.modulus() != p) throw ModulusMismatchError("QuotientField: h is not over Z/p");
  if (!h_.is_monic()) throw PreconditionError("QuotientField: h must be monic");
  if (*h_.degree() < 2) throw PreconditionError("QuotientField: deg h must be >= 2");
  if (!is_irreducible(h_)) {
    throw PreconditionError("QuotientField: " + h_.to_string() + " is reducible over Z/" + std::to_string(p));
  }
}

Natural QuotientField::order() const { return aks::pow(from_u64(p_), degree()); }

std::uint64_t QuotientField::size() const {
  const Natural n = order();
  if (!fits_u64(n)) {
    throw OutOfRangeError("QuotientField: field has too many elements to enumerate");
  }
  return to_u64(n);
}

QuotientField::Element QuotientField::element(std::uint64_t rank) const {
  const std::size_t d = degree();
  std::vector<Residue> coeffs(d, 0);
  for (std::size_t i = d; i-- > 0;) {
    coeffs[i] = rank % p_;
    rank /= p_;
  }
  return ModPoly(p_, std::move(coeffs));
}

std::uint64_t QuotientField::rank(const Element& x) const {
  std::uint64_t r = 0;
  for (std::size_t i = 0; i < degree(); ++i) r = r * p_ + x[i];
  return r;
}

QuotientField::Element QuotientField::reduce(const ModPoly& f) const { return aks::reduce(f, h_); }

QuotientField::Element QuotientField::mul(const Element& a, const Element& b) const {
  return aks::reduce(a * b, h_);
}

QuotientField::Element QuotientField::pow(const Element& a, const Natural& e) const {
  return powmod(a, e, h_);
}

}  // namespace aks
