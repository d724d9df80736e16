#pragma once

// Root indexing: an explicit injection from the roots of a nonzero
// polynomial over a finite field into {1, ..., deg}.

#include <algorithm>
#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "aks/error.hpp"
#include "aks/field.hpp"
#include "aks/modpoly.hpp"
#include "aks/natural.hpp"

namespace aks {

template <class Element>
struct SparseTerm {
  Natural exponent;
  Element coefficient;
};

/// Short list of (exponent, coefficient) pairs with strictly ascending
/// exponents; exponents may be astronomically large.
template <class Element>
class SparsePoly {
 public:
  static constexpr std::size_t kDefaultMaxTerms = 64;

  explicit SparsePoly(std::vector<SparseTerm<Element>> terms,
                      std::size_t max_terms = kDefaultMaxTerms)
      : terms_(std::move(terms)) {
    if (terms_.size() > max_terms) throw OutOfRangeError("SparsePoly: too many terms");
    for (std::size_t i = 1; i < terms_.size(); ++i) {
      if (terms_[i - 1].exponent >= terms_[i].exponent) {
        throw PreconditionError("SparsePoly: exponents must be strictly ascending");
      }
    }
  }

  const std::vector<SparseTerm<Element>>& terms() const { return terms_; }

 private:
  std::vector<SparseTerm<Element>> terms_;
};

template <class Element>
struct RootIndexEntry {
  std::uint64_t rank;  ///< position of the root in the field enumeration
  Element root;
  std::uint64_t index;  ///< number of roots with rank <= this one
};

template <class Element>
class RootIndex {
 public:
  RootIndex(std::vector<RootIndexEntry<Element>> entries, Natural degree)
      : entries_(std::move(entries)), degree_(std::move(degree)) {}

  const std::vector<RootIndexEntry<Element>>& entries() const { return entries_; }
  std::size_t root_count() const { return entries_.size(); }
  const Natural& degree() const { return degree_; }
  std::uint64_t max_index() const { return entries_.empty() ? 0 : entries_.back().index; }

  /// Index of the root with the given enumeration rank, or nullopt when that
  /// element is not a root.
  std::optional<std::uint64_t> index_of_rank(std::uint64_t rank) const {
    auto it = std::lower_bound(entries_.begin(), entries_.end(), rank,
                               [](const RootIndexEntry<Element>& e, std::uint64_t r) { return e.rank < r; });
    if (it == entries_.end() || it->rank != rank) return std::nullopt;
    return it->index;
  }

 private:
  std::vector<RootIndexEntry<Element>> entries_;
  Natural degree_;
};

namespace detail {

template <class Field, class IsRoot>
RootIndex<typename Field::Element> index_roots(const Field& field, const Natural& degree, IsRoot&& is_root) {
  std::vector<RootIndexEntry<typename Field::Element>> entries;
  const std::uint64_t size = field.size();
  for (std::uint64_t rank = 0; rank < size; ++rank) {
    auto x = field.element(rank);
    if (!is_root(x)) continue;
    const std::uint64_t index = entries.size() + 1;
    if (cmp(degree, static_cast<unsigned long>(index)) < 0) {
      throw PropertyViolation("rub_index: more roots than the degree " + to_string(degree));
    }
    entries.push_back({rank, std::move(x), index});
  }
  return RootIndex<typename Field::Element>(std::move(entries), degree);
}

}  // namespace detail

/// Roots of a dense polynomial with coefficients in the prime subfield,
/// evaluated by Horner's rule at every field element in canonical order.
template <class Field>
RootIndex<typename Field::Element> rub_index(const Field& field, const ModPoly& g) {
  if (g.is_zero()) throw ZeroDivisorError("rub_index: zero polynomial");
  if (g.modulus() != field.characteristic()) throw ModulusMismatchError("rub_index: polynomial not over the prime subfield");
  return detail::index_roots(field, from_u64(*g.degree()), [&](const typename Field::Element& x) {
    auto acc = field.zero();
    for (std::size_t i = g.size(); i-- > 0;) acc = field.add(field.mul(acc, x), field.from_residue(g[i]));
    return field.is_zero(acc);
  });
}

/// Roots of a sparse polynomial; each term is evaluated by square and
/// multiply, so huge exponents stay cheap.
template <class Field>
RootIndex<typename Field::Element> rub_index(const Field& field,
                                             const SparsePoly<typename Field::Element>& g) {
  std::vector<SparseTerm<typename Field::Element>> live;
  for (const auto& t : g.terms()) {
    if (!field.is_zero(t.coefficient)) live.push_back(t);
  }
  if (live.empty()) throw ZeroDivisorError("rub_index: zero polynomial");
  const Natural degree = live.back().exponent;
  return detail::index_roots(field, degree, [&](const typename Field::Element& x) {
    auto acc = field.zero();
    for (const auto& t : live) acc = field.add(acc, field.mul(t.coefficient, field.pow(x, t.exponent)));
    return field.is_zero(acc);
  });
}

}  // namespace aks
