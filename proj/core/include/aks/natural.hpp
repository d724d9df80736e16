#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>

namespace aks {

/// Arbitrary-precision nonnegative integer. GMP keeps it canonical.
using Natural = mpz_class;
/// Signed arbitrary-precision integer (Bezout coefficients).
using Integer = mpz_class;

/// Length of the binary representation; bitlen(0) == 0.
inline std::size_t bitlen(const Natural& x) {
  return sgn(x) == 0 ? 0 : mpz_sizeinbase(x.get_mpz_t(), 2);
}

inline std::size_t bitlen(std::uint64_t x) {
  return x == 0 ? 0 : 64 - static_cast<std::size_t>(__builtin_clzll(x));
}

inline bool fits_u64(const Natural& x) {
  return sgn(x) >= 0 && bitlen(x) <= 64;
}

inline std::uint64_t to_u64(const Natural& x) {
  static_assert(sizeof(unsigned long) == 8, "LP64 platform expected");
  return x.get_ui();
}

inline Natural from_u64(std::uint64_t x) {
  return Natural(static_cast<unsigned long>(x));
}

inline std::string to_string(const Natural& x) { return x.get_str(10); }

inline Natural pow(const Natural& base, unsigned long exp) {
  Natural out;
  mpz_pow_ui(out.get_mpz_t(), base.get_mpz_t(), exp);
  return out;
}

inline Natural pow2(unsigned long exp) {
  Natural out;
  mpz_ui_pow_ui(out.get_mpz_t(), 2, exp);
  return out;
}

/// Parses a nonnegative decimal literal or a 0x-prefixed hex literal.
/// Returns nullopt on anything else (signs, whitespace, empty digits).
std::optional<Natural> parse_natural(std::string_view text);

}  // namespace aks
