#include "aks/modpoly.hpp"

#include <algorithm>
#include <limits>
#include <sstream>
#include <utility>

#include "aks/error.hpp"

namespace aks {

namespace {

using u128 = unsigned __int128;

void check_same_ring(const ModPoly& f, const ModPoly& g, const char* op) {
  if (f.modulus() != g.modulus()) {
    throw ModulusMismatchError(std::string(op) + ": moduli differ (" +
                               std::to_string(f.modulus()) + " vs " +
                               std::to_string(g.modulus()) + ")");
  }
}

template <typename Acc>
std::vector<Residue> convolve_lazy(std::span<const Residue> a, std::span<const Residue> b,
                                   std::uint64_t m) {
  const std::size_t n = a.size() + b.size() - 1;
  std::vector<Acc> acc(n, 0);
  if (a.data() == b.data() && a.size() == b.size()) {
    for (std::size_t i = 0; i < a.size(); ++i) {
      const Acc ai = a[i];
      if (ai == 0) continue;
      Acc* out = acc.data() + i;
      for (std::size_t j = i + 1; j < a.size(); ++j) out[j] += ai * a[j];
    }
    for (std::size_t i = 0; i < a.size(); ++i) {
      acc[2 * i] *= 2;
      acc[2 * i] += static_cast<Acc>(a[i]) * a[i];
      if (2 * i + 1 < n) acc[2 * i + 1] *= 2;
    }
  } else {
    for (std::size_t j = 0; j < b.size(); ++j) {
      const Acc bj = b[j];
      if (bj == 0) continue;
      Acc* out = acc.data() + j;
      for (std::size_t i = 0; i < a.size(); ++i) out[i] += a[i] * bj;
    }
  }
  std::vector<Residue> c(n);
  for (std::size_t k = 0; k < n; ++k) c[k] = static_cast<Residue>(acc[k] % m);
  return c;
}

// Word-sized moduli: 32-bit operands let the compiler use widening
// 32x32->64 vector multiplies in the inner loop.
std::vector<Residue> convolve_narrow(std::span<const Residue> a, std::span<const Residue> b,
                                     std::uint64_t m) {
  const std::size_t n = a.size() + b.size() - 1;
  std::vector<std::uint32_t> a32(a.begin(), a.end());
  std::vector<std::uint64_t> acc(n, 0);
  const bool square = a.data() == b.data() && a.size() == b.size();
  if (square) {
    for (std::size_t i = 0; i < a32.size(); ++i) {
      const std::uint64_t ai = a32[i];
      if (ai == 0) continue;
      std::uint64_t* out = acc.data() + i;
      const std::uint32_t* src = a32.data();
      for (std::size_t j = i + 1; j < a32.size(); ++j) out[j] += ai * src[j];
    }
    for (std::size_t i = 0; i < a32.size(); ++i) {
      acc[2 * i] = 2 * acc[2 * i] + static_cast<std::uint64_t>(a32[i]) * a32[i];
      if (2 * i + 1 < n) acc[2 * i + 1] *= 2;
    }
  } else {
    for (std::size_t j = 0; j < b.size(); ++j) {
      const std::uint64_t bj = static_cast<std::uint32_t>(b[j]);
      if (bj == 0) continue;
      std::uint64_t* out = acc.data() + j;
      const std::uint32_t* src = a32.data();
      for (std::size_t i = 0; i < a32.size(); ++i) out[i] += src[i] * bj;
    }
  }
  std::vector<Residue> c(n);
  for (std::size_t k = 0; k < n; ++k) c[k] = acc[k] % m;
  return c;
}

}  // namespace

Residue Zmod::pow(Residue base, std::uint64_t exp) const {
  Residue result = 1 % m;
  base %= m;
  while (exp != 0) {
    if (exp & 1) result = mul(result, base);
    base = mul(base, base);
    exp >>= 1;
  }
  return result;
}

std::optional<Residue> Zmod::inverse(Residue a) const {
  // Extended Euclid on signed 128-bit values.
  __int128 old_r = a % m, r = m;
  __int128 old_s = 1, s = 0;
  while (r != 0) {
    const __int128 q = old_r / r;
    __int128 t = old_r - q * r;
    old_r = r;
    r = t;
    t = old_s - q * s;
    old_s = s;
    s = t;
  }
  if (old_r != 1) return std::nullopt;
  __int128 inv = old_s % static_cast<__int128>(m);
  if (inv < 0) inv += m;
  return static_cast<Residue>(inv);
}

Residue Zmod::inverse_or_throw(Residue a, const char* what) const {
  auto inv = inverse(a);
  if (!inv) {
    throw PreconditionError(std::string(what) + ": " + std::to_string(a) +
                            " is not invertible mod " + std::to_string(m));
  }
  return *inv;
}

ModPoly::ModPoly(std::uint64_t modulus) : modulus_(modulus) {
  if (modulus < 2) throw PreconditionError("ModPoly: modulus must be >= 2");
}

ModPoly::ModPoly(std::uint64_t modulus, std::vector<Residue> coeffs)
    : modulus_(modulus), coeffs_(std::move(coeffs)) {
  if (modulus < 2) throw PreconditionError("ModPoly: modulus must be >= 2");
  for (auto& c : coeffs_) c %= modulus_;
  normalize();
}

ModPoly ModPoly::constant(std::uint64_t modulus, Residue c) {
  return ModPoly(modulus, {c});
}

ModPoly ModPoly::monomial(std::uint64_t modulus, Residue c, std::size_t k) {
  std::vector<Residue> coeffs(k + 1, 0);
  coeffs[k] = c;
  return ModPoly(modulus, std::move(coeffs));
}

ModPoly ModPoly::linear(std::uint64_t modulus, Residue a) {
  return ModPoly(modulus, {a % modulus, 1});
}

ModPoly ModPoly::x_pow_minus_one(std::uint64_t modulus, std::size_t k) {
  std::vector<Residue> coeffs(k + 1, 0);
  coeffs[0] = modulus - 1;
  coeffs[k] = (coeffs[k] + 1) % modulus;
  return ModPoly(modulus, std::move(coeffs));
}

void ModPoly::normalize() {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

std::optional<std::size_t> ModPoly::as_x_pow_minus_one() const {
  const std::size_t n = coeffs_.size();
  if (n < 2 || coeffs_.back() != 1 || coeffs_[0] != modulus_ - 1) return std::nullopt;
  for (std::size_t i = 1; i + 1 < n; ++i) {
    if (coeffs_[i] != 0) return std::nullopt;
  }
  return n - 1;
}

std::string ModPoly::to_string() const {
  if (coeffs_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (std::size_t i = coeffs_.size(); i-- > 0;) {
    const Residue c = coeffs_[i];
    if (c == 0) continue;
    if (!first) os << " + ";
    first = false;
    if (i == 0) {
      os << c;
      continue;
    }
    if (c != 1) os << c;
    os << 'X';
    if (i > 1) os << '^' << i;
  }
  return os.str();
}

ModPoly operator+(const ModPoly& f, const ModPoly& g) {
  check_same_ring(f, g, "add");
  const Zmod z = f.ring();
  std::vector<Residue> out(std::max(f.size(), g.size()));
  for (std::size_t i = 0; i < out.size(); ++i) out[i] = z.add(f[i], g[i]);
  return ModPoly(f.modulus(), std::move(out));
}

ModPoly operator-(const ModPoly& f, const ModPoly& g) {
  check_same_ring(f, g, "sub");
  const Zmod z = f.ring();
  std::vector<Residue> out(std::max(f.size(), g.size()));
  for (std::size_t i = 0; i < out.size(); ++i) out[i] = z.sub(f[i], g[i]);
  return ModPoly(f.modulus(), std::move(out));
}

ModPoly operator-(const ModPoly& f) { return ModPoly(f.modulus()) - f; }

std::vector<Residue> convolve(std::span<const Residue> a, std::span<const Residue> b,
                              std::uint64_t m) {
  if (a.empty() || b.empty()) return {};
  const std::size_t terms = std::min(a.size(), b.size());
  const u128 max_product = static_cast<u128>(m - 1) * (m - 1);
  if (max_product == 0) return std::vector<Residue>(a.size() + b.size() - 1, 0);
  if (max_product <= std::numeric_limits<std::uint64_t>::max() / terms) {
    if (m <= 0x100000000ull) return convolve_narrow(a, b, m);
    return convolve_lazy<std::uint64_t>(a, b, m);
  }
  if (max_product <= std::numeric_limits<u128>::max() / terms) {
    return convolve_lazy<u128>(a, b, m);
  }
  const Zmod z{m};
  std::vector<Residue> c(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i) {
    for (std::size_t j = 0; j < b.size(); ++j) c[i + j] = z.add(c[i + j], z.mul(a[i], b[j]));
  }
  return c;
}

ModPoly operator*(const ModPoly& f, const ModPoly& g) {
  check_same_ring(f, g, "mul");
  return ModPoly(f.modulus(), convolve(f.coeffs(), g.coeffs(), f.modulus()));
}

ModPoly scale(const ModPoly& f, Residue c) {
  const Zmod z = f.ring();
  c %= f.modulus();
  std::vector<Residue> out(f.coeffs().begin(), f.coeffs().end());
  for (auto& x : out) x = z.mul(x, c);
  return ModPoly(f.modulus(), std::move(out));
}

ModPoly compose_xk(const ModPoly& f, std::size_t k) {
  if (f.is_zero()) return f;
  const Zmod z = f.ring();
  if (k == 0) {
    Residue sum = 0;
    for (Residue c : f.coeffs()) sum = z.add(sum, c);
    return ModPoly::constant(f.modulus(), sum);
  }
  std::vector<Residue> out((f.size() - 1) * k + 1, 0);
  for (std::size_t i = 0; i < f.size(); ++i) out[i * k] = f[i];
  return ModPoly(f.modulus(), std::move(out));
}

DivMod poly_long_div(const ModPoly& p, const ModPoly& s) {
  check_same_ring(p, s, "poly_long_div");
  if (s.is_zero()) throw ZeroDivisorError("poly_long_div: division by the zero polynomial");
  const std::uint64_t m = p.modulus();
  if (p.size() < s.size()) return {ModPoly(m), p};
  const Zmod z{m};
  const Residue lead_inv = z.inverse_or_throw(s.lead(), "poly_long_div");
  std::vector<Residue> rem(p.coeffs().begin(), p.coeffs().end());
  const std::size_t ds = s.size() - 1;
  std::vector<Residue> quot(p.size() - ds, 0);
  for (std::size_t k = quot.size(); k-- > 0;) {
    const Residue q = z.mul(rem[k + ds], lead_inv);
    quot[k] = q;
    if (q == 0) continue;
    const Residue nq = z.neg(q);
    for (std::size_t j = 0; j <= ds; ++j) rem[k + j] = z.add(rem[k + j], z.mul(nq, s[j]));
  }
  rem.resize(ds);
  return {ModPoly(m, std::move(quot)), ModPoly(m, std::move(rem))};
}

ModPoly reduce(const ModPoly& f, const ModPoly& g) {
  check_same_ring(f, g, "reduce");
  if (auto r = g.as_x_pow_minus_one()) {
    if (f.size() <= *r) return f;
    const Zmod z = f.ring();
    std::vector<Residue> out(*r, 0);
    for (std::size_t i = 0; i < f.size(); ++i) out[i % *r] = z.add(out[i % *r], f[i]);
    return ModPoly(f.modulus(), std::move(out));
  }
  return poly_long_div(f, g).remainder;
}

bool divides(const ModPoly& d, const ModPoly& f) { return poly_long_div(f, d).remainder.is_zero(); }

ModPoly make_monic(const ModPoly& f) {
  if (f.is_zero() || f.is_monic()) return f;
  return scale(f, f.ring().inverse_or_throw(f.lead(), "make_monic"));
}

PolyBezout poly_xgcd(const ModPoly& f, const ModPoly& g) {
  check_same_ring(f, g, "poly_xgcd");
  if (f.is_zero() && g.is_zero()) throw ZeroDivisorError("poly_xgcd: gcd(0, 0) is undefined");
  const std::uint64_t m = f.modulus();
  ModPoly old_r = f, r = g;
  ModPoly old_s = ModPoly::constant(m, 1), s(m);
  ModPoly old_t(m), t = ModPoly::constant(m, 1);
  while (!r.is_zero()) {
    DivMod qr = poly_long_div(old_r, r);
    old_r = std::exchange(r, std::move(qr.remainder));
    old_s = std::exchange(s, old_s - qr.quotient * s);
    old_t = std::exchange(t, old_t - qr.quotient * t);
  }
  const Residue inv = f.ring().inverse_or_throw(old_r.lead(), "poly_xgcd");
  return {scale(old_r, inv), scale(old_s, inv), scale(old_t, inv)};
}

ModPoly poly_gcd(const ModPoly& f, const ModPoly& g) { return poly_xgcd(f, g).h; }

ModPoly poly_derivative(const ModPoly& f) {
  if (f.size() <= 1) return ModPoly(f.modulus());
  const Zmod z = f.ring();
  std::vector<Residue> out(f.size() - 1);
  for (std::size_t i = 0; i < out.size(); ++i) out[i] = z.mul(z.reduce(i + 1), f[i + 1]);
  return ModPoly(f.modulus(), std::move(out));
}

ModPoly mulmod(const ModPoly& a, const ModPoly& b, const ModPoly& g) { return reduce(a * b, g); }

namespace {

void check_modulus_poly(const ModPoly& g) {
  if (g.is_zero()) throw ZeroDivisorError("powmod: reduction modulo the zero polynomial");
  if (!g.ring().inverse(g.lead())) {
    throw PreconditionError("powmod: leading coefficient of the modulus polynomial is not a unit mod " +
                            std::to_string(g.modulus()));
  }
}

}  // namespace

ModPoly powmod(const ModPoly& f, const Natural& e, const ModPoly& g) {
  check_same_ring(f, g, "powmod");
  check_modulus_poly(g);
  const ModPoly base = reduce(f, g);
  ModPoly result = reduce(ModPoly::constant(f.modulus(), 1), g);
  for (std::size_t bit = bitlen(e); bit-- > 0;) {
    result = mulmod(result, result, g);
    if (mpz_tstbit(e.get_mpz_t(), bit) != 0) result = mulmod(result, base, g);
  }
  return result;
}

ModPoly powmod(const ModPoly& f, std::uint64_t e, const ModPoly& g) {
  return powmod(f, from_u64(e), g);
}

Residue evaluate(const ModPoly& f, Residue x) {
  const Zmod z = f.ring();
  x %= f.modulus();
  Residue acc = 0;
  for (std::size_t i = f.size(); i-- > 0;) acc = z.add(z.mul(acc, x), f[i]);
  return acc;
}

}  // namespace aks
