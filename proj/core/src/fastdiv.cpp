#include "aks/fastdiv.hpp"

#include <algorithm>
#include <chrono>
#include <random>
#include <sstream>

#include <nlohmann/json.hpp>

#include "aks/error.hpp"
#include "aks/numtheory.hpp"

namespace aks {

namespace {

void require_unit_constant(const ModPoly& s, const char* what) {
  if (s[0] != 1) throw PreconditionError(std::string(what) + ": constant term must be 1");
}

ModPoly mul_trunc(const ModPoly& a, const ModPoly& b, std::size_t len) {
  const auto ac = a.coeffs().first(std::min(a.size(), len));
  const auto bc = b.coeffs().first(std::min(b.size(), len));
  std::vector<Residue> c = convolve(ac, bc, a.modulus());
  if (c.size() > len) c.resize(len);
  return ModPoly(a.modulus(), std::move(c));
}

ModPoly random_poly(std::mt19937_64& rng, std::uint64_t m, std::size_t degree) {
  std::uniform_int_distribution<std::uint64_t> coeff(0, m - 1), nonzero(1, m - 1);
  std::vector<Residue> c(degree + 1);
  for (auto& x : c) x = coeff(rng);
  c[degree] = nonzero(rng);
  return ModPoly(m, std::move(c));
}

}  // namespace

std::string to_string(DivisionMethod method) {
  return method == DivisionMethod::schoolbook ? "schoolbook" : "kung-sieveking";
}

ModPoly reverse(const ModPoly& f, std::size_t frame) {
  if (f.is_zero()) return f;
  if (*f.degree() > frame) {
    throw OutOfRangeError("reverse: degree " + std::to_string(*f.degree()) + " exceeds frame " +
                          std::to_string(frame));
  }
  std::vector<Residue> out(frame + 1, 0);
  for (std::size_t i = 0; i < f.size(); ++i) out[frame - i] = f[i];
  return ModPoly(f.modulus(), std::move(out));
}

ModPoly truncate(const ModPoly& f, std::size_t len) {
  if (f.size() <= len) return f;
  return ModPoly(f.modulus(), std::vector<Residue>(f.coeffs().begin(), f.coeffs().begin() + len));
}

ModPoly truncated_geom_inverse(const ModPoly& s_rev, std::size_t k) {
  require_unit_constant(s_rev, "truncated_geom_inverse");
  const std::uint64_t m = s_rev.modulus();
  const ModPoly one = ModPoly::constant(m, 1);
  const ModPoly u = truncate(one - s_rev, k + 1);
  // Horner: 1 + u(1 + u(1 + ...)) with k factors of u.
  ModPoly acc = one;
  for (std::size_t i = 0; i < k; ++i) acc = one + mul_trunc(u, acc, k + 1);
  return acc;
}

ModPoly newton_inverse(const ModPoly& s_rev, std::size_t k) {
  require_unit_constant(s_rev, "newton_inverse");
  const std::uint64_t m = s_rev.modulus();
  const ModPoly two = ModPoly::constant(m, 2);
  ModPoly g = ModPoly::constant(m, 1);
  std::size_t precision = 1;
  while (precision < k + 1) {
    precision = std::min(2 * precision, k + 1);
    const ModPoly e = mul_trunc(s_rev, g, precision);
    g = mul_trunc(g, two - e, precision);
  }
  return g;
}

DivisionResult ks_divide(const ModPoly& p, const ModPoly& s, InverseMethod inverse) {
  if (p.modulus() != s.modulus()) throw ModulusMismatchError("ks_divide: moduli differ");
  if (s.is_zero()) throw ZeroDivisorError("ks_divide: division by the zero polynomial");
  const std::uint64_t mod = p.modulus();
  if (degree_less(p.degree(), s.degree())) {
    return {ModPoly(mod), p, DivisionMethod::kung_sieveking};
  }
  const std::size_t n = *p.degree();
  const std::size_t m = *s.degree();
  const std::size_t k = n - m;

  const Residue lead_inv = p.ring().inverse_or_throw(s.lead(), "ks_divide");
  const ModPoly s_monic = scale(s, lead_inv);
  const ModPoly p_rev = reverse(p, n);
  const ModPoly s_rev = reverse(s_monic, m);
  const ModPoly s_inv = inverse == InverseMethod::precision_doubling ? newton_inverse(s_rev, k)
                                                                     : truncated_geom_inverse(s_rev, k);
  const ModPoly h = mul_trunc(p_rev, s_inv, k + 1);
  // Q = sum_i c_{k-i} X^i, then undo the monic scaling.
  const ModPoly q = scale(reverse(h, k), lead_inv);
  ModPoly r = p - s * q;
  return {q, std::move(r), DivisionMethod::kung_sieveking};
}

DivisionResult schoolbook_divide(const ModPoly& p, const ModPoly& s) {
  DivMod qr = poly_long_div(p, s);
  return {std::move(qr.quotient), std::move(qr.remainder), DivisionMethod::schoolbook};
}

BenchReport bench_divide(const std::vector<std::size_t>& degrees, std::uint64_t modulus,
                         std::size_t trials, std::uint64_t seed) {
  if (!is_prime_trial(modulus)) throw PreconditionError("bench_divide: modulus must be prime");
  if (!std::is_sorted(degrees.begin(), degrees.end())) {
    throw PreconditionError("bench_divide: degrees must be ascending");
  }
  using clock = std::chrono::steady_clock;
  BenchReport report{modulus, {}};
  std::mt19937_64 rng(seed);
  for (std::size_t d : degrees) {
    double school_total = 0, ks_total = 0;
    for (std::size_t t = 0; t < trials; ++t) {
      const ModPoly p = random_poly(rng, modulus, 2 * d);
      const ModPoly s = random_poly(rng, modulus, d);
      const auto t0 = clock::now();
      const DivisionResult a = schoolbook_divide(p, s);
      const auto t1 = clock::now();
      const DivisionResult b = ks_divide(p, s);
      const auto t2 = clock::now();
      if (a.quotient != b.quotient || a.remainder != b.remainder) {
        throw PropertyViolation("bench_divide: methods disagree at degree " + std::to_string(d));
      }
      school_total += std::chrono::duration<double, std::nano>(t1 - t0).count();
      ks_total += std::chrono::duration<double, std::nano>(t2 - t1).count();
    }
    const double n = trials == 0 ? 1.0 : static_cast<double>(trials);
    BenchRow row{d, school_total / n, ks_total / n, 0.0};
    row.ratio = row.ks_ns > 0 ? row.schoolbook_ns / row.ks_ns : 0.0;
    report.rows.push_back(row);
  }
  return report;
}

std::string bench_report_json(const BenchReport& report) {
  nlohmann::json rows = nlohmann::json::array();
  for (const auto& r : report.rows) {
    rows.push_back({{"degree", r.degree}, {"schoolbook_ns", r.schoolbook_ns}, {"ks_ns", r.ks_ns}, {"ratio", r.ratio}});
  }
  return nlohmann::json{{"modulus", report.modulus}, {"rows", rows}}.dump(2);
}

std::string bench_report_csv(const BenchReport& report) {
  std::ostringstream os;
  os << "degree,schoolbook_ns,ks_ns,ratio\n";
  for (const auto& r : report.rows) {
    os << r.degree << ',' << r.schoolbook_ns << ',' << r.ks_ns << ',' << r.ratio << '\n';
  }
  return os.str();
}

}  // namespace aks
