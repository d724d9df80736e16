#pragma once

// Polynomial division by coefficient reversal and truncated power-series
// inversion of the reversed divisor, plus a differential benchmark
// against schoolbook long division.

#include <cstdint>
#include <string>
#include <vector>

#include "aks/modpoly.hpp"

namespace aks {

enum class DivisionMethod { schoolbook, kung_sieveking };

std::string to_string(DivisionMethod method);

struct DivisionResult {
  ModPoly quotient;
  ModPoly remainder;
  DivisionMethod method;
};

/// Coefficient of X^i becomes the coefficient of X^{frame - i}. Throws
/// OutOfRangeError when deg f > frame.
ModPoly reverse(const ModPoly& f, std::size_t frame);

/// f mod X^len
ModPoly truncate(const ModPoly& f, std::size_t len);

/// sum_{i=0}^{k} (1 - s)^i mod X^{k+1}, the literal geometric series. Slow
/// reference; requires s(0) = 1.
ModPoly truncated_geom_inverse(const ModPoly& s_rev, std::size_t k);

/// The inverse of s mod X^{k+1} by precision doubling g <- g(2 - s g).
/// Requires s(0) = 1.
ModPoly newton_inverse(const ModPoly& s_rev, std::size_t k);

enum class InverseMethod { geometric_series, precision_doubling };

/// P = S*Q + R via reversal: with n = deg P, m = deg S and S scaled to be
/// monic, Q is the reversed low n - m + 1 coefficients of
/// rev_n(P) * rev_m(S)^{-1}. Requires lead(S) to be a unit.
DivisionResult ks_divide(const ModPoly& p, const ModPoly& s,
                         InverseMethod inverse = InverseMethod::precision_doubling);

DivisionResult schoolbook_divide(const ModPoly& p, const ModPoly& s);

struct BenchRow {
  std::size_t degree;
  double schoolbook_ns;
  double ks_ns;
  double ratio;  ///< schoolbook_ns / ks_ns
};

struct BenchReport {
  std::uint64_t modulus;
  std::vector<BenchRow> rows;
};

/// Divides random degree-2d dividends by random degree-d divisors with both
/// methods, `trials` times per degree, and reports mean wall time. Any
/// disagreement between the two methods throws PropertyViolation.
BenchReport bench_divide(const std::vector<std::size_t>& degrees, std::uint64_t modulus,
                         std::size_t trials, std::uint64_t seed = 1);

std::string bench_report_json(const BenchReport& report);
std::string bench_report_csv(const BenchReport& report);

}  // namespace aks
