// Acceptance run: one PASS/FAIL line per criterion, then per-suite detail.
// Exits nonzero when any criterion fails.

#include <cstdio>
#include <iostream>
#include <string>
#include <thread>
#include <vector>

#include "aks/error.hpp"
#include "aks/fastdiv.hpp"
#include "aks/verify.hpp"

namespace {

struct SuiteRun {
  std::string name;
  aks::VerifyOptions options;
  std::uint64_t min_cases = 1;
};

struct Outcome {
  bool pass = true;
  std::string summary;
  std::vector<std::string> detail;
};

unsigned jobs() { return std::max(1u, std::thread::hardware_concurrency()); }

Outcome run_suites(const std::vector<SuiteRun>& runs, double max_seconds = 0) {
  Outcome out;
  for (const auto& run : runs) {
    const aks::VerifyReport rep = aks::run_suite(run.name, run.options);
    const bool enough = rep.cases_run >= run.min_cases;
    const bool in_time = max_seconds <= 0 || rep.elapsed.count() <= max_seconds;
    out.pass = out.pass && rep.passed() && enough && in_time;
    char elapsed[32];
    std::snprintf(elapsed, sizeof elapsed, "%.1fs", rep.elapsed.count());
    if (!out.summary.empty()) out.summary += "; ";
    out.summary += run.name + ": " + std::to_string(rep.cases_run) + " cases, " +
                   std::to_string(rep.failures.size()) + " failures, " + elapsed;
    if (!enough) out.summary += " (fewer than " + std::to_string(run.min_cases) + " cases)";
    if (!in_time) out.summary += " (over the time budget)";
    out.detail.push_back(aks::format_report(rep, 5));
  }
  return out;
}

Outcome bench_integrity() {
  Outcome out;
  try {
    const aks::BenchReport rep = aks::bench_divide({64, 256, 1024, 4096}, 2147483647, 5);
    out.summary = "0 mismatches; schoolbook/ks ratios";
    for (const auto& row : rep.rows) {
      char buf[64];
      std::snprintf(buf, sizeof buf, " d=%zu:%.2f", row.degree, row.ratio);
      out.summary += buf;
    }
    out.detail.push_back(aks::bench_report_csv(rep));
  } catch (const aks::PropertyViolation& e) {
    out.pass = false;
    out.summary = e.what();
  }
  return out;
}

}  // namespace

int main() {
  using aks::VerifyOptions;
  const unsigned j = jobs();
  const VerifyOptions base{.jobs = j};

  struct Criterion {
    const char* id;
    const char* title;
    Outcome outcome;
  };
  std::vector<Criterion> results;
  auto record = [&](const char* id, const char* title, Outcome o) {
    std::cout << id << ' ' << (o.pass ? "PASS" : "FAIL") << "  " << title << "  [" << o.summary << "]"
              << std::endl;
    results.push_back({id, title, std::move(o)});
  };

  record("AC1", "AKS agrees with trial division, 2 <= n <= 20000, single-threaded <= 10 min",
         run_suites({{"oracle", {.max_n = 20000, .jobs = 1}, 19999}}, 600.0));
  record("AC2", "2^floor(m/2) <= lcm(1..m) for m <= 2000", run_suites({{"lcm-bound", {.max_m = 2000, .jobs = j}, 2000}}));
  record("AC3", "find_r bound and order for 2 <= x <= 5000", run_suites({{"lemma-d", {.max_n = 5000, .jobs = j}, 4999}}));
  record("AC4", "Legendre valuation sums, n <= 500, p <= 100",
         run_suites({{"legendre", {.max_n = 500, .max_p = 100, .jobs = j}, 500}}));
  record("AC5", "sum of phi(d) over d | r equals r, r <= 2000", run_suites({{"totient-sum", {.max_r = 2000, .jobs = j}, 2000}}));
  record("AC6", "cyclotomic factorization and coprimality, p <= 60", run_suites({{"cyclotomic", {.max_p = 60, .jobs = j}}}));
  record("AC7", "generalized Fermat congruence, p <= 31", run_suites({{"gflt", {.max_p = 31, .jobs = j}}}));
  record("AC8", "reversal division equals long division; inverses agree",
         run_suites({{"division", {.max_n = 10000, .max_m = 256, .jobs = j}, 11000}}));
  record("AC9", "CNS bijection m <= 16; sigma injective",
         run_suites({{"cns", {.max_m = 16, .jobs = j}}, {"sigma", {.max_n = 100000, .max_m = 16, .jobs = j}}}));
  record("AC10", "root-index injection, >= 1000 random G over Z/p, p <= 101",
         run_suites({{"rub", {.max_n = 1000, .max_p = 101, .jobs = j}, 1000}}));
  record("AC11", "introspectivity closure, >= 500 established cases",
         run_suites({{"introspectivity", {.max_n = 500, .jobs = j}, 500}}));
  record("AC12", "tau distinct on >= 20 harvested primes x 200 pairs",
         run_suites({{"lemma-f", {.max_n = 20, .max_m = 200, .jobs = j}, 20}}));
  record("AC13", "inequality chain on harvested sets; standalone binomial bounds",
         run_suites({{"lemma-h", {.max_n = 5000, .max_m = 40, .jobs = j}}}));
  record("AC14", "Pascal, factorial, p | binom(p, m), binomial expansion",
         run_suites({{"pascal", base}, {"binomial", base}, {"binom-div", base}}));
  record("AC15", "division benchmark cross-check at degrees 64..4096", bench_integrity());

  int failed = 0;
  for (const auto& r : results) failed += !r.outcome.pass;
  std::cout << "\n" << results.size() - failed << "/" << results.size() << " criteria passed\n";
  for (const auto& r : results) {
    std::cout << "\n== " << r.id << " ==\n";
    for (const auto& d : r.outcome.detail) std::cout << d;
  }
  return failed == 0 ? 0 : 1;
}
