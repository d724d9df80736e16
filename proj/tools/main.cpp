// aks: primality test, JSON trace, property suites and the division benchmark.
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "aks/aks.hpp"
#include "aks/error.hpp"
#include "aks/fastdiv.hpp"
#include "aks/numtheory.hpp"
#include "aks/trace_json.hpp"
#include "aks/verify.hpp"

namespace {

constexpr int kPrime = 0;
constexpr int kComposite = 1;
constexpr int kUsage = 2;

int verdict_code(aks::Verdict v) { return v == aks::Verdict::prime ? kPrime : kComposite; }

std::optional<aks::Natural> parse_or_report(const std::string& text) {
  auto n = aks::parse_natural(text);
  if (!n) std::cerr << "aks: '" << text << "' is not a nonnegative integer\n";
  return n;
}

int cmd_test(const std::string& text) {
  const auto n = parse_or_report(text);
  if (!n) return kUsage;
  const aks::AksResult res = aks::aks_is_prime(*n);
  std::cout << aks::to_string(res.verdict) << '\n';
  return verdict_code(res.verdict);
}

int cmd_trace(const std::string& text, const std::string& out_path) {
  const auto n = parse_or_report(text);
  if (!n) return kUsage;
  const aks::AksResult res = aks::aks_is_prime(*n);
  const std::string json = aks::trace_to_json(res.trace) + "\n";
  if (out_path.empty()) {
    std::cout << json;
  } else {
    std::ofstream file(out_path);
    if (!file || !(file << json) || !file.flush()) {
      std::cerr << "aks: cannot write " << out_path << '\n';
      return kUsage;
    }
  }
  return verdict_code(res.verdict);
}

int cmd_verify(const std::string& suite, aks::VerifyOptions options) {
  if (!aks::is_suite(suite)) {
    std::cerr << "aks: unknown suite '" << suite << "'; known suites:";
    for (const auto& name : aks::suite_names()) std::cerr << ' ' << name;
    std::cerr << '\n';
    return kUsage;
  }
  if (const char* env = std::getenv("AKS_SEED")) {
    const auto seed = aks::parse_natural(env);
    if (!seed || !aks::fits_u64(*seed)) {
      std::cerr << "aks: AKS_SEED must be a 64-bit nonnegative integer\n";
      return kUsage;
    }
    options.seed = aks::to_u64(*seed);
  }
  const aks::VerifyReport report = aks::run_suite(suite, options);
  std::cout << aks::format_report(report);
  return report.passed() ? 0 : 1;
}

int cmd_bench(const std::vector<std::size_t>& degrees, std::uint64_t modulus, std::size_t trials,
              const std::string& json_path) {
  if (!aks::is_prime_trial(modulus)) {
    std::cerr << "aks: modulus " << modulus << " is not prime\n";
    return kUsage;
  }
  if (degrees.empty() || trials == 0) {
    std::cerr << "aks: need at least one degree and one trial\n";
    return kUsage;
  }
  for (std::size_t i = 1; i < degrees.size(); ++i) {
    if (degrees[i] <= degrees[i - 1]) {
      std::cerr << "aks: degrees must be strictly ascending\n";
      return kUsage;
    }
  }
  aks::BenchReport report;
  try {
    report = aks::bench_divide(degrees, modulus, trials);
  } catch (const aks::PropertyViolation& e) {
    std::cerr << "aks: cross-check mismatch: " << e.what() << '\n';
    return 1;
  }
  std::printf("modulus %llu, %zu trials per degree\n", static_cast<unsigned long long>(modulus), trials);
  std::printf("%8s %16s %16s %10s\n", "degree", "schoolbook_ns", "ks_ns", "ratio");
  for (const auto& row : report.rows) {
    std::printf("%8zu %16.0f %16.0f %10.3f\n", row.degree, row.schoolbook_ns, row.ks_ns, row.ratio);
  }
  if (!json_path.empty()) {
    std::ofstream file(json_path);
    if (!file || !(file << aks::bench_report_json(report) << '\n') || !file.flush()) {
      std::cerr << "aks: cannot write " << json_path << '\n';
      return kUsage;
    }
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"AKS primality test and verification harness"};
  app.require_subcommand(1);

  std::string number;
  std::string out_path;
  auto* test = app.add_subcommand("test", "Decide primality; exit 0 for PRIME, 1 for COMPOSITE");
  test->add_option("n", number, "Decimal or 0x-hex integer")->required();

  auto* trace = app.add_subcommand("trace", "Run the test and emit its JSON trace");
  trace->add_option("n", number, "Decimal or 0x-hex integer")->required();
  trace->add_option("--out", out_path, "Write the trace here instead of stdout");

  std::string suite;
  aks::VerifyOptions options;
  std::uint64_t max_n = 0, max_p = 0, max_m = 0, max_r = 0;
  auto* verify = app.add_subcommand("verify", "Run a property suite");
  verify->add_option("suite", suite, "Suite name")->required();
  auto* opt_n = verify->add_option("--max-n", max_n, "Upper bound on n (suite-specific)");
  auto* opt_p = verify->add_option("--max-p", max_p, "Upper bound on primes p");
  auto* opt_m = verify->add_option("--max-m", max_m, "Upper bound on m (suite-specific)");
  auto* opt_r = verify->add_option("--max-r", max_r, "Upper bound on r");
  verify->add_option("--seed", options.seed, "Seed for randomized suites (AKS_SEED overrides)");
  verify->add_option("--jobs", options.jobs, "Worker threads")->check(CLI::PositiveNumber);

  std::vector<std::size_t> degrees{64, 256, 1024, 4096};
  std::uint64_t modulus = 2147483647;
  std::size_t trials = 5;
  std::string json_path;
  auto* bench = app.add_subcommand("bench", "Time schoolbook against reversal-based division");
  bench->add_option("--degrees", degrees, "Ascending divisor degrees")->delimiter(',');
  bench->add_option("--modulus", modulus, "Prime modulus");
  bench->add_option("--trials", trials, "Divisions per degree");
  bench->add_option("--json", json_path, "Also write the report as JSON");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kUsage;
  }

  try {
    if (*test) return cmd_test(number);
    if (*trace) return cmd_trace(number, out_path);
    if (*verify) {
      if (*opt_n) options.max_n = max_n;
      if (*opt_p) options.max_p = max_p;
      if (*opt_m) options.max_m = max_m;
      if (*opt_r) options.max_r = max_r;
      return cmd_verify(suite, options);
    }
    if (*bench) return cmd_bench(degrees, modulus, trials, json_path);
  } catch (const aks::PreconditionError& e) {
    std::cerr << "aks: " << e.what() << '\n';
    return kUsage;
  } catch (const std::exception& e) {
    std::cerr << "aks: " << e.what() << '\n';
    return 1;
  }
  return kUsage;
}
