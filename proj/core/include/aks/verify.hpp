#pragma once

// Property suites: each one checks a family of statements over a bounded
// range and reports every counterexample it finds.

#include <chrono>
#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace aks {

struct VerifyOptions {
  std::optional<std::uint64_t> max_n;
  std::optional<std::uint64_t> max_p;
  std::optional<std::uint64_t> max_m;
  std::optional<std::uint64_t> max_r;
  std::uint64_t seed = 1;
  unsigned jobs = 1;
};

struct VerifyFailure {
  std::string inputs;
  std::string expected;
  std::string got;
};

struct VerifyReport {
  std::string suite;
  std::vector<std::pair<std::string, std::string>> ranges;
  std::uint64_t cases_run = 0;
  std::vector<VerifyFailure> failures;
  std::vector<std::string> notes;
  std::chrono::duration<double> elapsed{0};

  bool passed() const { return failures.empty(); }
};

/// Names accepted by run_suite, in display order.
const std::vector<std::string>& suite_names();
bool is_suite(const std::string& name);

/// Runs one suite. Unset range options take the suite's defaults. Throws
/// PreconditionError for an unknown suite name.
VerifyReport run_suite(const std::string& name, const VerifyOptions& options);

/// Human-readable report; at most `max_failures` counterexamples listed.
std::string format_report(const VerifyReport& report, std::size_t max_failures = 20);

}  // namespace aks
