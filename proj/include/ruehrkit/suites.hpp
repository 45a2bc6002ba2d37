#pragma once

// Verification suites: each suite expands into a list of independent check
// tasks, which run on a worker pool and come back as sorted CheckReports.

#include "ruehrkit/report.hpp"

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace ruehrkit {

enum class Suite { Ruehr, Moments, Comtet, Corollaries, Polynomials, Beta, Negbinom, Tailsum, Orbit, All };

std::optional<Suite> parse_suite(std::string_view name);
std::string_view suite_name(Suite suite);
std::vector<std::string_view> suite_names();

struct SuiteOptions {
  /// Upper bound of each suite's main index; suite default when unset.
  std::optional<long> max_n;
  /// Number of random instances for fuzzed checks. When unset, fuzzed
  /// checks sweep their full parameter grid instead.
  std::optional<long> trials;
  std::uint64_t seed = 42;
  unsigned jobs = 1;
};

struct CheckOutcome {
  std::string lhs;
  std::string rhs;
  bool equal = false;
};

struct CheckTask {
  std::string check_name;
  Params params;
  std::function<CheckOutcome()> run;
};

/// Expands a suite into tasks. Every random draw happens here, in a fixed
/// order, so the task list depends only on (suite, options).
std::vector<CheckTask> build_tasks(Suite suite, const SuiteOptions& options);

/// Runs tasks on `jobs` threads and returns reports sorted by report_less.
/// A task that throws yields equal=false with an "error" parameter.
std::vector<CheckReport> run_tasks(std::vector<CheckTask> tasks, unsigned jobs);

std::vector<CheckReport> run_suite(Suite suite, const SuiteOptions& options);

[[nodiscard]] bool all_passed(const std::vector<CheckReport>& reports);

}  // namespace ruehrkit
