// ruehrkit: exact verification harness for binomial-sum / integral identities.
//
//   ruehrkit verify <suite> [--max-n K] [--trials T] [--seed S] [--format json|csv|text] [--jobs J]
//   ruehrkit tailsum --d D --eps NUM/DEN --k-list k1,k2,...
//   ruehrkit orbit --value L (--preset classical | --mult N --div D --residues r0,r1,...)
//
// Exit status: 0 all checks passed, 1 a check failed, 2 usage error.

#include "ruehrkit/collatz_bound.hpp"
#include "ruehrkit/suites.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <cstdint>
#include <iomanip>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

namespace {

constexpr int kExitOk = 0;
constexpr int kExitFailure = 1;
constexpr int kExitUsage = 2;

std::vector<long> parse_long_list(const std::string& text) {
  std::vector<long> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    std::size_t used = 0;
    const long v = std::stol(item, &used);
    if (used != item.size()) throw std::invalid_argument("bad integer '" + item + "'");
    out.push_back(v);
  }
  if (out.empty()) throw std::invalid_argument("empty list");
  return out;
}

void write_reports(const std::vector<ruehrkit::CheckReport>& reports, const std::string& format) {
  if (format == "csv") {
    std::cout << ruehrkit::csv_header() << '\n';
    for (const auto& r : reports) std::cout << ruehrkit::to_csv_row(r) << '\n';
  } else if (format == "text") {
    for (const auto& r : reports) std::cout << ruehrkit::to_text_line(r) << '\n';
  } else {
    for (const auto& r : reports) std::cout << ruehrkit::to_json_line(r) << '\n';
  }
}

int usage_error(const CLI::App& app, const std::string& message) {
  std::cerr << "error: " << message << "\n\n" << app.help();
  return kExitUsage;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact verification of binomial-sum and integral identities"};
  app.require_subcommand(1);

  // verify
  auto* verify = app.add_subcommand("verify", "Run an identity suite and emit one report per instance");
  std::string suite_text;
  long max_n = -1;
  long trials = -1;
  std::uint64_t seed = 42;
  std::string format = "json";
  unsigned jobs = 1;
  verify->add_option("suite", suite_text, "ruehr|moments|comtet|corollaries|polynomials|beta|negbinom|tailsum|orbit|all")
      ->required();
  verify->add_option("--max-n", max_n, "Upper bound of the suite's main index")->check(CLI::NonNegativeNumber);
  verify->add_option("--trials", trials, "Random instances for fuzzed checks (default: full grid)")
      ->check(CLI::NonNegativeNumber);
  verify->add_option("--seed", seed, "Fuzzing seed")->envname("RUEHRKIT_SEED");
  verify->add_option("--format", format, "Report format")->check(CLI::IsMember({"json", "csv", "text"}));
  verify->add_option("--jobs", jobs, "Worker threads")->check(CLI::PositiveNumber);

  // tailsum
  auto* tailsum = app.add_subcommand("tailsum", "Exact binomial tail sums and their k-th roots");
  long tail_d = 2;
  std::string eps_text;
  std::string k_list_text;
  tailsum->add_option("--d", tail_d, "Modulus d >= 2")->required()->check(CLI::Range(2L, 1000000L));
  tailsum->add_option("--eps", eps_text, "Deviation threshold NUM/DEN in (0,1)")->required();
  tailsum->add_option("--k-list", k_list_text, "Comma-separated k values")->required();

  // orbit
  auto* orbit_cmd = app.add_subcommand("orbit", "Iterate the generalized 3x+1 map");
  std::string value_text;
  std::string preset;
  long mult = 0;
  long div = 0;
  std::string residues_text;
  long max_steps = 10000;
  orbit_cmd->add_option("--value", value_text, "Starting integer")->required();
  auto* preset_opt = orbit_cmd->add_option("--preset", preset, "Named configuration")->check(CLI::IsMember({"classical"}));
  auto* mult_opt = orbit_cmd->add_option("--mult", mult, "Multiplier n >= 1");
  auto* div_opt = orbit_cmd->add_option("--div", div, "Divisor d >= 2");
  auto* residues_opt = orbit_cmd->add_option("--residues", residues_text, "Complete residue system r0,r1,...");
  orbit_cmd->add_option("--max-steps", max_steps, "Step budget")->check(CLI::PositiveNumber);
  preset_opt->excludes(mult_opt)->excludes(div_opt)->excludes(residues_opt);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  if (verify->parsed()) {
    const auto suite = ruehrkit::parse_suite(suite_text);
    if (!suite) return usage_error(*verify, "unknown suite '" + suite_text + "'");
    ruehrkit::SuiteOptions options;
    if (max_n >= 0) options.max_n = max_n;
    if (trials >= 0) options.trials = trials;
    options.seed = seed;
    options.jobs = jobs;

    const auto reports = ruehrkit::run_suite(*suite, options);
    write_reports(reports, format);
    const auto failed = std::count_if(reports.begin(), reports.end(), [](const auto& r) { return !r.equal; });
    std::cerr << ruehrkit::suite_name(*suite) << ": " << reports.size() << " checks, " << failed << " failed\n";
    return failed == 0 ? kExitOk : kExitFailure;
  }

  if (tailsum->parsed()) {
    ruehrkit::Rational eps;
    std::vector<long> ks;
    try {
      eps = ruehrkit::parse_rational(eps_text);
      ks = parse_long_list(k_list_text);
    } catch (const std::exception& e) {
      return usage_error(*tailsum, e.what());
    }
    if (sgn(eps) <= 0 || eps >= 1) return usage_error(*tailsum, "--eps must lie in (0, 1)");
    for (long k : ks) {
      if (k < 1) return usage_error(*tailsum, "every k must be >= 1");
    }
    const auto profile = ruehrkit::eta_profile(tail_d, eps, ks);
    for (const auto& point : profile.points) {
      const auto exact = ruehrkit::tail_sum({point.k, tail_d, eps});
      std::cout << "k=" << point.k << " tail_sum=" << ruehrkit::to_string(exact) << " root=" << std::setprecision(12)
                << point.root << '\n';
    }
    std::cout << "max_root=" << std::setprecision(12) << profile.max_root << '\n';
    return kExitOk;
  }

  // orbit
  std::optional<ruehrkit::GenCollatzConfig> cfg;
  ruehrkit::BigInt start;
  try {
    start = ruehrkit::BigInt(value_text, 10);
    if (!preset.empty()) {
      cfg = ruehrkit::GenCollatzConfig::classical();
    } else if (*mult_opt && *div_opt && *residues_opt) {
      cfg.emplace(mult, div, parse_long_list(residues_text));
    } else {
      return usage_error(*orbit_cmd, "give --preset classical or all of --mult, --div, --residues");
    }
  } catch (const std::exception& e) {
    return usage_error(*orbit_cmd, e.what());
  }
  const auto res = ruehrkit::orbit(start, *cfg, max_steps);
  std::cout << "orbit:";
  for (const auto& v : res.steps) std::cout << ' ' << ruehrkit::to_string(v);
  std::cout << '\n';
  if (res.cycle) {
    std::cout << "cycle:";
    for (const auto& v : *res.cycle) std::cout << ' ' << ruehrkit::to_string(v);
    std::cout << '\n';
  } else {
    std::cout << "max-steps-reached after " << max_steps << " steps\n";
  }
  return kExitOk;
}
