#include "ruehrkit/suites.hpp"

#include "ruehrkit/beta_dist.hpp"
#include "ruehrkit/collatz_bound.hpp"
#include "ruehrkit/fuzz.hpp"
#include "ruehrkit/identities.hpp"

#include <algorithm>
#include <array>
#include <atomic>
#include <chrono>
#include <cstdio>
#include <numeric>
#include <thread>

namespace ruehrkit {

namespace {

constexpr std::array<std::pair<Suite, std::string_view>, 10> kSuiteNames{{
    {Suite::Ruehr, "ruehr"},
    {Suite::Moments, "moments"},
    {Suite::Comtet, "comtet"},
    {Suite::Corollaries, "corollaries"},
    {Suite::Polynomials, "polynomials"},
    {Suite::Beta, "beta"},
    {Suite::Negbinom, "negbinom"},
    {Suite::Tailsum, "tailsum"},
    {Suite::Orbit, "orbit"},
    {Suite::All, "all"},
}};

// Rational side bound used when fuzzing a, b in the integral identity.
constexpr long kFuzzBound = 9;
// Denominator bound for fuzzed probabilities.
constexpr long kProbDenBound = 12;

std::string str(long v) { return std::to_string(v); }

template <class T>
CheckOutcome outcome(const SidePair<T>& sides) {
  if constexpr (std::is_same_v<T, Polynomial>) {
    return {to_json(sides.lhs), to_json(sides.rhs), sides.equal};
  } else {
    return {to_string(sides.lhs), to_string(sides.rhs), sides.equal};
  }
}

std::string format_double(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.12f", v);
  return buf;
}

std::string cycle_json(std::vector<BigInt> cycle) {
  // Rotate so the smallest element comes first.
  const auto min_it = std::min_element(cycle.begin(), cycle.end());
  std::rotate(cycle.begin(), min_it, cycle.end());
  std::string out = "[";
  for (std::size_t i = 0; i < cycle.size(); ++i) {
    if (i > 0) out += ',';
    out += '"' + to_string(cycle[i]) + '"';
  }
  return out + "]";
}

std::string join(const std::vector<long>& values) {
  std::string out;
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (i > 0) out += ',';
    out += str(values[i]);
  }
  return out;
}

using TaskList = std::vector<CheckTask>;

void add(TaskList& tasks, std::string name, Params params, std::function<CheckOutcome()> run) {
  tasks.push_back({std::move(name), std::move(params), std::move(run)});
}

// ---------------------------------------------------------------------------

void ruehr_tasks(TaskList& tasks, const SuiteOptions& opt) {
  const long max_n = opt.max_n.value_or(200);
  for (long n = 0; n <= max_n; ++n) {
    add(tasks, "ruehr_chain", {{"n", str(n)}}, [n] {
      const RuehrChain chain = ruehr_chain(n);
      const bool eq = chain.all_equal();
      CheckOutcome out{to_string(chain.a_at_3), to_string(chain.c_at_minus3), eq};
      if (!eq) {
        out.rhs += " (B_n(2)=" + to_string(chain.b_at_2) + ", D_n(-4)=" + to_string(chain.d_at_minus4) + ")";
      }
      return out;
    });
  }
}

void moments_tasks(TaskList& tasks, const SuiteOptions& opt) {
  const long max_n = opt.max_n.value_or(100);
  for (long n = 0; n <= max_n; ++n) {
    add(tasks, "kimura_ruehr_moments", {{"n", str(n)}}, [n] { return outcome(kimura_ruehr_moments(n)); });
  }
}

void comtet_tasks(TaskList& tasks, const SuiteOptions& opt) {
  const long max_n = std::max(1L, opt.max_n.value_or(60));
  FuzzSource src(opt.seed);
  const auto push = [&tasks](long n, long k, const Rational& a, const Rational& b, Params extra) {
    Params params{{"n", str(n)}, {"k", str(k)}, {"a", to_string(a)}, {"b", to_string(b)}};
    params.insert(params.end(), extra.begin(), extra.end());
    add(tasks, "comtet1", std::move(params), [n, k, a, b] { return outcome(comtet1_sides(n, k, a, b)); });
  };
  if (opt.trials) {
    for (long t = 0; t < *opt.trials; ++t) {
      const long n = src.uniform(1, max_n);
      const long k = src.uniform(0, n - 1);
      const Rational a = fuzz_rational(src, kFuzzBound, kFuzzBound);
      const Rational b = fuzz_rational(src, kFuzzBound, kFuzzBound);
      push(n, k, a, b, {{"trial", str(t)}});
    }
    return;
  }
  constexpr long kPairsPerCell = 5;
  for (long n = 1; n <= max_n; ++n) {
    for (long k = 0; k < n; ++k) {
      for (long pair = 0; pair < kPairsPerCell; ++pair) {
        const Rational a = fuzz_rational(src, kFuzzBound, kFuzzBound);
        const Rational b = fuzz_rational(src, kFuzzBound, kFuzzBound);
        push(n, k, a, b, {{"pair", str(pair)}});
      }
    }
  }
}

void polynomial_tasks(TaskList& tasks, const SuiteOptions& opt) {
  const long max_n = opt.max_n.value_or(40);
  const long rec_max = std::min(max_n, 20L);
  const long tel_max = std::min(max_n, 10L);

  for (long n = 1; n <= max_n; ++n) {
    for (long m = 1; m <= n; ++m) {
      add(tasks, "comtet2", {{"m", str(m)}, {"n", str(n)}}, [m, n] { return outcome(comtet2_sides(m, n)); });
    }
  }
  for (long m = 1; m <= max_n; ++m) {
    for (long big_n = 0; big_n <= max_n; ++big_n) {
      add(tasks, "comtet3", {{"m", str(m)}, {"N", str(big_n)}},
          [m, big_n] { return outcome(comtet3_sides(m, big_n)); });
    }
  }
  for (long j = 1; j <= rec_max; ++j) {
    for (long big_n = 1; big_n <= rec_max; ++big_n) {
      add(tasks, "recurrence_f", {{"j", str(j)}, {"N", str(big_n)}},
          [j, big_n] { return outcome(f_recurrence_sides(j, big_n)); });
      add(tasks, "recurrence_g", {{"j", str(j)}, {"N", str(big_n)}},
          [j, big_n] { return outcome(g_recurrence_sides(j, big_n)); });
    }
  }
  for (long big_n = 0; big_n <= rec_max; ++big_n) {
    add(tasks, "f1_equals_g1", {{"N", str(big_n)}}, [big_n] { return outcome(comtet3_sides(1, big_n)); });
  }
  for (long m = 1; m <= tel_max; ++m) {
    for (long big_n = 1; big_n <= tel_max; ++big_n) {
      add(tasks, "telescoping", {{"m", str(m)}, {"N", str(big_n)}},
          [m, big_n] { return outcome(telescoping_sides(m, big_n)); });
    }
  }
  for (long n = 0; n <= max_n; ++n) {
    add(tasks, "shift_A_to_B", {{"n", str(n)}}, [n] { return outcome(shift_sides(SumFamily::A, n)); });
    add(tasks, "shift_C_to_D", {{"n", str(n)}}, [n] { return outcome(shift_sides(SumFamily::C, n)); });
  }
}

void corollary_tasks(TaskList& tasks, const SuiteOptions& opt) {
  const long max_n = opt.max_n.value_or(100);
  const long poly_max = std::min(max_n, 40L);
  const long spec_max = std::min(max_n, 60L);
  for (long n = 0; n <= max_n; ++n) {
    add(tasks, "corollary1_pos", {{"n", str(n)}}, [n] { return outcome(corollary1_sides(n, Corollary1Variant::Pos)); });
    add(tasks, "corollary1_neg", {{"n", str(n)}}, [n] { return outcome(corollary1_sides(n, Corollary1Variant::Neg)); });
  }
  for (long n = 0; n <= poly_max; ++n) {
    add(tasks, "corollary2_first", {{"n", str(n)}},
        [n] { return outcome(corollary2_sides(n, Corollary2Variant::First)); });
    add(tasks, "corollary2_second", {{"n", str(n)}},
        [n] { return outcome(corollary2_sides(n, Corollary2Variant::Second)); });
  }
  for (long n = 0; n <= spec_max; ++n) {
    // Scaled value at x = 2/3 (resp. 4/3) against the direct chain sum.
    add(tasks, "corollary2_first_at_2_3", {{"n", str(n)}}, [n] {
      const auto s = corollary2_specialization(n, Corollary2Variant::First);
      const Rational chain(ruehr_chain_direct(n).a_at_3);
      return CheckOutcome{to_string(s.lhs), to_string(chain), s.equal && s.lhs == chain};
    });
    add(tasks, "corollary2_second_at_4_3", {{"n", str(n)}}, [n] {
      const auto s = corollary2_specialization(n, Corollary2Variant::Second);
      const Rational chain(ruehr_chain_direct(n).c_at_minus3);
      return CheckOutcome{to_string(s.lhs), to_string(chain), s.equal && s.lhs == chain};
    });
  }
}

void beta_tasks(TaskList& tasks, const SuiteOptions& opt) {
  const long max_n = opt.max_n.value_or(40);
  FuzzSource src(opt.seed);

  for (long x = 1; x <= 30; ++x) {
    for (long y = 1; y <= 30; ++y) {
      add(tasks, "beta_factorial_vs_integral", {{"x", str(x)}, {"y", str(y)}}, [x, y] {
        return outcome(make_side_pair(beta_exact(x, y), beta_by_integration(x, y)));
      });
    }
  }
  // The reciprocal-binomial closed form disagrees with the integral at (2,3);
  // the check pins the implementation to the integral.
  add(tasks, "beta_closed_form_erratum",
      {{"x", "2"}, {"y", "3"}, {"reciprocal_binomial_form", to_string(beta_reciprocal_binomial_form(2, 3))}},
      [] { return outcome(make_side_pair(beta_exact(2, 3), beta_by_integration(2, 3))); });

  constexpr long kComplementTrials = 200;
  for (long t = 0; t < kComplementTrials; ++t) {
    const long x = src.uniform(1, 30);
    const long y = src.uniform(1, 30);
    const Rational p = fuzz_probability(src, kProbDenBound, true);
    add(tasks, "beta_complement", {{"x", str(x)}, {"y", str(y)}, {"p", to_string(p)}}, [x, y, p] {
      const Rational sum = regularized_beta(p, x, y) + regularized_beta(1 - p, y, x);
      return outcome(make_side_pair(sum, Rational(1)));
    });
  }

  const auto push_tail = [&tasks](long n, long a, const Rational& p, Params extra) {
    Params params{{"n", str(n)}, {"a", str(a)}, {"p", to_string(p)}};
    params.insert(params.end(), extra.begin(), extra.end());
    add(tasks, "binom_tail", std::move(params), [n, a, p] { return outcome(binom_tail_sides(n, a, p)); });
  };
  if (opt.trials) {
    for (long t = 0; t < *opt.trials; ++t) {
      const long n = src.uniform(1, std::max(1L, max_n));
      const long a = src.uniform(1, n);
      const Rational p = fuzz_probability(src, kProbDenBound, true);
      push_tail(n, a, p, {{"trial", str(t)}});
    }
    return;
  }
  constexpr long kProbsPerCell = 20;
  for (long n = 1; n <= max_n; ++n) {
    for (long a = 1; a <= n; ++a) {
      for (long t = 0; t < kProbsPerCell; ++t) {
        push_tail(n, a, fuzz_probability(src, kProbDenBound, true), {{"draw", str(t)}});
      }
    }
  }
}

void negbinom_tasks(TaskList& tasks, const SuiteOptions& opt) {
  const long max_k = opt.max_n.value_or(40);
  FuzzSource src(opt.seed);

  const auto push_cdf = [&tasks](long r, long k, const Rational& p, Params extra) {
    Params params{{"r", str(r)}, {"k", str(k)}, {"p", to_string(p)}};
    params.insert(params.end(), extra.begin(), extra.end());
    add(tasks, "negbinom_cdf", std::move(params), [r, k, p] { return outcome(negbinom_cdf_sides(r, k, p)); });
  };
  if (opt.trials) {
    for (long t = 0; t < *opt.trials; ++t) {
      const long r = src.uniform(1, 25);
      const long k = src.uniform(0, std::max(0L, max_k));
      push_cdf(r, k, fuzz_probability(src, kProbDenBound, false), {{"trial", str(t)}});
    }
  } else {
    constexpr long kProbsPerCell = 2;
    for (long r = 1; r <= 25; ++r) {
      for (long k = 0; k <= max_k; ++k) {
        for (long t = 0; t < kProbsPerCell; ++t) {
          push_cdf(r, k, fuzz_probability(src, kProbDenBound, false), {{"draw", str(t)}});
        }
      }
    }
  }

  // Partial tail sums rise towards 1 - I_p(r,a): the gap must shrink every
  // 10 terms and fall below 1e-6 by the last one.
  constexpr long kUpper = 200;
  const Rational tolerance(1, 1000000);
  for (const Rational& p : {Rational(1, 2), Rational(2, 3)}) {
    for (long r = 1; r <= 5; ++r) {
      for (long a = 1; a <= 5; ++a) {
        add(tasks, "negbinom_tail_convergence", {{"r", str(r)}, {"a", str(a)}, {"p", to_string(p)}, {"M", str(kUpper)}},
            [r, a, p, tolerance] {
              const Rational limit = negbinom_tail_limit(r, a, p);
              Rational prev_gap = limit - negbinom_tail_partial(r, a, p, a);
              bool ok = sgn(prev_gap) >= 0;
              Rational partial;
              for (long upper = a + 10; upper <= kUpper; upper += 10) {
                partial = negbinom_tail_partial(r, a, p, upper);
                const Rational gap = limit - partial;
                ok = ok && sgn(gap) >= 0 && gap < prev_gap;
                prev_gap = gap;
              }
              partial = negbinom_tail_partial(r, a, p, kUpper);
              const Rational final_gap = limit - partial;
              ok = ok && final_gap < tolerance;
              return CheckOutcome{to_string(partial), to_string(limit), ok};
            });
      }
    }
  }
}

void tailsum_tasks(TaskList& tasks, const SuiteOptions& opt) {
  const long max_k = std::max(2L, opt.max_n.value_or(60));
  FuzzSource src(opt.seed);
  const long trials = opt.trials.value_or(200);
  for (long t = 0; t < trials; ++t) {
    const long k = src.uniform(1, max_k);
    const long m = src.uniform(0, k - 1);
    const long d = src.uniform(2, 6);
    Params params{{"k", str(k)}, {"m", str(m)}, {"d", str(d)}, {"trial", str(t)}};
    add(tasks, "partial_sum", params, [k, m, d] { return outcome(partial_sum_sides(k, m, d)); });
    add(tasks, "partial_sum_vs_comtet1", params, [k, m, d] {
      const auto ours = partial_sum_sides(k, m, d);
      const auto theirs = comtet1_sides(k, m, Rational(1), Rational(d - 1));
      return CheckOutcome{to_string(ours.rhs), to_string(theirs.rhs),
                          ours.lhs == theirs.lhs && ours.rhs == theirs.rhs};
    });
  }

  for (long d : {2L, 3L}) {
    for (long k : {10L, 20L, 40L}) {
      add(tasks, "tail_sum_monotone_in_eps", {{"k", str(k)}, {"d", str(d)}}, [k, d] {
        Rational prev = tail_sum({k, d, Rational(1, 20)});
        const Rational first = prev;
        bool ok = true;
        for (long e = 2; e < 20; ++e) {
          const Rational cur = tail_sum({k, d, Rational(e, 20)});
          ok = ok && cur <= prev;
          prev = cur;
        }
        return CheckOutcome{to_string(first), to_string(prev), ok};
      });
    }
  }

  const std::vector<long> k_list{50, 100, 200, 400};
  add(tasks, "eta_profile", {{"d", "2"}, {"eps", "1/4"}, {"k_list", join(k_list)}}, [k_list] {
    const EtaProfile profile = eta_profile(2, Rational(1, 4), k_list);
    return CheckOutcome{format_double(profile.max_root), "<0.95", profile.max_root < 0.95};
  });
}

void orbit_tasks(TaskList& tasks, const SuiteOptions& opt) {
  const long max_ell = opt.max_n.value_or(10000);
  constexpr long kMaxSteps = 10000;
  const std::string expected_cycle = R"(["1","2"])";
  for (long ell = 1; ell <= max_ell; ++ell) {
    add(tasks, "orbit_classical", {{"ell", str(ell)}}, [ell, expected_cycle] {
      const OrbitResult res = orbit(BigInt(ell), GenCollatzConfig::classical(), kMaxSteps);
      const std::string got = res.cycle ? cycle_json(*res.cycle) : "max-steps-reached";
      return CheckOutcome{got, expected_cycle, got == expected_cycle};
    });
  }

  FuzzSource src(opt.seed);
  const long trials = opt.trials.value_or(200);
  for (long t = 0; t < trials; ++t) {
    const long d = src.uniform(2, 7);
    long mult = src.uniform(1, 30);
    while (std::gcd(mult, d) != 1) mult = src.uniform(1, 30);
    std::vector<long> residues(static_cast<std::size_t>(d));
    for (long i = 0; i < d; ++i) residues[static_cast<std::size_t>(i)] = i + d * src.uniform(-3, 3);
    for (long i = d - 1; i > 0; --i) {
      std::swap(residues[static_cast<std::size_t>(i)], residues[static_cast<std::size_t>(src.uniform(0, i))]);
    }
    const long ell = src.uniform(1, 1000000);
    add(tasks, "g_step_exact_division",
        {{"mult", str(mult)}, {"div", str(d)}, {"residues", join(residues)}, {"ell", str(ell)}, {"trial", str(t)}},
        [mult, d, residues, ell] {
          const GenCollatzConfig cfg(mult, d, residues);
          // Every step re-checks exact divisibility; InconsistencyError fails the task.
          const OrbitResult res = orbit(BigInt(ell), cfg, 64);
          const std::string steps = str(static_cast<long>(res.steps.size()) - 1);
          return CheckOutcome{steps, steps, true};
        });
  }
}

}  // namespace

std::optional<Suite> parse_suite(std::string_view name) {
  for (const auto& [suite, label] : kSuiteNames) {
    if (label == name) return suite;
  }
  return std::nullopt;
}

std::string_view suite_name(Suite suite) {
  for (const auto& [s, label] : kSuiteNames) {
    if (s == suite) return label;
  }
  return "?";
}

std::vector<std::string_view> suite_names() {
  std::vector<std::string_view> out;
  for (const auto& entry : kSuiteNames) out.push_back(entry.second);
  return out;
}

std::vector<CheckTask> build_tasks(Suite suite, const SuiteOptions& options) {
  TaskList tasks;
  switch (suite) {
    case Suite::Ruehr: ruehr_tasks(tasks, options); break;
    case Suite::Moments: moments_tasks(tasks, options); break;
    case Suite::Comtet: comtet_tasks(tasks, options); break;
    case Suite::Corollaries: corollary_tasks(tasks, options); break;
    case Suite::Polynomials: polynomial_tasks(tasks, options); break;
    case Suite::Beta: beta_tasks(tasks, options); break;
    case Suite::Negbinom: negbinom_tasks(tasks, options); break;
    case Suite::Tailsum: tailsum_tasks(tasks, options); break;
    case Suite::Orbit: orbit_tasks(tasks, options); break;
    case Suite::All:
      for (const auto& [s, label] : kSuiteNames) {
        if (s == Suite::All) continue;
        auto part = build_tasks(s, options);
        std::move(part.begin(), part.end(), std::back_inserter(tasks));
      }
      break;
  }
  return tasks;
}

std::vector<CheckReport> run_tasks(std::vector<CheckTask> tasks, unsigned jobs) {
  std::vector<CheckReport> reports(tasks.size());
  std::atomic<std::size_t> cursor{0};

  const auto worker = [&] {
    for (std::size_t i = cursor++; i < tasks.size(); i = cursor++) {
      CheckTask& task = tasks[i];
      CheckReport& report = reports[i];
      report.check_name = task.check_name;
      report.params = task.params;
      const auto start = std::chrono::steady_clock::now();
      try {
        CheckOutcome out = task.run();
        report.lhs = std::move(out.lhs);
        report.rhs = std::move(out.rhs);
        report.equal = out.equal;
      } catch (const std::exception& e) {
        report.params.emplace_back("error", e.what());
        report.equal = false;
      }
      const auto elapsed = std::chrono::steady_clock::now() - start;
      report.elapsed_ms = std::chrono::duration_cast<std::chrono::milliseconds>(elapsed).count();
    }
  };

  const unsigned n_threads = std::max(1U, std::min<unsigned>(jobs, static_cast<unsigned>(tasks.size())));
  if (n_threads <= 1) {
    worker();
  } else {
    std::vector<std::jthread> pool;
    pool.reserve(n_threads);
    for (unsigned t = 0; t < n_threads; ++t) pool.emplace_back(worker);
  }
  sort_reports(reports);
  return reports;
}

std::vector<CheckReport> run_suite(Suite suite, const SuiteOptions& options) {
  return run_tasks(build_tasks(suite, options), options.jobs);
}

bool all_passed(const std::vector<CheckReport>& reports) {
  return std::all_of(reports.begin(), reports.end(), [](const CheckReport& r) { return r.equal; });
}

}  // namespace ruehrkit
