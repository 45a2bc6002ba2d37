#include "ruehrkit/collatz_bound.hpp"

#include <gtest/gtest.h>

#include <algorithm>
#include <cmath>
#include <numeric>
#include <random>

using namespace ruehrkit;

namespace {

Rational q(long num, long den = 1) { return make_rational(num, den); }

std::vector<long> as_longs(const std::vector<BigInt>& values) {
  std::vector<long> out;
  for (const auto& v : values) out.push_back(v.get_si());
  return out;
}

}  // namespace

TEST(GenCollatzConfigTest, Validation) {
  EXPECT_NO_THROW(GenCollatzConfig(3, 2, {0, -1}));
  EXPECT_NO_THROW(GenCollatzConfig(5, 3, {0, 7, -1}));
  EXPECT_THROW(GenCollatzConfig(0, 2, {0, 1}), std::invalid_argument);
  EXPECT_THROW(GenCollatzConfig(3, 1, {0}), std::invalid_argument);
  EXPECT_THROW(GenCollatzConfig(4, 2, {0, 1}), std::invalid_argument);     // gcd 2
  EXPECT_THROW(GenCollatzConfig(3, 2, {0, 2}), std::invalid_argument);     // not distinct mod 2
  EXPECT_THROW(GenCollatzConfig(3, 2, {0, 1, 3}), std::invalid_argument);  // wrong size
}

TEST(GStep, ClassicalExamples) {
  const auto cfg = GenCollatzConfig::classical();
  EXPECT_EQ(g_step(7, cfg), 11);
  EXPECT_EQ(g_step(8, cfg), 4);
  EXPECT_EQ(g_step(1, cfg), 2);
  EXPECT_EQ(cfg.representative(21), -1);
  EXPECT_EQ(cfg.representative(-4), 0);
}

TEST(GStep, DivisionExactForFuzzedConfigs) {
  std::mt19937_64 rng(17);
  for (int t = 0; t < 500; ++t) {
    const long d = std::uniform_int_distribution<long>(2, 9)(rng);
    long mult = 0;
    do {
      mult = std::uniform_int_distribution<long>(1, 40)(rng);
    } while (std::gcd(mult, d) != 1);
    std::vector<long> residues;
    for (long i = 0; i < d; ++i) residues.push_back(i + d * std::uniform_int_distribution<long>(-5, 5)(rng));
    std::shuffle(residues.begin(), residues.end(), rng);
    const GenCollatzConfig cfg(mult, d, residues);
    BigInt ell = std::uniform_int_distribution<long>(1, 1000000)(rng);
    for (int step = 0; step < 30; ++step) ASSERT_NO_THROW(ell = g_step(ell, cfg));
  }
}

TEST(Orbit, ClassicalExamples) {
  const auto cfg = GenCollatzConfig::classical();
  auto res = orbit(1, cfg, 10);
  EXPECT_EQ(res.terminated, OrbitEnd::CycleFound);
  ASSERT_TRUE(res.cycle.has_value());
  EXPECT_EQ(as_longs(*res.cycle), (std::vector<long>{1, 2}));

  res = orbit(7, cfg, 50);
  EXPECT_EQ(as_longs(res.steps), (std::vector<long>{7, 11, 17, 26, 13, 20, 10, 5, 8, 4, 2, 1, 2}));
  EXPECT_EQ(as_longs(*res.cycle), (std::vector<long>{2, 1}));

  res = orbit(7, cfg, 1);
  EXPECT_EQ(res.terminated, OrbitEnd::MaxStepsReached);
  EXPECT_EQ(res.steps.size(), 2u);
  EXPECT_FALSE(res.cycle.has_value());
  EXPECT_THROW(orbit(7, cfg, 0), std::invalid_argument);
}

TEST(Orbit, ConsecutiveEntriesRelatedByG) {
  const GenCollatzConfig cfg(5, 3, {0, 1, -1});
  const auto res = orbit(97, cfg, 200);
  for (std::size_t i = 1; i < res.steps.size(); ++i) ASSERT_EQ(res.steps[i], g_step(res.steps[i - 1], cfg));
}

TEST(Orbit, ClassicalReachesOneTwoCycle) {
  const auto cfg = GenCollatzConfig::classical();
  for (long ell = 1; ell <= 3000; ++ell) {
    const auto res = orbit(ell, cfg, 10000);
    ASSERT_TRUE(res.cycle.has_value()) << ell;
    auto cycle = as_longs(*res.cycle);
    std::sort(cycle.begin(), cycle.end());
    ASSERT_EQ(cycle, (std::vector<long>{1, 2})) << ell;
  }
}

TEST(TailSum, PinnedValues) {
  EXPECT_EQ(tail_sum({4, 2, q(1, 4)}), q(1, 8));
  EXPECT_EQ(tail_sum({4, 2, q(1, 2)}), 0);
  EXPECT_EQ(tail_sum({2, 3, q(1, 3)}), q(1, 9));
  EXPECT_EQ(tail_sum({8, 2, q(1, 4)}), q(18, 256));
  EXPECT_THROW(tail_sum({4, 2, q(0)}), std::invalid_argument);
  EXPECT_THROW(tail_sum({4, 2, q(1)}), std::invalid_argument);
  EXPECT_THROW(tail_sum({0, 2, q(1, 2)}), std::invalid_argument);
}

TEST(TailSum, BoundaryIsStrict) {
  // k=4, d=2: mean 2; eps = 1/2 puts i = 0 and i = 4 exactly on the threshold.
  EXPECT_EQ(tail_sum({4, 2, q(1, 2)}), 0);
  EXPECT_EQ(tail_sum({4, 2, q(49, 100)}), q(1, 8));
}

TEST(TailSum, NonincreasingInEps) {
  for (long d = 2; d <= 4; ++d) {
    for (long k : {5L, 12L, 30L}) {
      Rational prev = tail_sum({k, d, q(1, 50)});
      for (long e = 2; e < 50; ++e) {
        const Rational cur = tail_sum({k, d, q(e, 50)});
        ASSERT_LE(cur, prev);
        prev = cur;
      }
    }
  }
}

TEST(EtaProfile, SmallCases) {
  auto profile = eta_profile(2, q(1, 4), {4});
  ASSERT_EQ(profile.points.size(), 1u);
  EXPECT_NEAR(profile.points[0].root, 0.5946035575013605, 1e-12);
  EXPECT_NEAR(profile.points[0].root, std::pow(0.125, 0.25), 1e-12 * 0.6);

  profile = eta_profile(2, q(1, 4), {8});
  EXPECT_NEAR(profile.points[0].root, 0.7175944439422447, 1e-12);

  profile = eta_profile(2, q(1, 2), {4, 8});
  EXPECT_EQ(profile.points[0].root, 0.0);
  EXPECT_NEAR(profile.max_root, profile.points[1].root, 0.0);
}

TEST(EtaProfile, WitnessBelowOne) {
  const auto profile = eta_profile(2, q(1, 4), {50, 100, 200, 400});
  // Reference roots from an independent float evaluation of the exact sums.
  const double reference[] = {0.8505709918724885, 0.8562030923403944, 0.865350694497747, 0.8706239039823225};
  for (std::size_t i = 0; i < 4; ++i) EXPECT_NEAR(profile.points[i].root, reference[i], 1e-12);
  EXPECT_LT(profile.max_root, 0.95);
}

TEST(PartialSum, Examples) {
  auto s = partial_sum_sides(2, 1, 2);
  EXPECT_EQ(s.lhs, 3);
  EXPECT_EQ(s.rhs, 3);
  for (long k = 1; k <= 8; ++k) {
    s = partial_sum_sides(k, 0, 2);
    EXPECT_EQ(s.lhs, 1);
    EXPECT_EQ(s.rhs, 1);
  }
  s = partial_sum_sides(3, 1, 3);
  EXPECT_EQ(s.lhs, 7);
  EXPECT_EQ(s.rhs, 7);
  EXPECT_THROW(partial_sum_sides(3, 3, 2), std::invalid_argument);
  EXPECT_THROW(partial_sum_sides(3, 1, 1), std::invalid_argument);
}

TEST(PartialSum, CoincidesWithComtet1) {
  std::mt19937_64 rng(23);
  for (int t = 0; t < 200; ++t) {
    const long k = std::uniform_int_distribution<long>(1, 60)(rng);
    const long m = std::uniform_int_distribution<long>(0, k - 1)(rng);
    const long d = std::uniform_int_distribution<long>(2, 6)(rng);
    const auto ours = partial_sum_sides(k, m, d);
    const auto theirs = comtet1_sides(k, m, 1, d - 1);
    ASSERT_TRUE(ours.equal);
    ASSERT_EQ(ours.lhs, theirs.lhs);
    ASSERT_EQ(ours.rhs, theirs.rhs);
  }
}
