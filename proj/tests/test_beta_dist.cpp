#include "ruehrkit/beta_dist.hpp"

#include <gtest/gtest.h>

#include <random>

using namespace ruehrkit;

namespace {

Rational q(long num, long den = 1) { return make_rational(num, den); }

Rational random_probability(std::mt19937_64& rng) {
  const long den = std::uniform_int_distribution<long>(1, 15)(rng);
  return q(std::uniform_int_distribution<long>(0, den)(rng), den);
}

}  // namespace

TEST(Beta, ExactValues) {
  EXPECT_EQ(beta_exact(1, 1), 1);
  EXPECT_EQ(beta_exact(2, 3), q(1, 12));
  for (long x = 1; x <= 10; ++x) EXPECT_EQ(beta_exact(x, 1), q(1, x));
  EXPECT_THROW(beta_exact(0, 1), std::invalid_argument);
  EXPECT_THROW(beta_exact(1, 0), std::invalid_argument);
}

TEST(Beta, FactorialRouteMatchesIntegration) {
  for (long x = 1; x <= 30; ++x) {
    for (long y = 1; y <= 30; ++y) ASSERT_EQ(beta_exact(x, y), beta_by_integration(x, y)) << x << "," << y;
  }
}

TEST(Beta, ReciprocalBinomialFormIsNotTheBetaFunction) {
  EXPECT_EQ(beta_reciprocal_binomial_form(2, 3), q(1, 4));
  EXPECT_EQ(beta_by_integration(2, 3), q(1, 12));
  EXPECT_NE(beta_reciprocal_binomial_form(2, 3), beta_exact(2, 3));
}

TEST(IncompleteBeta, Values) {
  for (long x = 1; x <= 5; ++x) {
    for (long y = 1; y <= 5; ++y) {
      EXPECT_EQ(incomplete_beta(1, x, y), beta_exact(x, y));
      EXPECT_EQ(incomplete_beta(0, x, y), 0);
    }
  }
  EXPECT_EQ(incomplete_beta(q(1, 2), 2, 2), q(1, 12));
  EXPECT_THROW(incomplete_beta(q(3, 2), 1, 1), std::invalid_argument);
  EXPECT_THROW(incomplete_beta(q(-1, 2), 1, 1), std::invalid_argument);
}

TEST(RegularizedBeta, Values) {
  for (const Rational& p : {q(0), q(1, 3), q(7, 9), q(1)}) EXPECT_EQ(regularized_beta(p, 1, 1), p);
  EXPECT_EQ(regularized_beta(q(1, 2), 2, 2), q(1, 2));
  EXPECT_EQ(regularized_beta(q(1, 2), 1, 2), q(3, 4));
}

TEST(RegularizedBeta, ComplementIdentity) {
  std::mt19937_64 rng(5);
  std::uniform_int_distribution<long> param(1, 30);
  for (int t = 0; t < 300; ++t) {
    const long x = param(rng);
    const long y = param(rng);
    const Rational p = random_probability(rng);
    const Rational sum = regularized_beta(p, x, y) + regularized_beta(1 - p, y, x);
    ASSERT_EQ(sum, 1) << x << "," << y << "," << p;
  }
}

TEST(BinomTail, Examples) {
  auto s = binom_tail_sides(2, 1, q(1, 2));
  EXPECT_EQ(s.lhs, q(3, 4));
  EXPECT_EQ(s.rhs, q(3, 4));
  for (long n = 1; n <= 8; ++n) {
    s = binom_tail_sides(n, 1, 1);
    EXPECT_EQ(s.lhs, 1);
    EXPECT_EQ(s.rhs, 1);
    s = binom_tail_sides(n, n, q(2, 5));
    EXPECT_EQ(s.lhs, rpow(q(2, 5), static_cast<unsigned long>(n)));
    EXPECT_TRUE(s.equal);
  }
  EXPECT_THROW(binom_tail_sides(3, 0, q(1, 2)), std::invalid_argument);
  EXPECT_THROW(binom_tail_sides(3, 4, q(1, 2)), std::invalid_argument);
}

TEST(BinomTail, FuzzedGrid) {
  std::mt19937_64 rng(9);
  for (long n = 1; n <= 20; ++n) {
    for (long a = 1; a <= n; ++a) {
      for (int t = 0; t < 3; ++t) ASSERT_TRUE(binom_tail_sides(n, a, random_probability(rng)).equal);
    }
  }
}

TEST(NegbinomCdf, Examples) {
  for (const Rational& p : {q(1, 3), q(1, 2), q(1)}) {
    auto s = negbinom_cdf_sides(1, 0, p);
    EXPECT_EQ(s.lhs, p);
    EXPECT_EQ(s.rhs, p);
  }
  auto s = negbinom_cdf_sides(2, 1, q(1, 2));
  EXPECT_EQ(s.lhs, q(1, 2));
  EXPECT_EQ(s.rhs, q(1, 2));
  s = negbinom_cdf_sides(4, 7, 1);
  EXPECT_EQ(s.lhs, 1);
  EXPECT_EQ(s.rhs, 1);
  EXPECT_THROW(negbinom_cdf_sides(1, 0, 0), std::invalid_argument);
  EXPECT_THROW(negbinom_cdf_sides(0, 0, q(1, 2)), std::invalid_argument);
}

TEST(NegbinomCdf, FuzzedGrid) {
  std::mt19937_64 rng(13);
  for (long r = 1; r <= 12; ++r) {
    for (long k = 0; k <= 20; ++k) {
      Rational p = random_probability(rng);
      if (sgn(p) == 0) p = q(1, 2);
      ASSERT_TRUE(negbinom_cdf_sides(r, k, p).equal) << r << "," << k << "," << p;
    }
  }
}

TEST(NegbinomTail, GeometricCase) {
  for (long upper = 1; upper <= 30; ++upper) {
    const Rational expected = q(1, 2) - rpow(q(1, 2), static_cast<unsigned long>(upper + 1));
    EXPECT_EQ(negbinom_tail_partial(1, 1, q(1, 2), upper), expected);
  }
  EXPECT_EQ(negbinom_tail_limit(1, 1, q(1, 2)), q(1, 2));
}

TEST(NegbinomTail, SingleTermAndLimit) {
  EXPECT_EQ(negbinom_tail_partial(3, 2, q(1, 3), 2), Rational(binomial(4, 2)) * rpow(q(1, 3), 3) * rpow(q(2, 3), 2));
  // r=2, a=1, p=1/2: the limit is 1 - I_{1/2}(2,1) = 3/4.
  const Rational limit = negbinom_tail_limit(2, 1, q(1, 2));
  EXPECT_EQ(limit, q(3, 4));
  EXPECT_EQ(limit, regularized_beta(q(1, 2), 1, 2));
  const Rational gap = limit - negbinom_tail_partial(2, 1, q(1, 2), 20);
  EXPECT_GT(gap, 0);
  EXPECT_LT(gap, q(1, 10000));
  EXPECT_THROW(negbinom_tail_partial(1, 2, q(1, 2), 1), std::invalid_argument);
  EXPECT_THROW(negbinom_tail_partial(1, 1, 1, 3), std::invalid_argument);
}

TEST(NegbinomTail, LimitIsComplementaryRegularizedBeta) {
  for (long r = 1; r <= 6; ++r) {
    for (long a = 1; a <= 6; ++a) {
      for (const Rational& p : {q(1, 4), q(1, 2), q(5, 6)}) {
        ASSERT_EQ(negbinom_tail_limit(r, a, p), regularized_beta(1 - p, a, r));
      }
    }
  }
}

TEST(NegbinomTail, MonotoneAndBelowLimit) {
  for (long r = 1; r <= 5; ++r) {
    for (long a = 1; a <= 5; ++a) {
      const Rational limit = negbinom_tail_limit(r, a, q(1, 2));
      Rational prev = 0;
      for (long upper = a; upper <= 80; upper += 7) {
        const Rational cur = negbinom_tail_partial(r, a, q(1, 2), upper);
        ASSERT_GT(cur, prev);
        ASSERT_LT(cur, limit);
        prev = cur;
      }
    }
  }
}
