#pragma once

// Beta, incomplete beta and regularized beta at positive-integer parameters,
// and the binomial / negative binomial CDF identities they satisfy. All
// quantities are exact rationals.

#include "ruehrkit/exact_math.hpp"
#include "ruehrkit/identities.hpp"

namespace ruehrkit {

/// B(x,y) = (x-1)! (y-1)! / (x+y-1)!. Throws std::invalid_argument if x < 1 or y < 1.
Rational beta_exact(long x, long y);

/// B(x,y) as int_0^1 t^{x-1} (1-t)^{y-1} dt by polynomial integration.
Rational beta_by_integration(long x, long y);

/// (x+y)/x * C(x+y, x)^{-1}. This closed form circulates as a formula for
/// B(x,y) but does not equal it (at (2,3) it gives 1/4, B(2,3) = 1/12); it is
/// kept only so the discrepancy can be checked.
Rational beta_reciprocal_binomial_form(long x, long y);

/// B_p(x,y) = int_0^p t^{x-1} (1-t)^{y-1} dt. Requires 0 <= p <= 1.
Rational incomplete_beta(const Rational& p, long x, long y);

/// I_p(x,y) = B_p(x,y) / B(x,y).
Rational regularized_beta(const Rational& p, long x, long y);

/// sum_{s=a}^{n} C(n,s) p^s (1-p)^{n-s}  vs  I_p(a, n-a+1).
/// Requires 1 <= a <= n and 0 <= p <= 1.
SidePair<Rational> binom_tail_sides(long n, long a, const Rational& p);

/// sum_{s=0}^{k} C(r+s-1, s) p^r (1-p)^s  vs  I_p(r, k+1).
/// Requires r >= 1, k >= 0, 0 < p <= 1.
SidePair<Rational> negbinom_cdf_sides(long r, long k, const Rational& p);

/// sum_{s=a}^{upper} C(r+s-1, s) p^r (1-p)^s. Requires r >= 1, a >= 1,
/// upper >= a, 0 < p < 1. Increases to I_{1-p}(a, r) as upper grows.
Rational negbinom_tail_partial(long r, long a, const Rational& p, long upper);

/// Limit of negbinom_tail_partial: 1 - I_p(r, a), which equals I_{1-p}(a, r).
Rational negbinom_tail_limit(long r, long a, const Rational& p);

}  // namespace ruehrkit
