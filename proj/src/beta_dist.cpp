#include "ruehrkit/beta_dist.hpp"

#include <stdexcept>

namespace ruehrkit {

namespace {

void require(bool cond, const char* what) {
  if (!cond) throw std::invalid_argument(what);
}

void require_params(long x, long y) { require(x >= 1 && y >= 1, "beta: parameters must be >= 1"); }

BigInt factorial(long n) {
  BigInt out;
  mpz_fac_ui(out.get_mpz_t(), static_cast<unsigned long>(n));
  return out;
}

// t^{x-1} (1-t)^{y-1}
Polynomial beta_kernel(long x, long y) {
  return Polynomial::linear(1, -1).pow(static_cast<unsigned long>(y - 1)).shifted(static_cast<std::size_t>(x - 1));
}

}  // namespace

Rational beta_exact(long x, long y) {
  require_params(x, y);
  return make_rational(factorial(x - 1) * factorial(y - 1), factorial(x + y - 1));
}

Rational beta_by_integration(long x, long y) {
  require_params(x, y);
  return beta_kernel(x, y).integrate(0, 1);
}

Rational beta_reciprocal_binomial_form(long x, long y) {
  require_params(x, y);
  return make_rational(BigInt(x + y), binomial(x + y, x) * x);
}

Rational incomplete_beta(const Rational& p, long x, long y) {
  require_params(x, y);
  require(sgn(p) >= 0 && p <= 1, "incomplete_beta: p must lie in [0, 1]");
  return beta_kernel(x, y).integrate(0, p);
}

Rational regularized_beta(const Rational& p, long x, long y) {
  Rational out = incomplete_beta(p, x, y) / beta_exact(x, y);
  return out;
}

SidePair<Rational> binom_tail_sides(long n, long a, const Rational& p) {
  require(a >= 1 && a <= n, "binom_tail_sides: requires 1 <= a <= n");
  require(sgn(p) >= 0 && p <= 1, "binom_tail_sides: p must lie in [0, 1]");
  const Rational q = 1 - p;
  Rational lhs;
  for (long s = a; s <= n; ++s) {
    lhs += Rational(binomial(n, s)) * rpow(p, static_cast<unsigned long>(s)) * rpow(q, static_cast<unsigned long>(n - s));
  }
  return make_side_pair(std::move(lhs), regularized_beta(p, a, n - a + 1));
}

SidePair<Rational> negbinom_cdf_sides(long r, long k, const Rational& p) {
  require(r >= 1 && k >= 0, "negbinom_cdf_sides: requires r >= 1, k >= 0");
  require(sgn(p) > 0 && p <= 1, "negbinom_cdf_sides: p must lie in (0, 1]");
  const Rational q = 1 - p;
  const Rational pr = rpow(p, static_cast<unsigned long>(r));
  Rational lhs;
  for (long s = 0; s <= k; ++s) {
    lhs += Rational(binomial(r + s - 1, s)) * pr * rpow(q, static_cast<unsigned long>(s));
  }
  return make_side_pair(std::move(lhs), regularized_beta(p, r, k + 1));
}

Rational negbinom_tail_partial(long r, long a, const Rational& p, long upper) {
  require(r >= 1 && a >= 1 && upper >= a, "negbinom_tail_partial: requires r >= 1, 1 <= a <= upper");
  require(sgn(p) > 0 && p < 1, "negbinom_tail_partial: p must lie in (0, 1)");
  const Rational q = 1 - p;
  const Rational pr = rpow(p, static_cast<unsigned long>(r));
  Rational out;
  for (long s = a; s <= upper; ++s) {
    out += Rational(binomial(r + s - 1, s)) * pr * rpow(q, static_cast<unsigned long>(s));
  }
  return out;
}

Rational negbinom_tail_limit(long r, long a, const Rational& p) {
  Rational out = 1 - regularized_beta(p, r, a);
  return out;
}

}  // namespace ruehrkit
