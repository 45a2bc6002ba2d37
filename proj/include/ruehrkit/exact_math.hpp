#pragma once

// Exact integer/rational arithmetic and dense univariate polynomials over Q.
//
// BigInt and Rational are GMP's C++ classes. mpq_class keeps itself in
// canonical form (den > 0, gcd(num, den) = 1, zero is 0/1) after every
// arithmetic operation; values built from a raw numerator/denominator pair
// must go through make_rational() so that the same invariant holds.
//
// Note: gmpxx uses expression templates. Bind results of arithmetic to a
// concrete BigInt/Rational, never to `auto`.

#include <gmpxx.h>

#include <cstdint>
#include <initializer_list>
#include <iosfwd>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace ruehrkit {

using BigInt = mpz_class;
using Rational = mpq_class;

/// Canonical rational num/den. Throws std::domain_error when den == 0.
Rational make_rational(const BigInt& num, const BigInt& den);

/// "num/den" in decimal, or "num" when den == 1 (e.g. "26/35", "-3").
std::string to_string(const Rational& q);
std::string to_string(const BigInt& z);

/// Inverse of to_string(Rational). Accepts "k" and "num/den" with an
/// optional leading '-'; the result is canonicalized. Throws
/// std::invalid_argument on malformed text or a zero denominator.
Rational parse_rational(std::string_view text);

/// Natural logarithm of a positive rational, computed from the leading 53
/// bits and the bit lengths of numerator and denominator, so arbitrarily
/// large or small values neither overflow nor underflow. Absolute error is
/// a few ulps of the result, i.e. relative error of exp(result) well below
/// 1e-12 for |result| < 1e3. Throws std::domain_error for q <= 0.
double log_of_positive(const Rational& q);

/// Nearest double to q via the same leading-bits scaling; 0 maps to 0.
/// Results outside the double range saturate to 0 or +-inf.
double to_double(const Rational& q);

/// C(n, k): n!/(k!(n-k)!) for 0 <= k <= n, 0 for k outside that range.
/// Throws std::domain_error for n < 0.
BigInt binomial(std::int64_t n, std::int64_t k);

/// Integer power base^exp for exp >= 0.
BigInt ipow(const BigInt& base, unsigned long exp);
Rational rpow(const Rational& base, unsigned long exp);

/// Dense polynomial over Q; coefficient i multiplies x^i.
///
/// Invariant: the highest stored coefficient is nonzero, so the zero
/// polynomial has no coefficients and degree -1.
class Polynomial {
 public:
  Polynomial() = default;
  Polynomial(std::initializer_list<Rational> coeffs);
  explicit Polynomial(std::vector<Rational> coeffs);

  static Polynomial constant(const Rational& c);
  /// c * x^k
  static Polynomial monomial(const Rational& c, std::size_t k);
  /// c0 + c1*x
  static Polynomial linear(const Rational& c0, const Rational& c1);

  [[nodiscard]] std::span<const Rational> coeffs() const { return coeffs_; }
  /// Coefficient of x^i; zero past the degree.
  [[nodiscard]] Rational coeff(std::size_t i) const;
  [[nodiscard]] long degree() const { return static_cast<long>(coeffs_.size()) - 1; }
  [[nodiscard]] bool is_zero() const { return coeffs_.empty(); }

  Polynomial& operator+=(const Polynomial& rhs);
  Polynomial& operator-=(const Polynomial& rhs);
  Polynomial& operator*=(const Polynomial& rhs);

  friend Polynomial operator+(Polynomial lhs, const Polynomial& rhs) { return lhs += rhs; }
  friend Polynomial operator-(Polynomial lhs, const Polynomial& rhs) { return lhs -= rhs; }
  friend Polynomial operator*(const Polynomial& lhs, const Polynomial& rhs);
  friend Polynomial operator-(const Polynomial& p);

  friend bool operator==(const Polynomial& a, const Polynomial& b) = default;

  /// c * p
  [[nodiscard]] Polynomial scaled(const Rational& c) const;
  /// x^k * p
  [[nodiscard]] Polynomial shifted(std::size_t k) const;
  /// p^exp, with p^0 = 1 (also for the zero polynomial).
  [[nodiscard]] Polynomial pow(unsigned long exp) const;

  /// Horner evaluation.
  [[nodiscard]] Rational operator()(const Rational& x) const;

  /// p(q(x)).
  [[nodiscard]] Polynomial compose(const Polynomial& q) const;

  /// Antiderivative with zero constant term.
  [[nodiscard]] Polynomial antiderivative() const;

  /// Exact integral from lo to hi; lo > hi yields the negated value.
  [[nodiscard]] Rational integrate(const Rational& lo, const Rational& hi) const;

 private:
  void normalize();

  std::vector<Rational> coeffs_;
};

/// JSON array of rational strings in ascending degree, e.g. ["4","-3"].
std::string to_json(const Polynomial& p);
Polynomial parse_polynomial_json(std::string_view text);

std::ostream& operator<<(std::ostream& os, const Polynomial& p);

}  // namespace ruehrkit
