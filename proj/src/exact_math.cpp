#include "ruehrkit/exact_math.hpp"

#include <json.hpp>

#include <algorithm>
#include <cmath>
#include <numbers>
#include <ostream>
#include <stdexcept>

namespace ruehrkit {

Rational make_rational(const BigInt& num, const BigInt& den) {
  if (den == 0) {
    throw std::domain_error("rational with zero denominator");
  }
  Rational q(num, den);
  q.canonicalize();
  return q;
}

std::string to_string(const Rational& q) { return q.get_str(10); }

std::string to_string(const BigInt& z) { return z.get_str(10); }

namespace {

bool is_decimal_integer(std::string_view s) {
  if (!s.empty() && s.front() == '-') s.remove_prefix(1);
  return !s.empty() && std::all_of(s.begin(), s.end(), [](char c) { return c >= '0' && c <= '9'; });
}

}  // namespace

Rational parse_rational(std::string_view text) {
  const auto slash = text.find('/');
  const std::string_view num_part = text.substr(0, slash);
  const std::string_view den_part = slash == std::string_view::npos ? "1" : text.substr(slash + 1);
  if (!is_decimal_integer(num_part) || !is_decimal_integer(den_part) || den_part.front() == '-') {
    throw std::invalid_argument("malformed rational: '" + std::string(text) + "'");
  }
  const BigInt num(std::string(num_part), 10);
  const BigInt den(std::string(den_part), 10);
  if (den == 0) {
    throw std::invalid_argument("zero denominator: '" + std::string(text) + "'");
  }
  return make_rational(num, den);
}

double log_of_positive(const Rational& q) {
  if (sgn(q) <= 0) {
    throw std::domain_error("log_of_positive: argument must be > 0");
  }
  // mpz_get_d_2exp truncates to the leading 53 bits: |z| = m * 2^e, m in [0.5, 1).
  long num_exp = 0;
  long den_exp = 0;
  const double num_mant = mpz_get_d_2exp(&num_exp, q.get_num_mpz_t());
  const double den_mant = mpz_get_d_2exp(&den_exp, q.get_den_mpz_t());
  return std::log(num_mant / den_mant) + static_cast<double>(num_exp - den_exp) * std::numbers::ln2;
}

double to_double(const Rational& q) {
  if (sgn(q) == 0) return 0.0;
  long num_exp = 0;
  long den_exp = 0;
  const double num_mant = mpz_get_d_2exp(&num_exp, q.get_num_mpz_t());
  const double den_mant = mpz_get_d_2exp(&den_exp, q.get_den_mpz_t());
  const long shift = num_exp - den_exp;
  if (shift > 4096) return num_mant < 0 ? -HUGE_VAL : HUGE_VAL;
  if (shift < -4096) return 0.0;
  return std::ldexp(num_mant / den_mant, static_cast<int>(shift));
}

BigInt binomial(std::int64_t n, std::int64_t k) {
  if (n < 0) {
    throw std::domain_error("binomial: negative upper index");
  }
  if (k < 0 || k > n) return 0;
  BigInt out;
  mpz_bin_uiui(out.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
  return out;
}

BigInt ipow(const BigInt& base, unsigned long exp) {
  BigInt out;
  mpz_pow_ui(out.get_mpz_t(), base.get_mpz_t(), exp);
  return out;
}

Rational rpow(const Rational& base, unsigned long exp) {
  // Powers of a canonical fraction stay canonical.
  Rational out;
  mpz_pow_ui(out.get_num_mpz_t(), base.get_num_mpz_t(), exp);
  mpz_pow_ui(out.get_den_mpz_t(), base.get_den_mpz_t(), exp);
  return out;
}

// ---------------------------------------------------------------------------
// Polynomial

Polynomial::Polynomial(std::initializer_list<Rational> coeffs) : coeffs_(coeffs) { normalize(); }

Polynomial::Polynomial(std::vector<Rational> coeffs) : coeffs_(std::move(coeffs)) { normalize(); }

Polynomial Polynomial::constant(const Rational& c) { return Polynomial({c}); }

Polynomial Polynomial::monomial(const Rational& c, std::size_t k) {
  std::vector<Rational> cs(k + 1);
  cs[k] = c;
  return Polynomial(std::move(cs));
}

Polynomial Polynomial::linear(const Rational& c0, const Rational& c1) { return Polynomial({c0, c1}); }

void Polynomial::normalize() {
  while (!coeffs_.empty() && sgn(coeffs_.back()) == 0) {
    coeffs_.pop_back();
  }
}

Rational Polynomial::coeff(std::size_t i) const { return i < coeffs_.size() ? coeffs_[i] : Rational(0); }

Polynomial& Polynomial::operator+=(const Polynomial& rhs) {
  if (rhs.coeffs_.size() > coeffs_.size()) coeffs_.resize(rhs.coeffs_.size());
  for (std::size_t i = 0; i < rhs.coeffs_.size(); ++i) coeffs_[i] += rhs.coeffs_[i];
  normalize();
  return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& rhs) {
  if (rhs.coeffs_.size() > coeffs_.size()) coeffs_.resize(rhs.coeffs_.size());
  for (std::size_t i = 0; i < rhs.coeffs_.size(); ++i) coeffs_[i] -= rhs.coeffs_[i];
  normalize();
  return *this;
}

Polynomial& Polynomial::operator*=(const Polynomial& rhs) {
  *this = *this * rhs;
  return *this;
}

Polynomial operator*(const Polynomial& lhs, const Polynomial& rhs) {
  if (lhs.is_zero() || rhs.is_zero()) return {};
  std::vector<Rational> out(lhs.coeffs_.size() + rhs.coeffs_.size() - 1);
  Rational term;
  for (std::size_t i = 0; i < lhs.coeffs_.size(); ++i) {
    if (sgn(lhs.coeffs_[i]) == 0) continue;
    for (std::size_t j = 0; j < rhs.coeffs_.size(); ++j) {
      term = lhs.coeffs_[i] * rhs.coeffs_[j];
      out[i + j] += term;
    }
  }
  return Polynomial(std::move(out));
}

Polynomial operator-(const Polynomial& p) { return p.scaled(-1); }

Polynomial Polynomial::scaled(const Rational& c) const {
  if (sgn(c) == 0) return {};
  std::vector<Rational> out(coeffs_);
  for (auto& v : out) v *= c;
  return Polynomial(std::move(out));
}

Polynomial Polynomial::shifted(std::size_t k) const {
  if (is_zero()) return {};
  std::vector<Rational> out(coeffs_.size() + k);
  std::copy(coeffs_.begin(), coeffs_.end(), out.begin() + static_cast<std::ptrdiff_t>(k));
  return Polynomial(std::move(out));
}

Polynomial Polynomial::pow(unsigned long exp) const {
  Polynomial result = constant(1);
  Polynomial base = *this;
  while (exp > 0) {
    if (exp & 1UL) result *= base;
    exp >>= 1;
    if (exp > 0) base *= base;
  }
  return result;
}

Rational Polynomial::operator()(const Rational& x) const {
  Rational acc;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
    acc *= x;
    acc += *it;
  }
  return acc;
}

Polynomial Polynomial::compose(const Polynomial& q) const {
  // Horner over polynomials: (((c_d) q + c_{d-1}) q + ...) + c_0.
  Polynomial acc;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
    acc = acc * q;
    acc += constant(*it);
  }
  return acc;
}

Polynomial Polynomial::antiderivative() const {
  if (is_zero()) return {};
  std::vector<Rational> out(coeffs_.size() + 1);
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    out[i + 1] = coeffs_[i] / Rational(static_cast<unsigned long>(i + 1));
  }
  return Polynomial(std::move(out));
}

Rational Polynomial::integrate(const Rational& lo, const Rational& hi) const {
  const Polynomial anti = antiderivative();
  Rational out = anti(hi) - anti(lo);
  return out;
}

std::string to_json(const Polynomial& p) {
  nlohmann::json arr = nlohmann::json::array();
  for (const auto& c : p.coeffs()) arr.push_back(to_string(c));
  return arr.dump();
}

Polynomial parse_polynomial_json(std::string_view text) {
  const auto arr = nlohmann::json::parse(text);
  if (!arr.is_array()) {
    throw std::invalid_argument("polynomial JSON must be an array");
  }
  std::vector<Rational> cs;
  cs.reserve(arr.size());
  for (const auto& item : arr) {
    if (!item.is_string()) {
      throw std::invalid_argument("polynomial coefficients must be rational strings");
    }
    cs.push_back(parse_rational(item.get<std::string>()));
  }
  return Polynomial(std::move(cs));
}

std::ostream& operator<<(std::ostream& os, const Polynomial& p) { return os << to_json(p); }

}  // namespace ruehrkit
