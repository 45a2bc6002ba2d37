#include "ruehrkit/collatz_bound.hpp"

#include <cmath>
#include <numeric>
#include <stdexcept>
#include <string>
#include <unordered_map>

namespace ruehrkit {

namespace {

void require(bool cond, const char* what) {
  if (!cond) throw std::invalid_argument(what);
}

long mod_floor(long v, long d) {
  const long r = v % d;
  return r < 0 ? r + d : r;
}

struct BigIntHash {
  std::size_t operator()(const BigInt& z) const noexcept {
    std::size_t h = static_cast<std::size_t>(sgn(z)) * 0x9e3779b97f4a7c15ULL;
    const std::size_t limbs = mpz_size(z.get_mpz_t());
    for (std::size_t i = 0; i < limbs; ++i) {
      h ^= static_cast<std::size_t>(mpz_getlimbn(z.get_mpz_t(), static_cast<mp_size_t>(i))) + 0x9e3779b97f4a7c15ULL +
           (h << 6) + (h >> 2);
    }
    return h;
  }
};

}  // namespace

GenCollatzConfig::GenCollatzConfig(long mult, long div, std::vector<long> residues)
    : mult_(mult), div_(div), residues_(std::move(residues)) {
  require(mult_ >= 1, "GenCollatzConfig: mult must be >= 1");
  require(div_ >= 2, "GenCollatzConfig: div must be >= 2");
  require(std::gcd(mult_, div_) == 1, "GenCollatzConfig: gcd(mult, div) must be 1");
  require(residues_.size() == static_cast<std::size_t>(div_), "GenCollatzConfig: need exactly div residues");
  std::vector<bool> seen(static_cast<std::size_t>(div_), false);
  for (long r : residues_) {
    const auto slot = static_cast<std::size_t>(mod_floor(r, div_));
    require(!seen[slot], "GenCollatzConfig: residues are not distinct modulo div");
    seen[slot] = true;
  }
}

GenCollatzConfig GenCollatzConfig::classical() { return GenCollatzConfig(3, 2, {0, -1}); }

long GenCollatzConfig::representative(const BigInt& v) const {
  BigInt rem;
  mpz_fdiv_r_ui(rem.get_mpz_t(), v.get_mpz_t(), static_cast<unsigned long>(div_));
  const long target = rem.get_si();
  for (long r : residues_) {
    if (mod_floor(r, div_) == target) return r;
  }
  throw InconsistencyError("GenCollatzConfig: residue system is not complete");
}

BigInt g_step(const BigInt& ell, const GenCollatzConfig& cfg) {
  BigInt numer;
  if (mpz_divisible_ui_p(ell.get_mpz_t(), static_cast<unsigned long>(cfg.div()))) {
    numer = ell;
  } else {
    numer = ell * cfg.mult();
    numer -= cfg.representative(numer);
  }
  if (!mpz_divisible_ui_p(numer.get_mpz_t(), static_cast<unsigned long>(cfg.div()))) {
    throw InconsistencyError("g_step: division by d is not exact at " + to_string(ell));
  }
  BigInt out;
  mpz_divexact_ui(out.get_mpz_t(), numer.get_mpz_t(), static_cast<unsigned long>(cfg.div()));
  return out;
}

OrbitResult orbit(const BigInt& ell, const GenCollatzConfig& cfg, long max_steps) {
  require(max_steps >= 1, "orbit: max_steps must be >= 1");
  OrbitResult out;
  std::unordered_map<BigInt, std::size_t, BigIntHash> first_seen;
  out.steps.push_back(ell);
  first_seen.emplace(ell, 0);
  for (long step = 0; step < max_steps; ++step) {
    BigInt next = g_step(out.steps.back(), cfg);
    out.steps.push_back(next);
    const auto [it, inserted] = first_seen.emplace(std::move(next), out.steps.size() - 1);
    if (!inserted) {
      out.terminated = OrbitEnd::CycleFound;
      out.cycle.emplace(out.steps.begin() + static_cast<std::ptrdiff_t>(it->second), out.steps.end() - 1);
      return out;
    }
  }
  out.terminated = OrbitEnd::MaxStepsReached;
  return out;
}

Rational tail_sum(const TailSumQuery& q) {
  require(q.k >= 1 && q.d >= 2, "tail_sum: requires k >= 1, d >= 2");
  require(sgn(q.eps) > 0 && q.eps < 1, "tail_sum: eps must lie in (0, 1)");
  const Rational mean = make_rational(BigInt(q.d - 1) * q.k, q.d);
  const Rational threshold = q.eps * q.k;
  BigInt total;
  for (long i = 0; i <= q.k; ++i) {
    const Rational deviation = abs(Rational(i) - mean);
    if (deviation > threshold) {
      total += binomial(q.k, i) * ipow(q.d - 1, static_cast<unsigned long>(i));
    }
  }
  return make_rational(total, ipow(q.d, static_cast<unsigned long>(q.k)));
}

EtaProfile eta_profile(long d, const Rational& eps, const std::vector<long>& k_values) {
  EtaProfile out;
  for (long k : k_values) {
    const Rational s = tail_sum({k, d, eps});
    const double root = sgn(s) == 0 ? 0.0 : std::exp(log_of_positive(s) / static_cast<double>(k));
    out.points.push_back({k, root});
    out.max_root = std::max(out.max_root, root);
  }
  return out;
}

SidePair<Rational> partial_sum_sides(long k, long m, long d) {
  require(m >= 0 && m < k, "partial_sum_sides: requires 0 <= m < k");
  require(d >= 2, "partial_sum_sides: requires d >= 2");
  Rational lhs;
  for (long i = 0; i <= m; ++i) {
    lhs += Rational(binomial(k, i) * ipow(d - 1, static_cast<unsigned long>(i)));
  }
  const Polynomial integrand =
      Polynomial::linear(d, -1).pow(static_cast<unsigned long>(k - m - 1)).shifted(static_cast<std::size_t>(m));
  Rational rhs = integrand.integrate(d - 1, d) * Rational(binomial(k, m) * (k - m));
  return make_side_pair(std::move(lhs), std::move(rhs));
}

}  // namespace ruehrkit
