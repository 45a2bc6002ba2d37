#include "ruehrkit/identities.hpp"

#include <string>
#include <vector>

namespace ruehrkit {

namespace {

void require(bool cond, const char* what) {
  if (!cond) throw std::invalid_argument(what);
}

unsigned long as_exponent(long e) { return static_cast<unsigned long>(e); }

// (1-x)^0 .. (1-x)^max_exp
std::vector<Polynomial> one_minus_x_powers(long max_exp) {
  std::vector<Polynomial> out;
  out.reserve(static_cast<std::size_t>(max_exp) + 1);
  out.push_back(Polynomial::constant(1));
  const Polynomial one_minus_x = Polynomial::linear(1, -1);
  for (long e = 1; e <= max_exp; ++e) out.push_back(out.back() * one_minus_x);
  return out;
}

Rational to_rational(const BigInt& z) { return Rational(z); }

}  // namespace

char family_tag(SumFamily fam) {
  switch (fam) {
    case SumFamily::A: return 'A';
    case SumFamily::B: return 'B';
    case SumFamily::C: return 'C';
    case SumFamily::D: return 'D';
  }
  return '?';
}

Polynomial family_polynomial(SumFamily fam, long n) {
  require(n >= 0, "family_polynomial: n must be >= 0");
  const long terms = (fam == SumFamily::A || fam == SumFamily::B) ? n : 2 * n;
  std::vector<Rational> cs;
  cs.reserve(static_cast<std::size_t>(terms) + 1);
  for (long j = 0; j <= terms; ++j) {
    BigInt c;
    switch (fam) {
      case SumFamily::A: c = binomial(3 * n - j, 2 * n); break;
      case SumFamily::B: c = binomial(3 * n + 1, n - j); break;
      case SumFamily::C: c = binomial(3 * n - j, n); break;
      case SumFamily::D: c = binomial(3 * n + 1, n + 1 + j); break;
    }
    cs.push_back(to_rational(c));
  }
  return Polynomial(std::move(cs));
}

RuehrChain ruehr_chain_direct(long n) {
  require(n >= 0, "ruehr_chain: n must be >= 0");
  RuehrChain out;
  for (long j = 0; j <= n; ++j) {
    const auto e = as_exponent(j);
    out.a_at_3 += ipow(3, e) * binomial(3 * n - j, 2 * n);
    out.b_at_2 += ipow(2, e) * binomial(3 * n + 1, n - j);
  }
  for (long j = 0; j <= 2 * n; ++j) {
    const auto e = as_exponent(j);
    out.d_at_minus4 += ipow(-4, e) * binomial(3 * n + 1, n + 1 + j);
    out.c_at_minus3 += ipow(-3, e) * binomial(3 * n - j, n);
  }
  return out;
}

RuehrChain ruehr_chain(long n) {
  const RuehrChain direct = ruehr_chain_direct(n);

  const auto eval_integer = [n](SumFamily fam, long at, const BigInt& expected) {
    const Rational v = family_polynomial(fam, n)(Rational(at));
    if (v.get_den() != 1 || v.get_num() != expected) {
      throw InconsistencyError(std::string("ruehr_chain: polynomial route disagrees with direct sum for ") +
                               family_tag(fam) + "_" + std::to_string(n));
    }
  };
  eval_integer(SumFamily::A, 3, direct.a_at_3);
  eval_integer(SumFamily::B, 2, direct.b_at_2);
  eval_integer(SumFamily::D, -4, direct.d_at_minus4);
  eval_integer(SumFamily::C, -3, direct.c_at_minus3);
  return direct;
}

SidePair<Rational> comtet1_sides(long n, long k, const Rational& a, const Rational& b) {
  require(n >= 1 && k >= 0 && k < n, "comtet1_sides: requires 0 <= k < n");
  Rational lhs;
  for (long i = 0; i <= k; ++i) {
    lhs += to_rational(binomial(n, i)) * rpow(a, as_exponent(n - i)) * rpow(b, as_exponent(i));
  }

  const Rational top = a + b;
  const Polynomial integrand = Polynomial::linear(top, -1).pow(as_exponent(n - k - 1)).shifted(as_exponent(k));
  Rational rhs = integrand.integrate(b, top);
  rhs *= to_rational(binomial(n, k) * (n - k));
  return make_side_pair(std::move(lhs), std::move(rhs));
}

SidePair<Polynomial> comtet2_sides(long m, long n) {
  require(m >= 1 && m <= n, "comtet2_sides: requires 1 <= m <= n");
  const auto omx = one_minus_x_powers(n);
  Polynomial lhs;
  Polynomial rhs;
  for (long k = m; k <= n; ++k) {
    lhs += omx[as_exponent(k - m)].shifted(as_exponent(m)).scaled(to_rational(binomial(k - 1, m - 1)));
    rhs += omx[as_exponent(n - k)].shifted(as_exponent(k)).scaled(to_rational(binomial(n, k)));
  }
  return make_side_pair(std::move(lhs), std::move(rhs));
}

Polynomial proof_helper(HelperKind kind, long m, long big_n) {
  require(m >= 1 && big_n >= 0, "proof_helper: requires m >= 1, N >= 0");
  const auto omx = one_minus_x_powers(big_n);
  Polynomial out;
  for (long j = 0; j <= big_n; ++j) {
    const auto e = as_exponent(j);
    if (kind == HelperKind::F) {
      out += omx[e].scaled(to_rational(binomial(m - 1 + j, m - 1)));
    } else {
      out += omx[e].shifted(as_exponent(big_n - j)).scaled(to_rational(binomial(big_n + m, j)));
    }
  }
  return out;
}

SidePair<Polynomial> comtet3_sides(long m, long big_n) {
  return make_side_pair(proof_helper(HelperKind::F, m, big_n), proof_helper(HelperKind::G, m, big_n));
}

SidePair<Polynomial> f_recurrence_sides(long j, long big_n) {
  require(j >= 1 && big_n >= 1, "f_recurrence_sides: requires j >= 1, N >= 1");
  const Polynomial one_minus_x = Polynomial::linear(1, -1);
  Polynomial lhs = proof_helper(HelperKind::F, j + 1, big_n);
  Polynomial rhs = one_minus_x * proof_helper(HelperKind::F, j + 1, big_n - 1) + proof_helper(HelperKind::F, j, big_n);
  return make_side_pair(std::move(lhs), std::move(rhs));
}

SidePair<Polynomial> g_recurrence_sides(long j, long big_n) {
  require(j >= 1 && big_n >= 1, "g_recurrence_sides: requires j >= 1, N >= 1");
  const Polynomial one_minus_x = Polynomial::linear(1, -1);
  Polynomial lhs = proof_helper(HelperKind::G, j + 1, big_n);
  Polynomial rhs = proof_helper(HelperKind::G, j, big_n) + one_minus_x * proof_helper(HelperKind::G, j + 1, big_n - 1);
  return make_side_pair(std::move(lhs), std::move(rhs));
}

SidePair<Polynomial> telescoping_sides(long m, long big_n) {
  require(m >= 1 && big_n >= 1, "telescoping_sides: requires m >= 1, N >= 1");
  Polynomial lhs;
  Polynomial inner;
  for (long j = 1; j <= m; ++j) {
    lhs += proof_helper(HelperKind::F, j + 1, big_n) - proof_helper(HelperKind::F, j, big_n);
    lhs -= proof_helper(HelperKind::G, j + 1, big_n) - proof_helper(HelperKind::G, j, big_n);
    inner += proof_helper(HelperKind::F, j + 1, big_n - 1) - proof_helper(HelperKind::G, j + 1, big_n - 1);
  }
  Polynomial rhs = Polynomial::linear(1, -1) * inner;
  return make_side_pair(std::move(lhs), std::move(rhs));
}

SidePair<Rational> corollary1_sides(long n, Corollary1Variant variant) {
  require(n >= 0, "corollary1_sides: n must be >= 0");
  // (3-2x)^n x^{2n}
  const Polynomial integrand = Polynomial::linear(3, -2).pow(as_exponent(n)).shifted(as_exponent(2 * n));
  const Rational scale = to_rational(binomial(3 * n + 1, 2 * n) * (n + 1));

  Rational lhs;
  Rational rhs;
  if (variant == Corollary1Variant::Pos) {
    for (long j = 0; j <= n; ++j) {
      lhs += to_rational(ipow(2, as_exponent(j)) * binomial(3 * n + 1, n - j));
    }
    rhs = scale * integrand.integrate(0, 1);
  } else {
    for (long j = 0; j <= 2 * n; ++j) {
      lhs += to_rational(ipow(-4, as_exponent(j)) * binomial(3 * n + 1, n + 1 + j));
    }
    rhs = scale * integrand.integrate(Rational(-1, 2), Rational(3, 2)) / 2;
  }
  return make_side_pair(std::move(lhs), std::move(rhs));
}

SidePair<Polynomial> corollary2_sides(long n, Corollary2Variant variant) {
  require(n >= 0, "corollary2_sides: n must be >= 0");
  const long top = variant == Corollary2Variant::First ? n : 2 * n;
  const long lower = variant == Corollary2Variant::First ? 2 * n : n;
  const auto omx = one_minus_x_powers(top);
  Polynomial lhs;
  Polynomial rhs;
  for (long j = 0; j <= top; ++j) {
    const auto rest = as_exponent(top - j);
    lhs += omx[rest].scaled(to_rational(binomial(3 * n - j, lower)));
    const BigInt c = variant == Corollary2Variant::First ? binomial(3 * n + 1, n - j) : binomial(3 * n + 1, n + 1 + j);
    rhs += omx[rest].shifted(as_exponent(j)).scaled(to_rational(c));
  }
  return make_side_pair(std::move(lhs), std::move(rhs));
}

SidePair<Rational> corollary2_specialization(long n, Corollary2Variant variant) {
  const auto sides = corollary2_sides(n, variant);
  const bool first = variant == Corollary2Variant::First;
  const Rational at = first ? Rational(2, 3) : Rational(4, 3);
  const Rational scale = to_rational(ipow(3, as_exponent(first ? n : 2 * n)));
  Rational lhs = sides.lhs(at) * scale;
  Rational rhs = sides.rhs(at) * scale;
  return make_side_pair(std::move(lhs), std::move(rhs));
}

SidePair<Polynomial> shift_sides(SumFamily from, long n) {
  require(from == SumFamily::A || from == SumFamily::C, "shift_sides: source family must be A or C");
  const SumFamily to = from == SumFamily::A ? SumFamily::B : SumFamily::D;
  return make_side_pair(family_polynomial(from, n).compose(Polynomial::linear(1, 1)), family_polynomial(to, n));
}

SidePair<Rational> kimura_ruehr_moments(long n) {
  require(n >= 0, "kimura_ruehr_moments: n must be >= 0");
  const Polynomial power = Polynomial({0, 0, 3, -2}).pow(as_exponent(n));
  Rational lhs = power.integrate(Rational(-1, 2), Rational(3, 2));
  Rational rhs = power.integrate(0, 1) * 2;
#ifdef RUEHRKIT_INJECT_FAULT
  if (n == 2) rhs += Rational(1, 1000);
#endif
  return make_side_pair(std::move(lhs), std::move(rhs));
}

}  // namespace ruehrkit
