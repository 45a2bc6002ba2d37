#pragma once

// Both sides of the Comtet, Kimura-Ruehr and Ruehr binomial-sum identities,
// each side built along its own computational route.
//
// Sums are evaluated by direct big-integer/rational summation; the other
// side goes through Polynomial (expansion, composition, integration). The
// two routes share only binomial() and the Rational type.

#include "ruehrkit/exact_math.hpp"

#include <stdexcept>

namespace ruehrkit {

/// Result of one identity instance.
template <class T>
struct SidePair {
  T lhs;
  T rhs;
  bool equal = false;
};

template <class T>
SidePair<T> make_side_pair(T lhs, T rhs) {
  const bool eq = lhs == rhs;
  return SidePair<T>{std::move(lhs), std::move(rhs), eq};
}

/// Raised when two computation routes for the same quantity disagree.
/// That indicates a bug in this library, not a failed identity.
class InconsistencyError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

enum class SumFamily { A, B, C, D };

char family_tag(SumFamily fam);

/// A_n(x) = sum_{j<=n} C(3n-j, 2n) x^j
/// B_n(x) = sum_{j<=n} C(3n+1, n-j) x^j
/// C_n(x) = sum_{j<=2n} C(3n-j, n) x^j
/// D_n(x) = sum_{j<=2n} C(3n+1, n+1+j) x^j
Polynomial family_polynomial(SumFamily fam, long n);

struct RuehrChain {
  BigInt a_at_3;        // A_n(3)  = sum 3^j C(3n-j, 2n)
  BigInt b_at_2;        // B_n(2)  = sum 2^j C(3n+1, n-j)
  BigInt d_at_minus4;   // D_n(-4) = sum (-4)^j C(3n+1, n+1+j)
  BigInt c_at_minus3;   // C_n(-3) = sum (-3)^j C(3n-j, n)

  [[nodiscard]] bool all_equal() const {
    return a_at_3 == b_at_2 && b_at_2 == d_at_minus4 && d_at_minus4 == c_at_minus3;
  }
};

/// Four binomial sums, each computed by direct summation and by evaluating
/// family_polynomial(). Throws InconsistencyError if the two routes differ
/// for any component. Whether the four agree is left to the caller.
RuehrChain ruehr_chain(long n);

/// Direct-summation route only.
RuehrChain ruehr_chain_direct(long n);

/// sum_{i<=k} C(n,i) a^{n-i} b^i  vs  (n-k) C(n,k) int_b^{a+b} t^k (a+b-t)^{n-k-1} dt.
/// Requires 0 <= k < n; throws std::invalid_argument otherwise.
SidePair<Rational> comtet1_sides(long n, long k, const Rational& a, const Rational& b);

/// sum_{m<=k<=n} C(k-1,m-1) x^m (1-x)^{k-m}  vs  sum_{m<=k<=n} C(n,k) x^k (1-x)^{n-k}.
/// Requires 1 <= m <= n.
SidePair<Polynomial> comtet2_sides(long m, long n);

/// f(m,N) vs g(m,N); requires m >= 1, N >= 0.
SidePair<Polynomial> comtet3_sides(long m, long big_n);

enum class HelperKind { F, G };

/// f(m,N) = sum_{j<=N} C(m-1+j, m-1) (1-x)^j
/// g(m,N) = sum_{j<=N} C(N+m, j) x^{N-j} (1-x)^j
Polynomial proof_helper(HelperKind kind, long m, long big_n);

/// f(j+1,N)  vs  (1-x) f(j+1,N-1) + f(j,N);  j >= 1, N >= 1.
SidePair<Polynomial> f_recurrence_sides(long j, long big_n);
/// g(j+1,N)  vs  g(j,N) + (1-x) g(j+1,N-1);  j >= 1, N >= 1.
SidePair<Polynomial> g_recurrence_sides(long j, long big_n);

/// sum_{j=1..m} [(f(j+1,N)-f(j,N)) - (g(j+1,N)-g(j,N))]
///   vs  (1-x) sum_{j=1..m} [f(j+1,N-1) - g(j+1,N-1)];  m >= 1, N >= 1.
SidePair<Polynomial> telescoping_sides(long m, long big_n);

enum class Corollary1Variant { Pos, Neg };

/// Pos: sum 2^j C(3n+1,n-j)  vs  (n+1) C(3n+1,2n) int_0^1 (3-2x)^n x^{2n} dx
/// Neg: sum (-4)^j C(3n+1,n+1+j)  vs  1/2 (n+1) C(3n+1,2n) int_{-1/2}^{3/2} (3-2x)^n x^{2n} dx
SidePair<Rational> corollary1_sides(long n, Corollary1Variant variant);

enum class Corollary2Variant { First, Second };

/// First:  sum_{j<=n} C(3n-j,2n) (1-x)^{n-j}  vs  sum_{j<=n} C(3n+1,n-j) x^j (1-x)^{n-j}
/// Second: sum_{j<=2n} C(3n-j,n) (1-x)^{2n-j}  vs  sum_{k<=2n} C(3n+1,n+1+k) x^k (1-x)^{2n-k}
SidePair<Polynomial> corollary2_sides(long n, Corollary2Variant variant);

/// Both sides of corollary2_sides(n, variant) evaluated at x = 2/3 (First)
/// or x = 4/3 (Second) and multiplied by 3^n or 3^{2n}, which clears the
/// denominators and should land on the ruehr_chain value.
SidePair<Rational> corollary2_specialization(long n, Corollary2Variant variant);

/// A_n(x+1) vs B_n(x) (from = A), or C_n(x+1) vs D_n(x) (from = C).
/// Throws std::invalid_argument for from = B or D.
SidePair<Polynomial> shift_sides(SumFamily from, long n);

/// int_{-1/2}^{3/2} (3x^2-2x^3)^n dx  vs  2 int_0^1 (3x^2-2x^3)^n dx.
SidePair<Rational> kimura_ruehr_moments(long n);

}  // namespace ruehrkit
