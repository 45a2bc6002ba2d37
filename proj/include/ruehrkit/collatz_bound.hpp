#pragma once

// Generalized (3x+1)-type map, orbits, and the binomial large-deviation
// tail sum with its integral representation.

#include "ruehrkit/exact_math.hpp"
#include "ruehrkit/identities.hpp"

#include <optional>
#include <vector>

namespace ruehrkit {

/// g(l) = l/d if d | l, else (n*l - phi(n*l))/d, with phi(v) the unique
/// element of `residues` congruent to v modulo d.
class GenCollatzConfig {
 public:
  /// Throws std::invalid_argument unless mult >= 1, div >= 2,
  /// gcd(mult, div) = 1, and residues is a complete residue system mod div.
  GenCollatzConfig(long mult, long div, std::vector<long> residues);

  /// n = 3, d = 2, residues {0, -1}.
  static GenCollatzConfig classical();

  [[nodiscard]] long mult() const { return mult_; }
  [[nodiscard]] long div() const { return div_; }
  [[nodiscard]] const std::vector<long>& residues() const { return residues_; }

  /// Element of the residue system congruent to v.
  [[nodiscard]] long representative(const BigInt& v) const;

 private:
  long mult_;
  long div_;
  std::vector<long> residues_;
};

/// One application of g. Throws InconsistencyError if the division by d
/// is not exact, which cannot happen for a validated config.
BigInt g_step(const BigInt& ell, const GenCollatzConfig& cfg);

enum class OrbitEnd { CycleFound, MaxStepsReached };

struct OrbitResult {
  /// Starting value followed by each iterate; on CycleFound the last entry
  /// is the first repeated value.
  std::vector<BigInt> steps;
  OrbitEnd terminated = OrbitEnd::MaxStepsReached;
  /// The repeating segment, starting at the first occurrence of the
  /// repeated value.
  std::optional<std::vector<BigInt>> cycle;
};

/// Iterates g from ell for at most max_steps applications, stopping at the
/// first repeated value. Requires max_steps >= 1.
OrbitResult orbit(const BigInt& ell, const GenCollatzConfig& cfg, long max_steps);

struct TailSumQuery {
  long k;
  long d;
  Rational eps;
};

/// d^{-k} * sum of C(k,i) (d-1)^i over 0 <= i <= k with |i - (d-1)k/d| > eps*k.
/// Requires k >= 1, d >= 2, 0 < eps < 1.
Rational tail_sum(const TailSumQuery& q);

struct EtaPoint {
  long k;
  double root;  // tail_sum^{1/k}
};

struct EtaProfile {
  std::vector<EtaPoint> points;
  double max_root = 0.0;
};

/// tail_sum^{1/k} for each k, computed in log space from the exact value.
EtaProfile eta_profile(long d, const Rational& eps, const std::vector<long>& k_values);

/// sum_{i<=m} C(k,i) (d-1)^i  vs  (k-m) C(k,m) int_{d-1}^{d} t^m (d-t)^{k-m-1} dt.
/// Requires 0 <= m < k and d >= 2.
SidePair<Rational> partial_sum_sides(long k, long m, long d);

}  // namespace ruehrkit
