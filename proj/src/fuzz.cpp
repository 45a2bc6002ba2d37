#include "ruehrkit/fuzz.hpp"

#include <stdexcept>

namespace ruehrkit {

long FuzzSource::uniform(long lo, long hi) {
  if (lo > hi) throw std::invalid_argument("FuzzSource::uniform: empty range");
  const auto span = static_cast<std::uint64_t>(hi - lo) + 1;
  return lo + static_cast<long>(next() % span);
}

Rational fuzz_rational(FuzzSource& src, long num_bound, long den_bound) {
  if (num_bound < 1 || den_bound < 1) {
    throw std::invalid_argument("fuzz_rational: bounds must be >= 1");
  }
  // 2*num_bound slots map onto -B..-1, 1..B.
  const long slot = src.uniform(0, 2 * num_bound - 1);
  const long num = slot < num_bound ? slot - num_bound : slot - num_bound + 1;
  const long den = src.uniform(1, den_bound);
  return make_rational(num, den);
}

Rational fuzz_probability(FuzzSource& src, long den_bound, bool allow_zero) {
  if (den_bound < 1) throw std::invalid_argument("fuzz_probability: den_bound must be >= 1");
  const long den = src.uniform(1, den_bound);
  const long num = src.uniform(allow_zero ? 0 : 1, den);
  return make_rational(num, den);
}

}  // namespace ruehrkit
