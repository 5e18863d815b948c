#include "sigma2/distance.hpp"

#include "sigma2/errors.hpp"

namespace sigma2 {

Rat DyadicDistance::value() const {
  Rat v(numerator, pow2(precision));
  v.canonicalize();
  return v;
}

Rat DyadicDistance::upper_bound() const {
  Rat v(numerator + 1, pow2(precision));
  v.canonicalize();
  return v;
}

bool DyadicDistance::all_ones() const {
  return numerator == pow2(precision) - 1;
}

DyadicDistance truncated_distance(const BitStream& x, const BitStream& y,
                                  unsigned precision) {
  if (precision == 0) throw ArgumentError("precision must be >= 1");
  if (precision > kMaxDistancePrecision) {
    throw RangeError("precision beyond supported maximum");
  }
  // numerator = sum_{i<N} |x_i - y_i| * 2^(N-1-i), built most significant
  // bit first.
  Int num = 0;
  for (unsigned i = 0; i < precision; ++i) {
    num <<= 1;
    if (x.bit(i) != y.bit(i)) num |= 1;
  }
  return DyadicDistance{num, precision};
}

}  // namespace sigma2
