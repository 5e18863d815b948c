// Truncated metric on binary streams: d(x, y) = sum |x_i - y_i| / 2^(i+1).
// The N-bit truncation is an exact dyadic rational numerator/2^N; the true
// distance always lies in [value, value + 2^(-N)].

#pragma once

#include <cstdint>

#include "sigma2/bitstream.hpp"
#include "sigma2/rational.hpp"

namespace sigma2 {

// Largest truncation precision accepted; keeps numerators comfortably sized.
inline constexpr unsigned kMaxDistancePrecision = 1u << 24;

struct DyadicDistance {
  Int numerator;       // in [0, 2^precision - 1]
  unsigned precision;  // N

  Rat value() const;            // numerator / 2^N, exact
  Rat upper_bound() const;      // value + 2^(-N)
  bool is_zero() const { return numerator == 0; }
  bool all_ones() const;        // numerator == 2^N - 1
};

// Exact truncated distance over the first N bit positions. N >= 1;
// RangeError beyond kMaxDistancePrecision.
DyadicDistance truncated_distance(const BitStream& x, const BitStream& y,
                                  unsigned precision);

}  // namespace sigma2
