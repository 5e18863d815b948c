// Orbit-distance series over the two system kinds the library measures:
// shift systems (points are bit streams, distance is the truncated dyadic
// metric) and interval systems (points are exact rationals under a
// piecewise linear or logistic map, distance is |a - b|).

#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "sigma2/bitstream.hpp"
#include "sigma2/distance.hpp"
#include "sigma2/logistic.hpp"
#include "sigma2/pwl.hpp"
#include "sigma2/rational.hpp"

namespace sigma2 {

// One exact interval self-map: a piecewise linear map or a logistic map.
class IntervalMap {
 public:
  static IntervalMap pwl(PwlMap m, std::string name = "");
  static IntervalMap logistic(Rat mu);

  // Exact step. Logistic steps enforce the denominator bit guard
  // (PrecisionError carries the failing step as depth 0).
  Rat eval(const Rat& x) const;
  RationalInterval domain() const;
  const PwlMap* as_pwl() const;          // nullptr for logistic
  const Rat* logistic_mu() const;        // nullptr for pwl
  std::string describe() const;

 private:
  IntervalMap() = default;
  std::optional<PwlMap> pwl_;
  std::optional<Rat> mu_;
  std::string name_;
};

struct DistanceSeries {
  // entry t holds (t, dist(step^t x, step^t y)); exactly horizon entries,
  // t = 0 .. horizon-1.
  std::vector<std::pair<std::uint64_t, Rat>> entries;
  std::uint64_t horizon = 0;
  unsigned precision = 0;  // 0 for interval systems
};

// Shift system: dist(n) is the precision-bit truncated metric between
// sigma^n x and sigma^n y, indexed directly (no repeated stepping).
// parallelism > 1 splits the scan into chunks; results are identical to
// the sequential scan.
DistanceSeries distance_series(const BitStream& x, const BitStream& y,
                               std::uint64_t horizon, unsigned precision = 64,
                               unsigned parallelism = 1);

// Interval system: exact orbits, exact absolute differences.
DistanceSeries distance_series(const IntervalMap& m, const Rat& x,
                               const Rat& y, std::uint64_t horizon);

struct PairReport {
  Rat max;
  std::uint64_t argmax = 0;  // earliest time attaining max
  Rat min;
  std::uint64_t argmin = 0;  // earliest time attaining min
  Rat delta;
  Rat eps;
  bool sup_ok = false;  // max >= delta
  bool inf_ok = false;  // min <= eps
  std::uint64_t horizon = 0;
  unsigned precision = 0;
};

// Max/min digest of a series against scrambling thresholds.
PairReport scrambled_pair_report(const DistanceSeries& series,
                                 const Rat& delta, const Rat& eps);

}  // namespace sigma2
