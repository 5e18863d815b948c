// Exact checks of the distance behavior of tau streams at their scheduled
// times. Each check compares lazily indexed streams through the truncated
// dyadic metric and states the exact numerator it found along with the
// pass verdict.

#pragma once

#include <cstdint>
#include <optional>

#include "sigma2/distance.hpp"
#include "sigma2/tau.hpp"

namespace sigma2 {

// One measured truncated distance with the expectation it was tested
// against.
struct ScheduledDistance {
  std::uint64_t time = 0;      // shift applied to both streams
  unsigned precision = 0;      // effective truncation used
  Int numerator;               // measured
  Int expected_numerator;      // what the schedule predicts
  bool pass = false;
};

struct DivergenceCheck {
  unsigned m = 0;
  unsigned s = 0;
  ScheduledDistance at_run_start;  // n = 2m! + s(m-1)!, expect all ones
  bool pass = false;
};

// gamma(p) and gamma(q) must differ at index s; all other parameters of the
// two tau points must agree (k and prefix are verified). At the scheduled
// time both shifted points read their gamma-repeat runs, so the first
// min(precision, (m-1)!) bits all differ.
DivergenceCheck scheduled_divergence_check(const TauParams& p,
                                           const TauParams& q, unsigned s,
                                           unsigned m,
                                           unsigned precision = 64);

struct CoincidenceCheck {
  unsigned m = 0;
  std::optional<unsigned> i;
  std::optional<unsigned> j;
  // d(sigma^{m!} tau_p, sigma^{m!} tau_q): the alpha copy makes the first
  // min(precision, m!) bits agree, numerator 0.
  ScheduledDistance at_alpha_copy;
  // Present when shifts i < j are given: reading from t_m = 3m! +
  // (j-i)(j-i-1)(m-2)!, the two points' pattern-tail segments sit out of
  // phase by j-i, so the first (j-i)(2(m-2)!-1) bits all differ.
  std::optional<ScheduledDistance> at_pattern_tail;
  bool pass = false;
};

CoincidenceCheck scheduled_coincidence_check(const TauParams& p,
                                             const TauParams& q, unsigned m,
                                             unsigned precision = 64);
CoincidenceCheck scheduled_coincidence_check(const TauParams& p,
                                             const TauParams& q, unsigned i,
                                             unsigned j, unsigned m,
                                             unsigned precision = 64);

struct TrackingCheck {
  unsigned m = 0;
  unsigned i = 0;
  unsigned j = 0;
  // t = 4m! + (i-1)m! + j(m-1)!/2: sigma^t(sigma^j tau) copies x_i from
  // index t on for (m-1)!/2 - j bits, so the truncated distance vanishes.
  ScheduledDistance near;
  // At t + m!/2 the copy flips to the complement: all bits differ.
  ScheduledDistance far;
  bool pass = false;
};

// Requires i >= 1 and j < (m-1)!/2. The stage condition m > k+i+j+3 is
// enforced unless relax_stage_guard is set (small-stage oracle cross-checks
// relax it; the block geometry is still validated).
TrackingCheck scheduled_tracking_check(const TauParams& p, unsigned i,
                                       unsigned j, unsigned m,
                                       unsigned precision = 64,
                                       bool relax_stage_guard = false);

}  // namespace sigma2
