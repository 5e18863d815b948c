#include "sigma2/schedule.hpp"

#include <algorithm>

#include "sigma2/errors.hpp"

namespace sigma2 {

namespace {

void require_comparable(const TauParams& p, const TauParams& q) {
  p.validate();
  q.validate();
  if (p.k != q.k) throw ArgumentError("tau points must share the base stage");
  if (!(p.prefix_b == q.prefix_b)) {
    throw ArgumentError("tau points must share the prefix word");
  }
}

ScheduledDistance measure(const BitStream& a, const BitStream& b,
                          std::uint64_t time, unsigned precision,
                          const Int& expected) {
  ScheduledDistance out;
  out.time = time;
  out.precision = precision;
  out.numerator = truncated_distance(shift(a, time), shift(b, time),
                                     precision)
                      .numerator;
  out.expected_numerator = expected;
  out.pass = (out.numerator == expected);
  return out;
}

unsigned capped(unsigned precision, std::uint64_t limit) {
  return static_cast<unsigned>(
      std::min<std::uint64_t>(precision, limit));
}

}  // namespace

DivergenceCheck scheduled_divergence_check(const TauParams& p,
                                           const TauParams& q, unsigned s,
                                           unsigned m, unsigned precision) {
  require_comparable(p, q);
  if (m < p.k || m > p.max_stage || m > q.max_stage) {
    throw ArgumentError("stage m outside the supported range");
  }
  if (s >= m) throw ArgumentError("run index s must satisfy s < m");
  if (p.gamma.bit(s) == q.gamma.bit(s)) {
    throw ArgumentError("gamma streams must differ at index s");
  }
  if (precision == 0) throw ArgumentError("precision must be >= 1");

  DivergenceCheck out;
  out.m = m;
  out.s = s;
  const std::uint64_t n =
      2 * factorial(m) + static_cast<std::uint64_t>(s) * factorial(m - 1);
  const unsigned N = capped(precision, factorial(m - 1));
  out.at_run_start =
      measure(tau_stream(p), tau_stream(q), n, N, pow2(N) - 1);
  out.pass = out.at_run_start.pass;
  return out;
}

namespace {

CoincidenceCheck coincidence_impl(const TauParams& p, const TauParams& q,
                                  std::optional<unsigned> i,
                                  std::optional<unsigned> j, unsigned m,
                                  unsigned precision) {
  require_comparable(p, q);
  if (m < p.k || m > p.max_stage || m > q.max_stage) {
    throw ArgumentError("stage m outside the supported range");
  }
  if (precision == 0) throw ArgumentError("precision must be >= 1");

  CoincidenceCheck out;
  out.m = m;
  out.i = i;
  out.j = j;

  const BitStream tp = tau_stream(p);
  const BitStream tq = tau_stream(q);

  // Both points start stage m with the same alpha copy of length m!.
  const unsigned N0 = capped(precision, factorial(m));
  out.at_alpha_copy = measure(tp, tq, factorial(m), N0, Int(0));
  out.pass = out.at_alpha_copy.pass;

  if (i && j) {
    if (*i >= *j) throw ArgumentError("shifts must satisfy i < j");
    const unsigned d = *j - *i;
    if (d > m - 1) {
      throw ArgumentError("shift gap exceeds the pattern tail runs");
    }
    const std::uint64_t pat = factorial(m - 2);
    const std::uint64_t t_m =
        3 * factorial(m) + static_cast<std::uint64_t>(d) * (d - 1) * pat;
    // Both tails read (0^d 1^d)^{(m-2)!} from t_m; offsetting one stream by
    // d puts the runs exactly out of phase for d(2(m-2)!-1) bits.
    const std::uint64_t differ = static_cast<std::uint64_t>(d) * (2 * pat - 1);
    const unsigned L = capped(precision, differ);
    ScheduledDistance tail;
    tail.time = t_m;
    tail.precision = L;
    tail.numerator =
        truncated_distance(shift(tq, t_m), shift(tp, t_m + d), L).numerator;
    tail.expected_numerator = pow2(L) - 1;
    tail.pass = (tail.numerator == tail.expected_numerator);
    out.at_pattern_tail = tail;
    out.pass = out.pass && tail.pass;
  }
  return out;
}

}  // namespace

CoincidenceCheck scheduled_coincidence_check(const TauParams& p,
                                             const TauParams& q, unsigned m,
                                             unsigned precision) {
  return coincidence_impl(p, q, std::nullopt, std::nullopt, m, precision);
}

CoincidenceCheck scheduled_coincidence_check(const TauParams& p,
                                             const TauParams& q, unsigned i,
                                             unsigned j, unsigned m,
                                             unsigned precision) {
  return coincidence_impl(p, q, i, j, m, precision);
}

TrackingCheck scheduled_tracking_check(const TauParams& p, unsigned i,
                                       unsigned j, unsigned m,
                                       unsigned precision,
                                       bool relax_stage_guard) {
  p.validate();
  if (m > p.max_stage) throw ArgumentError("stage m beyond max stage");
  if (i < 1) throw ArgumentError("family index i must be >= 1");
  if (!relax_stage_guard && m <= p.k + i + j + 3) {
    throw ArgumentError("tracking needs stage m > k + i + j + 3");
  }
  if (m < p.k || i + 3 > m) {
    throw ArgumentError("stage m has no tracking block for this i");
  }
  const std::uint64_t sub = factorial(m - 1) / 2;
  if (j >= sub) throw ArgumentError("shift j must be below (m-1)!/2");
  if (precision == 0) throw ArgumentError("precision must be >= 1");

  TrackingCheck out;
  out.m = m;
  out.i = i;
  out.j = j;

  const std::uint64_t mf = factorial(m);
  const std::uint64_t t =
      4 * mf + static_cast<std::uint64_t>(i - 1) * mf + j * sub;
  const std::uint64_t agree = sub - j;
  const unsigned N = capped(precision, agree);

  const BitStream tau_j = shift(tau_stream(p), j);  // sigma^j(tau)
  const BitStream xi = p.family_at(i);

  out.near = measure(tau_j, xi, t, N, Int(0));
  out.far = measure(tau_j, xi, t + mf / 2, N, pow2(N) - 1);
  out.pass = out.near.pass && out.far.pass;
  return out;
}

}  // namespace sigma2
