#include "sigma2/systems.hpp"

#include <algorithm>
#include <thread>

#include "sigma2/errors.hpp"

namespace sigma2 {

IntervalMap IntervalMap::pwl(PwlMap m, std::string name) {
  IntervalMap out;
  out.pwl_ = std::move(m);
  out.name_ = std::move(name);
  return out;
}

IntervalMap IntervalMap::logistic(Rat mu) {
  if (mu <= 0) throw ArgumentError("logistic parameter must be positive");
  IntervalMap out;
  out.mu_ = std::move(mu);
  return out;
}

Rat IntervalMap::eval(const Rat& x) const {
  if (pwl_) return pwl_eval(*pwl_, x);
  Rat v = logistic_eval(*mu_, x);
  if (mpz_sizeinbase(v.get_den().get_mpz_t(), 2) > kLogisticDenomBitGuard)
    throw PrecisionError(0, "logistic orbit denominator exceeds bit guard");
  return v;
}

RationalInterval IntervalMap::domain() const {
  if (pwl_) return pwl_->domain();
  return {Rat(0), Rat(1)};
}

const PwlMap* IntervalMap::as_pwl() const { return pwl_ ? &*pwl_ : nullptr; }

const Rat* IntervalMap::logistic_mu() const { return mu_ ? &*mu_ : nullptr; }

std::string IntervalMap::describe() const {
  if (mu_) return "logistic:" + mu_->get_str();
  if (!name_.empty()) return name_;
  return "pwl[" + std::to_string(pwl_->nodes().size()) + " nodes]";
}

DistanceSeries distance_series(const BitStream& x, const BitStream& y,
                               std::uint64_t horizon, unsigned precision,
                               unsigned parallelism) {
  if (horizon == 0) throw ArgumentError("horizon must be positive");
  DistanceSeries out;
  out.horizon = horizon;
  out.precision = precision;
  out.entries.resize(horizon);

  auto scan = [&](std::uint64_t lo, std::uint64_t hi) {
    for (std::uint64_t n = lo; n < hi; ++n) {
      DyadicDistance d =
          truncated_distance(shift(x, n), shift(y, n), precision);
      out.entries[n] = {n, d.value()};
    }
  };

  unsigned hw = std::max(1u, std::thread::hardware_concurrency());
  unsigned workers = std::min<std::uint64_t>(
      horizon, std::min<unsigned>(parallelism == 0 ? hw : parallelism, 64));
  if (workers <= 1) {
    scan(0, horizon);
    return out;
  }
  std::vector<std::thread> pool;
  std::uint64_t chunk = (horizon + workers - 1) / workers;
  for (unsigned w = 0; w < workers; ++w) {
    std::uint64_t lo = std::uint64_t(w) * chunk;
    std::uint64_t hi = std::min(horizon, lo + chunk);
    if (lo >= hi) break;
    pool.emplace_back(scan, lo, hi);
  }
  for (auto& t : pool) t.join();
  return out;
}

DistanceSeries distance_series(const IntervalMap& m, const Rat& x,
                               const Rat& y, std::uint64_t horizon) {
  if (horizon == 0) throw ArgumentError("horizon must be positive");
  DistanceSeries out;
  out.horizon = horizon;
  out.precision = 0;
  out.entries.reserve(horizon);
  Rat a = x;
  Rat b = y;
  for (std::uint64_t n = 0; n < horizon; ++n) {
    Rat d = a > b ? Rat(a - b) : Rat(b - a);
    out.entries.emplace_back(n, d);
    if (n + 1 < horizon) {
      a = m.eval(a);
      b = m.eval(b);
    }
  }
  return out;
}

PairReport scrambled_pair_report(const DistanceSeries& series,
                                 const Rat& delta, const Rat& eps) {
  if (series.entries.empty()) throw ArgumentError("empty distance series");
  PairReport r;
  r.delta = delta;
  r.eps = eps;
  r.horizon = series.horizon;
  r.precision = series.precision;
  r.max = series.entries.front().second;
  r.min = series.entries.front().second;
  r.argmax = series.entries.front().first;
  r.argmin = series.entries.front().first;
  for (const auto& [n, d] : series.entries) {
    if (d > r.max) {
      r.max = d;
      r.argmax = n;
    }
    if (d < r.min) {
      r.min = d;
      r.argmin = n;
    }
  }
  r.sup_ok = r.max >= delta;
  r.inf_ok = r.min <= eps;
  return r;
}

}  // namespace sigma2
