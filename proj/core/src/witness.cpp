#include "sigma2/witness.hpp"

#include <algorithm>
#include <random>
#include <set>
#include <utility>

#include "sigma2/distance.hpp"
#include "sigma2/errors.hpp"

namespace sigma2 {

namespace {

// Prefix, then alternating copy/complement blocks of x with lengths
// 1,1,2,2,4,4,...; blocks read x at the same global index they occupy.
class WitnessRule final : public BitRule {
 public:
  WitnessRule(BitStream x, Word prefix)
      : x_(std::move(x)), prefix_(std::move(prefix)) {}

  int bit(std::uint64_t n) const override {
    if (n < prefix_.size()) return prefix_.at(n);
    std::uint64_t r = n - prefix_.size();
    // Pair v holds a copy block then a complement block, each 2^v long.
    std::uint64_t len = 1;
    while (r >= 2 * len) {
      r -= 2 * len;
      len *= 2;
    }
    int b = x_.bit(n);
    return r < len ? b : 1 - b;
  }

  std::string describe() const override {
    return "witness(" + prefix_.to_string() + ", " + x_.describe() + ")";
  }

 private:
  BitStream x_;
  Word prefix_;
};

void push_candidate(std::vector<Rat>& out, std::set<Rat>& seen,
                    const RationalInterval& V, const RationalInterval& dom,
                    const Rat& v) {
  if (!(V.lo < v && v < V.hi)) return;  // V is an open window
  if (v < dom.lo || v > dom.hi) return;
  if (seen.insert(v).second) out.push_back(v);
}

// Rationals p/q with small odd q, strictly inside V.
void grid_candidates(std::vector<Rat>& out, std::set<Rat>& seen,
                     const RationalInterval& V, const RationalInterval& dom,
                     std::size_t cap) {
  for (unsigned long q = 3; q <= 201 && out.size() < cap; q += 2) {
    Int lo_num = Int(V.lo.get_num() * q);
    // smallest p with p/q > V.lo
    Int p;
    mpz_fdiv_q(p.get_mpz_t(), lo_num.get_mpz_t(), V.lo.get_den().get_mpz_t());
    p += 1;
    for (; out.size() < cap; ++p) {
      Rat v(p, Int(q));
      v.canonicalize();
      if (!(v < V.hi)) break;
      push_candidate(out, seen, V, dom, v);
    }
  }
}

// Values 2b/q whose doubling orbit mod q is a short cycle (q = 2^t +- 1),
// so the orbit of such a point under a full tent visits both a value close
// to 1 and the value 2b/q itself. Largest moduli first: they are the ones
// that can realize very small return distances.
void transport_candidates(std::vector<Rat>& out, std::set<Rat>& seen,
                          const RationalInterval& V,
                          const RationalInterval& dom, std::size_t cap) {
  for (int t = 25; t >= 5 && out.size() < cap; --t) {
    for (long sgn : {-1L, +1L}) {
      unsigned long q = (1UL << t) + sgn;
      for (unsigned long b0 : {1UL, 3UL, 5UL, 7UL}) {
        unsigned long b = b0;
        for (int j = 0; j <= 2 * t + 1; ++j) {
          Rat v(Int(2 * b), Int(q));
          v.canonicalize();
          push_candidate(out, seen, V, dom, v);
          Rat nv = -v;
          push_candidate(out, seen, V, dom, nv);
          unsigned long c = 2 * b;
          b = std::min(c, q - c);
          if (b == 0) break;
        }
      }
    }
  }
}

void random_candidates(std::vector<Rat>& out, std::set<Rat>& seen,
                       const RationalInterval& V, const RationalInterval& dom,
                       std::uint64_t seed, std::size_t cap) {
  std::mt19937_64 rng(seed ^ 0x9e3779b97f4a7c15ULL);
  std::uniform_int_distribution<unsigned long> small_q(1, 1UL << 15);
  std::uniform_int_distribution<unsigned long> large_q(1UL << 19, 1UL << 23);
  for (int draws = 0; draws < 256 && out.size() < cap; ++draws) {
    unsigned long q = (draws % 2 == 0 ? small_q(rng) : large_q(rng)) * 2 + 1;
    // integer p with V.lo < p/q < V.hi, if any
    Rat lo = V.lo * Rat(Int(q));
    Rat hi = V.hi * Rat(Int(q));
    Int plo, phi;
    mpz_fdiv_q(plo.get_mpz_t(), lo.get_num().get_mpz_t(),
               lo.get_den().get_mpz_t());
    plo += 1;
    mpz_cdiv_q(phi.get_mpz_t(), hi.get_num().get_mpz_t(),
               hi.get_den().get_mpz_t());
    phi -= 1;
    if (phi < plo) continue;
    Int span = phi - plo + 1;
    std::uint64_t w = rng() % span.get_ui();
    Rat v(Int(plo + Int(w)), Int(q));
    v.canonicalize();
    push_candidate(out, seen, V, dom, v);
  }
}

struct CandidateScan {
  Rat sup;
  std::uint64_t sup_time = 0;
  Rat inf;
  std::uint64_t inf_time = 0;
  bool ok = false;
};

// Walk |x_n - y_n| for n < horizon, stopping early once both thresholds
// are met or once the joint state (x_n, y_n) repeats (from then on the
// distances repeat too, so the scanned extrema are the orbit extrema).
CandidateScan scan_candidate(const IntervalMap& m, const std::vector<Rat>& xs,
                             const Rat& y, const Rat& delta, const Rat& eps) {
  CandidateScan r;
  Rat b = y;
  std::set<std::pair<Rat, Rat>> visited;
  for (std::uint64_t n = 0; n < xs.size(); ++n) {
    Rat d = xs[n] > b ? Rat(xs[n] - b) : Rat(b - xs[n]);
    if (n == 0 || d > r.sup) {
      r.sup = d;
      r.sup_time = n;
    }
    if (n == 0 || d < r.inf) {
      r.inf = d;
      r.inf_time = n;
    }
    if (r.sup >= delta && r.inf <= eps) {
      r.ok = true;
      return r;
    }
    if (visited.size() < (1u << 16) &&
        !visited.insert({xs[n], b}).second)
      return r;
    if (n + 1 < xs.size()) b = m.eval(b);
  }
  return r;
}

}  // namespace

BitStream construct_witness(const BitStream& x, const Word& prefix) {
  return BitStream(std::make_shared<WitnessRule>(x, prefix));
}

std::string strategy_name(SearchStrategy s) {
  switch (s) {
    case SearchStrategy::Grid:
      return "grid";
    case SearchStrategy::Random:
      return "random";
    case SearchStrategy::Transport:
      return "transport";
    case SearchStrategy::All:
      return "all";
  }
  throw ArgumentError("unknown search strategy");
}

WitnessReport chaos_witness_search(const BitStream& x, const Word& cylinder,
                                   const Rat& delta, const Rat& eps,
                                   std::uint64_t horizon, unsigned precision) {
  if (horizon == 0) throw ArgumentError("horizon must be positive");
  BitStream y = construct_witness(x, cylinder);
  WitnessReport r;
  r.system = "shift";
  r.candidate = y.describe();
  r.delta = delta;
  r.eps = eps;
  r.horizon = horizon;
  r.precision = precision;
  r.candidates_scanned = 1;
  for (std::uint64_t n = 0; n < horizon; ++n) {
    Rat d = truncated_distance(shift(x, n), shift(y, n), precision).value();
    if (n == 0 || d > r.sup_estimate) {
      r.sup_estimate = d;
      r.sup_time = n;
    }
    if (n == 0 || d < r.inf_estimate) {
      r.inf_estimate = d;
      r.inf_time = n;
    }
    if (r.sup_estimate >= delta && r.inf_estimate <= eps) break;
  }
  r.found = r.sup_estimate >= delta && r.inf_estimate <= eps;
  r.min_inf_overall = r.inf_estimate;
  return r;
}

std::vector<Rat> witness_candidates(const IntervalMap& m,
                                    const RationalInterval& V, const Rat& eps,
                                    SearchStrategy strategy,
                                    std::uint64_t seed) {
  (void)eps;  // pools are threshold-independent; eps reserved for tuning
  RationalInterval dom = m.domain();
  std::vector<Rat> out;
  std::set<Rat> seen;
  const std::size_t cap = 48;
  bool all = strategy == SearchStrategy::All;
  if (all || strategy == SearchStrategy::Grid)
    grid_candidates(out, seen, V, dom, out.size() + cap);
  if (all || strategy == SearchStrategy::Transport)
    transport_candidates(out, seen, V, dom, out.size() + cap);
  if (all || strategy == SearchStrategy::Random)
    random_candidates(out, seen, V, dom, seed, out.size() + 16);
  return out;
}

WitnessReport chaos_witness_search(const IntervalMap& m, const Rat& x,
                                   const RationalInterval& V, const Rat& delta,
                                   const Rat& eps, std::uint64_t horizon,
                                   SearchStrategy strategy,
                                   std::uint64_t seed) {
  if (horizon == 0) throw ArgumentError("horizon must be positive");
  RationalInterval dom = m.domain();
  if (x < dom.lo || x > dom.hi)
    throw ArgumentError("base point outside map domain");

  std::vector<Rat> xs;
  xs.reserve(horizon);
  Rat a = x;
  for (std::uint64_t n = 0; n < horizon; ++n) {
    xs.push_back(a);
    if (n + 1 < horizon) a = m.eval(a);
  }

  std::vector<Rat> pool = witness_candidates(m, V, eps, strategy, seed);

  WitnessReport r;
  r.system = m.describe();
  r.delta = delta;
  r.eps = eps;
  r.horizon = horizon;
  r.precision = 0;

  bool have_best = false;
  CandidateScan best;
  Rat best_value;
  for (const Rat& y : pool) {
    CandidateScan s = scan_candidate(m, xs, y, delta, eps);
    ++r.candidates_scanned;
    if (!r.min_inf_overall || s.inf < *r.min_inf_overall)
      r.min_inf_overall = s.inf;
    bool better = !have_best || s.inf < best.inf ||
                  (s.inf == best.inf && s.sup > best.sup);
    if (better) {
      have_best = true;
      best = s;
      best_value = y;
    }
    if (s.ok) break;
  }

  if (have_best) {
    r.found = best.ok;
    r.candidate = best_value.get_str();
    r.candidate_value = best_value;
    r.sup_estimate = best.sup;
    r.sup_time = best.sup_time;
    r.inf_estimate = best.inf;
    r.inf_time = best.inf_time;
  }
  return r;
}

bool verify_witness_report(const BitStream& x, const Word& cylinder,
                           const WitnessReport& r) {
  BitStream y = construct_witness(x, cylinder);
  Rat sup = truncated_distance(shift(x, r.sup_time), shift(y, r.sup_time),
                               r.precision)
                .value();
  Rat inf = truncated_distance(shift(x, r.inf_time), shift(y, r.inf_time),
                               r.precision)
                .value();
  return sup == r.sup_estimate && inf == r.inf_estimate;
}

bool verify_witness_report(const IntervalMap& m, const Rat& x,
                           const WitnessReport& r) {
  if (!r.candidate_value) return false;
  Rat a = x;
  Rat b = *r.candidate_value;
  std::uint64_t upto = std::max(r.sup_time, r.inf_time);
  bool sup_seen = false, inf_seen = false;
  for (std::uint64_t n = 0; n <= upto; ++n) {
    Rat d = a > b ? Rat(a - b) : Rat(b - a);
    if (n == r.sup_time) sup_seen = d == r.sup_estimate;
    if (n == r.inf_time) inf_seen = d == r.inf_estimate;
    if (n < upto) {
      a = m.eval(a);
      b = m.eval(b);
    }
  }
  return sup_seen && inf_seen;
}

SeparationReport two_cycle_separation(const IntervalMap& m, const Rat& x,
                                      const std::vector<Rat>& candidates,
                                      std::uint64_t horizon) {
  if (horizon == 0) throw ArgumentError("horizon must be positive");
  if (candidates.empty()) throw ArgumentError("no candidates to separate");
  SeparationReport r;
  r.horizon = horizon;
  Rat fx = m.eval(x);
  r.two_cycle = fx != x && m.eval(fx) == x;
  bool first = true;
  for (std::size_t c = 0; c < candidates.size(); ++c) {
    Rat a = x;
    Rat b = candidates[c];
    for (std::uint64_t n = 0; n < horizon; ++n) {
      if (a * b > 0) r.opposite_signs = false;
      Rat d = a > b ? Rat(a - b) : Rat(b - a);
      if (first || d < r.min_gap) {
        first = false;
        r.min_gap = d;
        r.arg_candidate = c;
        r.arg_time = n;
      }
      if (n + 1 < horizon) {
        a = m.eval(a);
        b = m.eval(b);
      }
    }
  }
  return r;
}

}  // namespace sigma2
