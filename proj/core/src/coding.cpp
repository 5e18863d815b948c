#include "sigma2/coding.hpp"

#include <utility>

#include "sigma2/errors.hpp"

namespace sigma2 {

Itinerary itinerary(const PwlMap& m, const Rat& x, std::uint64_t n,
                    const std::vector<RationalInterval>& partition) {
  if (partition.size() != 2) {
    throw ArgumentError("itineraries are binary: partition needs two cells");
  }
  const RationalInterval dom = m.domain();
  if (partition[0].lo != dom.lo || partition[1].hi != dom.hi ||
      partition[0].hi != partition[1].lo) {
    throw ArgumentError("partition cells must tile the domain");
  }
  const Rat& split = partition[0].hi;
  Itinerary out;
  Rat v = x;
  for (std::uint64_t step = 0; step < n; ++step) {
    if (!dom.contains(v)) {
      throw DomainEscape(step, "orbit left the map domain");
    }
    if (v < split) {
      out.word.push(0);
    } else if (v > split) {
      out.word.push(1);
    } else {
      out.word.push(0);  // tie goes to the lower cell
      out.boundary_hits.push_back(step);
    }
    v = pwl_eval(m, v);
  }
  return out;
}

BranchSystem tent_branches() {
  BranchSystem b;
  b.cells = {RationalInterval(Rat(0), Rat(1, 2)),
             RationalInterval(Rat(1, 2), Rat(1))};
  b.inverse = [](unsigned symbol, const RationalInterval& J,
                 const Rat& /*tol*/) {
    // branch 0: y = 2x on [0,1/2]; branch 1: y = 2-2x on [1/2,1]
    const Rat lo = std::max(J.lo, Rat(0));
    const Rat hi = std::min(J.hi, Rat(1));
    if (lo > hi) throw NoPointError("itinerary constraint is empty");
    if (symbol == 0) {
      return RationalInterval(lo / 2, hi / 2);
    }
    if (symbol == 1) {
      return RationalInterval((2 - hi) / 2, (2 - lo) / 2);
    }
    throw ArgumentError("tent branches use symbols 0 and 1");
  };
  return b;
}

namespace {

// Bracketed bisection for F_mu on a monotone cell: returns [lo, hi] with
// F(lo), F(hi) straddling y and hi - lo <= tol. increasing tells which way
// F runs over the cell.
RationalInterval bisect_preimage(const Rat& mu, RationalInterval cell,
                                 const Rat& y, bool increasing,
                                 const Rat& tol) {
  auto F = [&](const Rat& x) -> Rat { return mu * x * (1 - x); };
  Rat lo = cell.lo, hi = cell.hi;
  while (hi - lo > tol) {
    Rat mid = (lo + hi) / 2;
    const bool go_right = increasing ? (F(mid) < y) : (F(mid) > y);
    if (go_right) {
      lo = mid;
    } else {
      hi = mid;
    }
  }
  return RationalInterval(lo, hi);
}

}  // namespace

BranchSystem logistic_branches(const Rat& mu) {
  if (mu <= 0) throw ArgumentError("logistic branches need mu > 0");
  BranchSystem b;
  b.cells = {RationalInterval(Rat(0), Rat(1, 2)),
             RationalInterval(Rat(1, 2), Rat(1))};
  b.inverse = [mu](unsigned symbol, const RationalInterval& J,
                   const Rat& tol) {
    if (symbol > 1) throw ArgumentError("logistic branches use symbols 0 and 1");
    if (tol <= 0) throw ArgumentError("tolerance must be positive");
    const Rat peak = mu / 4;  // both branches map onto [0, mu/4]
    const Rat lo = std::max(J.lo, Rat(0));
    const Rat hi = std::min(J.hi, peak);
    if (lo > hi) throw NoPointError("itinerary constraint is empty");
    const RationalInterval cell = symbol == 0
                                      ? RationalInterval(Rat(0), Rat(1, 2))
                                      : RationalInterval(Rat(1, 2), Rat(1));
    const bool increasing = (symbol == 0);
    // preimage endpoints of [lo, hi]; enclosure rounds outward
    const RationalInterval a =
        bisect_preimage(mu, cell, increasing ? lo : hi, increasing, tol);
    const RationalInterval b2 =
        bisect_preimage(mu, cell, increasing ? hi : lo, increasing, tol);
    return RationalInterval(std::max(a.lo, cell.lo),
                            std::min(b2.hi, cell.hi));
  };
  return b;
}

RationalInterval point_from_itinerary(const BranchSystem& branches,
                                      const Word& w, const Rat& tol) {
  if (branches.cells.empty()) throw ArgumentError("branch system has no cells");
  RationalInterval J(branches.cells.front().lo, branches.cells.back().hi);
  for (std::uint64_t t = w.size(); t > 0; --t) {
    const unsigned symbol = w.bits[t - 1];
    if (symbol >= branches.cells.size()) {
      throw ArgumentError("itinerary symbol outside the partition");
    }
    J = branches.inverse(symbol, J, tol);
    const RationalInterval& cell = branches.cells[symbol];
    const Rat lo = std::max(J.lo, cell.lo);
    const Rat hi = std::min(J.hi, cell.hi);
    if (lo > hi) throw NoPointError("itinerary constraint is empty");
    J = RationalInterval(lo, hi);
  }
  return J;
}

BitStream tent_step_stream(const BitStream& s) {
  BitStream dropped = shift(s, 1);
  return s.bit(0) == 0 ? dropped : complement(dropped);
}

namespace {

// Binary expansion of p/q in [0,1): bit n is floor(p*2^(n+1)/q) mod 2,
// computed through modular arithmetic so huge indices stay cheap.
class ExpansionRule final : public BitRule {
 public:
  ExpansionRule(Int p, Int q) : p_(std::move(p)), q_(std::move(q)) {
    // split q = 2^a * q_odd
    a_ = mpz_scan1(q_.get_mpz_t(), 0);
    Int q_odd;
    mpz_tdiv_q_2exp(q_odd.get_mpz_t(), q_.get_mpz_t(), a_);
    q_odd_ = q_odd;
  }

  int bit(std::uint64_t n) const override {
    const std::uint64_t t = n + 1;
    if (q_odd_ == 1) {
      // dyadic: p / 2^a, terminating expansion
      if (t > a_) return 0;
      return mpz_tstbit(p_.get_mpz_t(), static_cast<mp_bitcnt_t>(a_ - t));
    }
    if (t < a_) {
      Int den;
      mpz_mul_2exp(den.get_mpz_t(), q_odd_.get_mpz_t(),
                   static_cast<mp_bitcnt_t>(a_ - t));
      Int fl = p_ / den;
      return mpz_odd_p(fl.get_mpz_t()) ? 1 : 0;
    }
    if (t == a_) {
      Int fl = p_ / q_odd_;
      return mpz_odd_p(fl.get_mpz_t()) ? 1 : 0;
    }
    // t > a: floor(p*2^(t-a)/q_odd) has the parity of p*2^(t-a) mod q_odd
    Int power, exponent;
    exponent = Int(static_cast<unsigned long>(t - a_));
    Int two = 2;
    mpz_powm(power.get_mpz_t(), two.get_mpz_t(), exponent.get_mpz_t(),
             q_odd_.get_mpz_t());
    Int r = (p_ * power) % q_odd_;
    return mpz_odd_p(r.get_mpz_t()) ? 1 : 0;
  }

  std::string describe() const override {
    return "expansion:" + p_.get_str() + "/" + q_.get_str();
  }

 private:
  Int p_;
  Int q_;
  mp_bitcnt_t a_ = 0;
  Int q_odd_;
};

}  // namespace

BitStream expansion_stream(const Rat& v) {
  if (v < 0 || v > 1) throw ArgumentError("expansion needs v in [0, 1]");
  if (v == 1) return BitStream::constant(1);
  if (v == 0) return BitStream::constant(0);
  return BitStream(std::make_shared<ExpansionRule>(v.get_num(), v.get_den()));
}

Rat ep_stream_value(const BitStream& s) {
  auto parts = s.rule()->ep_parts();
  if (!parts) {
    throw ArgumentError("stream value needs a repeating rule: " +
                        s.describe());
  }
  const Word& pre = parts->first;
  const Word& per = parts->second;
  Int pre_num = 0;
  for (auto b : pre.bits) {
    pre_num <<= 1;
    if (b) pre_num |= 1;
  }
  Int per_num = 0;
  for (auto b : per.bits) {
    per_num <<= 1;
    if (b) per_num |= 1;
  }
  const unsigned long P = static_cast<unsigned long>(pre.size());
  const unsigned long L = static_cast<unsigned long>(per.size());
  Rat value(pre_num, pow2(P));
  value.canonicalize();
  Rat tail(per_num, pow2(L) - 1);
  tail.canonicalize();
  Rat scaled = tail / pow2(P);
  return value + scaled;
}

}  // namespace sigma2
