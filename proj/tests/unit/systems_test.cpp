// Interval map wrapper and distance series over both system kinds.

#include <doctest.h>

#include "sigma2/errors.hpp"
#include "sigma2/systems.hpp"
#include "sigma2/tau.hpp"

using namespace sigma2;

TEST_CASE("interval map wrappers") {
  IntervalMap tent = IntervalMap::pwl(make_tent(), "tent");
  CHECK(tent.eval(Rat(2, 7)) == Rat(4, 7));
  CHECK(tent.domain() == RationalInterval(Rat(0), Rat(1)));
  CHECK(tent.as_pwl() != nullptr);
  CHECK(tent.logistic_mu() == nullptr);
  CHECK(tent.describe() == "tent");

  IntervalMap lg = IntervalMap::logistic(Rat(7, 2));
  CHECK(lg.eval(Rat(1, 2)) == Rat(7, 8));
  CHECK(lg.domain() == RationalInterval(Rat(0), Rat(1)));
  CHECK(lg.as_pwl() == nullptr);
  REQUIRE(lg.logistic_mu() != nullptr);
  CHECK(*lg.logistic_mu() == Rat(7, 2));
}

TEST_CASE("logistic orbit guard trips on denominator growth") {
  IntervalMap lg = IntervalMap::logistic(Rat(4));
  Rat x(Int(1), pow2(kLogisticDenomBitGuard + 1));
  CHECK_THROWS_AS(lg.eval(x), PrecisionError);
}

TEST_CASE("shift distance series") {
  DistanceSeries s = distance_series(BitStream::constant(0),
                                     BitStream::eventually_periodic(
                                         Word{}, Word::ones(1)),
                                     10, 64);
  CHECK(s.horizon == 10);
  CHECK(s.precision == 64);
  REQUIRE(s.entries.size() == 10);
  for (std::uint64_t n = 0; n < 10; ++n) {
    CHECK(s.entries[n].first == n);
    CHECK(s.entries[n].second == 1 - pow2_inv(64));
  }
}

TEST_CASE("parallel scan equals the sequential scan") {
  TauParams p = TauParams::defaults(5);
  BitStream x = tau_stream(p);
  BitStream y = complement(shift(x, 7));
  DistanceSeries seq = distance_series(x, y, 200, 64, 1);
  DistanceSeries par = distance_series(x, y, 200, 64, 4);
  REQUIRE(seq.entries.size() == par.entries.size());
  for (std::size_t i = 0; i < seq.entries.size(); ++i) {
    CHECK(seq.entries[i].first == par.entries[i].first);
    CHECK(seq.entries[i].second == par.entries[i].second);
  }
}

TEST_CASE("interval distance series") {
  IntervalMap tent = IntervalMap::pwl(make_tent(), "tent");
  DistanceSeries s = distance_series(tent, Rat(2, 7), Rat(4, 7), 6);
  CHECK(s.precision == 0);
  REQUIRE(s.entries.size() == 6);
  // both orbits are period 3, so the distances cycle 2/7, 2/7, 4/7
  CHECK(s.entries[0].second == Rat(2, 7));
  CHECK(s.entries[1].second == Rat(2, 7));
  CHECK(s.entries[2].second == Rat(4, 7));
  CHECK(s.entries[3].second == Rat(2, 7));
  CHECK(s.entries[5].second == Rat(4, 7));
}

TEST_CASE("pair report picks earliest extremes") {
  IntervalMap tent = IntervalMap::pwl(make_tent(), "tent");
  // orbit of 1/2: 1/2, 1, 0, 0, ...; distances from the fixed point 0
  DistanceSeries s = distance_series(tent, Rat(0), Rat(1, 2), 6);
  PairReport r = scrambled_pair_report(s, Rat(1), Rat(0));
  CHECK(r.max == Rat(1));
  CHECK(r.argmax == 1);
  CHECK(r.min == Rat(0));
  CHECK(r.argmin == 2);  // first of the zero tail
  CHECK(r.sup_ok);
  CHECK(r.inf_ok);
  CHECK(r.horizon == 6);

  PairReport strict = scrambled_pair_report(s, Rat(2), Rat(0));
  CHECK_FALSE(strict.sup_ok);
}
