// Itineraries, inverse-branch refinement, the shift-side tent model, and
// exact binary expansions.

#include <doctest.h>

#include <vector>

#include "sigma2/coding.hpp"
#include "sigma2/errors.hpp"
#include "sigma2/logistic.hpp"
#include "sigma2/pwl.hpp"

using namespace sigma2;

namespace {

std::vector<RationalInterval> tent_partition() {
  return {RationalInterval(Rat(0), Rat(1, 2)),
          RationalInterval(Rat(1, 2), Rat(1))};
}

}  // namespace

TEST_CASE("itinerary of a period-3 tent point") {
  Itinerary it = itinerary(make_tent(), Rat(2, 7), 6, tent_partition());
  CHECK(it.word.to_string() == "011011");
  CHECK(it.boundary_hits.empty());
}

TEST_CASE("itinerary flags boundary hits") {
  // 1/2 sits on the shared endpoint at step 0 and is coded into cell 0
  Itinerary it = itinerary(make_tent(), Rat(1, 2), 3, tent_partition());
  CHECK(it.word.to_string() == "010");
  REQUIRE(it.boundary_hits.size() == 1);
  CHECK(it.boundary_hits[0] == 0);
}

TEST_CASE("itinerary partition validation") {
  CHECK_THROWS_AS(
      itinerary(make_tent(), Rat(0), 1, {RationalInterval(Rat(0), Rat(1))}),
      ArgumentError);
  CHECK_THROWS_AS(itinerary(make_tent(), Rat(0), 1,
                            {RationalInterval(Rat(0), Rat(1, 3)),
                             RationalInterval(Rat(1, 2), Rat(1))}),
                  ArgumentError);
}

TEST_CASE("tent branches invert exactly") {
  BranchSystem b = tent_branches();
  REQUIRE(b.cells.size() == 2);
  RationalInterval full(Rat(0), Rat(1));
  CHECK(b.inverse(0, full, Rat(1)) == RationalInterval(Rat(0), Rat(1, 2)));
  CHECK(b.inverse(1, full, Rat(1)) == RationalInterval(Rat(1, 2), Rat(1)));
  CHECK(b.inverse(0, RationalInterval(Rat(1, 2), Rat(1)), Rat(1)) ==
        RationalInterval(Rat(1, 4), Rat(1, 2)));
}

TEST_CASE("itinerary refinement encloses the coded point") {
  Word w011;
  for (int k = 0; k < 4; ++k) {
    w011.push(0);
    w011.push(1);
    w011.push(1);
  }
  RationalInterval j = point_from_itinerary(tent_branches(), w011, Rat(1));
  CHECK(j.contains(Rat(2, 7)));
  CHECK(j.length() <= pow2_inv(12));

  Word w001;
  for (int k = 0; k < 4; ++k) {
    w001.push(0);
    w001.push(0);
    w001.push(1);
  }
  RationalInterval j2 = point_from_itinerary(tent_branches(), w001, Rat(1));
  CHECK(j2.contains(Rat(2, 9)));
}

TEST_CASE("logistic branches enclose square-root preimages") {
  BranchSystem b = logistic_branches(Rat(5));
  const Rat tol(1, 1'000'000);
  RationalInterval full(Rat(0), Rat(1));
  RationalInterval left = b.inverse(0, full, tol);
  // branch 0 preimage of [0,1] ends at (1 - 1/sqrt(5))/2 ~ 0.27639
  CHECK(left.lo == Rat(0));
  CHECK(left.hi >= Rat(276, 1000));
  CHECK(left.hi <= Rat(277, 1000));
  RationalInterval right = b.inverse(1, full, tol);
  CHECK(right.hi == Rat(1));
  CHECK(right.lo >= Rat(723, 1000));
  CHECK(right.lo <= Rat(724, 1000));
}

TEST_CASE("logistic survivor enclosures iterate forward correctly") {
  const Rat mu(5);
  const Rat tol(Int(1), Int("1000000000000"));
  const Rat slack(1, 1'000'000);
  for (const char* text : {"0000", "0101"}) {
    Word w = Word::from_string(text);
    RationalInterval j = point_from_itinerary(logistic_branches(mu), w, tol);
    Rat v = j.midpoint();
    for (int step = 0; step < 4; ++step) {
      CHECK(v >= -slack);
      CHECK(v <= 1 + slack);
      v = logistic_eval(mu, v);
    }
  }
}

TEST_CASE("lambda membership depth") {
  CHECK_FALSE(lambda_membership_depth(Rat(5), Rat(1, 2), 1));
  CHECK(lambda_membership_depth(Rat(5), Rat(0), 10));
  // 2/7 -> 5*(2/7)*(5/7) = 50/49 > 1 escapes after one step
  CHECK(lambda_membership_depth(Rat(5), Rat(2, 7), 0));
  CHECK_FALSE(lambda_membership_depth(Rat(5), Rat(2, 7), 1));
}

TEST_CASE("shift-side tent step matches the interval map") {
  BitStream e = expansion_stream(Rat(3, 10));
  std::vector<Rat> orbit = pwl_iterate(make_tent(), Rat(3, 10), 4);
  BitStream s = e;
  for (int n = 0; n <= 4; ++n) {
    Word got = s.prefix(40);
    Word expect = expansion_stream(orbit[static_cast<std::size_t>(n)]).prefix(40);
    CHECK(got == expect);
    s = tent_step_stream(s);
  }
}

TEST_CASE("tent step complements after a leading one") {
  // 4/7 = .(100): step drops the 1 and complements, giving 6/7 = .(110)
  BitStream s = tent_step_stream(expansion_stream(Rat(4, 7)));
  CHECK(s.prefix(12) == expansion_stream(Rat(6, 7)).prefix(12));
}

TEST_CASE("binary expansions") {
  CHECK(expansion_stream(Rat(2, 7)).prefix(9).to_string() == "010010010");
  CHECK(expansion_stream(Rat(1, 2)).prefix(5).to_string() == "10000");
  CHECK(expansion_stream(Rat(5, 8)).prefix(5).to_string() == "10100");
  CHECK(expansion_stream(Rat(0)).bit(7) == 0);
  CHECK(expansion_stream(Rat(1)).bit(7) == 1);
  CHECK(expansion_stream(Rat(2, 3)).prefix(6).to_string() == "101010");
  CHECK_THROWS_AS(expansion_stream(Rat(3, 2)), ArgumentError);
  // huge indices stay cheap through modular arithmetic
  CHECK_NOTHROW(expansion_stream(Rat(2, 7)).bit(1'000'000'000'000ULL));
}

TEST_CASE("eventually periodic stream values") {
  CHECK(ep_stream_value(BitStream::eventually_periodic(
            Word{}, Word::from_string("10"))) == Rat(2, 3));
  CHECK(ep_stream_value(BitStream::eventually_periodic(
            Word::from_string("11"), Word::zeros(1))) == Rat(3, 4));
  CHECK(ep_stream_value(BitStream::eventually_periodic(
            Word::from_string("0"), Word::from_string("01"))) == Rat(1, 6));
  CHECK(ep_stream_value(BitStream::constant(1)) == Rat(1));
  CHECK(ep_stream_value(BitStream::constant(0)) == Rat(0));
  CHECK_THROWS_AS(ep_stream_value(BitStream::champernowne()), ArgumentError);
}
