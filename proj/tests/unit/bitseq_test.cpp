// Words, lazy bit streams, and the truncated dyadic metric.

#include <doctest.h>

#include <cstdint>
#include <vector>

#include "sigma2/bitstream.hpp"
#include "sigma2/distance.hpp"
#include "sigma2/errors.hpp"
#include "sigma2/rational.hpp"
#include "sigma2/word.hpp"

using namespace sigma2;

namespace {

// Independent per-bit recomputation of the truncated numerator.
Int naive_numerator(const BitStream& x, const BitStream& y, unsigned n) {
  Int acc = 0;
  for (unsigned i = 0; i < n; ++i) {
    acc <<= 1;
    if (x.bit(i) != y.bit(i)) acc += 1;
  }
  return acc;
}

}  // namespace

TEST_CASE("word construction and editing") {
  Word w = Word::from_string("10110");
  CHECK(w.size() == 5);
  CHECK(w.at(0) == 1);
  CHECK(w.at(4) == 0);
  CHECK(w.to_string() == "10110");
  CHECK(w.complement().to_string() == "01001");
  CHECK(w.concat(Word::ones(2)).to_string() == "1011011");
  CHECK(w.slice(1, 4).to_string() == "011");
  CHECK(Word::zeros(3).to_string() == "000");
  CHECK_THROWS_AS(w.at(5), RangeError);
  CHECK_THROWS_AS(w.slice(3, 2), RangeError);
  CHECK_THROWS_AS(Word::from_string("01x"), ParseError);
}

TEST_CASE("constant and eventually periodic streams") {
  BitStream zero = BitStream::constant(0);
  BitStream one = BitStream::constant(1);
  CHECK(zero.bit(0) == 0);
  CHECK(zero.bit(1'000'000) == 0);
  CHECK(one.bit(77) == 1);
  CHECK(zero.kind() == RuleKind::Constant);

  BitStream ep = BitStream::eventually_periodic(Word::from_string("110"),
                                                Word::from_string("01"));
  // 110 then 01 01 01 ...
  std::vector<int> expect = {1, 1, 0, 0, 1, 0, 1, 0, 1};
  for (std::size_t i = 0; i < expect.size(); ++i) {
    CHECK(ep.bit(i) == expect[i]);
  }
  CHECK_THROWS_AS(BitStream::eventually_periodic(Word{}, Word{}),
                  ArgumentError);
}

TEST_CASE("champernowne enumerates words in length-lex order") {
  BitStream c = BitStream::champernowne();
  // 0 1 | 00 01 10 11 | 000 ...
  std::vector<int> expect = {0, 1, 0, 0, 0, 1, 1, 0, 1, 1, 0, 0, 0};
  for (std::size_t i = 0; i < expect.size(); ++i) {
    CHECK(c.bit(i) == expect[i]);
  }
  // run of length-4 words starts after 2 + 8 + 24 = 34 bits with 0000
  for (int i = 0; i < 4; ++i) CHECK(c.bit(34 + i) == 0);
  CHECK(c.bit(34 + 7) == 1);  // 0001 ends the next word
}

TEST_CASE("stream index guard") {
  BitStream c = BitStream::champernowne();
  CHECK_NOTHROW(c.bit(kMaxStreamIndex));
  CHECK_THROWS_AS(c.bit(kMaxStreamIndex + 1), RangeError);
}

TEST_CASE("shift merges offsets and complement unwraps") {
  BitStream c = BitStream::champernowne();
  BitStream s = shift(shift(c, 3), 5);
  for (int i = 0; i < 20; ++i) CHECK(s.bit(i) == c.bit(i + 8));
  CHECK(s.describe() == "shift:8:champ");
  CHECK(shift(c, 0).rule() == c.rule());

  BitStream cc = complement(complement(c));
  CHECK(cc.rule() == c.rule());
  CHECK(complement(c).bit(0) == 1 - c.bit(0));

  // shifting past the top of the index range is rejected
  BitStream far = shift(c, kMaxStreamIndex);
  CHECK_THROWS_AS(far.bit(1), RangeError);
}

TEST_CASE("prefix_then splices a finite word onto a stream") {
  BitStream t = BitStream::prefix_then(Word::from_string("101"),
                                       BitStream::champernowne());
  CHECK(t.bit(0) == 1);
  CHECK(t.bit(1) == 0);
  CHECK(t.bit(2) == 1);
  for (int i = 0; i < 10; ++i) {
    CHECK(t.bit(3 + i) == BitStream::champernowne().bit(i));
  }
  CHECK(t.prefix(5).to_string() == "10101");
}

TEST_CASE("eventually-zero decision procedure") {
  CHECK(is_eventually_zero(BitStream::constant(0)));
  CHECK_FALSE(is_eventually_zero(BitStream::constant(1)));
  CHECK(is_eventually_zero(BitStream::eventually_periodic(
      Word::from_string("1101"), Word::zeros(1))));
  CHECK_FALSE(is_eventually_zero(BitStream::eventually_periodic(
      Word{}, Word::from_string("01"))));
  CHECK(is_eventually_zero(complement(BitStream::constant(1))));
  CHECK(is_eventually_zero(
      BitStream::prefix_then(Word::from_string("111"), BitStream::constant(0))));
  CHECK(is_eventually_zero(shift(
      BitStream::prefix_then(Word::ones(4), BitStream::constant(0)), 2)));
  CHECK_THROWS_AS(is_eventually_zero(BitStream::champernowne()),
                  UnsupportedRule);
}

TEST_CASE("truncated distance matches the per-bit recomputation") {
  BitStream c = BitStream::champernowne();
  BitStream e = BitStream::eventually_periodic(Word::from_string("01"),
                                               Word::from_string("110"));
  for (unsigned n : {1u, 7u, 31u, 64u, 128u}) {
    DyadicDistance d = truncated_distance(c, e, n);
    CHECK(d.precision == n);
    CHECK(d.numerator == naive_numerator(c, e, n));
    Rat expected(d.numerator, pow2(n));
    expected.canonicalize();
    CHECK(d.value() == expected);
    CHECK(d.upper_bound() == d.value() + pow2_inv(n));
  }
  CHECK_THROWS_AS(truncated_distance(c, e, kMaxDistancePrecision + 1),
                  RangeError);
}

TEST_CASE("truncated distance extremes") {
  DyadicDistance zero =
      truncated_distance(BitStream::champernowne(), BitStream::champernowne(), 64);
  CHECK(zero.is_zero());
  CHECK(zero.value() == 0);

  DyadicDistance ones =
      truncated_distance(BitStream::constant(0), BitStream::constant(1), 64);
  CHECK(ones.all_ones());
  CHECK(ones.numerator == pow2(64) - 1);
  CHECK(ones.value() == 1 - pow2_inv(64));
}

TEST_CASE("metric axioms on sampled streams") {
  std::vector<BitStream> pts = {
      BitStream::champernowne(),
      BitStream::eventually_periodic(Word{}, Word::from_string("10")),
      shift(BitStream::champernowne(), 11),
      complement(BitStream::champernowne()),
  };
  const unsigned n = 96;
  for (const auto& x : pts) {
    CHECK(truncated_distance(x, x, n).is_zero());
    for (const auto& y : pts) {
      Int dxy = truncated_distance(x, y, n).numerator;
      CHECK(dxy == truncated_distance(y, x, n).numerator);
      for (const auto& z : pts) {
        Int dxz = truncated_distance(x, z, n).numerator;
        Int dyz = truncated_distance(y, z, n).numerator;
        CHECK(dxz <= dxy + dyz);
      }
    }
  }
}

TEST_CASE("one shift costs exactly the leading bit") {
  BitStream x = BitStream::champernowne();
  BitStream y = BitStream::eventually_periodic(Word::from_string("1"),
                                               Word::from_string("011"));
  for (unsigned n : {8u, 33u, 64u}) {
    Int whole = truncated_distance(x, y, n + 1).numerator;
    Int tail = truncated_distance(shift(x, 1), shift(y, 1), n).numerator;
    Int lead = (x.bit(0) != y.bit(0)) ? 1 : 0;
    CHECK(whole == lead * pow2(n) + tail);
    CHECK(tail <= whole);
  }
}

TEST_CASE("rational text round trips") {
  CHECK(parse_rat("3/4") == Rat(3, 4));
  CHECK(parse_rat("-6/8") == Rat(-3, 4));
  CHECK(parse_rat("17") == Rat(17));
  CHECK_THROWS_AS(parse_rat("1/0"), ParseError);
  CHECK_THROWS_AS(parse_rat("a/b"), ParseError);
  CHECK(decimal_string(Rat(0)) == "0");
  CHECK(decimal_string(Rat(1, 4), 3) == "0.25");
  CHECK(decimal_string(Rat(2, 3), 6) == "0.666667");
  CHECK(decimal_string(Rat(-1, 8), 4) == "-0.125");
}
