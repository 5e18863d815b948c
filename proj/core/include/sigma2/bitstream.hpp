// Lazy infinite binary sequences with random access. A stream is an
// immutable rule object; reading bit n never mutates state, so streams are
// safe to share across threads and index in any order. Indices are capped
// at 2^63 - 1.

#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <string>

#include "sigma2/word.hpp"

namespace sigma2 {

inline constexpr std::uint64_t kMaxStreamIndex = (std::uint64_t{1} << 63) - 1;

enum class RuleKind {
  Constant,
  EventuallyPeriodic,
  Champernowne,
  Tau,
  PrefixThen,
  Complemented,
  Shifted,
  Other,
};

// Tri-state answer for decidable tail questions.
enum class Decision { Yes, No, Unknown };

class BitRule {
 public:
  virtual ~BitRule() = default;
  // n is already range-checked by BitStream::bit.
  virtual int bit(std::uint64_t n) const = 0;
  virtual RuleKind kind() const { return RuleKind::Other; }
  virtual std::string describe() const = 0;
  // Whether the stream is eventually all-zero / all-one. Unknown means the
  // rule is outside the decidable fragment.
  virtual Decision eventually_zero() const { return Decision::Unknown; }
  virtual Decision eventually_one() const { return Decision::Unknown; }
  // (preperiod, period) when the rule is a known repeating form.
  virtual std::optional<std::pair<Word, Word>> ep_parts() const {
    return std::nullopt;
  }
};

class BitStream {
 public:
  BitStream();  // Constant(0)
  explicit BitStream(std::shared_ptr<const BitRule> rule);

  static BitStream constant(int b);
  // Preperiod may be empty; period must be nonempty (ArgumentError).
  static BitStream eventually_periodic(Word preperiod, Word period);
  // Binary words enumerated in length-then-lex order and concatenated:
  // 0 1 00 01 10 11 000 ... -> 0,1,0,0,0,1,1,0,...
  static BitStream champernowne();
  static BitStream prefix_then(Word prefix, BitStream tail);

  // Total for 0 <= n <= kMaxStreamIndex; RangeError beyond.
  int bit(std::uint64_t n) const;
  RuleKind kind() const { return rule_->kind(); }
  std::string describe() const { return rule_->describe(); }
  const std::shared_ptr<const BitRule>& rule() const { return rule_; }

  // First n bits as a Word.
  Word prefix(std::uint64_t n) const;

 private:
  std::shared_ptr<const BitRule> rule_;
};

// sigma^n: drops the first n symbols. shift(s, 0) returns s itself; nested
// shifts merge their offsets instead of stacking rules.
BitStream shift(const BitStream& s, std::uint64_t n);

// Pointwise complement. Complementing twice unwraps.
BitStream complement(const BitStream& s);

int stream_bit(const BitStream& s, std::uint64_t n);

// Decides membership in the eventually-zero family for decidable rules
// (constants, eventually periodic streams, and prefix/shift/complement
// layers over them). UnsupportedRule for champernowne/tau-like rules.
bool is_eventually_zero(const BitStream& s);

}  // namespace sigma2
