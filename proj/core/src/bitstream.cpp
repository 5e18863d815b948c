#include "sigma2/bitstream.hpp"

#include <utility>

#include "sigma2/errors.hpp"

namespace sigma2 {

namespace {

class ConstantRule final : public BitRule {
 public:
  explicit ConstantRule(int b) : b_(b & 1) {}
  int bit(std::uint64_t) const override { return b_; }
  RuleKind kind() const override { return RuleKind::Constant; }
  std::string describe() const override {
    return b_ ? "const1" : "const0";
  }
  Decision eventually_zero() const override {
    return b_ == 0 ? Decision::Yes : Decision::No;
  }
  Decision eventually_one() const override {
    return b_ == 1 ? Decision::Yes : Decision::No;
  }
  std::optional<std::pair<Word, Word>> ep_parts() const override {
    return std::make_pair(Word{}, b_ ? Word::ones(1) : Word::zeros(1));
  }
  int value() const { return b_; }

 private:
  int b_;
};

class EventuallyPeriodicRule final : public BitRule {
 public:
  EventuallyPeriodicRule(Word pre, Word per)
      : pre_(std::move(pre)), per_(std::move(per)) {
    if (per_.empty()) {
      throw ArgumentError("eventually periodic stream needs a nonempty period");
    }
  }
  int bit(std::uint64_t n) const override {
    if (n < pre_.size()) return pre_.bits[n];
    return per_.bits[(n - pre_.size()) % per_.size()];
  }
  RuleKind kind() const override { return RuleKind::EventuallyPeriodic; }
  std::string describe() const override {
    return "ep:" + pre_.to_string() + ":" + per_.to_string();
  }
  Decision eventually_zero() const override {
    for (auto b : per_.bits) {
      if (b != 0) return Decision::No;
    }
    return Decision::Yes;
  }
  Decision eventually_one() const override {
    for (auto b : per_.bits) {
      if (b != 1) return Decision::No;
    }
    return Decision::Yes;
  }
  std::optional<std::pair<Word, Word>> ep_parts() const override {
    return std::make_pair(pre_, per_);
  }

 private:
  Word pre_;
  Word per_;
};

// Bits of the length-then-lex enumeration of all binary words. Words of
// length L span a run of L*2^L bits; S(L) = sum_{l<L} l*2^l = (L-2)*2^L + 2
// bits precede that run. Index math is done in 128 bits since S(L) brushes
// against 2^63 for the largest supported indices.
class ChampernowneRule final : public BitRule {
 public:
  int bit(std::uint64_t n) const override {
    using u128 = unsigned __int128;
    u128 target = n;
    unsigned L = 1;
    while (cumulative(L + 1) <= target) ++L;
    u128 r = target - cumulative(L);
    std::uint64_t word = static_cast<std::uint64_t>(r / L);
    unsigned pos = static_cast<unsigned>(r % L);
    return static_cast<int>((word >> (L - 1 - pos)) & 1u);
  }
  RuleKind kind() const override { return RuleKind::Champernowne; }
  std::string describe() const override { return "champ"; }

 private:
  static unsigned __int128 cumulative(unsigned L) {
    // bits contributed by all words shorter than L
    if (L <= 1) return 0;
    unsigned __int128 p = static_cast<unsigned __int128>(1) << L;
    return (static_cast<unsigned __int128>(L) - 2) * p + 2;
  }
};

class PrefixThenRule final : public BitRule {
 public:
  PrefixThenRule(Word prefix, BitStream tail)
      : prefix_(std::move(prefix)), tail_(std::move(tail)) {}
  int bit(std::uint64_t n) const override {
    if (n < prefix_.size()) return prefix_.bits[n];
    return tail_.bit(n - prefix_.size());
  }
  RuleKind kind() const override { return RuleKind::PrefixThen; }
  std::string describe() const override {
    return "prefix:" + prefix_.to_string() + ":" + tail_.describe();
  }
  Decision eventually_zero() const override {
    return tail_.rule()->eventually_zero();
  }
  Decision eventually_one() const override {
    return tail_.rule()->eventually_one();
  }

 private:
  Word prefix_;
  BitStream tail_;
};

class ComplementedRule final : public BitRule {
 public:
  explicit ComplementedRule(BitStream inner) : inner_(std::move(inner)) {}
  int bit(std::uint64_t n) const override { return 1 - inner_.bit(n); }
  RuleKind kind() const override { return RuleKind::Complemented; }
  std::string describe() const override {
    return "compl:" + inner_.describe();
  }
  Decision eventually_zero() const override {
    return inner_.rule()->eventually_one();
  }
  Decision eventually_one() const override {
    return inner_.rule()->eventually_zero();
  }
  const BitStream& inner() const { return inner_; }

 private:
  BitStream inner_;
};

class ShiftedRule final : public BitRule {
 public:
  ShiftedRule(BitStream inner, std::uint64_t offset)
      : inner_(std::move(inner)), offset_(offset) {}
  int bit(std::uint64_t n) const override {
    if (n > kMaxStreamIndex - offset_) {
      throw RangeError("shifted stream index overflows the supported range");
    }
    return inner_.bit(offset_ + n);
  }
  RuleKind kind() const override { return RuleKind::Shifted; }
  std::string describe() const override {
    return "shift:" + std::to_string(offset_) + ":" + inner_.describe();
  }
  Decision eventually_zero() const override {
    return inner_.rule()->eventually_zero();
  }
  Decision eventually_one() const override {
    return inner_.rule()->eventually_one();
  }
  const BitStream& inner() const { return inner_; }
  std::uint64_t offset() const { return offset_; }

 private:
  BitStream inner_;
  std::uint64_t offset_;
};

}  // namespace

BitStream::BitStream() : rule_(std::make_shared<ConstantRule>(0)) {}

BitStream::BitStream(std::shared_ptr<const BitRule> rule)
    : rule_(std::move(rule)) {
  if (!rule_) throw ArgumentError("null stream rule");
}

BitStream BitStream::constant(int b) {
  return BitStream(std::make_shared<ConstantRule>(b));
}

BitStream BitStream::eventually_periodic(Word preperiod, Word period) {
  return BitStream(std::make_shared<EventuallyPeriodicRule>(
      std::move(preperiod), std::move(period)));
}

BitStream BitStream::champernowne() {
  return BitStream(std::make_shared<ChampernowneRule>());
}

BitStream BitStream::prefix_then(Word prefix, BitStream tail) {
  return BitStream(
      std::make_shared<PrefixThenRule>(std::move(prefix), std::move(tail)));
}

int BitStream::bit(std::uint64_t n) const {
  if (n > kMaxStreamIndex) {
    throw RangeError("stream index beyond supported range");
  }
  return rule_->bit(n);
}

Word BitStream::prefix(std::uint64_t n) const {
  Word w;
  w.bits.reserve(n);
  for (std::uint64_t i = 0; i < n; ++i) {
    w.bits.push_back(static_cast<std::uint8_t>(bit(i)));
  }
  return w;
}

BitStream shift(const BitStream& s, std::uint64_t n) {
  if (n == 0) return s;
  if (auto shifted = dynamic_cast<const ShiftedRule*>(s.rule().get())) {
    if (shifted->offset() > kMaxStreamIndex - n) {
      throw RangeError("combined shift offset overflows the supported range");
    }
    return BitStream(
        std::make_shared<ShiftedRule>(shifted->inner(), shifted->offset() + n));
  }
  return BitStream(std::make_shared<ShiftedRule>(s, n));
}

BitStream complement(const BitStream& s) {
  if (auto c = dynamic_cast<const ComplementedRule*>(s.rule().get())) {
    return c->inner();
  }
  return BitStream(std::make_shared<ComplementedRule>(s));
}

int stream_bit(const BitStream& s, std::uint64_t n) { return s.bit(n); }

bool is_eventually_zero(const BitStream& s) {
  switch (s.rule()->eventually_zero()) {
    case Decision::Yes:
      return true;
    case Decision::No:
      return false;
    case Decision::Unknown:
      break;
  }
  throw UnsupportedRule("eventually-zero is undecidable for rule: " +
                        s.describe());
}

}  // namespace sigma2
