#include "sigma2/tau.hpp"

#include <array>

#include "sigma2/errors.hpp"

namespace sigma2 {

namespace {

constexpr std::array<std::uint64_t, 21> kFactorials = [] {
  std::array<std::uint64_t, 21> f{};
  f[0] = 1;
  for (unsigned i = 1; i <= 20; ++i) f[i] = f[i - 1] * i;
  return f;
}();

}  // namespace

std::uint64_t factorial(unsigned n) {
  if (n > 20) throw RangeError("factorial beyond uint64 support");
  return kFactorials[n];
}

TauParams TauParams::defaults(unsigned k) {
  TauParams p;
  p.k = k;
  p.prefix_b = Word::zeros(factorial(k));
  p.gamma = BitStream::constant(0);
  p.alpha = BitStream::champernowne();
  return p;
}

BitStream TauParams::family_at(unsigned i) const {
  if (i == 0) throw ArgumentError("family indices start at 1");
  if (i <= family.size()) return family[i - 1];
  return shift(BitStream::champernowne(), i);
}

void TauParams::validate() const {
  if (k < 5) throw ArgumentError("base stage k must be >= 5");
  if (k > max_stage) throw ArgumentError("base stage exceeds max stage");
  if (max_stage > kMaxStage) {
    throw ArgumentError("max stage beyond supported limit");
  }
  if (prefix_b.size() != factorial(k)) {
    throw ArgumentError("prefix length must be k!");
  }
}

std::uint64_t TauParams::index_limit() const {
  return factorial(max_stage + 1);
}

Word block_C(const BitStream& g, std::uint64_t i, std::uint64_t j) {
  if (i > j) throw ArgumentError("block_C needs i <= j");
  Word w;
  w.bits.reserve(j - i + 1);
  for (std::uint64_t n = i; n <= j; ++n) {
    w.push(g.bit(n));
  }
  return w;
}

Word block_B(const BitStream& g, std::uint64_t i, unsigned j) {
  if (j < 2) throw ArgumentError("block_B needs j >= 2");
  if (j > 9) throw RangeError("block_B materialization guard: j <= 9");
  const std::uint64_t half = factorial(j) / 2;  // block length
  Word w;
  w.bits.reserve((j + 1) * half);
  for (unsigned r = 0; r <= j; ++r) {
    const std::uint64_t start = i + static_cast<std::uint64_t>(r) * (half - 1);
    for (std::uint64_t t = 0; t < half; ++t) {
      w.push(g.bit(start + t));
    }
  }
  return w;
}

Word block_Bhat(const BitStream& g, std::uint64_t i, unsigned j) {
  Word first = block_B(g, i, j);
  Word second = block_B(g, i + factorial(j + 1) / 2, j).complement();
  return first.concat(second);
}

Word block_A(const BitStream& g, unsigned m, const BitStream& alpha) {
  if (m < 5) throw ArgumentError("block_A needs m >= 5");
  if (m > 10) throw RangeError("block_A materialization guard: m <= 10");
  const std::uint64_t mf = factorial(m);
  const std::uint64_t rep = factorial(m - 1);
  const std::uint64_t pat = factorial(m - 2);
  Word w;
  w.bits.reserve(3 * mf);
  for (std::uint64_t t = 0; t < mf; ++t) w.push(alpha.bit(t));
  for (unsigned s = 0; s < m; ++s) {
    const int b = g.bit(s);
    for (std::uint64_t t = 0; t < rep; ++t) w.push(b);
  }
  for (unsigned r = 1; r < m; ++r) {
    for (std::uint64_t rep_i = 0; rep_i < pat; ++rep_i) {
      for (unsigned t = 0; t < r; ++t) w.push(0);
      for (unsigned t = 0; t < r; ++t) w.push(1);
    }
  }
  return w;
}

namespace {

// Splits a global position into its structural coordinates. Shared by
// tau_bit and tau_segment so the two can never disagree.
SegmentRef locate(const TauParams& p, std::uint64_t n) {
  p.validate();
  if (n >= p.index_limit()) {
    throw RangeError("tau index beyond the supported stage range");
  }
  SegmentRef ref{};
  const std::uint64_t kf = factorial(p.k);
  if (n < kf) {
    ref.kind = SegmentKind::Prefix;
    ref.stage = 0;
    ref.index = n;
    return ref;
  }
  // stage m is the unique one with m! <= n < (m+1)!
  unsigned m = p.k;
  while (n >= factorial(m + 1)) ++m;
  const std::uint64_t mf = factorial(m);
  const std::uint64_t off = n - mf;  // offset into stage m
  ref.stage = m;
  if (off < mf) {
    ref.kind = SegmentKind::AlphaCopy;
    ref.index = off;
    return ref;
  }
  if (off < 2 * mf) {
    ref.kind = SegmentKind::GammaRepeat;
    ref.symbol = static_cast<unsigned>((off - mf) / factorial(m - 1));
    return ref;
  }
  if (off < 3 * mf) {
    const std::uint64_t u = off - 2 * mf;
    const std::uint64_t pat = factorial(m - 2);
    unsigned r = 1;
    while (static_cast<std::uint64_t>(r) * (r + 1) * pat <= u) ++r;
    const std::uint64_t seg_start = static_cast<std::uint64_t>(r) * (r - 1) * pat;
    ref.kind = SegmentKind::PatternTail;
    ref.run = r;
    ref.pattern_offset = (u - seg_start) % (2 * r);
    return ref;
  }
  // tracking blocks
  const std::uint64_t rel = off - 3 * mf;
  const unsigned i = static_cast<unsigned>(rel / mf) + 1;
  const std::uint64_t c = rel % mf;  // offset within Bhat(x_i, ., m-1)
  const std::uint64_t half = mf / 2;
  const std::uint64_t sub = factorial(m - 1) / 2;  // length of one B block
  const std::uint64_t base = 4 * mf + static_cast<std::uint64_t>(i - 1) * mf;
  ref.family_index = i;
  if (c < half) {
    const std::uint64_t r = c / sub;
    const std::uint64_t w = c % sub;
    ref.kind = SegmentKind::BhatFirstHalf;
    ref.source = base + r * (sub - 1) + w;
  } else {
    const std::uint64_t c2 = c - half;
    const std::uint64_t r = c2 / sub;
    const std::uint64_t w = c2 % sub;
    ref.kind = SegmentKind::BhatSecondHalf;
    ref.source = base + half + r * (sub - 1) + w;
  }
  return ref;
}

}  // namespace

int SegmentRef::reproduce_bit(const TauParams& p) const {
  switch (kind) {
    case SegmentKind::Prefix:
      return p.prefix_b.at(index);
    case SegmentKind::AlphaCopy:
      return p.alpha.bit(index);
    case SegmentKind::GammaRepeat:
      return p.gamma.bit(symbol);
    case SegmentKind::PatternTail:
      return pattern_offset < run ? 0 : 1;
    case SegmentKind::BhatFirstHalf:
      return p.family_at(family_index).bit(source);
    case SegmentKind::BhatSecondHalf:
      return 1 - p.family_at(family_index).bit(source);
  }
  throw ArgumentError("bad segment kind");
}

int tau_bit(const TauParams& p, std::uint64_t n) {
  return locate(p, n).reproduce_bit(p);
}

SegmentRef tau_segment(const TauParams& p, std::uint64_t n) {
  return locate(p, n);
}

Word tau_prefix(const TauParams& p, std::uint64_t len) {
  p.validate();
  if (len > kTauPrefixGuard) {
    throw RangeError("tau prefix materialization guard exceeded");
  }
  Word out = p.prefix_b;
  out.bits.reserve(len);
  for (unsigned m = p.k; out.size() < len; ++m) {
    if (m > p.max_stage) {
      throw RangeError("tau prefix needs stages beyond the supported range");
    }
    out = out.concat(block_A(p.gamma, m, p.alpha));
    const std::uint64_t mf = factorial(m);
    for (unsigned i = 1; i + 3 <= m && out.size() < len; ++i) {
      const std::uint64_t src = 4 * mf + static_cast<std::uint64_t>(i - 1) * mf;
      out = out.concat(block_Bhat(p.family_at(i), src, m - 1));
    }
  }
  return out.slice(0, len);
}

namespace {

class TauRule final : public BitRule {
 public:
  explicit TauRule(std::shared_ptr<const TauParams> p) : p_(std::move(p)) {
    if (!p_) throw ArgumentError("null tau parameters");
    p_->validate();
  }
  int bit(std::uint64_t n) const override { return tau_bit(*p_, n); }
  RuleKind kind() const override { return RuleKind::Tau; }
  std::string describe() const override {
    return "tau:k=" + std::to_string(p_->k) + ":" + p_->gamma.describe();
  }

 private:
  std::shared_ptr<const TauParams> p_;
};

}  // namespace

BitStream tau_stream(std::shared_ptr<const TauParams> p) {
  return BitStream(std::make_shared<TauRule>(std::move(p)));
}

BitStream tau_stream(const TauParams& p) {
  return tau_stream(std::make_shared<const TauParams>(p));
}

}  // namespace sigma2
