// The tau construction: a point of the binary shift space assembled from
// staged blocks so that its shifted copies realize prescribed divergence and
// coincidence times against a family of target streams.
//
// Layout for base stage k (prefix b of length k!), then for each stage
// m = k, k+1, ...:
//   [m!, 2m!)        copy of alpha's first m! bits
//   [2m!, 3m!)       gamma-repeat: symbol s of gamma repeated (m-1)! times
//   [3m!, 4m!)       pattern tail: segments r = 1..m-1, segment r is
//                    (0^r 1^r) repeated (m-2)! times, starting at tail
//                    offset r(r-1)(m-2)!
//   [4m!, (m+1)!)    m-3 tracking blocks: block i is Bhat(x_i, I, m-1) with
//                    source base I = 4m! + (i-1)m!, equal to the block's own
//                    global start position
// Stage m has length m*m!, so the cumulative length through stage m is
// (m+1)! exactly.

#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <vector>

#include "sigma2/bitstream.hpp"
#include "sigma2/word.hpp"

namespace sigma2 {

// Stages are supported through kMaxStage; indices below (kMaxStage+1)! are
// addressable, which keeps every position inside uint64 range.
inline constexpr unsigned kMaxStage = 19;

// factorial(n) for n <= 20.
std::uint64_t factorial(unsigned n);

struct TauParams {
  unsigned k = 5;                   // base stage, >= 5
  Word prefix_b;                    // length k!; default all zeros
  BitStream gamma;                  // the point being scrambled against
  BitStream alpha;                  // transitive point; default champernowne
  std::vector<BitStream> family;    // x_1, x_2, ... (index 1 = first entry)
  unsigned max_stage = kMaxStage;

  // Canonical defaults: gamma const0, alpha champernowne, empty family
  // (family falls back to champernowne shifted by the family index).
  static TauParams defaults(unsigned k = 5);

  // x_i for i >= 1, falling back to shift(champernowne, i).
  BitStream family_at(unsigned i) const;

  // Throws ArgumentError on malformed parameters.
  void validate() const;

  std::uint64_t index_limit() const;  // (max_stage + 1)!
};

enum class SegmentKind {
  Prefix,
  AlphaCopy,
  GammaRepeat,
  PatternTail,
  BhatFirstHalf,
  BhatSecondHalf,
};

// Which structural region a global position falls in, with enough
// coordinates to reproduce the bit from the parameters alone.
struct SegmentRef {
  SegmentKind kind;
  unsigned stage = 0;           // m; 0 for the prefix
  std::uint64_t index = 0;      // Prefix: position in b; AlphaCopy: alpha index
  unsigned symbol = 0;          // GammaRepeat: gamma index s
  unsigned run = 0;             // PatternTail: run length r
  std::uint64_t pattern_offset = 0;  // PatternTail: offset mod 2r
  unsigned family_index = 0;    // Bhat*: i
  std::uint64_t source = 0;     // Bhat*: source index into x_i

  // Recomputes the bit this segment describes.
  int reproduce_bit(const TauParams& p) const;
};

// Contiguous block of stream g: bits g_i .. g_j inclusive. Requires i <= j.
Word block_C(const BitStream& g, std::uint64_t i, std::uint64_t j);

// j+1 blocks of length j!/2 with one-index overlap between consecutive
// blocks: block r starts at source index i + r(j!/2 - 1). Total length
// (j+1)!/2. Requires 2 <= j <= 9.
Word block_B(const BitStream& g, std::uint64_t i, unsigned j);

// block_B followed by the complement of block_B read at source offset
// i + (j+1)!/2. Total length (j+1)!.
Word block_Bhat(const BitStream& g, std::uint64_t i, unsigned j);

// Stage block of length 3m!: alpha copy, gamma-repeat, pattern tail.
// Requires 5 <= m <= 10 (materialization guard).
Word block_A(const BitStream& g, unsigned m, const BitStream& alpha);

// Random access into tau. n < (max_stage+1)!; RangeError beyond.
int tau_bit(const TauParams& p, std::uint64_t n);
SegmentRef tau_segment(const TauParams& p, std::uint64_t n);

// Materializes the first len bits by direct block concatenation, never via
// tau_bit; serves as the independent oracle for the indexer. len <= 10^7.
Word tau_prefix(const TauParams& p, std::uint64_t len);

inline constexpr std::uint64_t kTauPrefixGuard = 10'000'000;

// The stream view of tau.
BitStream tau_stream(std::shared_ptr<const TauParams> p);
BitStream tau_stream(const TauParams& p);

}  // namespace sigma2
