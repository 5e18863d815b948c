// Chaos witnesses: given a point x and a target neighbourhood V, find a
// point y in V whose orbit both strays far from x's orbit (sup >= delta)
// and returns close to it (inf <= eps) within a finite horizon.
//
// Shift systems get a deterministic construction; interval maps get a
// search over exact rational candidate pools. Every reported estimate is
// an exact value attained at a recorded time, so reports can be replayed.

#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "sigma2/bitstream.hpp"
#include "sigma2/systems.hpp"
#include "sigma2/word.hpp"

namespace sigma2 {

// Stream that begins with `prefix`, then alternates blocks copied from x
// with blocks complemented from x, block lengths 1,1,2,2,4,4,8,8,...
// Copies are position-aligned: bit n of the result depends on bit n of x.
BitStream construct_witness(const BitStream& x, const Word& prefix);

enum class SearchStrategy { Grid, Random, Transport, All };

std::string strategy_name(SearchStrategy s);

struct WitnessReport {
  bool found = false;
  std::string system;
  std::string candidate;                // description of the chosen y
  std::optional<Rat> candidate_value;   // exact y for interval systems
  Rat sup_estimate;                     // max distance over scanned times
  std::uint64_t sup_time = 0;           // earliest time attaining it
  Rat inf_estimate;                     // min distance over scanned times
  std::uint64_t inf_time = 0;
  Rat delta;
  Rat eps;
  std::uint64_t horizon = 0;
  unsigned precision = 0;               // 0 for interval systems
  std::uint64_t candidates_scanned = 0;
  // Best inf seen across every candidate (diagnostic when not found).
  std::optional<Rat> min_inf_overall;
};

// Shift system: y = construct_witness(x, cylinder) lies in the cylinder
// set of streams extending `cylinder`; distances use the truncated metric.
WitnessReport chaos_witness_search(const BitStream& x, const Word& cylinder,
                                   const Rat& delta, const Rat& eps,
                                   std::uint64_t horizon,
                                   unsigned precision = 64);

// Interval map: scan exact rational candidates y strictly inside V (and
// inside the map's domain). Pools are deterministic for a given seed and
// scanned in a fixed order; the first candidate meeting both thresholds
// wins, otherwise the best seen is reported with found = false.
WitnessReport chaos_witness_search(const IntervalMap& m, const Rat& x,
                                   const RationalInterval& V,
                                   const Rat& delta, const Rat& eps,
                                   std::uint64_t horizon,
                                   SearchStrategy strategy = SearchStrategy::All,
                                   std::uint64_t seed = 0);

// The candidate pool by itself (exposed for tests and the CLI).
std::vector<Rat> witness_candidates(const IntervalMap& m,
                                    const RationalInterval& V, const Rat& eps,
                                    SearchStrategy strategy,
                                    std::uint64_t seed);

// Recompute the two recorded distances from scratch; true iff both match.
bool verify_witness_report(const BitStream& x, const Word& cylinder,
                           const WitnessReport& r);
bool verify_witness_report(const IntervalMap& m, const Rat& x,
                           const WitnessReport& r);

struct SeparationReport {
  Rat min_gap;                 // min over candidates and times of |x_n - y_n|
  std::size_t arg_candidate = 0;
  std::uint64_t arg_time = 0;
  bool two_cycle = false;      // x is a genuine period-2 point
  bool opposite_signs = true;  // x_n * y_n <= 0 at every scanned time
  std::uint64_t horizon = 0;
};

// For a period-2 point x, measure how far every candidate orbit stays from
// x's alternating orbit, and whether the two orbits straddle zero.
SeparationReport two_cycle_separation(const IntervalMap& m, const Rat& x,
                                      const std::vector<Rat>& candidates,
                                      std::uint64_t horizon);

}  // namespace sigma2
