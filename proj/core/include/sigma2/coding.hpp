// Bridges between interval orbits and symbol sequences: itineraries over a
// two-cell partition, inverse-branch refinement from a symbol word back to
// an enclosure, the shift-side model of the tent map, and exact binary
// expansions of rationals.

#pragma once

#include <cstdint>
#include <functional>
#include <vector>

#include "sigma2/bitstream.hpp"
#include "sigma2/pwl.hpp"
#include "sigma2/rational.hpp"
#include "sigma2/word.hpp"

namespace sigma2 {

struct Itinerary {
  Word word;                              // one symbol per recorded step
  std::vector<std::uint64_t> boundary_hits;  // steps whose value sat on a
                                             // shared cell endpoint (coded
                                             // into the lower cell)
};

// Exact itinerary of the first n iterates (steps 0..n-1) of x under m.
// The partition must be exactly two adjacent intervals covering the domain
// (ArgumentError otherwise); ties at the shared endpoint go to cell 0 and
// are flagged.
Itinerary itinerary(const PwlMap& m, const Rat& x, std::uint64_t n,
                    const std::vector<RationalInterval>& partition);

// A family of monotone inverse branches over a cell partition. inverse(s, J,
// tol) returns an enclosure of branch_s^{-1}(J) intersected with cell s,
// within tol of the true preimage interval; empty result is signalled by
// throwing NoPointError.
struct BranchSystem {
  std::vector<RationalInterval> cells;
  std::function<RationalInterval(unsigned symbol, const RationalInterval& J,
                                 const Rat& tol)>
      inverse;
};

// Exact branches of the tent map (affine inverses; tol unused).
BranchSystem tent_branches();
// Branches of F_mu for mu > 4: square-root preimages enclosed by rational
// bisection to tol.
BranchSystem logistic_branches(const Rat& mu);

// Nested refinement: the returned interval encloses every point whose
// itinerary starts with w. NoPointError when some step's preimage misses
// its cell.
RationalInterval point_from_itinerary(const BranchSystem& branches,
                                      const Word& w, const Rat& tol);

// One tent step on the shift side: drops the leading bit and complements
// the rest when that bit was 1. Mirrors T(0.b1 b2 ...) for non-dyadic
// points.
BitStream tent_step_stream(const BitStream& s);

// Exact binary expansion of v in [0,1]. v = 1 yields the all-ones stream;
// dyadic rationals get their terminating expansion.
BitStream expansion_stream(const Rat& v);

// Exact value of an eventually periodic stream read as a binary fraction
// sum s_i / 2^(i+1). ArgumentError for non-ep rules.
Rat ep_stream_value(const BitStream& s);

}  // namespace sigma2
