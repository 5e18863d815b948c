// Turbulence certificates for piecewise linear interval maps: two compact
// subintervals with at most one common point whose images under the map
// each cover the union of both. The search is restricted to pairs taken
// from single monotone laps, which keeps every step exact.

#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "sigma2/pwl.hpp"
#include "sigma2/systems.hpp"
#include "sigma2/witness.hpp"

namespace sigma2 {

struct Lap {
  std::size_t first_segment = 0;  // node index of the lap's left segment
  std::size_t last_segment = 0;   // node index of the lap's right segment
  RationalInterval span;          // x-range covered
  int direction = 0;              // +1 increasing, -1 decreasing
};

// Maximal runs of adjacent segments with a constant nonzero slope sign.
// Flat segments belong to no lap.
std::vector<Lap> laps(const PwlMap& m);

struct FixedPointSet {
  std::vector<Rat> points;           // ascending, deduplicated
  bool has_identity_segment = false; // some whole segment satisfies f = id
};

FixedPointSet fixed_points(const PwlMap& m);

struct TurbulenceCertificate {
  RationalInterval left;    // I0
  RationalInterval right;   // I1, to the right of I0
  RationalInterval image_left;
  RationalInterval image_right;
  std::optional<Rat> shared_point;  // set when I0 and I1 touch
  std::size_t lap_left = 0;
  std::size_t lap_right = 0;
};

// Search ordered lap pairs left to right for subintervals I0, I1 whose
// images both cover [I0.lo, I1.hi]; the first hit is returned after its
// images are recomputed independently with pwl_image. nullopt means no
// single-lap pair yields a certificate (pairs spanning several laps are
// out of scope).
std::optional<TurbulenceCertificate> turbulence_check(const PwlMap& m);

enum class PipelineOutcome { Satisfied, Vacuous, Inconclusive };

std::string outcome_name(PipelineOutcome o);

struct PipelineReport {
  FixedPointSet fixed;
  Rat base_point;             // fixed point the witness search starts from
  RationalInterval window;    // seeded target window for the witness
  WitnessReport witness;
  std::optional<TurbulenceCertificate> certificate;  // for m composed m
  PipelineOutcome outcome = PipelineOutcome::Inconclusive;
};

// End-to-end check of "scrambling near a fixed point forces the second
// iterate to be turbulent": pick the leftmost fixed point, search a seeded
// window for a witness, and on success demand a certificate for m∘m.
// Outcomes: Satisfied (witness and certificate), Vacuous (no witness, so
// nothing to certify), Inconclusive (witness found, certificate search
// exhausted its scope). ArgumentError if m does not map its domain into
// itself or has no fixed point.
PipelineReport turbulence_pipeline(const PwlMap& m, const Rat& delta,
                                   const Rat& eps, std::uint64_t horizon,
                                   std::uint64_t seed);

}  // namespace sigma2
