// Exact operations for the logistic family F_mu(x) = mu*x*(1-x). Iterating
// a rational squares its denominator, so orbit depth is guarded by the bit
// size of the denominators involved.

#pragma once

#include <cstdint>

#include "sigma2/pwl.hpp"
#include "sigma2/rational.hpp"

namespace sigma2 {

// Denominator guard for exact logistic iteration, in bits.
inline constexpr std::uint64_t kLogisticDenomBitGuard = std::uint64_t{1} << 20;

Rat logistic_eval(const Rat& mu, const Rat& x);

// Exact image of an interval: endpoint values, plus the vertex value mu/4
// when 1/2 lies inside.
RationalInterval logistic_step_interval(const Rat& mu, const RationalInterval& J);

// Whether all iterates F^0(x)..F^n(x) stay inside [0,1]. Exact; throws
// PrecisionError carrying the last verified depth when the denominator
// guard trips first.
bool lambda_membership_depth(const Rat& mu, const Rat& x, std::uint64_t n);

}  // namespace sigma2
