#include "sigma2/logistic.hpp"

#include "sigma2/errors.hpp"

namespace sigma2 {

Rat logistic_eval(const Rat& mu, const Rat& x) { return mu * x * (1 - x); }

RationalInterval logistic_step_interval(const Rat& mu,
                                        const RationalInterval& J) {
  Rat a = logistic_eval(mu, J.lo);
  Rat b = logistic_eval(mu, J.hi);
  Rat lo = std::min(a, b);
  Rat hi = std::max(a, b);
  const Rat half(1, 2);
  if (J.lo <= half && half <= J.hi) {
    Rat peak = mu / 4;
    if (peak < lo) lo = peak;
    if (peak > hi) hi = peak;
  }
  return RationalInterval(lo, hi);
}

bool lambda_membership_depth(const Rat& mu, const Rat& x, std::uint64_t n) {
  Rat v = x;
  const Rat zero(0), one(1);
  for (std::uint64_t depth = 0; depth <= n; ++depth) {
    if (v < zero || v > one) return false;
    if (depth == n) break;
    if (mpz_sizeinbase(v.get_den().get_mpz_t(), 2) > kLogisticDenomBitGuard) {
      throw PrecisionError(depth,
                           "logistic denominator guard exceeded before depth");
    }
    v = logistic_eval(mu, v);
  }
  return true;
}

}  // namespace sigma2
