// Exact rational and integer scalar types. All core arithmetic is exact;
// decimal renderings exist only for human-facing output and are never fed
// back into computations.

#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>

namespace sigma2 {

using Int = mpz_class;
using Rat = mpq_class;

// 2^e as an exact integer.
Int pow2(unsigned long e);

// Exact rational 1/2^e.
Rat pow2_inv(unsigned long e);

// Parses "p", "-p/q" etc.; canonicalizes. Throws ParseError on bad syntax
// or zero denominator.
Rat parse_rat(const std::string& text);

// Renders value with `digits` significant digits, round half to even.
// Plain positional notation (values handled here are small); exact zeros
// render as "0".
std::string decimal_string(const Rat& value, unsigned digits = 30);

}  // namespace sigma2
