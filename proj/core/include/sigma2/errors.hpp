// Error taxonomy shared across the library.
//
// ArgumentError  - caller broke a precondition (CLI maps this to exit 2)
// RangeError     - index or size beyond a supported guard (CLI exit 1)
// DomainEscape   - an orbit left the map's domain; carries the step index
// PrecisionError - an exactness guard tripped (denominator growth); carries
//                  the last depth that was still verified
// UnsupportedRule- a stream rule outside the decidable fragment
// NoPointError   - an itinerary refinement came up empty
// ParseError     - text input rejected; carries an offset into the input

#pragma once

#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <string>

namespace sigma2 {

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct ArgumentError : Error {
  using Error::Error;
};

struct RangeError : Error {
  using Error::Error;
};

struct DomainEscape : Error {
  std::uint64_t step;
  DomainEscape(std::uint64_t step_, const std::string& what_)
      : Error(what_), step(step_) {}
};

struct PrecisionError : Error {
  std::uint64_t verified_depth;
  PrecisionError(std::uint64_t depth, const std::string& what_)
      : Error(what_), verified_depth(depth) {}
};

struct UnsupportedRule : Error {
  using Error::Error;
};

struct NoPointError : Error {
  using Error::Error;
};

struct ParseError : Error {
  std::size_t offset;
  ParseError(std::size_t offset_, const std::string& what_)
      : Error(what_), offset(offset_) {}
};

}  // namespace sigma2
