// Finite binary words. Bits are stored one per byte; sizes stay small enough
// (materialization guard is 10^7 bits) that compactness does not matter.

#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace sigma2 {

struct Word {
  std::vector<std::uint8_t> bits;

  Word() = default;
  explicit Word(std::vector<std::uint8_t> b) : bits(std::move(b)) {}

  static Word zeros(std::uint64_t n);
  static Word ones(std::uint64_t n);
  // Accepts only characters '0' and '1'. Throws ParseError otherwise.
  static Word from_string(const std::string& s);

  std::uint64_t size() const { return bits.size(); }
  bool empty() const { return bits.empty(); }
  int at(std::uint64_t i) const;  // RangeError when out of bounds
  void push(int bit) { bits.push_back(static_cast<std::uint8_t>(bit & 1)); }

  Word complement() const;
  Word concat(const Word& other) const;
  // [lo, hi) slice; RangeError on bad bounds.
  Word slice(std::uint64_t lo, std::uint64_t hi) const;
  std::string to_string() const;

  bool operator==(const Word& other) const { return bits == other.bits; }
};

}  // namespace sigma2
