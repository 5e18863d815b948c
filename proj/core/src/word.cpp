#include "sigma2/word.hpp"

#include "sigma2/errors.hpp"

namespace sigma2 {

Word Word::zeros(std::uint64_t n) {
  return Word(std::vector<std::uint8_t>(n, 0));
}

Word Word::ones(std::uint64_t n) {
  return Word(std::vector<std::uint8_t>(n, 1));
}

Word Word::from_string(const std::string& s) {
  Word w;
  w.bits.reserve(s.size());
  for (std::size_t i = 0; i < s.size(); ++i) {
    char c = s[i];
    if (c != '0' && c != '1') {
      throw ParseError(i, "word may contain only '0' and '1'");
    }
    w.bits.push_back(static_cast<std::uint8_t>(c - '0'));
  }
  return w;
}

int Word::at(std::uint64_t i) const {
  if (i >= bits.size()) {
    throw RangeError("word index out of bounds");
  }
  return bits[i];
}

Word Word::complement() const {
  Word out;
  out.bits.reserve(bits.size());
  for (auto b : bits) out.bits.push_back(static_cast<std::uint8_t>(1 - b));
  return out;
}

Word Word::concat(const Word& other) const {
  Word out;
  out.bits.reserve(bits.size() + other.bits.size());
  out.bits = bits;
  out.bits.insert(out.bits.end(), other.bits.begin(), other.bits.end());
  return out;
}

Word Word::slice(std::uint64_t lo, std::uint64_t hi) const {
  if (lo > hi || hi > bits.size()) {
    throw RangeError("bad word slice bounds");
  }
  Word out;
  out.bits.assign(bits.begin() + static_cast<std::ptrdiff_t>(lo),
                  bits.begin() + static_cast<std::ptrdiff_t>(hi));
  return out;
}

std::string Word::to_string() const {
  std::string s;
  s.reserve(bits.size());
  for (auto b : bits) s.push_back(b ? '1' : '0');
  return s;
}

}  // namespace sigma2
