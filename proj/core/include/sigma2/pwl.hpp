// Piecewise linear interval maps with exact rational nodes. Evaluation,
// iteration, composition and images are all exact; no floating point.

#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "sigma2/rational.hpp"

namespace sigma2 {

struct RationalInterval {
  Rat lo;
  Rat hi;

  RationalInterval() = default;
  RationalInterval(Rat l, Rat h);  // ArgumentError if l > h

  bool contains(const Rat& x) const { return lo <= x && x <= hi; }
  bool contains(const RationalInterval& other) const {
    return lo <= other.lo && other.hi <= hi;
  }
  Rat length() const { return hi - lo; }
  Rat midpoint() const { return (lo + hi) / 2; }
  bool intersects(const RationalInterval& other) const {
    return lo <= other.hi && other.lo <= hi;
  }
  bool operator==(const RationalInterval& o) const {
    return lo == o.lo && hi == o.hi;
  }
};

struct PwlNode {
  Rat x;
  Rat y;
};

class PwlMap {
 public:
  // Nodes must have strictly increasing x coordinates and there must be at
  // least two of them (ArgumentError otherwise).
  explicit PwlMap(std::vector<PwlNode> nodes);

  const std::vector<PwlNode>& nodes() const { return nodes_; }
  RationalInterval domain() const;

  bool operator==(const PwlMap& o) const;

 private:
  std::vector<PwlNode> nodes_;
};

// Exact evaluation; DomainEscape(0) when x lies outside the domain.
Rat pwl_eval(const PwlMap& m, const Rat& x);

// Orbit x, f(x), ..., f^n(x) (n+1 entries). DomainEscape carries the first
// step whose input left the domain.
std::vector<Rat> pwl_iterate(const PwlMap& m, const Rat& x, std::uint64_t n);

// Exact composition a after b: nodes are b's nodes plus all preimages of
// a's nodes under b. ArgumentError if b's range leaves a's domain.
PwlMap pwl_compose(const PwlMap& a, const PwlMap& b);

// Exact image of J intersected with the domain as an interval; since the
// map is piecewise monotone, extrema occur at nodes or at J's endpoints.
// ArgumentError if J does not intersect the domain.
RationalInterval pwl_image(const PwlMap& m, const RationalInterval& J);

// Built-ins.
PwlMap make_tent();      // [0,1]: peak (1/2, 1)
PwlMap make_g();         // [-1,1]: nodes (-1,0), (-1/2,1), (0,0), (1,-1)
PwlMap make_h();         // [-1/2,1]: reflection then tent
PwlMap make_identity(RationalInterval dom);

}  // namespace sigma2
