#include "sigma2/pwl.hpp"

#include <algorithm>

#include "sigma2/errors.hpp"

namespace sigma2 {

RationalInterval::RationalInterval(Rat l, Rat h)
    : lo(std::move(l)), hi(std::move(h)) {
  if (lo > hi) throw ArgumentError("interval endpoints out of order");
}

PwlMap::PwlMap(std::vector<PwlNode> nodes) : nodes_(std::move(nodes)) {
  if (nodes_.size() < 2) {
    throw ArgumentError("piecewise linear map needs at least two nodes");
  }
  for (std::size_t i = 1; i < nodes_.size(); ++i) {
    if (!(nodes_[i - 1].x < nodes_[i].x)) {
      throw ArgumentError("node x coordinates must increase strictly");
    }
  }
}

RationalInterval PwlMap::domain() const {
  return RationalInterval(nodes_.front().x, nodes_.back().x);
}

bool PwlMap::operator==(const PwlMap& o) const {
  if (nodes_.size() != o.nodes_.size()) return false;
  for (std::size_t i = 0; i < nodes_.size(); ++i) {
    if (nodes_[i].x != o.nodes_[i].x || nodes_[i].y != o.nodes_[i].y) {
      return false;
    }
  }
  return true;
}

Rat pwl_eval(const PwlMap& m, const Rat& x) {
  const auto& nodes = m.nodes();
  if (x < nodes.front().x || x > nodes.back().x) {
    throw DomainEscape(0, "point outside the map domain");
  }
  // find the segment [x_i, x_{i+1}] containing x
  std::size_t lo = 0, hi = nodes.size() - 1;
  while (hi - lo > 1) {
    std::size_t mid = (lo + hi) / 2;
    if (nodes[mid].x <= x) {
      lo = mid;
    } else {
      hi = mid;
    }
  }
  const PwlNode& a = nodes[lo];
  const PwlNode& b = nodes[lo + 1];
  if (x == a.x) return a.y;
  if (x == b.x) return b.y;
  return a.y + (b.y - a.y) * (x - a.x) / (b.x - a.x);
}

std::vector<Rat> pwl_iterate(const PwlMap& m, const Rat& x, std::uint64_t n) {
  std::vector<Rat> orbit;
  orbit.reserve(n + 1);
  Rat v = x;
  const RationalInterval dom = m.domain();
  for (std::uint64_t step = 0; step <= n; ++step) {
    if (!dom.contains(v)) {
      throw DomainEscape(step, "orbit left the map domain");
    }
    orbit.push_back(v);
    if (step < n) v = pwl_eval(m, v);
  }
  return orbit;
}

PwlMap pwl_compose(const PwlMap& a, const PwlMap& b) {
  const RationalInterval a_dom = a.domain();
  const RationalInterval b_range = pwl_image(b, b.domain());
  if (!a_dom.contains(b_range)) {
    throw ArgumentError("inner map's range leaves the outer map's domain");
  }
  // Breakpoints of a∘b: b's own nodes plus preimages of a's nodes under b.
  std::vector<Rat> xs;
  for (const auto& n : b.nodes()) xs.push_back(n.x);
  const auto& bn = b.nodes();
  for (std::size_t s = 0; s + 1 < bn.size(); ++s) {
    const Rat& x0 = bn[s].x;
    const Rat& x1 = bn[s + 1].x;
    const Rat& y0 = bn[s].y;
    const Rat& y1 = bn[s + 1].y;
    if (y0 == y1) continue;  // constant segment: no interior preimages
    for (const auto& an : a.nodes()) {
      const Rat& v = an.x;
      const bool inside = (y0 < y1) ? (y0 < v && v < y1) : (y1 < v && v < y0);
      if (!inside) continue;
      xs.push_back(x0 + (v - y0) * (x1 - x0) / (y1 - y0));
    }
  }
  std::sort(xs.begin(), xs.end());
  xs.erase(std::unique(xs.begin(), xs.end()), xs.end());
  std::vector<PwlNode> nodes;
  nodes.reserve(xs.size());
  for (const auto& x : xs) {
    nodes.push_back(PwlNode{x, pwl_eval(a, pwl_eval(b, x))});
  }
  return PwlMap(std::move(nodes));
}

RationalInterval pwl_image(const PwlMap& m, const RationalInterval& J) {
  const RationalInterval dom = m.domain();
  if (!J.intersects(dom)) {
    throw ArgumentError("interval does not meet the map domain");
  }
  const Rat lo = std::max(J.lo, dom.lo);
  const Rat hi = std::min(J.hi, dom.hi);
  Rat min_v = pwl_eval(m, lo);
  Rat max_v = min_v;
  auto take = [&](const Rat& v) {
    if (v < min_v) min_v = v;
    if (v > max_v) max_v = v;
  };
  take(pwl_eval(m, hi));
  for (const auto& n : m.nodes()) {
    if (lo < n.x && n.x < hi) take(n.y);
  }
  return RationalInterval(min_v, max_v);
}

PwlMap make_tent() {
  return PwlMap({{Rat(0), Rat(0)}, {Rat(1, 2), Rat(1)}, {Rat(1), Rat(0)}});
}

PwlMap make_g() {
  return PwlMap({{Rat(-1), Rat(0)},
                 {Rat(-1, 2), Rat(1)},
                 {Rat(0), Rat(0)},
                 {Rat(1), Rat(-1)}});
}

PwlMap make_h() {
  return PwlMap({{Rat(-1, 2), Rat(1, 2)},
                 {Rat(0), Rat(0)},
                 {Rat(1, 2), Rat(1)},
                 {Rat(1), Rat(0)}});
}

PwlMap make_identity(RationalInterval dom) {
  return PwlMap({{dom.lo, dom.lo}, {dom.hi, dom.hi}});
}

}  // namespace sigma2
