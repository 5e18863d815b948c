#include "sigma2/turbulence.hpp"

#include <algorithm>
#include <random>

#include "sigma2/errors.hpp"

namespace sigma2 {

namespace {

int slope_sign(const PwlNode& a, const PwlNode& b) {
  if (a.y == b.y) return 0;
  return b.y > a.y ? 1 : -1;
}

// x in lap.span with f(x) = t; the restriction of f to a lap is monotone,
// so walk the lap's segments for the one whose y-range brackets t.
Rat lap_solve(const PwlMap& m, const Lap& lap, const Rat& t) {
  const auto& nodes = m.nodes();
  for (std::size_t s = lap.first_segment; s <= lap.last_segment; ++s) {
    const PwlNode& a = nodes[s];
    const PwlNode& b = nodes[s + 1];
    Rat ylo = std::min(a.y, b.y);
    Rat yhi = std::max(a.y, b.y);
    if (t < ylo || t > yhi) continue;
    Rat slope = (b.y - a.y) / (b.x - a.x);
    return a.x + (t - a.y) / slope;
  }
  throw ArgumentError("target value outside lap image");
}

RationalInterval lap_image(const PwlMap& m, const Lap& lap) {
  const auto& nodes = m.nodes();
  Rat l = nodes[lap.first_segment].y;
  Rat r = nodes[lap.last_segment + 1].y;
  return lap.direction > 0 ? RationalInterval(l, r) : RationalInterval(r, l);
}

// Subintervals of lap.span ∩ [lo, hi] where f(x) - x <= 0 (below) or
// >= 0 (above), in ascending order.
std::vector<RationalInterval> identity_side(const PwlMap& m, const Lap& lap,
                                            const Rat& lo, const Rat& hi,
                                            bool below) {
  std::vector<RationalInterval> out;
  const auto& nodes = m.nodes();
  for (std::size_t s = lap.first_segment; s <= lap.last_segment; ++s) {
    Rat x0 = std::max(nodes[s].x, lo);
    Rat x1 = std::min(nodes[s + 1].x, hi);
    if (x0 > x1) continue;
    // f(x) - x = (slope - 1)(x - a.x) + (a.y - a.x) on this segment
    Rat slope = (nodes[s + 1].y - nodes[s].y) / (nodes[s + 1].x - nodes[s].x);
    auto g = [&](const Rat& x) {
      return Rat(nodes[s].y + slope * (x - nodes[s].x) - x);
    };
    Rat g0 = g(x0);
    Rat g1 = g(x1);
    bool ok0 = below ? g0 <= 0 : g0 >= 0;
    bool ok1 = below ? g1 <= 0 : g1 >= 0;
    if (ok0 && ok1) {
      out.emplace_back(x0, x1);
    } else if (ok0 || ok1) {
      Rat root = x0 + (x0 - x1) * g0 / (g1 - g0);  // g linear, g0 != g1
      if (ok0)
        out.emplace_back(x0, root);
      else
        out.emplace_back(root, x1);
    }
  }
  // merge adjacent touching pieces
  std::vector<RationalInterval> merged;
  for (auto& iv : out) {
    if (!merged.empty() && merged.back().hi >= iv.lo)
      merged.back() = RationalInterval(merged.back().lo,
                                       std::max(merged.back().hi, iv.hi));
    else
      merged.push_back(iv);
  }
  return merged;
}

std::optional<Rat> side_min(const std::vector<RationalInterval>& s) {
  if (s.empty()) return std::nullopt;
  return s.front().lo;
}

std::optional<Rat> side_max(const std::vector<RationalInterval>& s) {
  if (s.empty()) return std::nullopt;
  return s.back().hi;
}

// Hull endpoints (w1, w2) for the pair, or nullopt. The hull W = [w1, w2]
// is chosen so that the minimal subinterval of A mapping onto W starts at
// w1 and the minimal subinterval of B mapping onto W ends at w2.
std::optional<std::pair<Rat, Rat>> solve_pair(const PwlMap& m, const Lap& A,
                                              const Lap& B) {
  RationalInterval ia = lap_image(m, A);
  RationalInterval ib = lap_image(m, B);
  Rat glo = std::max(ia.lo, ib.lo);
  Rat ghi = std::min(ia.hi, ib.hi);
  if (glo >= ghi) return std::nullopt;

  if (A.direction > 0 && B.direction > 0) {
    auto w1 = side_min(identity_side(m, A, glo, ghi, true));
    auto w2 = side_max(identity_side(m, B, glo, ghi, false));
    if (!w1 || !w2 || !(*w1 < *w2)) return std::nullopt;
    return std::pair<Rat, Rat>(*w1, *w2);
  }

  if (A.direction > 0 && B.direction < 0) {
    auto w1 = side_max(identity_side(m, A, glo, ghi, true));
    if (!w1) return std::nullopt;
    Rat w2 = std::min(ghi, B.span.hi);
    if (w2 < std::max(glo, B.span.lo)) return std::nullopt;
    if (!(pwl_eval(m, w2) <= *w1) || !(*w1 < w2)) return std::nullopt;
    return std::pair<Rat, Rat>(*w1, w2);
  }

  if (A.direction < 0 && B.direction > 0) {
    Rat w1 = std::max(A.span.lo, glo);
    if (w1 > std::min(A.span.hi, ghi)) return std::nullopt;
    Rat bound = std::min(ghi, pwl_eval(m, w1));
    auto w2 = side_max(identity_side(m, B, glo, bound, false));
    if (!w2 || !(w1 < *w2)) return std::nullopt;
    return std::pair<Rat, Rat>(w1, *w2);
  }

  // both decreasing: raise w1 until B's value at the induced w2 drops
  // below it; each round is exact, and the round count is capped.
  Rat w1 = std::max(A.span.lo, glo);
  for (int round = 0; round < 64; ++round) {
    if (w1 > std::min(A.span.hi, ghi)) return std::nullopt;
    Rat w2 = std::min(std::min(B.span.hi, ghi), pwl_eval(m, w1));
    if (w2 < B.span.lo || !(w1 < w2)) return std::nullopt;
    Rat t = pwl_eval(m, w2);
    if (t <= w1) return std::pair<Rat, Rat>(w1, w2);
    w1 = t;
  }
  return std::nullopt;
}

}  // namespace

std::vector<Lap> laps(const PwlMap& m) {
  const auto& nodes = m.nodes();
  std::vector<Lap> out;
  std::size_t s = 0;
  while (s + 1 < nodes.size()) {
    int dir = slope_sign(nodes[s], nodes[s + 1]);
    if (dir == 0) {
      ++s;
      continue;
    }
    std::size_t e = s;
    while (e + 2 < nodes.size() &&
           slope_sign(nodes[e + 1], nodes[e + 2]) == dir)
      ++e;
    out.push_back({s, e, RationalInterval(nodes[s].x, nodes[e + 1].x), dir});
    s = e + 1;
  }
  return out;
}

FixedPointSet fixed_points(const PwlMap& m) {
  const auto& nodes = m.nodes();
  FixedPointSet out;
  for (std::size_t s = 0; s + 1 < nodes.size(); ++s) {
    const PwlNode& a = nodes[s];
    const PwlNode& b = nodes[s + 1];
    Rat dx = b.x - a.x;
    Rat dy = b.y - a.y;
    if (dy == dx) {
      // slope one: either no solution or a whole fixed segment
      if (a.y == a.x) {
        out.has_identity_segment = true;
        out.points.push_back(a.x);
        out.points.push_back(b.x);
      }
      continue;
    }
    // solve a.y + (dy/dx)(x - a.x) = x
    Rat x = (a.y * dx - a.x * dy) / (dx - dy);
    if (x >= a.x && x <= b.x) out.points.push_back(x);
  }
  std::sort(out.points.begin(), out.points.end());
  out.points.erase(std::unique(out.points.begin(), out.points.end()),
                   out.points.end());
  return out;
}

std::optional<TurbulenceCertificate> turbulence_check(const PwlMap& m) {
  std::vector<Lap> ls = laps(m);
  for (std::size_t i = 0; i < ls.size(); ++i) {
    for (std::size_t j = i + 1; j < ls.size(); ++j) {
      auto w = solve_pair(m, ls[i], ls[j]);
      if (!w) continue;
      const auto& [w1, w2] = *w;
      TurbulenceCertificate cert;
      cert.lap_left = i;
      cert.lap_right = j;
      cert.left = ls[i].direction > 0
                      ? RationalInterval(w1, lap_solve(m, ls[i], w2))
                      : RationalInterval(w1, lap_solve(m, ls[i], w1));
      cert.right = ls[j].direction > 0
                       ? RationalInterval(lap_solve(m, ls[j], w1), w2)
                       : RationalInterval(lap_solve(m, ls[j], w2), w2);
      if (cert.left.hi > cert.right.lo) continue;
      // independent re-verification through the generic image routine
      RationalInterval target(cert.left.lo, cert.right.hi);
      cert.image_left = pwl_image(m, cert.left);
      cert.image_right = pwl_image(m, cert.right);
      if (!cert.image_left.contains(target)) continue;
      if (!cert.image_right.contains(target)) continue;
      if (cert.left.hi == cert.right.lo) cert.shared_point = cert.left.hi;
      return cert;
    }
  }
  return std::nullopt;
}

std::string outcome_name(PipelineOutcome o) {
  switch (o) {
    case PipelineOutcome::Satisfied:
      return "satisfied";
    case PipelineOutcome::Vacuous:
      return "vacuous";
    case PipelineOutcome::Inconclusive:
      return "inconclusive";
  }
  throw ArgumentError("unknown outcome");
}

PipelineReport turbulence_pipeline(const PwlMap& m, const Rat& delta,
                                   const Rat& eps, std::uint64_t horizon,
                                   std::uint64_t seed) {
  RationalInterval dom = m.domain();
  RationalInterval image = pwl_image(m, dom);
  if (!dom.contains(image))
    throw ArgumentError("map does not send its domain into itself");

  PipelineReport rep;
  rep.fixed = fixed_points(m);
  if (rep.fixed.points.empty())
    throw ArgumentError("map has no fixed point");
  rep.base_point = rep.fixed.points.front();

  // Seeded window: an eighth of the domain, positioned by the seed.
  Rat width = dom.length() / 8;
  std::mt19937_64 rng(seed);
  Rat u(Int(rng() >> 11), Int(std::uint64_t{1} << 53));  // u in [0,1)
  Rat lo = dom.lo + (dom.length() - width) * u;
  rep.window = RationalInterval(lo, lo + width);

  rep.witness =
      chaos_witness_search(IntervalMap::pwl(m), rep.base_point, rep.window,
                           delta, eps, horizon, SearchStrategy::All, seed);

  if (!rep.witness.found) {
    rep.outcome = PipelineOutcome::Vacuous;
    return rep;
  }
  rep.certificate = turbulence_check(pwl_compose(m, m));
  rep.outcome = rep.certificate ? PipelineOutcome::Satisfied
                                : PipelineOutcome::Inconclusive;
  return rep;
}

}  // namespace sigma2
