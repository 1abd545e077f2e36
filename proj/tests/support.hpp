#pragma once

// Shared generators for randomized geometry tests. Everything stays exact;
// randomness only picks small integers.

#include <algorithm>
#include <optional>
#include <random>
#include <vector>

#include "farey/cpd.hpp"
#include "farey/lines.hpp"

namespace farey::testsupport {

using Rng = std::mt19937_64;

inline int cross_sign(const Pt& o, const Pt& a, const Pt& b) {
  return det2(a - o, b - o).sign();
}

/// Strictly convex CCW polygon with exactly n vertices. Draws n integer
/// vectors, recenters them to a zero sum, rejects repeated rays, sorts by
/// angle and chains. A zero sum with three or more distinct rays keeps every
/// angular gap below pi, so the chain is strictly convex.
inline Cpd random_cpd_exact_n(Rng& rng, int n) {
  std::uniform_int_distribution<int> coord(-8, 8);
  while (true) {
    std::vector<Vec2> edges(static_cast<std::size_t>(n));
    Rat sum_x, sum_y;
    for (Vec2& v : edges) {
      v = {Rat(coord(rng)), Rat(coord(rng))};
      sum_x += v.dx;
      sum_y += v.dy;
    }
    const Rat mean_x = sum_x / Rat(n);
    const Rat mean_y = sum_y / Rat(n);
    for (Vec2& v : edges) v = {v.dx - mean_x, v.dy - mean_y};

    bool bad = false;
    for (const Vec2& v : edges) bad = bad || v.is_zero();
    for (int i = 0; i < n && !bad; ++i) {
      for (int j = i + 1; j < n && !bad; ++j) {
        const bool same_ray = det2(edges[i], edges[j]).is_zero() &&
                              (edges[i].dx * edges[j].dx + edges[i].dy * edges[j].dy).sign() > 0;
        bad = same_ray;
      }
    }
    if (bad) continue;

    auto half = [](const Vec2& v) {
      return (v.dy.sign() > 0 || (v.dy.sign() == 0 && v.dx.sign() > 0)) ? 0 : 1;
    };
    std::sort(edges.begin(), edges.end(), [&](const Vec2& a, const Vec2& b) {
      if (half(a) != half(b)) return half(a) < half(b);
      return det2(a, b).sign() > 0;
    });

    std::vector<Pt> pts;
    Pt cur{Rat(0), Rat(0)};
    for (const Vec2& e : edges) {
      pts.push_back(cur);
      cur = {cur.x + e.dx, cur.y + e.dy};
    }
    return Cpd::validate(std::move(pts));
  }
}

/// Strict convex hull (Andrew monotone chain) of k random rational points,
/// in CCW order; nullopt when fewer than three hull vertices survive.
inline std::optional<Cpd> random_cpd_hull(Rng& rng, int k) {
  std::uniform_int_distribution<int> num(-12, 12);
  std::uniform_int_distribution<int> den(1, 6);
  std::vector<Pt> pts;
  for (int i = 0; i < k; ++i) pts.push_back({Rat(num(rng), den(rng)), Rat(num(rng), den(rng))});
  std::sort(pts.begin(), pts.end());
  pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
  if (pts.size() < 3) return std::nullopt;

  std::vector<Pt> hull;
  auto extend = [&hull](const Pt& p) {
    while (hull.size() >= 2 && cross_sign(hull[hull.size() - 2], hull.back(), p) <= 0)
      hull.pop_back();
    hull.push_back(p);
  };
  for (const Pt& p : pts) extend(p);
  const std::size_t lower = hull.size() + 1;
  for (auto it = std::next(pts.rbegin()); it != pts.rend(); ++it) {
    while (hull.size() >= lower && cross_sign(hull[hull.size() - 2], hull.back(), *it) <= 0)
      hull.pop_back();
    hull.push_back(*it);
  }
  hull.pop_back();  // closing copy of the start point
  if (hull.size() < 3) return std::nullopt;
  return Cpd::validate(std::move(hull));
}

struct TripleSample {
  Pt a, b, c;
};

/// One admissible three-point configuration: B is the crossing of two family
/// lines inside the square, A and C sit on one line each, and the steps
/// A->B, B->C share a quadrant. nullopt when the draw fails a condition.
inline std::optional<TripleSample> harvest_triple(Rng& rng,
                                                  const std::vector<PrimitiveLine>& lines,
                                                  const RectWindow& square) {
  std::uniform_int_distribution<std::size_t> pick(0, lines.size() - 1);
  std::uniform_int_distribution<int> step(0, 64);
  const PrimitiveLine& f = lines[pick(rng)];
  const PrimitiveLine& g = lines[pick(rng)];
  const Rat det = Rat(f.u) * Rat(g.v) - Rat(g.u) * Rat(f.v);
  if (det.is_zero()) return std::nullopt;
  const Pt b{(Rat(f.w) * Rat(g.v) - Rat(g.w) * Rat(f.v)) / det,
             (Rat(f.u) * Rat(g.w) - Rat(g.u) * Rat(f.w)) / det};
  if (!square.contains(b)) return std::nullopt;
  const auto seg_f = clip_to_rect(f, square);
  const auto seg_g = clip_to_rect(g, square);
  if (!seg_f || !seg_g) return std::nullopt;
  auto at = [&](const std::pair<Pt, Pt>& s) {
    const Rat t(step(rng), 64);
    return Pt{s.first.x + t * (s.second.x - s.first.x),
              s.first.y + t * (s.second.y - s.first.y)};
  };
  const Pt a = at(*seg_f);
  const Pt c = at(*seg_g);
  if (a == b || c == b) return std::nullopt;
  if (!shares_quadrant(b - a, c - b)) return std::nullopt;
  return TripleSample{a, b, c};
}

}  // namespace farey::testsupport
