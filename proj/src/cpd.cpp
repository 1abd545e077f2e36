#include "farey/cpd.hpp"

namespace farey {

Cpd Cpd::validate(std::vector<Pt> points) {
  const int n = static_cast<int>(points.size());
  if (n < 3) throw TooFewVertices("Cpd: need at least 3 vertices");
  for (int p = 0; p < n; ++p) {
    const Pt& ap = points[p];
    const Vec2 edge = points[(p + 1) % n] - ap;
    for (int q = 0; q < n; ++q) {
      if (q == p || q == (p + 1) % n) continue;
      if (det2(edge, points[q] - ap).sign() <= 0) throw NotConvexDirect(p, q);
    }
  }
  return Cpd(std::move(points));
}

Cpd reduce(const Cpd& c, int index) {
  const int n = c.size();
  if (n == 3) throw TooFewVertices("reduce: a triangle cannot be reduced");
  if (index < 0 || index >= n) throw IndexOutOfRange("reduce: index out of range");
  std::vector<Pt> rest;
  rest.reserve(n - 1);
  for (int k = 0; k < n; ++k)
    if (k != index) rest.push_back(c.vertices()[k]);
  try {
    return Cpd::validate(std::move(rest));
  } catch (const NotConvexDirect&) {
    throw InternalInvariantViolation("reduce: deletion produced an invalid Cpd");
  }
}

bool diagonals_cross(const Cpd& c, int k) {
  const int n = c.size();
  if (n < 4) throw IndexOutOfRange("diagonals_cross: need n >= 4");
  if (k < 2 || k > n - 2) throw IndexOutOfRange("diagonals_cross: k must be in [2, n-2]");
  return segments_cross(c.vertex(0), c.vertex(k), c.vertex(n - 1), c.vertex(1));
}

QuadrantPattern edge_quadrants(const Cpd& c) {
  QuadrantPattern pattern;
  pattern.reserve(c.size());
  for (int k = 0; k < c.size(); ++k) pattern.push_back(quadrant_set(c.edge(k)));
  return pattern;
}

bool no_consecutive_same_quadrant(const Cpd& c) {
  const QuadrantPattern pattern = edge_quadrants(c);
  const int n = c.size();
  for (int k = 0; k < n; ++k)
    if (pattern[k].intersects(pattern[(k + 1) % n])) return false;
  return true;
}

bool check_n_le_4(const Cpd& c) {
  return !no_consecutive_same_quadrant(c) || c.size() <= 4;
}

}  // namespace farey
