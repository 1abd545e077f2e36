#include "farey/geom.hpp"

namespace farey {

int QuadrantSet::count() const {
  int n = 0;
  for (std::uint8_t b = bits_; b; b >>= 1) n += b & 1;
  return n;
}

std::string QuadrantSet::str() const {
  static const char* names[] = {"Q1", "Q2", "Q3", "Q4"};
  std::string out = "{";
  bool first = true;
  for (int i = 0; i < 4; ++i) {
    if (!contains(static_cast<Quadrant>(i))) continue;
    if (!first) out += ",";
    out += names[i];
    first = false;
  }
  return out + "}";
}

Rat det2(const Vec2& v, const Vec2& w) { return v.dx * w.dy - v.dy * w.dx; }

AffineForm canonical_line(const Pt& a, const Pt& b) {
  if (a == b) throw DegeneratePoints("canonical_line: coincident points");
  Rat alpha = -(b.y - a.y);
  Rat beta = b.x - a.x;
  // f(M) = det(AB, AM) = alpha*x + beta*y - (alpha*x_A + beta*y_A)
  Rat gamma = -(alpha * a.x + beta * a.y);
  return {alpha, beta, gamma};
}

int side_of(const AffineForm& f, const Pt& p) { return f.eval(p).sign(); }

bool segments_cross(const Pt& a, const Pt& b, const Pt& c, const Pt& d) {
  if (a == b || c == d) throw DegeneratePoints("segments_cross: zero-length segment");
  const int d1 = det2(b - a, c - a).sign();
  const int d2 = det2(b - a, d - a).sign();
  const int d3 = det2(d - c, a - c).sign();
  const int d4 = det2(d - c, b - c).sign();
  // Strict crossing: each segment's endpoints on opposite open sides of the
  // other's supporting line.
  return d1 * d2 < 0 && d3 * d4 < 0;
}

QuadrantSet quadrant_set(const Vec2& v) {
  if (v.is_zero()) throw ZeroVector("quadrant_set: zero vector");
  const int sx = v.dx.sign();
  const int sy = v.dy.sign();
  QuadrantSet qs;
  if (sx >= 0 && sy >= 0) qs.insert(Quadrant::Q1);
  if (sx <= 0 && sy >= 0) qs.insert(Quadrant::Q2);
  if (sx <= 0 && sy <= 0) qs.insert(Quadrant::Q3);
  if (sx >= 0 && sy <= 0) qs.insert(Quadrant::Q4);
  return qs;
}

bool shares_quadrant(const Vec2& v, const Vec2& w) {
  return quadrant_set(v).intersects(quadrant_set(w));
}

bool opposite_quadrants(const Vec2& v, const Vec2& w) {
  const QuadrantSet qv = quadrant_set(v);
  const QuadrantSet qw = quadrant_set(w);
  return (qv.contains(Quadrant::Q1) && qw.contains(Quadrant::Q3)) ||
         (qv.contains(Quadrant::Q3) && qw.contains(Quadrant::Q1)) ||
         (qv.contains(Quadrant::Q2) && qw.contains(Quadrant::Q4)) ||
         (qv.contains(Quadrant::Q4) && qw.contains(Quadrant::Q2));
}

}  // namespace farey
