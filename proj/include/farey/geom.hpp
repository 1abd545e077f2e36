#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "farey/errors.hpp"
#include "farey/rat.hpp"

namespace farey {

struct Vec2 {
  Rat dx, dy;

  bool is_zero() const { return dx.is_zero() && dy.is_zero(); }
  friend bool operator==(const Vec2& a, const Vec2& b) = default;
};

struct Pt {
  Rat x, y;

  friend bool operator==(const Pt& a, const Pt& b) = default;
  /// Lexicographic (x, then y); the canonical vertex order used everywhere.
  friend bool operator<(const Pt& a, const Pt& b) {
    if (a.x != b.x) return a.x < b.x;
    return a.y < b.y;
  }
  friend Vec2 operator-(const Pt& a, const Pt& b) { return {a.x - b.x, a.y - b.y}; }
};

/// Oriented line as the affine map f(M) = a*x + b*y + c. For a line built
/// from an ordered point pair (A, B), f is positive strictly to the left of
/// the direction A->B.
struct AffineForm {
  Rat a, b, c;

  Rat eval(const Pt& p) const { return a * p.x + b * p.y + c; }
  AffineForm negated() const { return {-a, -b, -c}; }
  friend bool operator==(const AffineForm& f, const AffineForm& g) = default;
};

enum class Quadrant : std::uint8_t { Q1 = 0, Q2 = 1, Q3 = 2, Q4 = 3 };

/// Subset of the four closed quadrants. A nonzero vector lies in one
/// quadrant, or in two when it sits on a coordinate axis.
class QuadrantSet {
 public:
  QuadrantSet() = default;

  bool contains(Quadrant q) const { return bits_ & bit(q); }
  bool intersects(QuadrantSet o) const { return (bits_ & o.bits_) != 0; }
  bool empty() const { return bits_ == 0; }
  int count() const;
  QuadrantSet& insert(Quadrant q) {
    bits_ |= bit(q);
    return *this;
  }
  std::string str() const;  // e.g. "{Q1,Q4}"

  friend bool operator==(QuadrantSet a, QuadrantSet b) = default;

 private:
  static std::uint8_t bit(Quadrant q) {
    return static_cast<std::uint8_t>(1u << static_cast<std::uint8_t>(q));
  }
  std::uint8_t bits_ = 0;
};

/// det(v, w) in the standard basis: v.dx*w.dy - v.dy*w.dx. Exact.
Rat det2(const Vec2& v, const Vec2& w);

/// Canonical oriented equation of the line (A, B): f(M) = det(AB, AM).
/// Throws DegeneratePoints when A == B.
AffineForm canonical_line(const Pt& a, const Pt& b);

/// Sign of f(p): -1, 0 or +1.
int side_of(const AffineForm& f, const Pt& p);

/// True iff the open segments (a,b) and (c,d) cross transversally in a single
/// point interior to both. Endpoint contact and collinear overlap do not
/// count. Throws DegeneratePoints on a zero-length segment.
bool segments_cross(const Pt& a, const Pt& b, const Pt& c, const Pt& d);

/// All closed quadrants containing v (one, or two when v is on an axis).
/// Throws ZeroVector on the zero vector.
QuadrantSet quadrant_set(const Vec2& v);

/// True iff v and w lie in a common closed quadrant.
bool shares_quadrant(const Vec2& v, const Vec2& w);

/// True iff v and w lie in opposite quadrants: (Q1,Q3), (Q3,Q1), (Q2,Q4) or
/// (Q4,Q2), with closed-quadrant membership.
bool opposite_quadrants(const Vec2& v, const Vec2& w);

}  // namespace farey
