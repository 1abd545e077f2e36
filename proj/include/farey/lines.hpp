#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "farey/geom.hpp"

namespace farey {

/// One geometric line as its unique primitive integer equation
/// u*x + v*y - w = 0: gcd(|u|,|v|,|w|) = 1 and (u,v) lexicographically
/// positive (u > 0, or u = 0 and v > 0).
struct PrimitiveLine {
  std::int64_t u = 0;
  std::int64_t v = 0;
  std::int64_t w = 0;

  /// Reduces an arbitrary integer triple to the primitive representative.
  /// Throws DegeneratePoints when (u, v) == (0, 0).
  static PrimitiveLine normalized(std::int64_t u, std::int64_t v, std::int64_t w);

  AffineForm form() const { return {Rat(u), Rat(v), Rat(-w)}; }
  Rat eval(const Pt& p) const { return Rat(u) * p.x + Rat(v) * p.y - Rat(w); }
  std::string str() const;  // "u*x + v*y = w" style, for diagnostics

  friend bool operator==(const PrimitiveLine& a, const PrimitiveLine& b) = default;
  friend bool operator<(const PrimitiveLine& a, const PrimitiveLine& b) {
    if (a.u != b.u) return a.u < b.u;
    if (a.v != b.v) return a.v < b.v;
    return a.w < b.w;
  }
};

struct FareyParams {
  int m = 1;
  int n = 1;

  FareyParams(int m_, int n_) : m(m_), n(n_) {
    if (m < 1 || n < 1) throw PreconditionViolated("FareyParams: m and n must be >= 1");
  }
};

/// Closed axis-aligned rectangle with rational bounds.
struct RectWindow {
  Rat x_min, x_max, y_min, y_max;

  RectWindow(Rat x0, Rat x1, Rat y0, Rat y1)
      : x_min(std::move(x0)), x_max(std::move(x1)), y_min(std::move(y0)), y_max(std::move(y1)) {
    if (!(x_min < x_max) || !(y_min < y_max))
      throw PreconditionViolated("RectWindow: bounds must be strictly ordered");
  }

  static RectWindow unit_square() { return {Rat(0), Rat(1), Rat(0), Rat(1)}; }

  std::array<Pt, 4> corners() const {
    return {Pt{x_min, y_min}, Pt{x_max, y_min}, Pt{x_max, y_max}, Pt{x_min, y_max}};
  }
  bool contains(const Pt& p) const {
    return x_min <= p.x && p.x <= x_max && y_min <= p.y && p.y <= y_max;
  }
  bool strictly_contains(const Pt& p) const {
    return x_min < p.x && p.x < x_max && y_min < p.y && p.y < y_max;
  }
  Rat area() const { return (x_max - x_min) * (y_max - y_min); }
};

/// True iff the line meets the closed rectangle, decided by the corner signs
/// of u*x + v*y - w (meets iff the four signs are not all strictly equal).
bool meets_rect(const PrimitiveLine& line, const RectWindow& rect);

/// All distinct lines u*x + v*y - w = 0 with |u| <= m, |v| <= n,
/// (u,v) != (0,0), integer w, meeting the closed rectangle. Sorted,
/// duplicate-free (one primitive representative per geometric line).
std::vector<PrimitiveLine> enumerate_lines(const FareyParams& params, const RectWindow& rect);

/// Membership in the family over the unit square. Valid for primitive
/// representatives: the primitive form has the smallest integer coefficients
/// among all integer equations of the line.
bool in_family(const PrimitiveLine& line, const FareyParams& params);

/// Mirror across the horizontal line y = 1/2: (u, v, w) -> (u, -v, w - v).
PrimitiveLine reflect_x(const PrimitiveLine& line);

/// Mirror across the vertical line x = 1/2: (u, v, w) -> (-u, v, w - u).
PrimitiveLine reflect_y(const PrimitiveLine& line);

/// Intersection of the line with the closed rectangle when it is a proper
/// segment; nullopt when the line misses the rectangle or only grazes a
/// corner. Endpoint order is lexicographic.
std::optional<std::pair<Pt, Pt>> clip_to_rect(const PrimitiveLine& line, const RectWindow& rect);

}  // namespace farey
