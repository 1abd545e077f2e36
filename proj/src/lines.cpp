#include "farey/lines.hpp"

#include <algorithm>
#include <numeric>
#include <set>

namespace farey {

PrimitiveLine PrimitiveLine::normalized(std::int64_t u, std::int64_t v, std::int64_t w) {
  if (u == 0 && v == 0) throw DegeneratePoints("PrimitiveLine: (u, v) must be nonzero");
  std::int64_t g = std::gcd(std::gcd(std::abs(u), std::abs(v)), std::abs(w));
  u /= g;
  v /= g;
  w /= g;
  if (u < 0 || (u == 0 && v < 0)) {
    u = -u;
    v = -v;
    w = -w;
  }
  return {u, v, w};
}

std::string PrimitiveLine::str() const {
  return std::to_string(u) + "x + " + std::to_string(v) + "y = " + std::to_string(w);
}

bool meets_rect(const PrimitiveLine& line, const RectWindow& rect) {
  bool has_nonneg = false;
  bool has_nonpos = false;
  for (const Pt& c : rect.corners()) {
    const int s = line.eval(c).sign();
    if (s >= 0) has_nonneg = true;
    if (s <= 0) has_nonpos = true;
  }
  return has_nonneg && has_nonpos;
}

std::vector<PrimitiveLine> enumerate_lines(const FareyParams& params, const RectWindow& rect) {
  std::set<PrimitiveLine> out;
  for (std::int64_t u = -params.m; u <= params.m; ++u) {
    for (std::int64_t v = -params.n; v <= params.n; ++v) {
      if (u == 0 && v == 0) continue;
      // u*x + v*y over the rectangle spans [lo, hi], attained at corners;
      // the line meets the rectangle exactly when w lies in that interval.
      Rat lo, hi;
      bool first = true;
      for (const Pt& c : rect.corners()) {
        Rat val = Rat(u) * c.x + Rat(v) * c.y;
        if (first || val < lo) lo = val;
        if (first || hi < val) hi = val;
        first = false;
      }
      const mpz_class w_lo = lo.ceil();
      const mpz_class w_hi = hi.floor();
      if (w_lo <= w_hi && (!w_lo.fits_slong_p() || !w_hi.fits_slong_p()))
        throw PreconditionViolated("enumerate_lines: rectangle too large for integer w range");
      for (mpz_class w = w_lo; w <= w_hi; ++w) {
        PrimitiveLine line = PrimitiveLine::normalized(u, v, w.get_si());
        if (meets_rect(line, rect)) out.insert(line);
      }
    }
  }
  return {out.begin(), out.end()};
}

bool in_family(const PrimitiveLine& line, const FareyParams& params) {
  return std::abs(line.u) <= params.m && std::abs(line.v) <= params.n &&
         meets_rect(line, RectWindow::unit_square());
}

PrimitiveLine reflect_x(const PrimitiveLine& line) {
  return PrimitiveLine::normalized(line.u, -line.v, line.w - line.v);
}

PrimitiveLine reflect_y(const PrimitiveLine& line) {
  return PrimitiveLine::normalized(-line.u, line.v, line.w - line.u);
}

std::optional<std::pair<Pt, Pt>> clip_to_rect(const PrimitiveLine& line, const RectWindow& rect) {
  std::vector<Pt> hits;
  auto push = [&](const Pt& p) {
    if (!rect.contains(p)) return;
    if (std::find(hits.begin(), hits.end(), p) == hits.end()) hits.push_back(p);
  };
  const Rat u(line.u), v(line.v), w(line.w);
  // Hits against the two vertical side lines, then the two horizontal ones.
  if (line.v != 0) {
    push({rect.x_min, (w - u * rect.x_min) / v});
    push({rect.x_max, (w - u * rect.x_max) / v});
  }
  if (line.u != 0) {
    push({(w - v * rect.y_min) / u, rect.y_min});
    push({(w - v * rect.y_max) / u, rect.y_max});
  }
  if (hits.size() < 2) return std::nullopt;
  auto [lo, hi] = std::minmax_element(hits.begin(), hits.end());
  return std::make_pair(*lo, *hi);
}

}  // namespace farey
