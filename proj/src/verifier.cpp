#include "farey/verifier.hpp"

#include <gmpxx.h>

#include <cstdint>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include "farey/errors.hpp"

namespace farey {

namespace {

/// Integer equation u*x + v*y = w with unbounded coefficients.
struct IntForm {
  mpz_class u, v, w;
};

/// Primitive integer equation of the line (A, B), scaled by a positive
/// factor from canonical_line so the form stays positive to the left of
/// A -> B. With A -> B in the closed first quadrant this gives u <= 0 <= v.
IntForm oriented_integer_form(const Pt& a, const Pt& b) {
  const AffineForm f = canonical_line(a, b);
  const mpz_class scale = lcm(lcm(f.a.den(), f.b.den()), f.c.den());
  IntForm out{f.a.num() * (scale / f.a.den()), f.b.num() * (scale / f.b.den()),
              -f.c.num() * (scale / f.c.den())};
  const mpz_class g = gcd(gcd(out.u, out.v), out.w);
  out.u /= g;
  out.v /= g;
  out.w /= g;
  return out;
}

bool form_in_family(const IntForm& f, const FareyParams& params) {
  if (!f.u.fits_slong_p() || !f.v.fits_slong_p() || !f.w.fits_slong_p()) return false;
  return in_family(PrimitiveLine::normalized(f.u.get_si(), f.v.get_si(), f.w.get_si()), params);
}

bool opposite_consecutive(const Cpd& poly, int k) {
  return opposite_quadrants(poly.edge(k), poly.edge(k + 1));
}

/// Shape, quadrant and classification checks for one cell; appends to the
/// report and keeps the triangle/quadrilateral tallies.
void check_cell(const Cell& cell, long index, VerificationReport& report) {
  const int nv = cell.boundary.size();
  if (nv != 3 && nv != 4) {
    report.violations.push_back({index, "shape"});
    return;
  }
  (nv == 3 ? report.triangle_count : report.quad_count) += 1;
  if (!check_T2(cell)) report.violations.push_back({index, "t2"});
  try {
    classify(cell);
  } catch (const ShapeTheoremViolation&) {
    report.violations.push_back({index, "classification"});
  }
}

void check_tiling_and_euler(const Subdivision& s, VerificationReport& report) {
  Rat total;
  for (const Cell& cell : s.cells) total += area(cell);
  if (total != s.rect.area()) report.violations.push_back({-1, "tiling"});
  const long euler = static_cast<long>(s.vertices.size()) - static_cast<long>(s.edges.size()) +
                     static_cast<long>(s.face_count());
  if (euler != 2) report.violations.push_back({-1, "euler"});
}

}  // namespace

bool check_T2(const Cell& cell) { return no_consecutive_same_quadrant(cell.boundary); }

ShapeClass classify(const Cell& cell) {
  const Cpd& poly = cell.boundary;
  const int n = poly.size();
  if (n != 3 && n != 4)
    throw ShapeTheoremViolation("cell has " + std::to_string(n) + " vertices; expected 3 or 4");
  if (n == 3) {
    for (int k = 0; k < 3; ++k)
      if (opposite_consecutive(poly, k)) return {ShapeKind::Triangle, k};
    throw ShapeTheoremViolation("triangle lacks a consecutive edge pair in opposite quadrants");
  }
  for (int k = 0; k < 4; ++k)
    if (opposite_consecutive(poly, k))
      throw ShapeTheoremViolation("quadrilateral has consecutive edges in opposite quadrants");
  const QuadrantPattern pattern = edge_quadrants(poly);
  for (int p = 0; p < 4; ++p) {
    bool matches = true;
    for (int i = 0; i < 4 && matches; ++i)
      matches = pattern[(p + i) % 4].contains(static_cast<Quadrant>(i));
    if (matches) return {ShapeKind::Quadrilateral, p};
  }
  throw ShapeTheoremViolation("quadrilateral edges do not realize the cyclic quadrant pattern");
}

PrimitiveLine three_point_line(const Pt& a, const Pt& b, const Pt& c,
                               const FareyParams& params) {
  const RectWindow square = RectWindow::unit_square();
  if (!square.contains(a) || !square.contains(b) || !square.contains(c))
    throw PreconditionViolated("three_point_line: points must lie in the closed unit square");
  if (a == b || b == c || a == c)
    throw PreconditionViolated("three_point_line: points must be pairwise distinct");
  const Vec2 ab = b - a;
  const Vec2 bc = c - b;
  if (det2(ab, bc).is_zero())
    throw PreconditionViolated("three_point_line: points must not be collinear");
  if (!shares_quadrant(ab, bc))
    throw PreconditionViolated("three_point_line: step vectors must share a quadrant");
  if (!form_in_family(oriented_integer_form(a, b), params))
    throw PreconditionViolated("three_point_line: line through A and B must belong to the family");
  if (!form_in_family(oriented_integer_form(b, c), params))
    throw PreconditionViolated("three_point_line: line through B and C must belong to the family");

  Quadrant shared = Quadrant::Q1;
  bool found = false;
  for (Quadrant q : {Quadrant::Q1, Quadrant::Q2, Quadrant::Q3, Quadrant::Q4}) {
    if (quadrant_set(ab).contains(q) && quadrant_set(bc).contains(q)) {
      shared = q;
      found = true;
      break;
    }
  }
  if (!found) throw InternalInvariantViolation("three_point_line: shared quadrant vanished");

  // Mirrors of the square move the shared quadrant to Q1. The family is
  // closed under both, so the separating line transfers back at the end.
  const bool mirror_x = (shared == Quadrant::Q2 || shared == Quadrant::Q3);  // x -> 1 - x
  const bool mirror_y = (shared == Quadrant::Q4 || shared == Quadrant::Q3);  // y -> 1 - y
  auto map_point = [&](Pt p) {
    if (mirror_x) p.x = Rat(1) - p.x;
    if (mirror_y) p.y = Rat(1) - p.y;
    return p;
  };
  const Pt pa = map_point(a);
  const Pt pb = map_point(b);
  const Pt pc = map_point(c);

  // Both steps now sit in the closed first quadrant, so the oriented forms
  // have u <= 0 <= v and the difference keeps |u| <= m and |v| <= n. It
  // vanishes at B and takes opposite signs at A and C by construction.
  const IntForm f = oriented_integer_form(pa, pb);
  const IntForm g = oriented_integer_form(pb, pc);
  if (sgn(f.u) > 0 || sgn(f.v) < 0 || sgn(g.u) > 0 || sgn(g.v) < 0)
    throw InternalInvariantViolation("three_point_line: oriented form left its half-plane");
  IntForm phi{f.u - g.u, f.v - g.v, f.w - g.w};
  if (mirror_x) {  // line image under x -> 1 - x
    phi.w -= phi.u;
    phi.u = -phi.u;
  }
  if (mirror_y) {  // line image under y -> 1 - y
    phi.w -= phi.v;
    phi.v = -phi.v;
  }
  if ((sgn(phi.u) == 0 && sgn(phi.v) == 0) || !phi.u.fits_slong_p() || !phi.v.fits_slong_p() ||
      !phi.w.fits_slong_p())
    throw InternalInvariantViolation("three_point_line: degenerate separating form");
  const PrimitiveLine result =
      PrimitiveLine::normalized(phi.u.get_si(), phi.v.get_si(), phi.w.get_si());

  if (!in_family(result, params))
    throw InternalInvariantViolation("three_point_line: separating line escaped the family");
  if (!result.eval(b).is_zero())
    throw InternalInvariantViolation("three_point_line: separating line misses B");
  if (result.eval(a).sign() * result.eval(c).sign() != -1)
    throw InternalInvariantViolation("three_point_line: A and C are not strictly separated");
  return result;
}

VerifyRun verify_all(const FareyParams& params) {
  const RectWindow square = RectWindow::unit_square();
  std::vector<PrimitiveLine> lines = enumerate_lines(params, square);
  Subdivision sub = build(lines, square);

  VerificationReport report;
  report.m = params.m;
  report.n = params.n;
  report.line_count = static_cast<long>(lines.size());
  report.cell_count = static_cast<long>(sub.cells.size());
  for (long i = 0; i < report.cell_count; ++i) check_cell(sub.cells[i], i, report);
  check_tiling_and_euler(sub, report);
  report.denominator_claim_exceptions = denominator_scan(sub.cells, params);
  return {std::move(lines), std::move(sub), std::move(report)};
}

std::vector<long> denominator_scan(const std::vector<Cell>& cells, const FareyParams& params) {
  std::vector<long> out;
  for (long i = 0; i < static_cast<long>(cells.size()); ++i) {
    if (cells[i].boundary.size() != 4) continue;
    for (const Pt& p : cells[i].boundary.vertices()) {
      if (p.x.den() <= params.m || p.y.den() <= params.n) {
        out.push_back(i);
        break;
      }
    }
  }
  return out;
}

VerifyRun window_scan(const FareyParams& params, const RectWindow& window) {
  std::vector<PrimitiveLine> lines = enumerate_lines(params, window);
  Subdivision sub = build(lines, window);

  VerificationReport report;
  report.m = params.m;
  report.n = params.n;
  report.line_count = static_cast<long>(lines.size());
  const std::vector<long> interior = interior_cell_ids(sub);
  report.cell_count = static_cast<long>(interior.size());
  for (long i : interior) check_cell(sub.cells[i], i, report);
  check_tiling_and_euler(sub, report);
  return {std::move(lines), std::move(sub), std::move(report)};
}

long sample_three_point_checks(const FareyParams& params, long count, std::uint64_t seed) {
  if (count < 0) throw PreconditionViolated("sample_three_point_checks: count must be >= 0");
  const RectWindow square = RectWindow::unit_square();
  const std::vector<PrimitiveLine> lines = enumerate_lines(params, square);
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<std::size_t> pick_line(0, lines.size() - 1);
  std::uniform_int_distribution<int> pick_step(0, 64);

  // Rejection sampling: most draws give a point B inside the square and
  // steps sharing a quadrant, so a small retry budget per check suffices.
  auto point_on = [&](const PrimitiveLine& line) {
    const auto seg = clip_to_rect(line, square);
    const Rat t(pick_step(rng), 64);
    return Pt{seg->first.x + t * (seg->second.x - seg->first.x),
              seg->first.y + t * (seg->second.y - seg->first.y)};
  };

  long done = 0;
  long attempts = 0;
  const long attempt_budget = 1000 * (count + 1);
  while (done < count) {
    if (++attempts > attempt_budget)
      throw InternalInvariantViolation("sample_three_point_checks: sampler starved");
    const PrimitiveLine& f = lines[pick_line(rng)];
    const PrimitiveLine& g = lines[pick_line(rng)];
    const mpz_class det = mpz_class(f.u) * g.v - mpz_class(g.u) * f.v;
    if (sgn(det) == 0) continue;  // same or parallel lines
    const Pt b{Rat(mpz_class(f.w) * g.v - mpz_class(g.w) * f.v, det),
               Rat(mpz_class(f.u) * g.w - mpz_class(g.u) * f.w, det)};
    if (!square.contains(b)) continue;
    if (!clip_to_rect(f, square) || !clip_to_rect(g, square)) continue;  // corner grazers
    const Pt a = point_on(f);
    const Pt c = point_on(g);
    if (a == b || c == b) continue;
    if (!shares_quadrant(b - a, c - b)) continue;
    three_point_line(a, b, c, params);
    ++done;
  }
  return done;
}

std::vector<long> interior_cell_ids(const Subdivision& s) {
  std::vector<long> out;
  for (long i = 0; i < static_cast<long>(s.cells.size()); ++i) {
    bool inside = true;
    for (const Pt& p : s.cells[i].boundary.vertices()) {
      if (!s.rect.strictly_contains(p)) {
        inside = false;
        break;
      }
    }
    if (inside) out.push_back(i);
  }
  return out;
}

}  // namespace farey
