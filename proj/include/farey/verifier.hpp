#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "farey/arrangement.hpp"

namespace farey {

enum class ShapeKind { Triangle, Quadrilateral };

/// Shape classification of a cell. For quadrilaterals, `offset` is a starting
/// index p such that edge p+i-1 -> p+i lies in quadrant Q_i for i = 1..4.
struct ShapeClass {
  ShapeKind kind = ShapeKind::Triangle;
  int offset = 0;

  friend bool operator==(const ShapeClass& a, const ShapeClass& b) = default;
};

struct Violation {
  long cell = -1;  // canonical cell index; -1 for aggregate properties
  std::string property;

  friend bool operator==(const Violation& a, const Violation& b) = default;
};

struct VerificationReport {
  int m = 0;
  int n = 0;
  long line_count = 0;
  long cell_count = 0;
  long triangle_count = 0;
  long quad_count = 0;
  std::vector<Violation> violations;
  std::vector<long> denominator_claim_exceptions;

  bool ok() const { return violations.empty(); }
};

/// A verification run bundling the inputs it was computed from, so callers
/// can inspect the cells behind the report.
struct VerifyRun {
  std::vector<PrimitiveLine> lines;
  Subdivision subdivision;
  VerificationReport report;
};

/// No two consecutive boundary edges of the cell share a quadrant.
bool check_T2(const Cell& cell);

/// Classifies a cell as Triangle or Quadrilateral and asserts the structural
/// characterization: a triangle has a consecutive edge pair in opposite
/// quadrants; a quadrilateral has none and admits a cyclic Q1,Q2,Q3,Q4 edge
/// pattern. Throws ShapeTheoremViolation when the vertex count is not 3 or 4
/// or the required pattern is absent.
ShapeClass classify(const Cell& cell);

/// Builds the separating line of the three-point configuration: given
/// distinct non-collinear A, B, C in the closed unit square with AB and BC
/// in a common quadrant and both lines (A,B), (B,C) in the family, returns a
/// family line through B with A and C strictly on opposite sides. Throws
/// PreconditionViolated naming the failed hypothesis.
PrimitiveLine three_point_line(const Pt& a, const Pt& b, const Pt& c, const FareyParams& params);

/// Enumerates the family over the unit square, builds the arrangement and
/// checks every bounded cell: vertex count in {3,4}, consecutive-edge
/// quadrant property, classification, plus the exact tiling and Euler
/// identities and the small-denominator scan. Violations are recorded, never
/// thrown.
VerifyRun verify_all(const FareyParams& params);

/// Quadrilateral cells owning a vertex (p/q, p'/q') in lowest terms with
/// q <= m or q' <= n. Expected empty; emptiness is reported, not assumed.
std::vector<long> denominator_scan(const std::vector<Cell>& cells, const FareyParams& params);

/// Same checks over an arbitrary rectangle, restricted to cells strictly
/// interior to it (cells touching the frame may be clipping artifacts).
/// Counts in the report cover interior cells only.
VerifyRun window_scan(const FareyParams& params, const RectWindow& window);

/// Cells of a window run that lie strictly inside the window.
std::vector<long> interior_cell_ids(const Subdivision& s);

/// Random spot checks of the three-point construction: draws `count`
/// admissible triples (A, B, C) with B on two crossing family lines, A and
/// C on one line each, steps sharing a quadrant, and runs three_point_line
/// on every triple (which throws on any postcondition failure). Returns the
/// number of checks performed, always `count`. Reproducible per seed.
long sample_three_point_checks(const FareyParams& params, long count, std::uint64_t seed);

}  // namespace farey
