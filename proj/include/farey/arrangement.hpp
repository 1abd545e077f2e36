#pragma once

#include <cstddef>
#include <vector>

#include "farey/cpd.hpp"
#include "farey/lines.hpp"

namespace farey {

/// Bounded face of the arrangement: the closure of one connected component
/// of the rectangle minus the lines. The boundary is counterclockwise with
/// the lexicographically smallest vertex first.
struct Cell {
  Cpd boundary;
  std::vector<PrimitiveLine> incident_lines;  // sorted, unique; frame-only edges add none
};

/// Exact planar subdivision of a rectangle induced by a line family.
/// Faces = cells plus the single outer face, so V - E + F = 2.
struct Subdivision {
  struct Edge {
    int a = 0;  // vertex indices, a < b
    int b = 0;
    std::vector<PrimitiveLine> lines;  // source lines through this edge
    bool on_frame = false;             // lies on the rectangle boundary
  };

  RectWindow rect;
  std::vector<Pt> vertices;  // deduplicated, exact
  std::vector<Edge> edges;
  std::vector<Cell> cells;  // canonical order (sorted by boundary vertex list)

  std::size_t face_count() const { return cells.size() + 1; }
};

/// Builds the exact subdivision: clips each line to the rectangle, splits all
/// segments at pairwise intersections, and extracts every bounded face as a
/// convex counterclockwise cell. Deterministic: equal inputs give identical
/// vertex, edge and cell lists.
Subdivision build(const std::vector<PrimitiveLine>& lines, const RectWindow& rect);

/// The bounded faces in canonical order.
const std::vector<Cell>& bounded_cells(const Subdivision& s);

/// Exact area of a cell (shoelace).
Rat area(const Cell& c);

/// Exact centroid (average of boundary vertices); strictly interior since
/// cells are convex.
Pt centroid(const Cell& c);

}  // namespace farey
