#include "farey/arrangement.hpp"

#include <algorithm>
#include <map>
#include <optional>
#include <utility>

namespace farey {

namespace {

// Supporting line of a segment as an exact integer equation iu*x + iv*y = iw.
// Rectangle sides get one too (x = p/q becomes q*x = p), so every pairwise
// intersection reduces to integer cross products.
struct IntForm {
  mpz_class u, v, w;
};

struct Segment {
  Pt a, b;  // a < b lexicographically
  IntForm form;
  std::optional<PrimitiveLine> line;  // empty for pure frame sides
  bool on_frame = false;
  std::vector<int> split_ids;  // vertex ids on this segment, incl. endpoints
};

IntForm form_of_line(const PrimitiveLine& l) {
  return {mpz_class(static_cast<long>(l.u)), mpz_class(static_cast<long>(l.v)),
          mpz_class(static_cast<long>(l.w))};
}

// Vertical side x = c as (den, 0, num); horizontal side y = c as (0, den, num).
IntForm form_of_vertical(const Rat& c) { return {c.den(), mpz_class(0), c.num()}; }
IntForm form_of_horizontal(const Rat& c) { return {mpz_class(0), c.den(), c.num()}; }

bool same_direction_key(const IntForm& f, const IntForm& g) {
  return f.u * g.v - g.u * f.v == 0;
}

// Intersection point of two non-parallel integer forms.
Pt intersect(const IntForm& f, const IntForm& g) {
  const mpz_class det = f.u * g.v - g.u * f.v;
  return {Rat(f.w * g.v - g.w * f.v, det), Rat(f.u * g.w - g.u * f.w, det)};
}

bool in_box(const Segment& s, const Pt& p) {
  const auto& [lo, hi] = std::minmax(s.a.x, s.b.x);
  if (p.x < lo || hi < p.x) return false;
  const auto& [lo_y, hi_y] = std::minmax(s.a.y, s.b.y);
  return !(p.y < lo_y || hi_y < p.y);
}

// CCW angular order of nonzero directions, starting at the +x axis.
bool angle_less(const Vec2& p, const Vec2& q) {
  auto half = [](const Vec2& d) {
    const int sy = d.dy.sign();
    return (sy > 0 || (sy == 0 && d.dx.sign() > 0)) ? 0 : 1;
  };
  const int hp = half(p);
  const int hq = half(q);
  if (hp != hq) return hp < hq;
  return det2(p, q).sign() > 0;
}

}  // namespace

Subdivision build(const std::vector<PrimitiveLine>& lines, const RectWindow& rect) {
  // -- 1. Segments: clipped source lines plus the four frame sides,
  //       merged when a source line coincides with a side.
  std::vector<Segment> segs;
  std::map<std::pair<Pt, Pt>, int> seg_index;
  auto add_segment = [&](const Pt& a, const Pt& b, IntForm form,
                         std::optional<PrimitiveLine> line, bool frame) {
    auto key = std::make_pair(std::min(a, b), std::max(a, b));
    auto [it, inserted] = seg_index.try_emplace(key, static_cast<int>(segs.size()));
    if (inserted) {
      segs.push_back({key.first, key.second, std::move(form), line, frame, {}});
    } else {
      Segment& s = segs[it->second];
      if (line) s.line = line;
      s.on_frame = s.on_frame || frame;
    }
  };

  const auto corners = rect.corners();
  add_segment(corners[0], corners[1], form_of_horizontal(rect.y_min), std::nullopt, true);
  add_segment(corners[3], corners[2], form_of_horizontal(rect.y_max), std::nullopt, true);
  add_segment(corners[0], corners[3], form_of_vertical(rect.x_min), std::nullopt, true);
  add_segment(corners[1], corners[2], form_of_vertical(rect.x_max), std::nullopt, true);

  std::vector<PrimitiveLine> sorted_lines = lines;
  std::sort(sorted_lines.begin(), sorted_lines.end());
  sorted_lines.erase(std::unique(sorted_lines.begin(), sorted_lines.end()), sorted_lines.end());
  for (const PrimitiveLine& l : sorted_lines) {
    if (auto clip = clip_to_rect(l, rect)) {
      add_segment(clip->first, clip->second, form_of_line(l), l, false);
    }
  }

  // -- 2. Vertices at all pairwise segment intersections. Segments through a
  //       common point are pairwise non-parallel, so every incidence shows up.
  std::map<Pt, int> vertex_ids;
  std::vector<Pt> vertices;
  auto vertex_id = [&](const Pt& p) {
    auto [it, inserted] = vertex_ids.try_emplace(p, static_cast<int>(vertices.size()));
    if (inserted) vertices.push_back(p);
    return it->second;
  };

  for (std::size_t i = 0; i < segs.size(); ++i) {
    for (std::size_t j = i + 1; j < segs.size(); ++j) {
      if (same_direction_key(segs[i].form, segs[j].form)) continue;
      const Pt p = intersect(segs[i].form, segs[j].form);
      if (!in_box(segs[i], p) || !in_box(segs[j], p)) continue;
      const int id = vertex_id(p);
      segs[i].split_ids.push_back(id);
      segs[j].split_ids.push_back(id);
    }
  }

  // -- 3. Edges: each segment split at its vertices into maximal pieces.
  struct EdgeAcc {
    std::vector<PrimitiveLine> lines;
    bool on_frame = false;
  };
  std::map<std::pair<int, int>, EdgeAcc> edge_acc;
  for (Segment& s : segs) {
    auto along = [&](int lhs, int rhs) {
      const Pt& p = vertices[lhs];
      const Pt& q = vertices[rhs];
      if (s.a.x != s.b.x) return (s.a.x < s.b.x) ? p.x < q.x : q.x < p.x;
      return (s.a.y < s.b.y) ? p.y < q.y : q.y < p.y;
    };
    std::sort(s.split_ids.begin(), s.split_ids.end(), along);
    s.split_ids.erase(std::unique(s.split_ids.begin(), s.split_ids.end()), s.split_ids.end());
    for (std::size_t k = 0; k + 1 < s.split_ids.size(); ++k) {
      auto key = std::minmax(s.split_ids[k], s.split_ids[k + 1]);
      EdgeAcc& acc = edge_acc[{key.first, key.second}];
      if (s.line) acc.lines.push_back(*s.line);
      acc.on_frame = acc.on_frame || s.on_frame;
    }
  }

  Subdivision out{rect, std::move(vertices), {}, {}};
  std::map<std::pair<int, int>, int> edge_of;  // undirected (a,b) -> edge index
  for (auto& [key, acc] : edge_acc) {
    std::sort(acc.lines.begin(), acc.lines.end());
    acc.lines.erase(std::unique(acc.lines.begin(), acc.lines.end()), acc.lines.end());
    edge_of[key] = static_cast<int>(out.edges.size());
    out.edges.push_back({key.first, key.second, std::move(acc.lines), acc.on_frame});
  }

  // -- 4. Half-edge structure. Outgoing edges are in CCW angular order around
  //       each vertex; the successor of a half-edge is the CCW predecessor of
  //       its twin at the head, which walks every face with its interior on
  //       the left: bounded faces come out counterclockwise, the outer face
  //       clockwise.
  const int num_vertices = static_cast<int>(out.vertices.size());
  std::vector<std::vector<int>> outgoing(num_vertices);  // directed edge ids
  const int num_directed = 2 * static_cast<int>(out.edges.size());
  auto src = [&](int d) { return d % 2 == 0 ? out.edges[d / 2].a : out.edges[d / 2].b; };
  auto dst = [&](int d) { return d % 2 == 0 ? out.edges[d / 2].b : out.edges[d / 2].a; };
  for (int d = 0; d < num_directed; ++d) outgoing[src(d)].push_back(d);

  std::vector<int> pos(num_directed);  // index of d within outgoing[src(d)]
  for (int vtx = 0; vtx < num_vertices; ++vtx) {
    auto& out_edges = outgoing[vtx];
    std::sort(out_edges.begin(), out_edges.end(), [&](int d1, int d2) {
      return angle_less(out.vertices[dst(d1)] - out.vertices[vtx],
                        out.vertices[dst(d2)] - out.vertices[vtx]);
    });
    for (std::size_t k = 0; k < out_edges.size(); ++k) pos[out_edges[k]] = static_cast<int>(k);
  }
  auto next = [&](int d) {
    const int twin = d ^ 1;
    const auto& ring = outgoing[src(twin)];
    const int deg = static_cast<int>(ring.size());
    return ring[(pos[twin] + deg - 1) % deg];
  };

  // -- 5. Face walks.
  std::vector<char> visited(num_directed, 0);
  bool outer_seen = false;
  for (int d0 = 0; d0 < num_directed; ++d0) {
    if (visited[d0]) continue;
    std::vector<int> cycle;
    int d = d0;
    do {
      visited[d] = 1;
      cycle.push_back(src(d));
      d = next(d);
    } while (d != d0);

    Rat twice_area;
    const std::size_t n = cycle.size();
    for (std::size_t k = 0; k < n; ++k) {
      const Pt& p = out.vertices[cycle[k]];
      const Pt& q = out.vertices[cycle[(k + 1) % n]];
      twice_area += p.x * q.y - q.x * p.y;
    }
    if (twice_area.sign() < 0) {
      if (outer_seen) throw InternalInvariantViolation("build: multiple outer faces");
      outer_seen = true;
      continue;
    }
    if (twice_area.sign() == 0)
      throw InternalInvariantViolation("build: face with zero area");

    // Canonical rotation: lexicographically smallest vertex first.
    std::size_t min_at = 0;
    for (std::size_t k = 1; k < n; ++k)
      if (out.vertices[cycle[k]] < out.vertices[cycle[min_at]]) min_at = k;
    std::rotate(cycle.begin(), cycle.begin() + min_at, cycle.end());

    std::vector<Pt> boundary;
    boundary.reserve(n);
    std::vector<PrimitiveLine> incident;
    for (std::size_t k = 0; k < n; ++k) {
      boundary.push_back(out.vertices[cycle[k]]);
      auto key = std::minmax(cycle[k], cycle[(k + 1) % n]);
      const Subdivision::Edge& e = out.edges[edge_of.at({key.first, key.second})];
      incident.insert(incident.end(), e.lines.begin(), e.lines.end());
    }
    std::sort(incident.begin(), incident.end());
    incident.erase(std::unique(incident.begin(), incident.end()), incident.end());

    try {
      out.cells.push_back({Cpd::validate(std::move(boundary)), std::move(incident)});
    } catch (const NotConvexDirect&) {
      throw InternalInvariantViolation("build: bounded face is not strictly convex CCW");
    }
  }
  if (!outer_seen && !out.edges.empty())
    throw InternalInvariantViolation("build: no outer face found");

  std::sort(out.cells.begin(), out.cells.end(), [](const Cell& c1, const Cell& c2) {
    return std::lexicographical_compare(c1.boundary.vertices().begin(),
                                        c1.boundary.vertices().end(),
                                        c2.boundary.vertices().begin(),
                                        c2.boundary.vertices().end());
  });
  return out;
}

const std::vector<Cell>& bounded_cells(const Subdivision& s) { return s.cells; }

Rat area(const Cell& c) {
  Rat twice;
  const auto& pts = c.boundary.vertices();
  const std::size_t n = pts.size();
  for (std::size_t k = 0; k < n; ++k) {
    const Pt& p = pts[k];
    const Pt& q = pts[(k + 1) % n];
    twice += p.x * q.y - q.x * p.y;
  }
  return twice / Rat(2);
}

Pt centroid(const Cell& c) {
  Rat sx, sy;
  for (const Pt& p : c.boundary.vertices()) {
    sx += p.x;
    sy += p.y;
  }
  const Rat n(static_cast<std::int64_t>(c.boundary.size()));
  return {sx / n, sy / n};
}

}  // namespace farey
