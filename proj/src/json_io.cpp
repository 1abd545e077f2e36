#include "farey/json_io.hpp"

#include <map>

#include "farey/errors.hpp"

namespace farey {

namespace {

ordered_json line_to_json(const PrimitiveLine& line) {
  return ordered_json{{"u", line.u}, {"v", line.v}, {"w", line.w}};
}

}  // namespace

ordered_json lines_to_json(const std::vector<PrimitiveLine>& lines) {
  ordered_json arr = ordered_json::array();
  for (const PrimitiveLine& line : lines) arr.push_back(line_to_json(line));
  return arr;
}

ordered_json subdivision_to_json(const Subdivision& s) {
  std::map<Pt, int> vertex_index;
  for (int i = 0; i < static_cast<int>(s.vertices.size()); ++i) vertex_index[s.vertices[i]] = i;

  ordered_json j;
  j["window"] = ordered_json{{"x_min", s.rect.x_min.str()},
                             {"x_max", s.rect.x_max.str()},
                             {"y_min", s.rect.y_min.str()},
                             {"y_max", s.rect.y_max.str()}};

  ordered_json verts = ordered_json::array();
  for (const Pt& p : s.vertices) verts.push_back(ordered_json::array({p.x.str(), p.y.str()}));
  j["vertices"] = std::move(verts);

  ordered_json edges = ordered_json::array();
  for (const Subdivision::Edge& e : s.edges) {
    ordered_json je;
    je["a"] = e.a;
    je["b"] = e.b;
    je["on_frame"] = e.on_frame;
    je["lines"] = lines_to_json(e.lines);
    edges.push_back(std::move(je));
  }
  j["edges"] = std::move(edges);

  ordered_json cells = ordered_json::array();
  for (const Cell& cell : s.cells) {
    ordered_json jc;
    ordered_json loop = ordered_json::array();
    for (const Pt& p : cell.boundary.vertices()) {
      auto it = vertex_index.find(p);
      if (it == vertex_index.end())
        throw InternalInvariantViolation("subdivision_to_json: cell vertex not in vertex list");
      loop.push_back(it->second);
    }
    jc["vertices"] = std::move(loop);
    jc["area"] = area(cell).str();
    jc["lines"] = lines_to_json(cell.incident_lines);
    cells.push_back(std::move(jc));
  }
  j["cells"] = std::move(cells);
  return j;
}

ordered_json report_to_json(const VerificationReport& report) {
  ordered_json j;
  j["m"] = report.m;
  j["n"] = report.n;
  j["line_count"] = report.line_count;
  j["cell_count"] = report.cell_count;
  j["triangle_count"] = report.triangle_count;
  j["quad_count"] = report.quad_count;
  j["ok"] = report.ok();
  ordered_json violations = ordered_json::array();
  for (const Violation& v : report.violations)
    violations.push_back(ordered_json{{"cell", v.cell}, {"property", v.property}});
  j["violations"] = std::move(violations);
  j["denominator_claim_exceptions"] = report.denominator_claim_exceptions;
  return j;
}

std::string dump_json(const ordered_json& j) { return j.dump(2) + "\n"; }

}  // namespace farey
