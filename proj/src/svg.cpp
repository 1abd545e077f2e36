#include "farey/svg.hpp"

#include <cstdio>
#include <string>

namespace farey {

namespace {

std::string fixed6(double value) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.6f", value);
  return buf;
}

}  // namespace

std::string render_svg(const Subdivision& s, const SvgOptions& options) {
  const double x0 = s.rect.x_min.to_double();
  const double x1 = s.rect.x_max.to_double();
  const double y0 = s.rect.y_min.to_double();
  const double y1 = s.rect.y_max.to_double();
  const double scale = options.size_px / (x1 - x0);
  const double width = options.size_px + 2.0 * options.margin_px;
  const double height = (y1 - y0) * scale + 2.0 * options.margin_px;

  auto px = [&](const Rat& x) { return options.margin_px + (x.to_double() - x0) * scale; };
  // SVG y grows downward; the window is drawn with y growing upward.
  auto py = [&](const Rat& y) { return options.margin_px + (y1 - y.to_double()) * scale; };

  std::string out;
  out += "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
  out += "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" + fixed6(width) + "\" height=\"" +
         fixed6(height) + "\" viewBox=\"0 0 " + fixed6(width) + " " + fixed6(height) + "\">\n";
  out += "<rect x=\"0\" y=\"0\" width=\"" + fixed6(width) + "\" height=\"" + fixed6(height) +
         "\" fill=\"#ffffff\"/>\n";

  for (const Cell& cell : s.cells) {
    const int nv = cell.boundary.size();
    const std::string& fill = nv == 3   ? options.triangle_fill
                              : nv == 4 ? options.quad_fill
                                        : options.other_fill;
    out += "<polygon points=\"";
    bool first = true;
    for (const Pt& p : cell.boundary.vertices()) {
      if (!first) out += " ";
      first = false;
      out += fixed6(px(p.x)) + "," + fixed6(py(p.y));
    }
    out += "\" fill=\"" + fill + "\" stroke=\"#1a1a1a\" stroke-width=\"" +
           fixed6(options.stroke_width) + "\"/>\n";
  }

  out += "<rect x=\"" + fixed6(px(s.rect.x_min)) + "\" y=\"" + fixed6(py(s.rect.y_max)) +
         "\" width=\"" + fixed6((x1 - x0) * scale) + "\" height=\"" + fixed6((y1 - y0) * scale) +
         "\" fill=\"none\" stroke=\"#000000\" stroke-width=\"" +
         fixed6(1.5 * options.stroke_width) + "\"/>\n";
  out += "</svg>\n";
  return out;
}

}  // namespace farey
