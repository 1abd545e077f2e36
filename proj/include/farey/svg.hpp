#pragma once

#include <string>

#include "farey/arrangement.hpp"

namespace farey {

struct SvgOptions {
  int size_px = 800;          // drawing width of the window, in pixels
  double margin_px = 20.0;    // whitespace around the drawing
  double stroke_width = 1.0;  // cell outline width
  std::string triangle_fill = "#f2b134";
  std::string quad_fill = "#5b8bd0";
  std::string other_fill = "#cccccc";  // cells that are neither (window runs)
};

/// Renders the cells as filled polygons, colored by vertex count, with the
/// window frame on top. Coordinates are converted to double only here, for
/// display; output is byte-for-byte deterministic for equal inputs.
std::string render_svg(const Subdivision& s, const SvgOptions& options = {});

}  // namespace farey
