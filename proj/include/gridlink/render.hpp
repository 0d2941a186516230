#pragma once

#include <string>

#include "gridlink/grid.hpp"

namespace gridlink {

inline constexpr int kCellSize = 40;

// Pixel centre of grid point (column, row); row 1 sits at the bottom.
struct PixelPoint {
  int x = 0;
  int y = 0;
};
PixelPoint to_pixel(const GridLink& link, GridPoint p);

// SVG drawing in grid-diagram style: grid lines, one stroke colour per
// component, an arrowhead at the middle of every edge, the horizontal
// (under) strand broken wherever a vertical edge crosses it, axis labels
// 1..2n and a caption "lk = <value>". Gaps are tagged class="gap inter" or
// class="gap self" depending on whether the two strands belong to
// different components.
std::string render_svg(const GridLink& link);

// Writes render_svg(link) to path; throws Error{io_error}.
void write_svg(const GridLink& link, const std::string& path);

}  // namespace gridlink
