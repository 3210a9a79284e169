#ifndef LINFISO_SVG_HPP
#define LINFISO_SVG_HPP

#include <string>

#include "linfiso/point_set.hpp"

namespace linfiso {

struct SvgStyle {
  int cell_size = 24; // pixels per lattice step
  std::string set_color = "#1f4fd8";
  std::string boundary_color = "#d62728";
  std::string grid_color = "#d0d0d0";
};

/// Draw a 2-D set on its integer grid: members of S as dots in set_color,
/// points of boundary(S) \ S in boundary_color. The first coordinate runs
/// left to right, the second bottom to top. Output depends only on the set
/// and the style. Throws DimensionMismatch unless the signature is
/// two-dimensional.
std::string render_svg(const PointSet& s, const SvgStyle& style = {});

} // namespace linfiso

#endif
