#include "linfiso/svg.hpp"

#include <algorithm>
#include <limits>
#include <sstream>

#include "linfiso/error.hpp"
#include "linfiso/lattice.hpp"

namespace linfiso {

std::string render_svg(const PointSet& s, const SvgStyle& style) {
  if (s.signature().dim() != 2) {
    throw DimensionMismatch("rendering needs a two-dimensional domain, got " +
                            s.signature().to_string());
  }
  if (style.cell_size <= 0) throw DomainError("cell size must be positive");

  const PointSet boundary = vertex_boundary(s);
  Coord x_lo = 0, x_hi = 0, y_lo = 0, y_hi = 0;
  if (!boundary.empty()) {
    x_lo = y_lo = std::numeric_limits<Coord>::max();
    x_hi = y_hi = std::numeric_limits<Coord>::min();
    for (const auto& p : boundary) {
      x_lo = std::min(x_lo, p[0]);
      x_hi = std::max(x_hi, p[0]);
      y_lo = std::min(y_lo, p[1]);
      y_hi = std::max(y_hi, p[1]);
    }
  }
  const long long cell = style.cell_size;
  const long long columns = x_hi - x_lo + 1;
  const long long rows = y_hi - y_lo + 1;
  const long long width = columns * cell;
  const long long height = rows * cell;
  // Centres sit at half-cell offsets; work in half-pixels to stay integral.
  auto centre_x2 = [&](Coord x) { return (x - x_lo) * 2 * cell + cell; };
  auto centre_y2 = [&](Coord y) { return (y_hi - y) * 2 * cell + cell; };
  auto half = [](long long v2) {
    std::string out = std::to_string(v2 / 2);
    if (v2 % 2) out += ".5";
    return out;
  };
  const long long radius2 = std::max<long long>(1, (cell * 2) * 3 / 10);

  std::ostringstream os;
  os << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << width << "\" height=\"" << height
     << "\" viewBox=\"0 0 " << width << ' ' << height << "\">\n";
  os << "<g class=\"grid\" stroke=\"" << style.grid_color << "\" stroke-width=\"1\">\n";
  for (long long c = 0; c < columns; ++c) {
    const auto x = half(c * 2 * cell + cell);
    os << "<line x1=\"" << x << "\" y1=\"0\" x2=\"" << x << "\" y2=\"" << height << "\"/>\n";
  }
  for (long long r = 0; r < rows; ++r) {
    const auto y = half(r * 2 * cell + cell);
    os << "<line x1=\"0\" y1=\"" << y << "\" x2=\"" << width << "\" y2=\"" << y << "\"/>\n";
  }
  os << "</g>\n";
  auto dot = [&](const LatticePoint& p, const char* cls, const std::string& colour) {
    os << "<circle class=\"" << cls << "\" cx=\"" << half(centre_x2(p[0])) << "\" cy=\""
       << half(centre_y2(p[1])) << "\" r=\"" << half(radius2) << "\" fill=\"" << colour
       << "\"/>\n";
  };
  for (const auto& p : boundary) {
    if (!s.contains(p)) dot(p, "boundary", style.boundary_color);
  }
  for (const auto& p : s) dot(p, "set", style.set_color);
  os << "</svg>\n";
  return os.str();
}

} // namespace linfiso
