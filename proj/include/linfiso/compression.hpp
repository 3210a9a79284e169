#ifndef LINFISO_COMPRESSION_HPP
#define LINFISO_COMPRESSION_HPP

#include <cstddef>
#include <string>
#include <string_view>

#include "linfiso/point_set.hpp"

namespace linfiso {

enum class CompressionKind {
  // Replace each (k-1)-dimensional section fixing the coordinate by the
  // initial segment of the same size. Pure Z^k only.
  initial_segment_sections,
  // Replace each 1-D fiber by the centred segment {-a..a} or {-a..a+1}.
  central,
  // Replace each 1-D fiber by {0..a}.
  downward,
};

struct Compression {
  CompressionKind kind;
  std::size_t coordinate; // 0-based
};

std::string_view to_string(CompressionKind kind);
CompressionKind parse_compression_kind(std::string_view name);

/// Centred segment of the given size: the first `size` integers in the
/// order 0, 1, -1, 2, -2, ...
std::vector<Coord> centred_segment(std::size_t size);

PointSet i_compress(const PointSet& a, std::size_t i);
PointSet central_compress(const PointSet& s, std::size_t i);
PointSet downward_compress(const PointSet& s, std::size_t j);
PointSet apply_compression(const PointSet& s, const Compression& c);

/// Apply central compression to every integer-type coordinate and downward
/// compression to every natural-type one, round robin from coordinate 0,
/// until a whole pass changes nothing.
///
/// The result has the same size and no larger boundary, and is compressed
/// in every coordinate. It is not necessarily a boundary minimiser.
PointSet centralize(const PointSet& s);

bool is_centrally_compressed(const PointSet& s, std::size_t i);
bool is_downward_compressed(const PointSet& s, std::size_t j);
/// Centrally compressed in every integer-type coordinate and downward
/// compressed in every natural-type one.
bool is_compressed(const PointSet& s);
/// Every section fixing coordinate i is an initial segment. Pure Z^k only.
bool is_i_compressed(const PointSet& a, std::size_t i);

} // namespace linfiso

#endif
