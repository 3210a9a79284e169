#ifndef LINFISO_POINT_SET_IO_HPP
#define LINFISO_POINT_SET_IO_HPP

#include <filesystem>
#include <iosfwd>
#include <string>
#include <string_view>

#include "linfiso/point_set.hpp"

namespace linfiso {

// Text format:
//
//   domain K D
//   x1 x2 ... x(K+D)
//   ...
//
// One point per line, decimal integers separated by whitespace. Everything
// after '#' on a line is a comment; blank lines are ignored. Duplicate
// points are an error. Output lists points in canonical order, so it is
// byte-deterministic.

PointSet parse_point_set(std::istream& in);
PointSet parse_point_set(std::string_view text);
PointSet read_point_set_file(const std::filesystem::path& path);

void write_point_set(std::ostream& out, const PointSet& s);
std::string format_point_set(const PointSet& s);
void write_point_set_file(const std::filesystem::path& path, const PointSet& s);

} // namespace linfiso

#endif
