#include "linfiso/point_set_io.hpp"

#include <charconv>
#include <fstream>
#include <optional>
#include <sstream>
#include <unordered_set>

#include "linfiso/error.hpp"

namespace linfiso {

namespace {

std::string_view strip_comment(std::string_view line) {
  auto hash = line.find('#');
  if (hash != std::string_view::npos) line = line.substr(0, hash);
  return line;
}

std::vector<std::string_view> split_fields(std::string_view line) {
  std::vector<std::string_view> out;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && (line[i] == ' ' || line[i] == '\t' || line[i] == '\r')) ++i;
    std::size_t j = i;
    while (j < line.size() && line[j] != ' ' && line[j] != '\t' && line[j] != '\r') ++j;
    if (j > i) out.push_back(line.substr(i, j - i));
    i = j;
  }
  return out;
}

template <typename T>
T parse_number(std::string_view field, std::size_t line_no) {
  T value{};
  const char* first = field.data();
  const char* last = field.data() + field.size();
  if (!field.empty() && field.front() == '+') ++first;
  auto [ptr, ec] = std::from_chars(first, last, value);
  if (ec != std::errc() || ptr != last) {
    throw ParseError("line " + std::to_string(line_no) + ": bad number '" + std::string(field) +
                     "'");
  }
  return value;
}

} // namespace

PointSet parse_point_set(std::istream& in) {
  std::string raw;
  std::size_t line_no = 0;
  std::optional<DomainSignature> sig;
  std::vector<LatticePoint> points;
  std::unordered_set<LatticePoint, LatticePointHash> seen;
  while (std::getline(in, raw)) {
    ++line_no;
    auto fields = split_fields(strip_comment(raw));
    if (fields.empty()) continue;
    if (!sig) {
      if (fields.size() != 3 || fields[0] != "domain") {
        throw ParseError("line " + std::to_string(line_no) + ": expected 'domain K D' header");
      }
      auto k = parse_number<std::size_t>(fields[1], line_no);
      auto d = parse_number<std::size_t>(fields[2], line_no);
      if (k + d == 0) throw ParseError("line " + std::to_string(line_no) + ": K + D must be >= 1");
      sig.emplace(k, d);
      continue;
    }
    if (fields.size() != sig->dim()) {
      throw ParseError("line " + std::to_string(line_no) + ": expected " +
                       std::to_string(sig->dim()) + " coordinates, got " +
                       std::to_string(fields.size()));
    }
    std::vector<Coord> coords;
    coords.reserve(fields.size());
    for (auto f : fields) coords.push_back(parse_number<Coord>(f, line_no));
    LatticePoint p(std::move(coords));
    try {
      check_point(p, *sig);
    } catch (const Error& e) {
      throw ParseError("line " + std::to_string(line_no) + ": " + e.what());
    }
    if (!seen.insert(p).second) {
      throw ParseError("line " + std::to_string(line_no) + ": duplicate point " + p.to_string());
    }
    points.push_back(std::move(p));
  }
  if (!sig) throw ParseError("missing 'domain K D' header");
  return PointSet(*sig, std::move(points));
}

PointSet parse_point_set(std::string_view text) {
  std::istringstream in{std::string(text)};
  return parse_point_set(in);
}

PointSet read_point_set_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open " + path.string());
  return parse_point_set(in);
}

void write_point_set(std::ostream& out, const PointSet& s) {
  out << "domain " << s.signature().integer_dims() << ' ' << s.signature().natural_dims()
      << '\n';
  for (const auto& p : s) {
    for (std::size_t i = 0; i < p.size(); ++i) {
      if (i) out << ' ';
      out << p[i];
    }
    out << '\n';
  }
}

std::string format_point_set(const PointSet& s) {
  std::ostringstream os;
  write_point_set(os, s);
  return os.str();
}

void write_point_set_file(const std::filesystem::path& path, const PointSet& s) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw ParseError("cannot write " + path.string());
  write_point_set(out, s);
}

} // namespace linfiso
