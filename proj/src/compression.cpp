#include "linfiso/compression.hpp"

#include <algorithm>
#include <map>
#include <unordered_map>

#include "linfiso/error.hpp"

namespace linfiso {

namespace {

using FiberMap = std::unordered_map<LatticePoint, std::vector<Coord>, LatticePointHash>;

// 1-D fibers along coordinate i, keyed by the point with i deleted.
FiberMap fibers(const PointSet& s, std::size_t i) {
  FiberMap out;
  for (const auto& p : s) out[p.without(i)].push_back(p[i]);
  return out;
}

void require_coordinate(const DomainSignature& sig, std::size_t i) {
  if (i >= sig.dim()) {
    throw DomainError("coordinate " + std::to_string(i + 1) + " out of range for " +
                      sig.to_string());
  }
}

void require_integer_coordinate(const DomainSignature& sig, std::size_t i) {
  require_coordinate(sig, i);
  if (!sig.is_integer_coordinate(i)) {
    throw DomainError("coordinate " + std::to_string(i + 1) + " of " + sig.to_string() +
                      " is natural-type; central compression needs an integer-type coordinate");
  }
}

void require_natural_coordinate(const DomainSignature& sig, std::size_t i) {
  require_coordinate(sig, i);
  if (!sig.is_natural_coordinate(i)) {
    throw DomainError("coordinate " + std::to_string(i + 1) + " of " + sig.to_string() +
                      " is integer-type; downward compression needs a natural-type coordinate");
  }
}

void require_section_domain(const DomainSignature& sig, std::size_t i) {
  if (!sig.is_pure_integer()) {
    throw DomainError("initial-segment section compression needs a pure Z^k domain, got " +
                      sig.to_string());
  }
  if (sig.dim() < 2) throw DomainError("initial-segment section compression needs k >= 2");
  require_coordinate(sig, i);
}

std::vector<Coord> downward_segment(std::size_t size) {
  std::vector<Coord> out(size);
  for (std::size_t r = 0; r < size; ++r) out[r] = static_cast<Coord>(r);
  return out;
}

template <typename SegmentFn>
PointSet rebuild_fibers(const PointSet& s, std::size_t i, SegmentFn segment) {
  std::vector<LatticePoint> out;
  out.reserve(s.size());
  for (const auto& [rest, values] : fibers(s, i)) {
    for (Coord v : segment(values.size())) out.push_back(rest.with_inserted(i, v));
  }
  return PointSet(s.signature(), std::move(out));
}

template <typename SegmentFn>
bool fibers_match(const PointSet& s, std::size_t i, SegmentFn segment) {
  for (auto& [rest, values] : fibers(s, i)) {
    auto expected = segment(values.size());
    std::sort(values.begin(), values.end());
    std::sort(expected.begin(), expected.end());
    if (values != expected) return false;
  }
  return true;
}

// Sections fixing coordinate i, keyed by the fixed value.
std::map<Coord, std::vector<LatticePoint>> sections_by_value(const PointSet& a, std::size_t i) {
  std::map<Coord, std::vector<LatticePoint>> out;
  for (const auto& p : a) out[p[i]].push_back(p.without(i));
  return out;
}

} // namespace

std::string_view to_string(CompressionKind kind) {
  switch (kind) {
  case CompressionKind::initial_segment_sections: return "initial-segment-sections";
  case CompressionKind::central: return "central";
  case CompressionKind::downward: return "downward";
  }
  return "?";
}

CompressionKind parse_compression_kind(std::string_view name) {
  for (auto k : {CompressionKind::initial_segment_sections, CompressionKind::central,
                 CompressionKind::downward}) {
    if (name == to_string(k)) return k;
  }
  throw DomainError("unknown compression kind '" + std::string(name) + "'");
}

std::vector<Coord> centred_segment(std::size_t size) {
  std::vector<Coord> out(size);
  for (std::size_t r = 0; r < size; ++r) out[r] = z_from_rank(r);
  return out;
}

PointSet i_compress(const PointSet& a, std::size_t i) {
  const auto& sig = a.signature();
  require_section_domain(sig, i);
  const DomainSignature lower(sig.dim() - 1, 0);
  std::vector<LatticePoint> out;
  out.reserve(a.size());
  for (const auto& [value, section] : sections_by_value(a, i)) {
    for (const auto& q : first_points(lower, section.size())) {
      out.push_back(q.with_inserted(i, value));
    }
  }
  return PointSet(sig, std::move(out));
}

PointSet central_compress(const PointSet& s, std::size_t i) {
  require_integer_coordinate(s.signature(), i);
  return rebuild_fibers(s, i, centred_segment);
}

PointSet downward_compress(const PointSet& s, std::size_t j) {
  require_natural_coordinate(s.signature(), j);
  return rebuild_fibers(s, j, downward_segment);
}

PointSet apply_compression(const PointSet& s, const Compression& c) {
  switch (c.kind) {
  case CompressionKind::initial_segment_sections: return i_compress(s, c.coordinate);
  case CompressionKind::central: return central_compress(s, c.coordinate);
  case CompressionKind::downward: return downward_compress(s, c.coordinate);
  }
  throw DomainError("unknown compression kind");
}

PointSet centralize(const PointSet& s) {
  const auto& sig = s.signature();
  PointSet current = s;
  bool changed = true;
  while (changed) {
    changed = false;
    for (std::size_t c = 0; c < sig.dim(); ++c) {
      PointSet next = sig.is_integer_coordinate(c) ? central_compress(current, c)
                                                   : downward_compress(current, c);
      if (!(next == current)) {
        current = std::move(next);
        changed = true;
      }
    }
  }
  return current;
}

bool is_centrally_compressed(const PointSet& s, std::size_t i) {
  require_integer_coordinate(s.signature(), i);
  return fibers_match(s, i, centred_segment);
}

bool is_downward_compressed(const PointSet& s, std::size_t j) {
  require_natural_coordinate(s.signature(), j);
  return fibers_match(s, j, downward_segment);
}

bool is_compressed(const PointSet& s) {
  const auto& sig = s.signature();
  for (std::size_t c = 0; c < sig.dim(); ++c) {
    bool ok = sig.is_integer_coordinate(c) ? is_centrally_compressed(s, c)
                                           : is_downward_compressed(s, c);
    if (!ok) return false;
  }
  return true;
}

bool is_i_compressed(const PointSet& a, std::size_t i) {
  const auto& sig = a.signature();
  require_section_domain(sig, i);
  const DomainSignature lower(sig.dim() - 1, 0);
  for (const auto& [value, section] : sections_by_value(a, i)) {
    PointSet actual(lower, section);
    if (!(actual == initial_segment(lower, section.size()))) return false;
  }
  return true;
}

} // namespace linfiso
