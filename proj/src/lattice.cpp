#include "linfiso/lattice.hpp"

#include <algorithm>
#include <limits>
#include <unordered_set>

#include "linfiso/error.hpp"

namespace linfiso {

namespace {

// Odometer over the offsets {-1,0,1}^dim, skipping points that fall below 0
// in a natural-type coordinate.
template <typename Fn>
void visit_ball(const LatticePoint& x, const DomainSignature& sig, Fn&& fn) {
  const std::size_t dim = sig.dim();
  for (Coord c : x) {
    if (c == std::numeric_limits<Coord>::min() || c == std::numeric_limits<Coord>::max()) {
      throw OverflowError("neighbourhood of " + x.to_string() + " overflows");
    }
  }
  std::vector<int> offset(dim, -1);
  LatticePoint y = x;
  for (;;) {
    bool inside = true;
    for (std::size_t i = 0; i < dim; ++i) {
      y[i] = x[i] + offset[i];
      if (y[i] < 0 && sig.is_natural_coordinate(i)) inside = false;
    }
    if (inside) fn(y);
    std::size_t i = 0;
    while (i < dim && offset[i] == 1) offset[i++] = -1;
    if (i == dim) break;
    ++offset[i];
  }
}

} // namespace

void for_each_neighbor(const LatticePoint& x, const DomainSignature& sig,
                       const std::function<void(const LatticePoint&)>& fn) {
  check_point(x, sig);
  visit_ball(x, sig, fn);
}

PointSet neighbors(const LatticePoint& x, const DomainSignature& sig) {
  check_point(x, sig);
  std::vector<LatticePoint> out;
  visit_ball(x, sig, [&](const LatticePoint& y) { out.push_back(y); });
  return PointSet(sig, std::move(out));
}

namespace {

std::unordered_set<LatticePoint, LatticePointHash> boundary_points(const PointSet& s) {
  std::unordered_set<LatticePoint, LatticePointHash> out;
  std::size_t ball = 1;
  for (std::size_t i = 0; i < s.signature().dim(); ++i) ball *= 3;
  out.reserve(s.size() * ball);
  for (const auto& p : s) {
    visit_ball(p, s.signature(), [&](const LatticePoint& y) { out.insert(y); });
  }
  return out;
}

} // namespace

PointSet vertex_boundary(const PointSet& s) {
  auto pts = boundary_points(s);
  return PointSet(s.signature(), std::vector<LatticePoint>(pts.begin(), pts.end()));
}

std::size_t vertex_boundary_size(const PointSet& s) { return boundary_points(s).size(); }

PointSet project(const PointSet& s, std::span<const std::size_t> deleted) {
  const auto& sig = s.signature();
  std::vector<bool> drop(sig.dim(), false);
  for (std::size_t i : deleted) {
    if (i >= sig.dim()) {
      throw DomainError("projection index " + std::to_string(i + 1) + " out of range for " +
                        sig.to_string());
    }
    drop[i] = true;
  }
  std::size_t integer_kept = 0;
  std::size_t natural_kept = 0;
  for (std::size_t i = 0; i < sig.dim(); ++i) {
    if (drop[i]) continue;
    (sig.is_integer_coordinate(i) ? integer_kept : natural_kept)++;
  }
  const DomainSignature target = integer_kept + natural_kept == 0
                                     ? DomainSignature::zero_dimensional()
                                     : DomainSignature(integer_kept, natural_kept);
  std::vector<LatticePoint> out;
  out.reserve(s.size());
  for (const auto& p : s) {
    std::vector<Coord> kept;
    kept.reserve(integer_kept + natural_kept);
    for (std::size_t i = 0; i < sig.dim(); ++i) {
      if (!drop[i]) kept.push_back(p[i]);
    }
    out.emplace_back(std::move(kept));
  }
  return PointSet::merged(target, std::move(out));
}

std::vector<Coord> section(const PointSet& s, std::size_t i, const LatticePoint& p) {
  const auto& sig = s.signature();
  if (i >= sig.dim()) {
    throw DomainError("section index " + std::to_string(i + 1) + " out of range for " +
                      sig.to_string());
  }
  if (p.size() + 1 != sig.dim()) {
    throw DimensionMismatch("section base point " + p.to_string() + " needs " +
                            std::to_string(sig.dim() - 1) + " coordinates");
  }
  std::vector<Coord> out;
  for (const auto& x : s) {
    bool match = true;
    for (std::size_t c = 0, q = 0; c < x.size() && match; ++c) {
      if (c == i) continue;
      match = x[c] == p[q++];
    }
    if (match) out.push_back(x[i]);
  }
  std::sort(out.begin(), out.end());
  return out;
}

PointSet translate(const PointSet& s, const LatticePoint& t) {
  if (!s.signature().is_pure_integer()) {
    throw DomainError("translation is only an automorphism of Z^k");
  }
  check_point(t, s.signature());
  std::vector<LatticePoint> out;
  out.reserve(s.size());
  for (const auto& p : s) {
    LatticePoint q = p;
    for (std::size_t i = 0; i < q.size(); ++i) q[i] += t[i];
    out.push_back(std::move(q));
  }
  return PointSet(s.signature(), std::move(out));
}

} // namespace linfiso
