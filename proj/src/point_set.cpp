#include "linfiso/point_set.hpp"

#include <algorithm>
#include <numeric>

#include "linfiso/error.hpp"

namespace linfiso {

PointSet::PointSet(DomainSignature sig) : sig_(sig) {}

PointSet::PointSet(DomainSignature sig, std::vector<LatticePoint> points)
    : sig_(sig), points_(std::move(points)) {
  index_.reserve(points_.size());
  for (const auto& p : points_) {
    check_point(p, sig_);
    if (!index_.insert(p).second) {
      throw DomainError("duplicate point " + p.to_string());
    }
  }
  sort_canonically();
}

PointSet::PointSet(DomainSignature sig, std::vector<LatticePoint> points, Trusted)
    : sig_(sig), points_(std::move(points)) {
  sort_canonically();
}

PointSet PointSet::merged(DomainSignature sig, std::vector<LatticePoint> points) {
  std::unordered_set<LatticePoint, LatticePointHash> seen;
  seen.reserve(points.size());
  std::vector<LatticePoint> unique;
  unique.reserve(points.size());
  for (auto& p : points) {
    check_point(p, sig);
    if (seen.insert(p).second) unique.push_back(std::move(p));
  }
  return PointSet(sig, std::move(unique), Trusted{});
}

void PointSet::sort_canonically() {
  std::vector<OrderKey> keys;
  keys.reserve(points_.size());
  for (const auto& p : points_) keys.push_back(order_key(p, sig_));
  std::vector<std::size_t> perm(points_.size());
  std::iota(perm.begin(), perm.end(), std::size_t{0});
  std::sort(perm.begin(), perm.end(),
            [&](std::size_t a, std::size_t b) { return keys[a] < keys[b]; });
  std::vector<LatticePoint> sorted;
  sorted.reserve(points_.size());
  for (std::size_t i : perm) sorted.push_back(std::move(points_[i]));
  points_ = std::move(sorted);
  if (index_.empty() && !points_.empty()) index_.insert(points_.begin(), points_.end());
}

bool canonical_less(const PointSet& a, const PointSet& b) {
  if (a.size() != b.size()) return a.size() < b.size();
  for (std::size_t i = 0; i < a.size(); ++i) {
    auto c = compare_points(a[i], b[i], a.signature());
    if (c != 0) return c < 0;
  }
  return false;
}

bool is_subset(const PointSet& a, const PointSet& b) {
  if (!(a.signature() == b.signature())) {
    throw DimensionMismatch("subset test across domains " + a.signature().to_string() + " and " +
                            b.signature().to_string());
  }
  return std::all_of(a.begin(), a.end(), [&](const LatticePoint& p) { return b.contains(p); });
}

} // namespace linfiso
