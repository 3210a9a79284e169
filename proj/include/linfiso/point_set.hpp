#ifndef LINFISO_POINT_SET_HPP
#define LINFISO_POINT_SET_HPP

#include <cstddef>
#include <span>
#include <unordered_set>
#include <vector>

#include "linfiso/ordering.hpp"
#include "linfiso/types.hpp"

namespace linfiso {

/// A finite duplicate-free set of points of one signature.
///
/// Points are kept sorted by the well-ordering of the signature (see
/// order_key()), with a hash index for membership. Equal sets therefore
/// iterate identically. Instances are immutable after construction.
class PointSet {
public:
  explicit PointSet(DomainSignature sig);

  /// Throws DomainError on a duplicate point, DimensionMismatch or
  /// DomainError on a point outside the domain.
  PointSet(DomainSignature sig, std::vector<LatticePoint> points);

  /// Like the constructor but silently merges duplicates.
  static PointSet merged(DomainSignature sig, std::vector<LatticePoint> points);

  const DomainSignature& signature() const noexcept { return sig_; }
  std::size_t size() const noexcept { return points_.size(); }
  bool empty() const noexcept { return points_.empty(); }

  std::span<const LatticePoint> points() const noexcept { return points_; }
  auto begin() const noexcept { return points_.begin(); }
  auto end() const noexcept { return points_.end(); }
  const LatticePoint& operator[](std::size_t i) const { return points_[i]; }

  bool contains(const LatticePoint& p) const { return index_.count(p) != 0; }

  friend bool operator==(const PointSet& a, const PointSet& b) {
    return a.sig_ == b.sig_ && a.points_ == b.points_;
  }

private:
  struct Trusted {};
  PointSet(DomainSignature sig, std::vector<LatticePoint> points, Trusted);

  void sort_canonically();

  DomainSignature sig_;
  std::vector<LatticePoint> points_;
  std::unordered_set<LatticePoint, LatticePointHash> index_;
};

/// Total order on sets of one signature: by size, then point by point in
/// the well-ordering. Used to pick orbit representatives.
bool canonical_less(const PointSet& a, const PointSet& b);

bool is_subset(const PointSet& a, const PointSet& b);

} // namespace linfiso

#endif
