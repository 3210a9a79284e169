#ifndef LINFISO_ORDERING_HPP
#define LINFISO_ORDERING_HPP

#include <compare>
#include <cstddef>
#include <cstdint>
#include <vector>

#include "linfiso/types.hpp"

namespace linfiso {

class PointSet;

/// Position of a coordinate value in its base order. Integers are listed
/// 0, 1, -1, 2, -2, 3, ... and naturals 0, 1, 2, ...
using Rank = std::uint64_t;

/// Rank of an integer in the list 0, 1, -1, 2, -2, ...
/// Throws OverflowError for the one value whose rank does not fit.
Rank z_rank(Coord a);

/// Inverse of z_rank.
Coord z_from_rank(Rank r);

std::strong_ordering compare_z(Coord a, Coord b);

/// Immediate successor in 0, 1, -1, 2, -2, ...
Coord succ_z(Coord a);

/// The latest (plus) and earliest (minus) of {a - 1, a, a + 1} in the
/// integer base order. plus_minus(1) == {2, 0}.
struct PlusMinus {
  Coord plus;
  Coord minus;
  friend bool operator==(const PlusMinus&, const PlusMinus&) = default;
};
PlusMinus plus_minus(Coord a);

/// Rank of coordinate i of a point of sig: z_rank for integer-type
/// coordinates, the value itself for natural-type ones.
Rank coordinate_rank(const DomainSignature& sig, std::size_t i, Coord value);
Coord coordinate_from_rank(const DomainSignature& sig, std::size_t i, Rank r);

/// Per-coordinate ranks of p.
std::vector<Rank> rank_vector(const LatticePoint& p, const DomainSignature& sig);

/// Flattened sort key of the well-ordering.
///
/// The point order compares the largest coordinate rank first, then the
/// position where it first occurs (a later position is smaller), then
/// recurses on the point with that position deleted. The key lists those
/// decisions, so plain lexicographic comparison of two keys of the same
/// signature agrees with compare_points().
class OrderKey {
public:
  OrderKey() = default;
  explicit OrderKey(std::vector<Rank> rank_sequence)
      : rank_sequence_(std::move(rank_sequence)) {}

  const std::vector<Rank>& rank_sequence() const noexcept {
    return rank_sequence_;
  }

  friend auto operator<=>(const OrderKey&, const OrderKey&) = default;

private:
  std::vector<Rank> rank_sequence_;
};

OrderKey order_key(const LatticePoint& p, const DomainSignature& sig);

/// Compare two points of sig by the recursive well-ordering rule. For a
/// pure Z^k signature this is the integer well-ordering, for N^d the
/// natural one. A mixed signature uses the same rule on coordinate ranks.
std::strong_ordering compare_points(const LatticePoint& u, const LatticePoint& v,
                                    const DomainSignature& sig);

/// Immediate successor of x in the well-ordering of sig.
LatticePoint successor_point(const LatticePoint& x, const DomainSignature& sig);

/// The first n points of sig in order, starting from the origin.
std::vector<LatticePoint> first_points(const DomainSignature& sig, std::size_t n);

/// The initial segment of size n.
PointSet initial_segment(const DomainSignature& sig, std::size_t n);

} // namespace linfiso

#endif
