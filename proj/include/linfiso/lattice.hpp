#ifndef LINFISO_LATTICE_HPP
#define LINFISO_LATTICE_HPP

#include <cstddef>
#include <functional>
#include <span>
#include <vector>

#include "linfiso/point_set.hpp"
#include "linfiso/types.hpp"

namespace linfiso {

/// Calls fn for every x + e, e in {-1,0,1}^dim, that stays in the domain
/// (natural-type coordinates are clipped at 0). Includes x itself.
void for_each_neighbor(const LatticePoint& x, const DomainSignature& sig,
                       const std::function<void(const LatticePoint&)>& fn);

/// Closed l-infinity unit ball around x, intersected with the domain.
PointSet neighbors(const LatticePoint& x, const DomainSignature& sig);

/// All points within l-infinity distance 1 of S, S included. Computed in
/// the unbounded lattice; the boundary of the empty set is empty.
PointSet vertex_boundary(const PointSet& s);

/// |vertex_boundary(s)| without sorting the result.
std::size_t vertex_boundary_size(const PointSet& s);

/// Delete the coordinates listed in `deleted` (0-based, any order) from every
/// point and merge duplicates. The result's signature loses those
/// coordinates; deleting all of them from a nonempty set leaves the single
/// zero-dimensional point.
PointSet project(const PointSet& s, std::span<const std::size_t> deleted);

/// {x : (p, x -> i) in S}, ascending. p has one coordinate fewer than S.
std::vector<Coord> section(const PointSet& s, std::size_t i, const LatticePoint& p);

/// S + t. Only for pure Z^k, where translation is an automorphism.
PointSet translate(const PointSet& s, const LatticePoint& t);

} // namespace linfiso

#endif
