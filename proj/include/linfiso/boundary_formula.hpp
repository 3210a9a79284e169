#ifndef LINFISO_BOUNDARY_FORMULA_HPP
#define LINFISO_BOUNDARY_FORMULA_HPP

#include <cstddef>
#include <cstdint>
#include <vector>

#include "linfiso/point_set.hpp"

namespace linfiso {

/// Indices of the zero coordinates of a point, split by coordinate type.
struct ZeroProfile {
  std::vector<std::size_t> integer_zeros;
  std::vector<std::size_t> natural_zeros;
};

ZeroProfile zero_profile(const LatticePoint& z, const DomainSignature& sig);

/// Sum over all subsets I of the coordinates of 2^{|I & integer coords|}
/// times |P_I(S)|, where P_I deletes the coordinates in I. The sum includes
/// I = {} (giving |S|) and I = everything (giving 2^k for nonempty S).
///
/// Defined for any finite set; equals |vertex_boundary(S)| when S is
/// compressed in every coordinate.
std::uint64_t projection_functional(const PointSet& s);

/// |vertex_boundary(S)| through projection_functional(). Throws
/// NotCompressed unless S is compressed in every coordinate, DomainError if
/// S is empty.
std::uint64_t boundary_via_projections(const PointSet& s);

/// 3^l on Z^k and 2^l on N^k, l the number of zero coordinates of v. When v
/// is the first point outside an initial segment I, this is
/// |boundary(I + v)| - |boundary(I)|. Throws DomainError on mixed
/// signatures.
std::uint64_t segment_boundary_increment(const LatticePoint& v,
                                         const DomainSignature& sig);

/// |boundary(initial_segment(sig, n))| by summing increments from the
/// origin's 3^k (2^k on N^k). Never builds the boundary.
std::uint64_t initial_segment_boundary_size(const DomainSignature& sig,
                                            std::size_t n);

/// A point z of a compressed set S whose coordinate bumps all leave S:
/// z_i replaced by its plus value on integer-type coordinates, z_j + 1 on
/// natural-type ones. Among all such points the latest in the well-ordering
/// is returned.
LatticePoint find_corner_point(const PointSet& s);

} // namespace linfiso

#endif
