#include "linfiso/boundary_formula.hpp"

#include <bit>

#include "linfiso/compression.hpp"
#include "linfiso/error.hpp"
#include "linfiso/lattice.hpp"

namespace linfiso {

namespace {

void require_compressed(const PointSet& s, const char* what) {
  if (s.empty()) throw DomainError(std::string(what) + " needs a nonempty set");
  if (!is_compressed(s)) {
    throw NotCompressed(std::string(what) + " needs a set compressed in every coordinate");
  }
}

void require_pure(const DomainSignature& sig) {
  if (!sig.is_pure()) {
    throw DomainError("initial-segment increments are defined on Z^k or N^k, not " +
                      sig.to_string());
  }
}

} // namespace

ZeroProfile zero_profile(const LatticePoint& z, const DomainSignature& sig) {
  check_point(z, sig);
  ZeroProfile out;
  for (std::size_t i = 0; i < sig.dim(); ++i) {
    if (z[i] != 0) continue;
    (sig.is_integer_coordinate(i) ? out.integer_zeros : out.natural_zeros).push_back(i);
  }
  return out;
}

std::uint64_t projection_functional(const PointSet& s) {
  const auto& sig = s.signature();
  const std::size_t dim = sig.dim();
  if (dim >= 63) throw OverflowError("too many coordinates for the projection sum");
  const std::uint64_t integer_mask = (std::uint64_t{1} << sig.integer_dims()) - 1;
  std::uint64_t total = 0;
  std::vector<std::size_t> deleted;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << dim); ++mask) {
    deleted.clear();
    for (std::size_t i = 0; i < dim; ++i) {
      if (mask >> i & 1) deleted.push_back(i);
    }
    const auto weight = checked_pow(2, static_cast<std::size_t>(std::popcount(mask & integer_mask)));
    total = checked_add(total, checked_mul(weight, project(s, deleted).size()));
  }
  return total;
}

std::uint64_t boundary_via_projections(const PointSet& s) {
  require_compressed(s, "the projection-sum boundary formula");
  return projection_functional(s);
}

std::uint64_t segment_boundary_increment(const LatticePoint& v, const DomainSignature& sig) {
  require_pure(sig);
  check_point(v, sig);
  std::size_t zeros = 0;
  for (Coord c : v) zeros += c == 0;
  return checked_pow(sig.is_pure_integer() ? 3 : 2, zeros);
}

std::uint64_t initial_segment_boundary_size(const DomainSignature& sig, std::size_t n) {
  require_pure(sig);
  if (n == 0) throw DomainError("initial-segment boundary size needs n >= 1");
  LatticePoint v{std::vector<Coord>(sig.dim(), 0)};
  std::uint64_t total = segment_boundary_increment(v, sig);
  for (std::size_t added = 1; added < n; ++added) {
    v = successor_point(v, sig);
    total = checked_add(total, segment_boundary_increment(v, sig));
  }
  return total;
}

LatticePoint find_corner_point(const PointSet& s) {
  require_compressed(s, "corner point search");
  const auto& sig = s.signature();
  for (auto it = s.points().rbegin(); it != s.points().rend(); ++it) {
    const LatticePoint& z = *it;
    bool corner = true;
    for (std::size_t i = 0; i < sig.dim() && corner; ++i) {
      LatticePoint bumped = z;
      bumped[i] = sig.is_integer_coordinate(i) ? plus_minus(z[i]).plus : z[i] + 1;
      corner = !s.contains(bumped);
    }
    if (corner) return z;
  }
  // A finite compressed set always has one; reaching here is a bug.
  throw Error("no corner point found");
}

} // namespace linfiso
