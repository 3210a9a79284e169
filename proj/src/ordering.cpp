#include "linfiso/ordering.hpp"

#include <algorithm>
#include <limits>

#include "linfiso/error.hpp"
#include "linfiso/point_set.hpp"

namespace linfiso {

namespace {

constexpr Rank kHalfRange = Rank{1} << 63;

std::strong_ordering compare_rank_vectors(std::vector<Rank> r, std::vector<Rank> s) {
  while (!r.empty()) {
    auto ir = std::max_element(r.begin(), r.end());
    auto is = std::max_element(s.begin(), s.end());
    if (*ir != *is) return *ir <=> *is;
    // max_element returns the first occurrence
    auto pr = ir - r.begin();
    auto ps = is - s.begin();
    if (pr != ps) return ps <=> pr; // a later first occurrence is smaller
    r.erase(ir);
    s.erase(is);
  }
  return std::strong_ordering::equal;
}

} // namespace

Rank z_rank(Coord a) {
  if (a > 0) return 2 * static_cast<Rank>(a) - 1;
  if (a == std::numeric_limits<Coord>::min()) {
    throw OverflowError("rank of " + std::to_string(a) + " does not fit in 64 bits");
  }
  return 2 * static_cast<Rank>(-a);
}

Coord z_from_rank(Rank r) {
  if (r % 2 == 1) {
    Rank v = r / 2 + 1;
    if (v >= kHalfRange) throw OverflowError("integer of rank " + std::to_string(r) + " overflows");
    return static_cast<Coord>(v);
  }
  return -static_cast<Coord>(r / 2);
}

std::strong_ordering compare_z(Coord a, Coord b) { return z_rank(a) <=> z_rank(b); }

Coord succ_z(Coord a) { return z_from_rank(checked_add(z_rank(a), 1)); }

PlusMinus plus_minus(Coord a) {
  if (a == std::numeric_limits<Coord>::min() || a == std::numeric_limits<Coord>::max()) {
    throw OverflowError("plus/minus of " + std::to_string(a) + " overflows");
  }
  PlusMinus out{a, a};
  for (Coord c : {a - 1, a + 1}) {
    if (z_rank(c) > z_rank(out.plus)) out.plus = c;
    if (z_rank(c) < z_rank(out.minus)) out.minus = c;
  }
  return out;
}

Rank coordinate_rank(const DomainSignature& sig, std::size_t i, Coord value) {
  if (sig.is_integer_coordinate(i)) return z_rank(value);
  if (value < 0) {
    throw DomainError("negative value " + std::to_string(value) + " at natural coordinate " +
                      std::to_string(i + 1));
  }
  return static_cast<Rank>(value);
}

Coord coordinate_from_rank(const DomainSignature& sig, std::size_t i, Rank r) {
  if (sig.is_integer_coordinate(i)) return z_from_rank(r);
  if (r >= kHalfRange) throw OverflowError("natural of rank " + std::to_string(r) + " overflows");
  return static_cast<Coord>(r);
}

std::vector<Rank> rank_vector(const LatticePoint& p, const DomainSignature& sig) {
  check_point(p, sig);
  std::vector<Rank> out(p.size());
  for (std::size_t i = 0; i < p.size(); ++i) out[i] = coordinate_rank(sig, i, p[i]);
  return out;
}

OrderKey order_key(const LatticePoint& p, const DomainSignature& sig) {
  std::vector<Rank> ranks = rank_vector(p, sig);
  std::vector<Rank> key;
  key.reserve(2 * ranks.size());
  while (!ranks.empty()) {
    auto it = std::max_element(ranks.begin(), ranks.end());
    auto pos = static_cast<Rank>(it - ranks.begin());
    key.push_back(*it);
    key.push_back(ranks.size() - 1 - pos);
    ranks.erase(it);
  }
  return OrderKey(std::move(key));
}

std::strong_ordering compare_points(const LatticePoint& u, const LatticePoint& v,
                                    const DomainSignature& sig) {
  return compare_rank_vectors(rank_vector(u, sig), rank_vector(v, sig));
}

LatticePoint successor_point(const LatticePoint& x, const DomainSignature& sig) {
  std::vector<Rank> r = rank_vector(x, sig);
  if (r.empty()) throw DomainError("a zero-dimensional point has no successor");
  // Last position holding the smallest rank.
  const Rank low = *std::min_element(r.begin(), r.end());
  std::size_t pivot = 0;
  for (std::size_t i = 0; i < r.size(); ++i) {
    if (r[i] == low) pivot = i;
  }
  const Rank next = checked_add(low, 1);
  for (std::size_t i = 0; i < pivot; ++i) {
    if (r[i] == low) r[i] = 0;
  }
  r[pivot] = next;
  for (std::size_t i = pivot + 1; i < r.size(); ++i) {
    if (r[i] == next) r[i] = 0;
  }
  std::vector<Coord> out(r.size());
  for (std::size_t i = 0; i < r.size(); ++i) out[i] = coordinate_from_rank(sig, i, r[i]);
  return LatticePoint(std::move(out));
}

std::vector<LatticePoint> first_points(const DomainSignature& sig, std::size_t n) {
  std::vector<LatticePoint> out;
  out.reserve(n);
  if (n == 0) return out;
  out.emplace_back(std::vector<Coord>(sig.dim(), 0));
  while (out.size() < n) out.push_back(successor_point(out.back(), sig));
  return out;
}

PointSet initial_segment(const DomainSignature& sig, std::size_t n) {
  return PointSet(sig, first_points(sig, n));
}

} // namespace linfiso
