#ifndef LINFISO_TYPES_HPP
#define LINFISO_TYPES_HPP

#include <compare>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <string>
#include <vector>

namespace linfiso {

using Coord = std::int64_t;

/// The pair (k, d) of the vertex set Z^k x N^d. Coordinates 0..k-1 are
/// integer-type, coordinates k..k+d-1 are natural-type (non-negative).
///
/// A signature handed in by a user always has k + d >= 1. The only
/// zero-dimensional signature is the target of a projection that deletes
/// every coordinate; get it from zero_dimensional().
class DomainSignature {
public:
  DomainSignature(std::size_t integer_dims, std::size_t natural_dims);

  static DomainSignature zero_dimensional() noexcept {
    return DomainSignature();
  }

  std::size_t integer_dims() const noexcept { return integer_dims_; }
  std::size_t natural_dims() const noexcept { return natural_dims_; }
  std::size_t dim() const noexcept { return integer_dims_ + natural_dims_; }

  bool is_integer_coordinate(std::size_t i) const noexcept {
    return i < integer_dims_;
  }
  bool is_natural_coordinate(std::size_t i) const noexcept {
    return i >= integer_dims_ && i < dim();
  }
  bool is_pure_integer() const noexcept {
    return natural_dims_ == 0 && integer_dims_ > 0;
  }
  bool is_pure_natural() const noexcept {
    return integer_dims_ == 0 && natural_dims_ > 0;
  }
  bool is_pure() const noexcept { return is_pure_integer() || is_pure_natural(); }

  /// "Z^3", "N^2", "Z^1 x N^1".
  std::string to_string() const;

  friend bool operator==(const DomainSignature&,
                         const DomainSignature&) = default;

private:
  DomainSignature() = default;

  std::size_t integer_dims_ = 0;
  std::size_t natural_dims_ = 0;
};

/// An integer vector. Which coordinates must be non-negative is decided by
/// the signature it is used with, see check_point().
class LatticePoint {
public:
  LatticePoint() = default;
  explicit LatticePoint(std::vector<Coord> coords) : coords_(std::move(coords)) {}
  LatticePoint(std::initializer_list<Coord> coords) : coords_(coords) {}

  std::size_t size() const noexcept { return coords_.size(); }
  Coord operator[](std::size_t i) const { return coords_[i]; }
  Coord& operator[](std::size_t i) { return coords_[i]; }

  std::span<const Coord> coords() const noexcept { return coords_; }
  auto begin() const noexcept { return coords_.begin(); }
  auto end() const noexcept { return coords_.end(); }

  /// (p, x -> i): x placed at index i, later entries shifted right.
  LatticePoint with_inserted(std::size_t i, Coord value) const;
  /// The point with index i deleted.
  LatticePoint without(std::size_t i) const;

  std::string to_string() const;

  // Plain lexicographic order on coordinates, for containers only. The
  // well-ordering lives in ordering.hpp.
  friend auto operator<=>(const LatticePoint&, const LatticePoint&) = default;

private:
  std::vector<Coord> coords_;
};

struct LatticePointHash {
  std::size_t operator()(const LatticePoint& p) const noexcept;
};

/// Throws DimensionMismatch or DomainError when p does not lie in the domain.
void check_point(const LatticePoint& p, const DomainSignature& sig);

/// Checked arithmetic; throws OverflowError.
std::uint64_t checked_add(std::uint64_t a, std::uint64_t b);
std::uint64_t checked_mul(std::uint64_t a, std::uint64_t b);
std::uint64_t checked_pow(std::uint64_t base, std::size_t exponent);

} // namespace linfiso

#endif
