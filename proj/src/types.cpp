#include "linfiso/types.hpp"

#include <limits>
#include <sstream>

#include "linfiso/error.hpp"

namespace linfiso {

DomainSignature::DomainSignature(std::size_t integer_dims, std::size_t natural_dims)
    : integer_dims_(integer_dims), natural_dims_(natural_dims) {
  if (integer_dims + natural_dims == 0) {
    throw DomainError("domain signature needs at least one coordinate");
  }
}

std::string DomainSignature::to_string() const {
  if (dim() == 0) return "Z^0";
  std::string out;
  if (integer_dims_ > 0) out += "Z^" + std::to_string(integer_dims_);
  if (natural_dims_ > 0) {
    if (!out.empty()) out += " x ";
    out += "N^" + std::to_string(natural_dims_);
  }
  return out;
}

LatticePoint LatticePoint::with_inserted(std::size_t i, Coord value) const {
  if (i > coords_.size()) {
    throw DomainError("insert position " + std::to_string(i) + " out of range");
  }
  std::vector<Coord> out;
  out.reserve(coords_.size() + 1);
  out.insert(out.end(), coords_.begin(), coords_.begin() + static_cast<std::ptrdiff_t>(i));
  out.push_back(value);
  out.insert(out.end(), coords_.begin() + static_cast<std::ptrdiff_t>(i), coords_.end());
  return LatticePoint(std::move(out));
}

LatticePoint LatticePoint::without(std::size_t i) const {
  if (i >= coords_.size()) {
    throw DomainError("coordinate " + std::to_string(i) + " out of range");
  }
  std::vector<Coord> out;
  out.reserve(coords_.size() - 1);
  for (std::size_t c = 0; c < coords_.size(); ++c) {
    if (c != i) out.push_back(coords_[c]);
  }
  return LatticePoint(std::move(out));
}

std::string LatticePoint::to_string() const {
  std::ostringstream os;
  os << '(';
  for (std::size_t i = 0; i < coords_.size(); ++i) {
    if (i) os << ',';
    os << coords_[i];
  }
  os << ')';
  return os.str();
}

std::size_t LatticePointHash::operator()(const LatticePoint& p) const noexcept {
  // splitmix-style mixing per coordinate
  std::uint64_t h = 0x9e3779b97f4a7c15ULL ^ p.size();
  for (Coord c : p) {
    std::uint64_t x = static_cast<std::uint64_t>(c) + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    h ^= x ^ (x >> 31);
  }
  return static_cast<std::size_t>(h);
}

void check_point(const LatticePoint& p, const DomainSignature& sig) {
  if (p.size() != sig.dim()) {
    throw DimensionMismatch("point " + p.to_string() + " has " + std::to_string(p.size()) +
                            " coordinates, domain " + sig.to_string() + " needs " +
                            std::to_string(sig.dim()));
  }
  for (std::size_t i = sig.integer_dims(); i < sig.dim(); ++i) {
    if (p[i] < 0) {
      throw DomainError("point " + p.to_string() + " has negative natural coordinate " +
                        std::to_string(i + 1));
    }
  }
}

std::uint64_t checked_add(std::uint64_t a, std::uint64_t b) {
  if (a > std::numeric_limits<std::uint64_t>::max() - b) {
    throw OverflowError("integer overflow in addition");
  }
  return a + b;
}

std::uint64_t checked_mul(std::uint64_t a, std::uint64_t b) {
  if (a != 0 && b > std::numeric_limits<std::uint64_t>::max() / a) {
    throw OverflowError("integer overflow in multiplication");
  }
  return a * b;
}

std::uint64_t checked_pow(std::uint64_t base, std::size_t exponent) {
  std::uint64_t r = 1;
  for (std::size_t i = 0; i < exponent; ++i) r = checked_mul(r, base);
  return r;
}

} // namespace linfiso
