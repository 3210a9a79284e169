#include <doctest.h>

#include <limits>
#include <map>
#include <random>

#include "linfiso/error.hpp"
#include "linfiso/ordering.hpp"
#include "linfiso/point_set.hpp"
#include "reference.hpp"

using namespace linfiso;

namespace {

const DomainSignature Z1{1, 0};
const DomainSignature Z2{2, 0};
const DomainSignature Z3{3, 0};
const DomainSignature N1{0, 1};
const DomainSignature N2{0, 2};

std::vector<ref::Coords> as_coords(const std::vector<LatticePoint>& pts) {
  std::vector<ref::Coords> out;
  for (const auto& p : pts) out.emplace_back(p.begin(), p.end());
  return out;
}

} // namespace

TEST_CASE("integer base order") {
  CHECK(compare_z(0, 1) == std::strong_ordering::less);
  CHECK(compare_z(1, -1) == std::strong_ordering::less);
  CHECK(compare_z(2, 2) == std::strong_ordering::equal);
  CHECK(compare_z(-2, 2) == std::strong_ordering::greater);

  CHECK(succ_z(0) == 1);
  CHECK(succ_z(1) == -1);
  CHECK(succ_z(-1) == 2);

  CHECK(plus_minus(1) == PlusMinus{2, 0});
  CHECK(plus_minus(-1) == PlusMinus{-2, 0});
  CHECK(plus_minus(0) == PlusMinus{-1, 0});
  CHECK(plus_minus(5) == PlusMinus{6, 4});
  CHECK(plus_minus(-5) == PlusMinus{-6, -4});
}

TEST_CASE("rank is a bijection compatible with the successor") {
  CHECK(z_rank(0) == 0);
  for (Coord a = -2000; a <= 2000; ++a) {
    REQUIRE(z_from_rank(z_rank(a)) == a);
    REQUIRE(z_rank(succ_z(a)) == z_rank(a) + 1);
    REQUIRE(static_cast<std::int64_t>(z_rank(a)) == ref::list_position(a));
  }
  for (Rank r = 0; r < 4000; ++r) REQUIRE(z_rank(z_from_rank(r)) == r);
}

TEST_CASE("rank arithmetic fails loudly at the edge of the range") {
  constexpr Coord lo = std::numeric_limits<Coord>::min();
  constexpr Coord hi = std::numeric_limits<Coord>::max();
  CHECK_THROWS_AS(z_rank(lo), OverflowError);
  CHECK(succ_z(hi) == -hi);
  CHECK_THROWS_AS(succ_z(-hi), OverflowError);
  CHECK_THROWS_AS(plus_minus(hi), OverflowError);
  CHECK_THROWS_AS(successor_point(LatticePoint{-hi, -hi}, Z2), OverflowError);
}

TEST_CASE("point comparison examples") {
  CHECK(compare_points({0, 0, 1}, {0, 1, 0}, Z3) == std::strong_ordering::less);
  CHECK(compare_points({1, 1, 1}, {0, 0, -1}, Z3) == std::strong_ordering::less);
  CHECK(compare_points({2, 5}, {2, 5}, Z2) == std::strong_ordering::equal);
  CHECK_THROWS_AS(compare_points({0, 0}, {0, 0, 0}, Z2), DimensionMismatch);
  CHECK_THROWS_AS(compare_points({0, -1}, {0, 0}, N2), DomainError);
}

TEST_CASE("successor examples") {
  CHECK(successor_point({0, 0, 0}, Z3) == LatticePoint{0, 0, 1});
  CHECK(successor_point({1, 1, 1}, Z3) == LatticePoint{0, 0, -1});
  CHECK(successor_point({-1, -1, -1}, Z3) == LatticePoint{0, 0, 2});
  // Last coordinate holds the minimum but the entries differ.
  CHECK(successor_point({1, 1, 0}, Z3) == LatticePoint{1, 1, 1});
  CHECK_THROWS_AS(successor_point({0, 0}, Z3), DimensionMismatch);
}

TEST_CASE("initial segment examples") {
  CHECK(initial_segment(Z3, 0).empty());
  CHECK(initial_segment(Z3, 1) == ref::make_set(Z3, {{0, 0, 0}}));
  CHECK(initial_segment(Z3, 5) ==
        ref::make_set(Z3, {{0, 0, 0}, {0, 0, 1}, {0, 1, 0}, {0, 1, 1}, {1, 0, 0}}));
  // Frozen from ref::sorted_box(0, 2, ...).
  CHECK(first_points(N2, 6) ==
        std::vector<LatticePoint>{{0, 0}, {0, 1}, {1, 0}, {1, 1}, {0, 2}, {1, 2}});
  CHECK(first_points(Z1, 5) == std::vector<LatticePoint>{{0}, {1}, {-1}, {2}, {-2}});
  CHECK(first_points(N1, 3) == std::vector<LatticePoint>{{0}, {1}, {2}});
}

TEST_CASE("first forty points of Z^3") {
  const std::vector<LatticePoint> table = {
      {0, 0, 0},   {0, 0, 1},   {0, 1, 0},   {0, 1, 1},    {1, 0, 0},   {1, 0, 1},
      {1, 1, 0},   {1, 1, 1},   {0, 0, -1},  {0, 1, -1},   {1, 0, -1},  {1, 1, -1},
      {0, -1, 0},  {0, -1, 1},  {1, -1, 0},  {1, -1, 1},   {0, -1, -1}, {1, -1, -1},
      {-1, 0, 0},  {-1, 0, 1},  {-1, 1, 0},  {-1, 1, 1},   {-1, 0, -1}, {-1, 1, -1},
      {-1, -1, 0}, {-1, -1, 1}, {-1, -1, -1}, {0, 0, 2},   {0, 1, 2},   {1, 0, 2},
      {1, 1, 2},   {0, -1, 2},  {1, -1, 2},  {-1, 0, 2},   {-1, 1, 2},  {-1, -1, 2},
      {0, 2, 0},   {0, 2, 1},   {1, 2, 0},   {1, 2, 1}};
  CHECK(first_points(Z3, 40) == table);
}

TEST_CASE("successor enumeration matches a brute-force sort of a box") {
  struct Case {
    DomainSignature sig;
    std::int64_t radius;
    std::size_t count;
  };
  // (2r+1)^dim >= count, so the first `count` sorted box points are the
  // true initial segment.
  const std::vector<Case> cases = {
      {{1, 0}, 5000, 10000}, {{2, 0}, 50, 10000}, {{3, 0}, 11, 10000}, {{4, 0}, 5, 10000},
      {{0, 1}, 5000, 10000}, {{0, 2}, 50, 10000}, {{0, 3}, 11, 10000}, {{0, 4}, 5, 10000},
      {{1, 1}, 50, 10000},   {{2, 1}, 11, 10000}, {{1, 2}, 11, 10000}};
  for (const auto& c : cases) {
    CAPTURE(c.sig.to_string());
    auto expected = ref::sorted_box(c.sig.integer_dims(), c.sig.natural_dims(), c.radius);
    expected.resize(c.count);
    const auto actual = first_points(c.sig, c.count);
    REQUIRE(as_coords(actual) == expected);
    for (std::size_t i = 0; i + 1 < actual.size(); ++i) {
      REQUIRE(compare_points(actual[i], actual[i + 1], c.sig) == std::strong_ordering::less);
    }
  }
}

TEST_CASE("order keys agree with the recursive comparison") {
  std::mt19937_64 rng(20260101);
  for (const auto& sig : ref::signatures_up_to(4)) {
    CAPTURE(sig.to_string());
    for (int trial = 0; trial < 10000; ++trial) {
      LatticePoint u{std::vector<Coord>(sig.dim())}, v{std::vector<Coord>(sig.dim())};
      for (std::size_t i = 0; i < sig.dim(); ++i) {
        Coord lo = sig.is_integer_coordinate(i) ? -4 : 0;
        std::uniform_int_distribution<Coord> dist(lo, 4);
        u[i] = dist(rng);
        v[i] = dist(rng);
      }
      const auto direct = compare_points(u, v, sig);
      const auto keyed = order_key(u, sig) <=> order_key(v, sig);
      REQUIRE(direct == keyed);
      const bool ref_less = ref::less({u.begin(), u.end()}, {v.begin(), v.end()}, sig.integer_dims());
      REQUIRE((direct < 0) == ref_less);
    }
  }
}

TEST_CASE("origin has the least key") {
  for (const auto& sig : ref::signatures_up_to(4)) {
    const LatticePoint origin{std::vector<Coord>(sig.dim(), 0)};
    for (const auto& p : first_points(sig, 200)) {
      CHECK(order_key(origin, sig) <= order_key(p, sig));
    }
  }
}

TEST_CASE("sections of initial segments are initial segments") {
  for (std::size_t k : {2u, 3u}) {
    const DomainSignature sig(k, 0);
    const DomainSignature lower(k - 1, 0);
    const auto pts = first_points(sig, 200);
    for (std::size_t n = 1; n <= pts.size(); ++n) {
      for (std::size_t i = 0; i < k; ++i) {
        std::map<Coord, std::vector<LatticePoint>> sections;
        for (std::size_t m = 0; m < n; ++m) sections[pts[m][i]].push_back(pts[m].without(i));
        for (auto& [value, sec] : sections) {
          CAPTURE(n);
          CAPTURE(i);
          CAPTURE(value);
          REQUIRE(PointSet(lower, sec) == initial_segment(lower, sec.size()));
        }
      }
    }
  }
}
