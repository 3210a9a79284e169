#include <doctest.h>

#include <algorithm>
#include <functional>
#include <numeric>
#include <random>

#include "linfiso/boundary_formula.hpp"
#include "linfiso/compression.hpp"
#include "linfiso/error.hpp"
#include "linfiso/lattice.hpp"
#include "linfiso/oracle.hpp"
#include "linfiso/ordering.hpp"
#include "reference.hpp"

using namespace linfiso;

namespace {

const DomainSignature Z1{1, 0};
const DomainSignature Z2{2, 0};
const DomainSignature Z3{3, 0};
const DomainSignature N1{0, 1};
const DomainSignature N2{0, 2};

std::vector<ref::Coords> box_cells(const Box& box) {
  std::vector<ref::Coords> pts{{}};
  for (const auto& iv : box) {
    std::vector<ref::Coords> next;
    for (const auto& p : pts) {
      for (Coord x = iv.lo; x <= iv.hi; ++x) {
        auto q = p;
        q.push_back(x);
        next.push_back(q);
      }
    }
    pts = std::move(next);
  }
  return pts;
}

void for_each_subset(const std::vector<ref::Coords>& cells, std::size_t n,
                     const std::function<void(const std::vector<ref::Coords>&)>& fn) {
  std::vector<ref::Coords> chosen;
  std::function<void(std::size_t)> rec = [&](std::size_t start) {
    if (chosen.size() == n) {
      fn(chosen);
      return;
    }
    for (std::size_t i = start; i + (n - chosen.size()) <= cells.size(); ++i) {
      chosen.push_back(cells[i]);
      rec(i + 1);
      chosen.pop_back();
    }
  };
  rec(0);
}

struct RefMinimum {
  std::size_t best = SIZE_MAX;
  std::uint64_t count = 0;
  std::vector<PointSet> canonical;
};

RefMinimum reference_minimum(const DomainSignature& sig, std::size_t n, const Box& box) {
  RefMinimum out;
  std::vector<std::vector<ref::Coords>> minimisers;
  for_each_subset(box_cells(box), n, [&](const std::vector<ref::Coords>& s) {
    const std::size_t b = ref::boundary(s, sig.integer_dims(), sig.natural_dims()).size();
    if (b < out.best) {
      out.best = b;
      out.count = 0;
      minimisers.clear();
    }
    if (b == out.best) {
      ++out.count;
      minimisers.push_back(s);
    }
  });
  for (const auto& m : minimisers) {
    PointSet c = canonicalize_witness(ref::make_set(sig, m));
    if (std::find(out.canonical.begin(), out.canonical.end(), c) == out.canonical.end()) {
      out.canonical.push_back(c);
    }
  }
  std::sort(out.canonical.begin(), out.canonical.end(), canonical_less);
  return out;
}

bool is_compressed_reference(const std::vector<ref::Coords>& s, const DomainSignature& sig) {
  std::set<ref::Coords> members(s.begin(), s.end());
  for (const auto& p : s) {
    for (std::size_t i = 0; i < p.size(); ++i) {
      if (p[i] == 0) continue;
      // Step one rank towards the origin.
      auto q = p;
      if (sig.is_natural_coordinate(i)) {
        q[i] -= 1;
      } else {
        q[i] = p[i] > 0 ? -(p[i] - 1) : -p[i];
      }
      if (!members.count(q)) return false;
    }
  }
  return true;
}

LatticePoint apply_symmetry(const LatticePoint& p, const std::vector<std::size_t>& perm,
                            std::uint64_t signs, const std::vector<Coord>& shift) {
  std::vector<Coord> q(p.size());
  for (std::size_t i = 0; i < p.size(); ++i) {
    q[i] = ((signs >> i & 1) ? -p[perm[i]] : p[perm[i]]) + shift[i];
  }
  return LatticePoint(std::move(q));
}

PointSet two_by_five_rectangle() {
  std::vector<ref::Coords> pts;
  for (Coord x = 0; x <= 1; ++x) {
    for (Coord y = -2; y <= 2; ++y) pts.push_back({x, y});
  }
  return ref::make_set(Z2, pts);
}

OracleOptions single_thread() {
  OracleOptions o;
  o.threads = 1;
  return o;
}

} // namespace

TEST_CASE("binomial counts saturate at the cap") {
  CHECK(binomial_capped(49, 6, 1'000'000'000) == 13'983'816);
  CHECK(binomial_capped(125, 4, 1'000'000'000) == 9'691'375);
  CHECK(binomial_capped(36, 6, 1'000'000'000) == 1'947'792);
  CHECK(binomial_capped(49, 10, 50'000'000) == 50'000'001);
  CHECK(binomial_capped(5, 7, 100) == 0);
  CHECK(binomial_capped(10, 0, 100) == 1);
}

TEST_CASE("search modes and statuses have stable names") {
  CHECK(parse_search_mode("full") == SearchMode::full);
  CHECK(parse_search_mode("compressed_only") == SearchMode::compressed_only);
  CHECK(to_string(SearchMode::compressed_only) == "compressed_only");
  CHECK(to_string(ReportStatus::falsification) == "FALSIFICATION");
  CHECK_THROWS_AS(parse_search_mode("partial"), DomainError);
}

TEST_CASE("default search boxes contain the compressed hull and fit the budget") {
  CHECK(default_search_box(Z2, 1, 50'000'000) == Box{{-2, 2}, {-2, 2}});
  CHECK(default_search_box(N2, 6, 50'000'000) == Box{{0, 6}, {0, 6}});
  CHECK(default_search_box(Z2, 6, 50'000'000) == Box{{-3, 3}, {-3, 3}});
  CHECK_THROWS_AS(default_search_box(Z2, 10, 50'000'000), BudgetExceeded);
  CHECK_THROWS_AS(default_search_box(DomainSignature(1, 1), 2, 50'000'000), DomainError);
  for (const auto& sig : {Z1, Z2, Z3, N1, N2, DomainSignature(0, 3)}) {
    for (std::size_t n = 1; n <= 8; ++n) {
      Box box;
      try {
        box = default_search_box(sig, n, 50'000'000);
      } catch (const BudgetExceeded&) {
        continue;
      }
      CHECK(binomial_capped(box_volume(box), n, 50'000'000) <= 50'000'000);
      for (const auto& s : enumerate_compressed_candidates(sig, n)) {
        for (const auto& p : s) REQUIRE(box_contains(box, p));
      }
    }
  }
}

TEST_CASE("brute force examples") {
  const auto line = brute_force_min_boundary(Z1, 3, {{-3, 3}}, single_thread());
  CHECK(line.min_boundary_found == 5);
  CHECK(line.witness_count == 5); // the contiguous 3-segments of [-3, 3]
  REQUIRE(line.witnesses.size() == 1);
  CHECK(line.witnesses[0] == ref::make_set(Z1, {{0}, {1}, {2}}));
  CHECK(line.search_space_size == 35);
  CHECK(line.status == ReportStatus::pass);

  const auto single = brute_force_min_boundary(Z2, 1, {{-1, 1}, {-1, 1}});
  CHECK(single.min_boundary_found == 9);
  CHECK(single.initial_segment_boundary == 9);

  CHECK_THROWS_AS(brute_force_min_boundary(Z2, 3, {{1, 3}, {1, 3}}), DomainError);
  CHECK_THROWS_AS(brute_force_min_boundary(Z2, 3, {{-1, 1}}), DimensionMismatch);
  CHECK_THROWS_AS(brute_force_min_boundary(N2, 1, {{-1, 1}, {0, 1}}), DomainError);
  CHECK_THROWS_AS(brute_force_min_boundary(DomainSignature(1, 1), 1, {{0, 0}, {0, 0}}), DomainError);
  OracleOptions tight;
  tight.budget = 100;
  CHECK_THROWS_AS(brute_force_min_boundary(Z2, 3, {{-3, 3}, {-3, 3}}, tight), BudgetExceeded);
}

TEST_CASE("brute force agrees with an independent enumeration") {
  struct Case {
    DomainSignature sig;
    std::size_t n;
    Box box;
  };
  const std::vector<Case> cases = {
      {Z1, 4, {{-3, 3}}},
      {Z2, 2, {{-1, 2}, {-1, 2}}},
      {Z2, 3, {{-1, 2}, {-1, 2}}},
      {Z2, 4, {{-1, 2}, {-1, 2}}},
      {Z3, 2, {{-1, 1}, {-1, 1}, {-1, 1}}},
      {N1, 3, {{0, 5}}},
      {N2, 3, {{0, 3}, {0, 3}}},
      {N2, 4, {{0, 3}, {0, 3}}},
      {DomainSignature(0, 3), 3, {{0, 2}, {0, 2}, {0, 2}}},
  };
  for (const auto& c : cases) {
    CAPTURE(c.sig.to_string());
    CAPTURE(c.n);
    const auto expected = reference_minimum(c.sig, c.n, c.box);
    for (unsigned threads : {1u, 3u}) {
      OracleOptions o;
      o.threads = threads;
      const auto r = brute_force_min_boundary(c.sig, c.n, c.box, o);
      CHECK(r.min_boundary_found == expected.best);
      CHECK(r.witness_count == expected.count);
      CHECK(r.witnesses == expected.canonical);
      CHECK(r.min_boundary_found == initial_segment_boundary_size(c.sig, c.n));
    }
  }
}

TEST_CASE("threading does not change reports") {
  OracleOptions one = single_thread();
  OracleOptions many;
  many.threads = 4;
  const Box box{{-3, 3}, {-3, 3}};
  for (std::size_t n = 1; n <= 4; ++n) {
    const auto a = brute_force_min_boundary(Z2, n, box, one);
    const auto b = brute_force_min_boundary(Z2, n, box, many);
    CHECK(a.min_boundary_found == b.min_boundary_found);
    CHECK(a.witness_count == b.witness_count);
    CHECK(a.witnesses == b.witnesses);
  }
}

TEST_CASE("witnesses are valid minimisers") {
  for (const auto& sig : {Z2, N2, Z3}) {
    for (auto mode : {SearchMode::full, SearchMode::compressed_only}) {
      for (const auto& r : verify_segment_minimality(sig, 4, mode)) {
        REQUIRE(r.status == ReportStatus::pass);
        REQUIRE(!r.witnesses.empty());
        REQUIRE(r.witness_count >= r.witnesses.size());
        for (const auto& w : r.witnesses) {
          REQUIRE(w.size() == r.n);
          REQUIRE(ref::boundary_size(w) == r.min_boundary_found);
          REQUIRE(canonicalize_witness(w) == w);
        }
      }
    }
  }
}

TEST_CASE("witness cap limits the distinct witnesses") {
  OracleOptions o;
  o.witness_cap = 1;
  const auto r = brute_force_min_boundary(Z2, 3, {{-2, 2}, {-2, 2}}, o);
  CHECK(r.witnesses.size() == 1);
  o.witness_cap = 0;
  CHECK(brute_force_min_boundary(Z2, 3, {{-2, 2}, {-2, 2}}, o).witnesses.empty());
}

TEST_CASE("full and compressed modes agree") {
  for (const auto& [sig, n_max] : std::vector<std::pair<DomainSignature, std::size_t>>{
           {Z1, 8}, {Z2, 5}, {Z3, 3}, {N1, 8}, {N2, 5}, {DomainSignature(0, 3), 4}}) {
    CAPTURE(sig.to_string());
    const auto full = verify_segment_minimality(sig, n_max, SearchMode::full);
    const auto compressed = verify_segment_minimality(sig, n_max, SearchMode::compressed_only);
    REQUIRE(full.size() == n_max);
    REQUIRE(compressed.size() == n_max);
    for (std::size_t i = 0; i < n_max; ++i) {
      CAPTURE(i + 1);
      REQUIRE(full[i].status == ReportStatus::pass);
      REQUIRE(compressed[i].status == ReportStatus::pass);
      REQUIRE(full[i].min_boundary_found == compressed[i].min_boundary_found);
      REQUIRE(full[i].min_boundary_found == full[i].initial_segment_boundary);
    }
  }
}

TEST_CASE("budget overruns are reported per size and the run continues") {
  OracleOptions o;
  o.budget = 1000;
  const auto reports = verify_segment_minimality(Z2, 4, SearchMode::full, o);
  REQUIRE(reports.size() == 4);
  CHECK(reports[0].status == ReportStatus::pass);
  CHECK(reports[3].status == ReportStatus::budget_exceeded);
  CHECK(!reports[3].note.empty());
  CHECK(reports[3].initial_segment_boundary == 16);
  CHECK_THROWS_AS(verify_segment_minimality(DomainSignature(1, 1), 2, SearchMode::full), DomainError);
}

TEST_CASE("compressed candidate examples") {
  CHECK(enumerate_compressed_candidates(Z1, 3) ==
        std::vector<PointSet>{ref::make_set(Z1, {{-1}, {0}, {1}})});
  CHECK(enumerate_compressed_candidates(Z1, 4) ==
        std::vector<PointSet>{ref::make_set(Z1, {{-1}, {0}, {1}, {2}})});
  CHECK(enumerate_compressed_candidates(N1, 5) ==
        std::vector<PointSet>{ref::make_set(N1, {{0}, {1}, {2}, {3}, {4}})});
  // Partitions of 10 and plane partitions of 4.
  CHECK(enumerate_compressed_candidates(Z2, 10).size() == 42);
  CHECK(enumerate_compressed_candidates(Z3, 4).size() == 13);
  CHECK_THROWS_AS(enumerate_compressed_candidates(Z2, 20, 10), BudgetExceeded);
}

TEST_CASE("compressed candidates are exactly the compressed subsets of the hull") {
  for (const auto& sig : {Z1, Z2, Z3, N1, N2, DomainSignature(0, 3), DomainSignature(1, 1),
                          DomainSignature(2, 1)}) {
    for (std::size_t n = 1; n <= 5; ++n) {
      if (sig.dim() == 3 && n > 4) continue;
      CAPTURE(sig.to_string());
      CAPTURE(n);
      Box hull;
      for (std::size_t i = 0; i < sig.dim(); ++i) {
        hull.push_back(sig.is_integer_coordinate(i)
                           ? Interval{-static_cast<Coord>((n - 1) / 2), static_cast<Coord>(n / 2)}
                           : Interval{0, static_cast<Coord>(n - 1)});
      }
      std::vector<PointSet> expected;
      for_each_subset(box_cells(hull), n, [&](const std::vector<ref::Coords>& s) {
        if (is_compressed_reference(s, sig)) expected.push_back(ref::make_set(sig, s));
      });
      auto actual = enumerate_compressed_candidates(sig, n);
      for (const auto& s : actual) REQUIRE(is_compressed(s));
      std::sort(expected.begin(), expected.end(), canonical_less);
      std::sort(actual.begin(), actual.end(), canonical_less);
      REQUIRE(actual == expected);
    }
  }
}

TEST_CASE("projection functional is minimised by the initial segment") {
  for (const auto& [sig, n_max] : std::vector<std::pair<DomainSignature, std::size_t>>{
           {Z2, 12}, {Z3, 6}, {N2, 12}, {DomainSignature(0, 3), 6}}) {
    for (std::size_t n = 1; n <= n_max; ++n) {
      const auto r = projection_functional_minimum(sig, n);
      REQUIRE(r.min_functional == r.initial_segment_functional);
      REQUIRE(r.initial_segment_functional == initial_segment_boundary_size(sig, n));
    }
  }
}

TEST_CASE("canonical forms are invariant under the symmetry group") {
  const PointSet s = ref::make_set(Z2, {{0, 0}, {1, 0}, {1, 1}, {3, 2}});
  const PointSet mirrored = ref::make_set(Z2, {{0, 0}, {-1, 0}, {-1, 1}, {-3, 2}});
  const PointSet shifted = ref::make_set(Z2, {{3, -2}, {4, -2}, {4, -1}, {6, 0}});
  CHECK(canonicalize_witness(s) == canonicalize_witness(mirrored));
  CHECK(canonicalize_witness(s) == canonicalize_witness(shifted));
  CHECK(canonicalize_witness(initial_segment(Z2, 10)) != canonicalize_witness(two_by_five_rectangle()));
  CHECK(canonicalize_witness(PointSet(Z2)).empty());
  CHECK_THROWS_AS(canonicalize_witness(ref::make_set(DomainSignature(1, 1), {{0, 0}})), DomainError);

  // N^k: permutations only, no translation.
  const PointSet a = ref::make_set(N2, {{0, 0}, {0, 1}});
  const PointSet b = ref::make_set(N2, {{0, 0}, {1, 0}});
  const PointSet c = ref::make_set(N2, {{1, 1}, {1, 2}});
  CHECK(canonicalize_witness(a) == canonicalize_witness(b));
  CHECK(canonicalize_witness(a) != canonicalize_witness(c));

  std::mt19937_64 rng(307);
  for (std::size_t k = 1; k <= 3; ++k) {
    const DomainSignature sig(k, 0);
    for (int trial = 0; trial < 200; ++trial) {
      const PointSet t = ref::random_set(rng, sig, 8, 3);
      std::vector<std::size_t> perm(k);
      std::iota(perm.begin(), perm.end(), std::size_t{0});
      std::shuffle(perm.begin(), perm.end(), rng);
      const std::uint64_t signs = rng() % (std::uint64_t{1} << k);
      std::vector<Coord> shift(k);
      for (auto& x : shift) x = static_cast<Coord>(rng() % 11) - 5;
      std::vector<LatticePoint> image;
      for (const auto& p : t) image.push_back(apply_symmetry(p, perm, signs, shift));
      const PointSet u(sig, std::move(image));
      const PointSet ct = canonicalize_witness(t);
      REQUIRE(ct == canonicalize_witness(u));
      REQUIRE(ct.size() == t.size());
      REQUIRE(ref::boundary_size(ct) == ref::boundary_size(t));
      REQUIRE(canonicalize_witness(ct) == ct);
    }
  }
}

TEST_CASE("two distinct minimisers of size 10 on Z^2") {
  CHECK(ref::boundary_size(initial_segment(Z2, 10)) == 28);
  CHECK(ref::boundary_size(two_by_five_rectangle()) == 28);
  const auto r = compressed_min_boundary(Z2, 10);
  CHECK(r.min_boundary_found == 28);
  CHECK(r.witnesses.size() >= 2);
  CHECK(std::find(r.witnesses.begin(), r.witnesses.end(), canonicalize_witness(two_by_five_rectangle())) !=
        r.witnesses.end());
  CHECK(std::find(r.witnesses.begin(), r.witnesses.end(),
                  canonicalize_witness(initial_segment(Z2, 10))) != r.witnesses.end());
}
