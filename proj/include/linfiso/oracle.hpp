#ifndef LINFISO_ORACLE_HPP
#define LINFISO_ORACLE_HPP

#include <chrono>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "linfiso/point_set.hpp"

namespace linfiso {

struct Interval {
  Coord lo;
  Coord hi;
  friend bool operator==(const Interval&, const Interval&) = default;
};

/// Product of closed intervals, one per coordinate.
using Box = std::vector<Interval>;

std::uint64_t box_volume(const Box& box);
bool box_contains(const Box& box, const LatticePoint& p);

enum class SearchMode {
  full,            // every n-subset of a box
  compressed_only, // only sets compressed in every coordinate
};

std::string_view to_string(SearchMode mode);
SearchMode parse_search_mode(std::string_view name);

struct OracleOptions {
  /// Maximum number of subsets (or compressed candidates) enumerated per n.
  std::uint64_t budget = 50'000'000;
  /// Maximum number of distinct witnesses kept per report.
  std::size_t witness_cap = 64;
  /// Worker threads for full enumeration; 0 means hardware concurrency.
  unsigned threads = 0;
  /// Full mode: search this box for every n instead of default_search_box.
  std::optional<Box> box;
};

enum class ReportStatus { pass, falsification, budget_exceeded };

std::string_view to_string(ReportStatus status);

struct VerificationReport {
  explicit VerificationReport(DomainSignature s) : sig(s) {}

  DomainSignature sig;
  std::size_t n = 0;
  SearchMode mode = SearchMode::full;
  /// Smallest |boundary| over the searched sets.
  std::uint64_t min_boundary_found = 0;
  std::uint64_t initial_segment_boundary = 0;
  /// Number of searched sets attaining the minimum.
  std::uint64_t witness_count = 0;
  /// Distinct minimisers up to symmetry, canonical forms, at most
  /// witness_cap of them, in canonical order.
  std::vector<PointSet> witnesses;
  /// Subsets (full) or compressed candidates enumerated.
  std::uint64_t search_space_size = 0;
  std::chrono::duration<double> elapsed{};
  ReportStatus status = ReportStatus::pass;
  /// The searched box (full mode), empty otherwise.
  Box box;
  /// Reason for budget_exceeded.
  std::string note;

  bool falsified() const noexcept { return status == ReportStatus::falsification; }
};

/// n-subsets of a box, n <= size, counted with saturation at `cap + 1`.
std::uint64_t binomial_capped(std::uint64_t size, std::uint64_t n, std::uint64_t cap);

/// Box for the full search of size-n sets.
///
/// Starts from [-ceil(n/2)-1, ceil(n/2)+1] per integer coordinate and [0, n]
/// per natural one and shrinks it while the subset count exceeds the budget,
/// never below the hull of all compressed size-n sets (which contains the
/// initial segment). Throws BudgetExceeded if even that hull is too large.
Box default_search_box(const DomainSignature& sig, std::size_t n,
                       std::uint64_t budget);

/// Enumerate every n-subset of `box`, compute each boundary directly in the
/// unbounded lattice, and report the minimum and its witnesses.
///
/// Pure signatures only. Throws BudgetExceeded when C(|box|, n) exceeds the
/// budget and DomainError when the box misses part of the initial segment.
VerificationReport brute_force_min_boundary(const DomainSignature& sig, std::size_t n,
                                            const Box& box,
                                            const OracleOptions& options = {});

/// Calls fn once for every size-n set compressed in every coordinate.
/// Throws BudgetExceeded as soon as more than `budget` sets have been seen.
void for_each_compressed_candidate(const DomainSignature& sig, std::size_t n,
                                   std::uint64_t budget,
                                   const std::function<void(const PointSet&)>& fn);

std::vector<PointSet> enumerate_compressed_candidates(const DomainSignature& sig,
                                                      std::size_t n,
                                                      std::uint64_t budget = 50'000'000);

/// Minimum boundary over the compressed candidates of size n.
VerificationReport compressed_min_boundary(const DomainSignature& sig, std::size_t n,
                                           const OracleOptions& options = {});

/// For n = 1..n_max, search for a set smaller-boundaried than the initial
/// segment. A budget overrun is reported in that n's record and the run
/// continues.
std::vector<VerificationReport> verify_segment_minimality(const DomainSignature& sig,
                                                          std::size_t n_max,
                                                          SearchMode mode,
                                                          const OracleOptions& options = {});

/// Minimum of projection_functional() over the compressed candidates of
/// size n, next to its value at the initial segment.
struct FunctionalReport {
  std::size_t n = 0;
  std::uint64_t min_functional = 0;
  std::uint64_t initial_segment_functional = 0;
  std::uint64_t candidates = 0;
};

FunctionalReport projection_functional_minimum(const DomainSignature& sig, std::size_t n,
                                               std::uint64_t budget = 50'000'000);

/// Least member (canonical_less) of the orbit of S under the symmetries of
/// the lattice graph: translations, coordinate permutations and sign flips on
/// Z^k; coordinate permutations on N^k. Orbit members are compared after
/// translating their bounding box to start at the origin (Z^k only).
/// Throws DomainError on mixed signatures.
PointSet canonicalize_witness(const PointSet& s);

} // namespace linfiso

#endif
