#include "linfiso/oracle.hpp"

#include <algorithm>
#include <atomic>
#include <limits>
#include <numeric>
#include <thread>

#include "linfiso/boundary_formula.hpp"
#include "linfiso/error.hpp"
#include "linfiso/lattice.hpp"

namespace linfiso {

namespace {

using Clock = std::chrono::steady_clock;

void require_pure_signature(const DomainSignature& sig) {
  if (!sig.is_pure()) {
    throw DomainError("the oracle compares against initial segments of Z^k or N^k, not " +
                      sig.to_string());
  }
}

// Keep the first `cap` distinct canonical forms, sorted.
std::vector<PointSet> distinct_canonical(const std::vector<PointSet>& sets, std::size_t cap) {
  std::vector<PointSet> out;
  if (cap == 0) return out;
  for (const auto& s : sets) {
    PointSet c = canonicalize_witness(s);
    if (std::find(out.begin(), out.end(), c) == out.end()) out.push_back(std::move(c));
    if (out.size() >= cap) break;
  }
  std::sort(out.begin(), out.end(), canonical_less);
  return out;
}

// Raw minimisers kept per partition before canonicalisation.
std::size_t raw_witness_limit(std::size_t cap) { return std::max<std::size_t>(4096, cap * 64); }

// Dense grid over a box widened by one step (clipped at 0 on natural-type
// coordinates), with per-cell neighbour lists, for counting boundaries
// incrementally.
class BoxSearch {
public:
  BoxSearch(const DomainSignature& sig, const Box& box) : sig_(sig), box_(box) {
    const std::size_t dim = sig.dim();
    padded_lo_.resize(dim);
    std::vector<std::size_t> extent(dim);
    stride_.assign(dim, 1);
    for (std::size_t i = 0; i < dim; ++i) {
      padded_lo_[i] = sig.is_natural_coordinate(i) ? std::max<Coord>(0, box[i].lo - 1) : box[i].lo - 1;
      extent[i] = static_cast<std::size_t>(box[i].hi + 1 - padded_lo_[i] + 1);
    }
    for (std::size_t i = dim; i-- > 1;) stride_[i - 1] = stride_[i] * extent[i];
    padded_size_ = stride_[0] * extent[0];

    // Box cells in lexicographic order, last coordinate fastest.
    LatticePoint p{std::vector<Coord>(dim)};
    for (std::size_t i = 0; i < dim; ++i) p[i] = box[i].lo;
    for (;;) {
      cells_.push_back(p);
      std::size_t i = dim;
      while (i > 0 && p[i - 1] == box[i - 1].hi) {
        p[i - 1] = box[i - 1].lo;
        --i;
      }
      if (i == 0) break;
      ++p[i - 1];
    }
    neighbour_begin_.push_back(0);
    for (const auto& c : cells_) {
      for_each_neighbor(c, sig, [&](const LatticePoint& y) {
        neighbours_.push_back(static_cast<std::uint32_t>(padded_index(y)));
      });
      neighbour_begin_.push_back(static_cast<std::uint32_t>(neighbours_.size()));
    }
  }

  std::size_t cell_count() const { return cells_.size(); }
  const LatticePoint& cell(std::size_t i) const { return cells_[i]; }

  struct Result {
    std::uint64_t best = std::numeric_limits<std::uint64_t>::max();
    std::uint64_t count = 0;
    std::vector<std::vector<std::uint32_t>> raw;
  };

  // All n-subsets whose smallest cell index is `first`.
  void search_partition(std::size_t first, std::size_t n, std::size_t raw_limit,
                        std::vector<std::uint16_t>& counts, Result& result) const {
    std::vector<std::uint32_t> chosen;
    chosen.reserve(n);
    std::uint64_t boundary = 0;
    add(first, counts, boundary);
    chosen.push_back(static_cast<std::uint32_t>(first));
    descend(first + 1, n, chosen, counts, boundary, raw_limit, result);
    remove(first, counts, boundary);
  }

  PointSet to_set(const std::vector<std::uint32_t>& chosen) const {
    std::vector<LatticePoint> pts;
    pts.reserve(chosen.size());
    for (auto c : chosen) pts.push_back(cells_[c]);
    return PointSet(sig_, std::move(pts));
  }

  std::size_t padded_size() const { return padded_size_; }

private:
  std::size_t padded_index(const LatticePoint& y) const {
    std::size_t idx = 0;
    for (std::size_t i = 0; i < y.size(); ++i) {
      idx += static_cast<std::size_t>(y[i] - padded_lo_[i]) * stride_[i];
    }
    return idx;
  }

  void add(std::size_t cell, std::vector<std::uint16_t>& counts, std::uint64_t& boundary) const {
    for (auto k = neighbour_begin_[cell]; k < neighbour_begin_[cell + 1]; ++k) {
      if (counts[neighbours_[k]]++ == 0) ++boundary;
    }
  }

  void remove(std::size_t cell, std::vector<std::uint16_t>& counts, std::uint64_t& boundary) const {
    for (auto k = neighbour_begin_[cell]; k < neighbour_begin_[cell + 1]; ++k) {
      if (--counts[neighbours_[k]] == 0) --boundary;
    }
  }

  void record(std::uint64_t value, const std::vector<std::uint32_t>& chosen, std::size_t raw_limit,
              Result& result) const {
    if (value < result.best) {
      result.best = value;
      result.count = 0;
      result.raw.clear();
    }
    if (value == result.best) {
      ++result.count;
      if (result.raw.size() < raw_limit) result.raw.push_back(chosen);
    }
  }

  void descend(std::size_t start, std::size_t n, std::vector<std::uint32_t>& chosen,
               std::vector<std::uint16_t>& counts, std::uint64_t& boundary,
               std::size_t raw_limit, Result& result) const {
    const std::size_t remaining = n - chosen.size();
    if (remaining == 0) {
      record(boundary, chosen, raw_limit, result);
      return;
    }
    const std::size_t last = cells_.size() - remaining;
    if (remaining == 1) {
      // Leaf level: count the new boundary cells without updating counts.
      for (std::size_t c = start; c <= last; ++c) {
        std::uint64_t fresh = 0;
        for (auto k = neighbour_begin_[c]; k < neighbour_begin_[c + 1]; ++k) {
          fresh += counts[neighbours_[k]] == 0;
        }
        const std::uint64_t value = boundary + fresh;
        if (value <= result.best) {
          chosen.push_back(static_cast<std::uint32_t>(c));
          record(value, chosen, raw_limit, result);
          chosen.pop_back();
        }
      }
      return;
    }
    for (std::size_t c = start; c <= last; ++c) {
      add(c, counts, boundary);
      chosen.push_back(static_cast<std::uint32_t>(c));
      descend(c + 1, n, chosen, counts, boundary, raw_limit, result);
      chosen.pop_back();
      remove(c, counts, boundary);
    }
  }

  DomainSignature sig_;
  Box box_;
  std::vector<Coord> padded_lo_;
  std::vector<std::size_t> stride_;
  std::size_t padded_size_ = 0;
  std::vector<LatticePoint> cells_;
  std::vector<std::uint32_t> neighbour_begin_;
  std::vector<std::uint32_t> neighbours_;
};

void validate_box(const DomainSignature& sig, const Box& box) {
  if (box.size() != sig.dim()) {
    throw DimensionMismatch("box has " + std::to_string(box.size()) + " intervals, domain " +
                            sig.to_string() + " needs " + std::to_string(sig.dim()));
  }
  for (std::size_t i = 0; i < box.size(); ++i) {
    if (box[i].lo > box[i].hi) throw DomainError("empty interval in box");
    if (sig.is_natural_coordinate(i) && box[i].lo < 0) {
      throw DomainError("box reaches below 0 on natural coordinate " + std::to_string(i + 1));
    }
    if (box[i].lo < -(Coord{1} << 30) || box[i].hi > (Coord{1} << 30)) {
      throw DomainError("box interval too wide");
    }
  }
}

} // namespace

std::uint64_t box_volume(const Box& box) {
  std::uint64_t v = 1;
  for (const auto& iv : box) {
    if (iv.lo > iv.hi) return 0;
    v = checked_mul(v, static_cast<std::uint64_t>(iv.hi - iv.lo) + 1);
  }
  return v;
}

bool box_contains(const Box& box, const LatticePoint& p) {
  if (p.size() != box.size()) return false;
  for (std::size_t i = 0; i < box.size(); ++i) {
    if (p[i] < box[i].lo || p[i] > box[i].hi) return false;
  }
  return true;
}

std::string_view to_string(SearchMode mode) {
  return mode == SearchMode::full ? "full" : "compressed_only";
}

SearchMode parse_search_mode(std::string_view name) {
  if (name == "full") return SearchMode::full;
  if (name == "compressed_only" || name == "compressed") return SearchMode::compressed_only;
  throw DomainError("unknown search mode '" + std::string(name) + "'");
}

std::string_view to_string(ReportStatus status) {
  switch (status) {
  case ReportStatus::pass: return "PASS";
  case ReportStatus::falsification: return "FALSIFICATION";
  case ReportStatus::budget_exceeded: return "BUDGET_EXCEEDED";
  }
  return "?";
}

std::uint64_t binomial_capped(std::uint64_t size, std::uint64_t n, std::uint64_t cap) {
  if (n > size) return 0;
  n = std::min(n, size - n);
  // C(size-n+i, i) is non-decreasing in i, so saturating early is exact.
  unsigned __int128 c = 1;
  for (std::uint64_t i = 1; i <= n; ++i) {
    c = c * (size - n + i) / i;
    if (c > cap) return cap == std::numeric_limits<std::uint64_t>::max() ? cap : cap + 1;
  }
  return static_cast<std::uint64_t>(c);
}

Box default_search_box(const DomainSignature& sig, std::size_t n, std::uint64_t budget) {
  require_pure_signature(sig);
  if (n == 0) throw DomainError("search box needs n >= 1");
  const Coord half = static_cast<Coord>((n + 1) / 2);
  const Coord natural_hi = static_cast<Coord>(n);
  // Hull of all compressed sets of size n: coordinate ranks below n.
  const Interval integer_hull{-static_cast<Coord>((n - 1) / 2), static_cast<Coord>(n / 2)};
  const Interval natural_hull{0, static_cast<Coord>(n - 1)};
  for (Coord shrink = 0;; ++shrink) {
    Box box;
    bool at_hull = true;
    for (std::size_t i = 0; i < sig.dim(); ++i) {
      Interval iv;
      if (sig.is_integer_coordinate(i)) {
        iv = {std::min(-half - 1 + shrink, integer_hull.lo),
              std::max(half + 1 - shrink, integer_hull.hi)};
        at_hull = at_hull && iv == integer_hull;
      } else {
        iv = {0, std::max(natural_hi - shrink, natural_hull.hi)};
        at_hull = at_hull && iv == natural_hull;
      }
      box.push_back(iv);
    }
    if (binomial_capped(box_volume(box), n, budget) <= budget) return box;
    if (at_hull) {
      throw BudgetExceeded("no search box for n = " + std::to_string(n) + " on " +
                           sig.to_string() + " fits the budget of " + std::to_string(budget) +
                           " subsets");
    }
  }
}

VerificationReport brute_force_min_boundary(const DomainSignature& sig, std::size_t n,
                                            const Box& box, const OracleOptions& options) {
  const auto started = Clock::now();
  require_pure_signature(sig);
  if (n == 0) throw DomainError("brute force search needs n >= 1");
  validate_box(sig, box);
  for (const auto& p : first_points(sig, n)) {
    if (!box_contains(box, p)) {
      throw DomainError("search box does not contain the initial segment of size " +
                        std::to_string(n) + " (missing " + p.to_string() + ")");
    }
  }
  const std::uint64_t volume = box_volume(box);
  const std::uint64_t subsets = binomial_capped(volume, n, options.budget);
  if (subsets > options.budget) {
    throw BudgetExceeded("C(" + std::to_string(volume) + ", " + std::to_string(n) +
                         ") subsets exceed the budget of " + std::to_string(options.budget));
  }

  BoxSearch search(sig, box);
  const std::size_t partitions = search.cell_count() - n + 1;
  std::vector<BoxSearch::Result> results(partitions);
  const std::size_t raw_limit = raw_witness_limit(options.witness_cap);
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    std::vector<std::uint16_t> counts(search.padded_size(), 0);
    for (std::size_t p; (p = next.fetch_add(1)) < partitions;) {
      search.search_partition(p, n, raw_limit, counts, results[p]);
    }
  };
  unsigned threads = options.threads ? options.threads : std::thread::hardware_concurrency();
  threads = std::max(1u, std::min<unsigned>(threads, static_cast<unsigned>(partitions)));
  if (threads == 1) {
    worker();
  } else {
    std::vector<std::jthread> pool;
    for (unsigned t = 0; t < threads; ++t) pool.emplace_back(worker);
  }

  VerificationReport report(sig);
  report.n = n;
  report.mode = SearchMode::full;
  report.box = box;
  report.search_space_size = subsets;
  report.min_boundary_found = std::numeric_limits<std::uint64_t>::max();
  for (const auto& r : results) report.min_boundary_found = std::min(report.min_boundary_found, r.best);
  std::vector<PointSet> raw;
  for (const auto& r : results) {
    if (r.best != report.min_boundary_found) continue;
    report.witness_count += r.count;
    for (const auto& chosen : r.raw) raw.push_back(search.to_set(chosen));
  }
  report.witnesses = distinct_canonical(raw, options.witness_cap);
  report.initial_segment_boundary = initial_segment_boundary_size(sig, n);
  report.status = report.min_boundary_found < report.initial_segment_boundary
                      ? ReportStatus::falsification
                      : ReportStatus::pass;
  report.elapsed = Clock::now() - started;
  return report;
}

void for_each_compressed_candidate(const DomainSignature& sig, std::size_t n,
                                   std::uint64_t budget,
                                   const std::function<void(const PointSet&)>& fn) {
  // A set is compressed in every coordinate exactly when its rank vectors
  // form a down-set of N^dim. Down-sets are generated by adding points in
  // increasing (rank sum, index) order, each one addable when all of its
  // lower neighbours are present, so every down-set appears exactly once.
  const std::size_t dim = sig.dim();
  if (n == 0) {
    fn(PointSet(sig));
    return;
  }
  std::vector<std::size_t> stride(dim, 1);
  std::size_t cells = 1;
  for (std::size_t i = 0; i < dim; ++i) {
    stride[i] = cells;
    cells = static_cast<std::size_t>(checked_mul(cells, n));
    if (cells > (std::size_t{1} << 28)) {
      throw BudgetExceeded("compressed candidate grid too large for n = " + std::to_string(n));
    }
  }
  auto rank_of = [&](std::size_t idx, std::size_t i) { return idx / stride[i] % n; };
  std::vector<std::size_t> weight(cells, 0);
  for (std::size_t idx = 0; idx < cells; ++idx) {
    for (std::size_t i = 0; i < dim; ++i) weight[idx] += rank_of(idx, i);
  }
  auto later = [&](std::size_t a, std::size_t b) {
    return weight[a] != weight[b] ? weight[a] > weight[b] : a > b;
  };

  std::vector<char> in_set(cells, 0);
  std::vector<std::size_t> members;
  members.reserve(n);
  std::uint64_t emitted = 0;

  auto emit = [&] {
    if (++emitted > budget) {
      throw BudgetExceeded("more than " + std::to_string(budget) +
                           " compressed candidates of size " + std::to_string(n));
    }
    std::vector<LatticePoint> pts;
    pts.reserve(members.size());
    for (std::size_t idx : members) {
      std::vector<Coord> c(dim);
      for (std::size_t i = 0; i < dim; ++i) c[i] = coordinate_from_rank(sig, i, rank_of(idx, i));
      pts.emplace_back(std::move(c));
    }
    fn(PointSet(sig, std::move(pts)));
  };

  auto addable = [&](std::size_t idx) {
    if (in_set[idx]) return false;
    for (std::size_t i = 0; i < dim; ++i) {
      if (rank_of(idx, i) > 0 && !in_set[idx - stride[i]]) return false;
    }
    return true;
  };

  std::function<void()> grow = [&] {
    if (members.size() == n) {
      emit();
      return;
    }
    std::vector<std::size_t> options;
    for (std::size_t m : members) {
      for (std::size_t i = 0; i < dim; ++i) {
        if (rank_of(m, i) + 1 >= n) continue;
        std::size_t up = m + stride[i];
        if (later(up, members.back()) && addable(up)) options.push_back(up);
      }
    }
    std::sort(options.begin(), options.end(), [&](std::size_t a, std::size_t b) { return later(b, a); });
    options.erase(std::unique(options.begin(), options.end()), options.end());
    for (std::size_t up : options) {
      in_set[up] = 1;
      members.push_back(up);
      grow();
      members.pop_back();
      in_set[up] = 0;
    }
  };

  in_set[0] = 1;
  members.push_back(0);
  grow();
}

std::vector<PointSet> enumerate_compressed_candidates(const DomainSignature& sig, std::size_t n,
                                                      std::uint64_t budget) {
  std::vector<PointSet> out;
  for_each_compressed_candidate(sig, n, budget, [&](const PointSet& s) { out.push_back(s); });
  return out;
}

VerificationReport compressed_min_boundary(const DomainSignature& sig, std::size_t n,
                                           const OracleOptions& options) {
  const auto started = Clock::now();
  require_pure_signature(sig);
  if (n == 0) throw DomainError("compressed search needs n >= 1");
  VerificationReport report(sig);
  report.n = n;
  report.mode = SearchMode::compressed_only;
  report.min_boundary_found = std::numeric_limits<std::uint64_t>::max();
  std::vector<PointSet> raw;
  const std::size_t raw_limit = raw_witness_limit(options.witness_cap);
  for_each_compressed_candidate(sig, n, options.budget, [&](const PointSet& s) {
    ++report.search_space_size;
    const std::uint64_t b = vertex_boundary_size(s);
    if (b < report.min_boundary_found) {
      report.min_boundary_found = b;
      report.witness_count = 0;
      raw.clear();
    }
    if (b == report.min_boundary_found) {
      ++report.witness_count;
      if (raw.size() < raw_limit) raw.push_back(s);
    }
  });
  report.witnesses = distinct_canonical(raw, options.witness_cap);
  report.initial_segment_boundary = initial_segment_boundary_size(sig, n);
  report.status = report.min_boundary_found < report.initial_segment_boundary
                      ? ReportStatus::falsification
                      : ReportStatus::pass;
  report.elapsed = Clock::now() - started;
  return report;
}

std::vector<VerificationReport> verify_segment_minimality(const DomainSignature& sig,
                                                          std::size_t n_max, SearchMode mode,
                                                          const OracleOptions& options) {
  require_pure_signature(sig);
  std::vector<VerificationReport> reports;
  for (std::size_t n = 1; n <= n_max; ++n) {
    try {
      if (mode == SearchMode::compressed_only) {
        reports.push_back(compressed_min_boundary(sig, n, options));
      } else {
        Box box = options.box ? *options.box : default_search_box(sig, n, options.budget);
        reports.push_back(brute_force_min_boundary(sig, n, box, options));
      }
    } catch (const BudgetExceeded& e) {
      VerificationReport r(sig);
      r.n = n;
      r.mode = mode;
      r.initial_segment_boundary = initial_segment_boundary_size(sig, n);
      r.status = ReportStatus::budget_exceeded;
      r.note = e.what();
      reports.push_back(std::move(r));
    }
  }
  return reports;
}

FunctionalReport projection_functional_minimum(const DomainSignature& sig, std::size_t n,
                                               std::uint64_t budget) {
  require_pure_signature(sig);
  if (n == 0) throw DomainError("functional minimum needs n >= 1");
  FunctionalReport out;
  out.n = n;
  out.min_functional = std::numeric_limits<std::uint64_t>::max();
  for_each_compressed_candidate(sig, n, budget, [&](const PointSet& s) {
    ++out.candidates;
    out.min_functional = std::min(out.min_functional, projection_functional(s));
  });
  out.initial_segment_functional = projection_functional(initial_segment(sig, n));
  return out;
}

PointSet canonicalize_witness(const PointSet& s) {
  const auto& sig = s.signature();
  require_pure_signature(sig);
  if (s.empty()) return s;
  const std::size_t dim = sig.dim();
  const bool integer = sig.is_pure_integer();
  const std::uint64_t sign_masks = integer ? (std::uint64_t{1} << dim) : 1;

  std::vector<std::size_t> perm(dim);
  std::iota(perm.begin(), perm.end(), std::size_t{0});
  std::optional<PointSet> best;
  do {
    for (std::uint64_t signs = 0; signs < sign_masks; ++signs) {
      std::vector<LatticePoint> image;
      image.reserve(s.size());
      std::vector<Coord> low(dim, std::numeric_limits<Coord>::max());
      for (const auto& p : s) {
        std::vector<Coord> q(dim);
        for (std::size_t i = 0; i < dim; ++i) {
          q[i] = (signs >> i & 1) ? -p[perm[i]] : p[perm[i]];
          low[i] = std::min(low[i], q[i]);
        }
        image.emplace_back(std::move(q));
      }
      if (integer) {
        for (auto& q : image) {
          for (std::size_t i = 0; i < dim; ++i) q[i] -= low[i];
        }
      }
      PointSet candidate(sig, std::move(image));
      if (!best || canonical_less(candidate, *best)) best = std::move(candidate);
    }
  } while (std::next_permutation(perm.begin(), perm.end()));
  return *best;
}

} // namespace linfiso
