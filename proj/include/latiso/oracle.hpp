#pragma once

// Brute-force ground truth for small sizes. Candidates are the sets that are
// connected when cells at l-infinity distance <= 2 count as adjacent, grown
// Redelmeier-style from a fixed root so each translation class appears once.
// Sets that split into two such groups have the sum of the groups' boundaries
// as boundary; a runtime check that every split costs more than the best
// candidate rules them out as minimal.
//
// Nothing here relies on boxes, excess or the characterization except
// verify_characterization, whose job is to compare against them.

#include <algorithm>
#include <array>
#include <cstdint>
#include <functional>
#include <limits>
#include <map>
#include <set>
#include <string>
#include <thread>
#include <vector>

#include "latiso/classify.hpp"
#include "latiso/error.hpp"
#include "latiso/lattice.hpp"
#include "latiso/symmetry.hpp"

namespace latiso {

inline constexpr std::int64_t kDefaultOracleCap = 6;

struct OracleOptions {
  std::int64_t cap = kDefaultOracleCap;
  unsigned threads = 1;
};

struct OracleReport {
  std::int64_t n = 0;
  std::int64_t min_boundary = 0;
  std::vector<VertexSet> classes;  // canonical, sorted
  std::int64_t candidates_examined = 0;
  /// Split bound b(k) + b(n-k) > b(n) held for every k.
  bool certified = false;
  /// Certification failed and a window search replaced the candidate search.
  bool certification_fallback = false;
};

namespace detail {

/// Offsets within l-infinity distance 2, excluding the origin.
inline const std::array<Vertex, 24>& oracle_steps() {
  static const std::array<Vertex, 24> steps = [] {
    std::array<Vertex, 24> s{};
    std::size_t i = 0;
    for (Coord dy = -2; dy <= 2; ++dy) {
      for (Coord dx = -2; dx <= 2; ++dx) {
        if (dx != 0 || dy != 0) s[i++] = {dx, dy};
      }
    }
    return s;
  }();
  return steps;
}

/// Boundary size by direct counting over a small grid.
class BoundaryCounter {
 public:
  explicit BoundaryCounter(std::int64_t radius) : r_(radius + 2), w_(2 * r_ + 1), cells_(w_ * w_, 0) {}

  std::int64_t operator()(const std::vector<Vertex>& a) {
    ++stamp_;
    for (const auto& p : a) cells_[index(p)] = mark(stamp_, 1);
    std::int64_t count = 0;
    for (const auto& p : a) {
      for (const auto& s : kL1Steps) {
        auto& c = cells_[index(p + s)];
        if (c == mark(stamp_, 1) || c == mark(stamp_, 2)) continue;
        c = mark(stamp_, 2);
        ++count;
      }
    }
    return count;
  }

 private:
  static std::uint64_t mark(std::uint64_t stamp, std::uint64_t tag) { return stamp * 4 + tag; }
  std::size_t index(const Vertex& p) const {
    return static_cast<std::size_t>((p.y + r_) * w_ + (p.x + r_));
  }
  std::int64_t r_, w_;
  std::vector<std::uint64_t> cells_;
  std::uint64_t stamp_ = 0;
};

/// Redelmeier growth restricted to one first-layer branch (or all when branch < 0).
class CandidateGrower {
 public:
  using Visit = std::function<void(const std::vector<Vertex>&)>;

  CandidateGrower(std::int64_t n, Visit visit)
      : n_(n), r_(2 * n + 2), w_(2 * r_ + 1), seen_(w_ * w_, 0), visit_(std::move(visit)) {}

  /// Cells a set may use: the root (0,0) is its least cell in (y, x) order.
  static bool allowed(const Vertex& p) { return p.y > 0 || (p.y == 0 && p.x >= 0); }

  std::vector<Vertex> first_layer() const {
    std::vector<Vertex> out;
    for (const auto& s : oracle_steps()) {
      if (allowed(s)) out.push_back(s);
    }
    return out;
  }

  void run(std::int64_t branch = -1) {
    current_.assign(1, Vertex{0, 0});
    seen(Vertex{0, 0}) = 1;
    if (n_ == 1) {
      visit_(current_);
      return;
    }
    std::vector<Vertex> untried = first_layer();
    for (const auto& p : untried) seen(p) = 1;
    if (branch < 0) {
      grow(untried);
      return;
    }
    // Branch b pops untried[b] first; earlier entries are spent.
    const auto b = static_cast<std::size_t>(branch);
    std::vector<Vertex> rest(untried.begin() + static_cast<std::ptrdiff_t>(b), untried.end());
    std::reverse(rest.begin(), rest.end());
    grow_from(rest);
  }

 private:
  // Untried cells are kept as a stack; grow pops from the back.
  void grow(std::vector<Vertex> untried) {
    std::reverse(untried.begin(), untried.end());
    while (!untried.empty()) {
      step(untried);
    }
  }

  void grow_from(std::vector<Vertex> untried) {
    if (!untried.empty()) step(untried);
  }

  void step(std::vector<Vertex>& untried) {
    const Vertex c = untried.back();
    untried.pop_back();
    current_.push_back(c);
    if (static_cast<std::int64_t>(current_.size()) == n_) {
      visit_(current_);
    } else {
      std::vector<Vertex> added;
      for (const auto& s : oracle_steps()) {
        const Vertex q = c + s;
        if (!allowed(q) || seen(q)) continue;
        seen(q) = 1;
        added.push_back(q);
      }
      std::vector<Vertex> next = untried;
      next.insert(next.end(), added.begin(), added.end());
      while (!next.empty()) step(next);
      for (const auto& q : added) seen(q) = 0;
    }
    current_.pop_back();
  }

  std::uint8_t& seen(const Vertex& p) {
    return seen_[static_cast<std::size_t>((p.y + r_) * w_ + (p.x + r_))];
  }

  std::int64_t n_, r_, w_;
  std::vector<std::uint8_t> seen_;
  std::vector<Vertex> current_;
  Visit visit_;
};

/// Every set of size n whose least cell is the origin inside a square window
/// of side 3n; covers sets of any connectivity whose clusters are not too far
/// apart.
inline void for_each_window_set(std::int64_t n, const CandidateGrower::Visit& visit) {
  const Coord side = 3 * n;
  std::vector<Vertex> cells;
  for (Coord y = 0; y < side; ++y) {
    for (Coord x = -side + 1; x < side; ++x) {
      if (CandidateGrower::allowed({x, y}) && !(x == 0 && y == 0)) cells.push_back({x, y});
    }
  }
  std::vector<Vertex> cur{{0, 0}};
  std::function<void(std::size_t)> rec = [&](std::size_t from) {
    if (static_cast<std::int64_t>(cur.size()) == n) {
      visit(cur);
      return;
    }
    for (std::size_t i = from; i < cells.size(); ++i) {
      cur.push_back(cells[i]);
      rec(i + 1);
      cur.pop_back();
    }
  };
  rec(0);
}

using IndexedVisit = std::function<void(unsigned, const std::vector<Vertex>&)>;

/// Threads partition the search by the first cell added after the root; the
/// visitor receives the worker index.
inline void for_each_candidate_indexed(std::int64_t n, const IndexedVisit& visit, unsigned threads) {
  if (n < 1) throw Error(ErrorKind::InvalidSize, "oracle needs n >= 1");
  if (threads <= 1 || n == 1) {
    CandidateGrower(n, [&](const std::vector<Vertex>& a) { visit(0, a); }).run();
    return;
  }
  const auto branches = static_cast<std::int64_t>(CandidateGrower(n, {}).first_layer().size());
  std::vector<std::thread> pool;
  for (unsigned t = 0; t < threads; ++t) {
    pool.emplace_back([&, t] {
      CandidateGrower g(n, [&](const std::vector<Vertex>& a) { visit(t, a); });
      for (std::int64_t b = t; b < branches; b += threads) g.run(b);
    });
  }
  for (auto& th : pool) th.join();
}

}  // namespace detail

/// Calls visit on every candidate set of size n, as an unsorted vertex list.
/// With several threads the visitor must be thread-safe.
inline void for_each_oracle_candidate(std::int64_t n,
                                      const std::function<void(const std::vector<Vertex>&)>& visit,
                                      unsigned threads = 1) {
  detail::for_each_candidate_indexed(
      n, [&](unsigned, const std::vector<Vertex>& a) { visit(a); }, threads);
}

namespace detail {

struct OracleScan {
  std::int64_t min_boundary = std::numeric_limits<std::int64_t>::max();
  std::int64_t examined = 0;
  std::set<VertexSet> classes;
};

inline OracleScan oracle_scan(std::int64_t n, bool window, unsigned threads) {
  const unsigned workers = window ? 1 : std::max(1u, threads);
  std::vector<OracleScan> parts(workers);
  std::vector<BoundaryCounter> counters;
  for (unsigned i = 0; i < workers; ++i) counters.emplace_back(window ? 3 * n : 2 * n + 2);
  auto visit = [&](unsigned w, const std::vector<Vertex>& a) {
    auto& part = parts[w];
    ++part.examined;
    const std::int64_t b = counters[w](a);
    if (b > part.min_boundary) return;
    if (b < part.min_boundary) {
      part.min_boundary = b;
      part.classes.clear();
    }
    part.classes.insert(canonical_form(VertexSet(a)));
  };
  if (window) {
    for_each_window_set(n, [&](const std::vector<Vertex>& a) { visit(0, a); });
  } else {
    for_each_candidate_indexed(n, visit, workers);
  }
  OracleScan out;
  for (auto& p : parts) {
    out.examined += p.examined;
    if (p.min_boundary < out.min_boundary) {
      out.min_boundary = p.min_boundary;
      out.classes.clear();
    }
    if (p.min_boundary == out.min_boundary) out.classes.insert(p.classes.begin(), p.classes.end());
  }
  return out;
}

inline void check_cap(std::int64_t n, const OracleOptions& opts) {
  if (n < 1) throw Error(ErrorKind::InvalidSize, "oracle needs n >= 1");
  if (n > opts.cap) {
    throw Error(ErrorKind::SizeTooLarge,
                "oracle size " + std::to_string(n) + " above cap " + std::to_string(opts.cap));
  }
}

}  // namespace detail

/// All congruence classes of size-n sets with the least boundary.
inline OracleReport brute_minimal_classes(std::int64_t n, OracleOptions opts = {}) {
  detail::check_cap(n, opts);
  // Minimum boundaries for smaller sizes, needed by the split bound.
  std::vector<std::int64_t> b(static_cast<std::size_t>(n) + 1, 0);
  for (std::int64_t k = 1; k < n; ++k) {
    b[static_cast<std::size_t>(k)] = detail::oracle_scan(k, false, opts.threads).min_boundary;
  }
  auto scan = detail::oracle_scan(n, false, opts.threads);
  OracleReport rep;
  rep.n = n;
  rep.certified = true;
  for (std::int64_t k = 1; k < n; ++k) {
    if (b[static_cast<std::size_t>(k)] + b[static_cast<std::size_t>(n - k)] <= scan.min_boundary) {
      rep.certified = false;
    }
  }
  if (!rep.certified) {
    scan = detail::oracle_scan(n, true, 1);
    rep.certification_fallback = true;
  }
  rep.min_boundary = scan.min_boundary;
  rep.candidates_examined = scan.examined;
  rep.classes.assign(scan.classes.begin(), scan.classes.end());
  return rep;
}

inline std::int64_t brute_min_boundary(std::int64_t n, OracleOptions opts = {}) {
  return brute_minimal_classes(n, opts).min_boundary;
}

struct VerificationResult {
  bool ok = true;
  std::int64_t candidates_examined = 0;
  std::int64_t min_boundary = 0;
  /// Canonical forms where some minimality test disagrees with the brute force.
  std::vector<VertexSet> discrepancies;
};

/// Compares brute-force minimality of every candidate against the enclosing
/// box test, the cone test and the excess test.
inline VerificationResult verify_characterization(std::int64_t n, OracleOptions opts = {}) {
  const OracleReport rep = brute_minimal_classes(n, opts);
  VerificationResult res;
  res.min_boundary = rep.min_boundary;
  const unsigned workers = rep.certification_fallback ? 1 : std::max(1u, opts.threads);
  std::vector<std::set<VertexSet>> bad_parts(workers);
  std::vector<std::int64_t> counts(workers, 0);
  auto check = [&](unsigned w, const std::vector<Vertex>& pts) {
    const VertexSet a(pts);
    const bool truth = static_cast<std::int64_t>(boundary_size(a)) == rep.min_boundary;
    const bool ok = is_minimal(a) == truth && is_minimal_by_cones(a) == truth &&
                    is_minimal_by_excess(a) == truth;
    ++counts[w];
    if (!ok) bad_parts[w].insert(canonical_form(a));
  };
  if (rep.certification_fallback) {
    detail::for_each_window_set(n, [&](const std::vector<Vertex>& a) { check(0, a); });
  } else {
    detail::for_each_candidate_indexed(n, check, workers);
  }
  std::set<VertexSet> bad;
  for (unsigned w = 0; w < workers; ++w) {
    res.candidates_examined += counts[w];
    bad.insert(bad_parts[w].begin(), bad_parts[w].end());
  }
  res.discrepancies.assign(bad.begin(), bad.end());
  res.ok = res.discrepancies.empty();
  return res;
}

}  // namespace latiso
