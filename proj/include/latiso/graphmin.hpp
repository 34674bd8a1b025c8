#pragma once

// Congruence classes of minimal sets, the graded graph whose edges join
// classes differing by one vertex, and component analysis of that graph.
//
// Enumeration works box by box. A minimal set A and its enclosing box B are
// joined by a chain of minimal sets, each one vertex larger than the last, so
// walking down from B and keeping only minimal sets with the same enclosing
// box reaches every minimal set whose enclosing box is congruent to B.
// Congruent sets have congruent enclosing boxes, so different standard boxes
// never produce the same class.

#include <algorithm>
#include <cstdint>
#include <map>
#include <numeric>
#include <optional>
#include <set>
#include <string>
#include <thread>
#include <utility>
#include <vector>

#include "latiso/boxes.hpp"
#include "latiso/classify.hpp"
#include "latiso/lattice.hpp"
#include "latiso/symmetry.hpp"

namespace latiso {

struct MinClassFlags {
  bool dead = false;
  bool mortal = false;
  bool efficient = false;
  bool uniquely_minimal = false;
  bool connected = false;

  friend bool operator==(const MinClassFlags&, const MinClassFlags&) = default;
};

struct MinClass {
  VertexSet canonical;
  std::int64_t grading = 0;
  StandardForm enc_standard;
  MinClassFlags flags;
};

struct MinGraph {
  std::vector<MinClass> nodes;  // sorted by (grading, canonical)
  std::vector<std::pair<std::size_t, std::size_t>> edges;  // (lower, upper), sorted
  std::int64_t n_max = 0;

  /// Node index of a canonical form, if present.
  std::optional<std::size_t> find(const VertexSet& canonical) const {
    auto it = std::lower_bound(nodes.begin(), nodes.end(), canonical,
                               [](const MinClass& c, const VertexSet& key) {
                                 if (c.grading != static_cast<std::int64_t>(key.size())) {
                                   return c.grading < static_cast<std::int64_t>(key.size());
                                 }
                                 return c.canonical < key;
                               });
    if (it == nodes.end() || it->canonical != canonical) return std::nullopt;
    return static_cast<std::size_t>(it - nodes.begin());
  }

  std::vector<std::vector<std::size_t>> adjacency() const {
    std::vector<std::vector<std::size_t>> adj(nodes.size());
    for (const auto& [lo, hi] : edges) {
      adj[lo].push_back(hi);
      adj[hi].push_back(lo);
    }
    return adj;
  }
};

struct ComponentSummary {
  /// Unknown when the summary is derived without building the component.
  std::optional<std::int64_t> member_count;
  std::int64_t grading_min = 0;
  std::int64_t grading_max = 0;
  /// Distinct gradings present, ascending.
  std::vector<std::int64_t> gradings;
  /// Nodes on the longest chain of edges with increasing grading.
  std::int64_t height = 0;
  bool isolated = false;
  bool contains_immortal = false;
  /// Touches the largest grading of the build, so the height is a lower bound.
  bool truncated = false;
  std::vector<std::size_t> members;  // node indices, empty for derived summaries
};

struct EnumerationOptions {
  unsigned threads = 1;
};

namespace detail {

/// Standard forms whose box may contain minimal sets of some size in [lo, hi].
/// Excess is at most alpha for alpha >= 2 once excess is nonnegative, and
/// |B(alpha, beta)| >= |B(alpha, alpha)| for beta >= alpha, so the outer loop
/// stops once |B(alpha, alpha)| - 1 - alpha exceeds hi.
inline std::vector<StandardForm> candidate_boxes(std::int64_t lo, std::int64_t hi) {
  std::vector<StandardForm> out;
  for (std::int64_t al = 0;; ++al) {
    if (al >= 2 && box_size(StandardForm{BoxKind::B, al, al}) - 1 - al > hi) break;
    for (std::int64_t be = al;; ++be) {
      const std::int64_t gap = be - al;
      // Nonnegative excess needs gap^2 <= 4 floor(r) <= 2 (alpha + beta).
      if (gap * gap > 2 * (al + be)) break;
      if (al == 0 && be % 2 == 1) continue;
      std::vector<StandardForm> forms{{BoxKind::B, al, be}};
      if (al >= 2 && al % 2 == 0 && be % 2 == 0) forms.push_back({BoxKind::Bhat, al, be});
      for (const auto& f : forms) {
        const auto size = box_size(f);
        const auto exc = box_excess(f);
        if (exc < 0) continue;
        if (size - exc > hi || size < lo) continue;
        out.push_back(f);
      }
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

inline MinClass make_class(const VertexSet& set, const StandardForm& f, bool whole_box) {
  MinClass c;
  c.canonical = canonical_form(set);
  c.grading = static_cast<std::int64_t>(set.size());
  c.enc_standard = f;
  c.flags.efficient = whole_box && is_efficient_form(f);
  c.flags.dead = whole_box && !is_efficient_form(f);
  c.flags.mortal = !is_efficient_form(f);
  c.flags.uniquely_minimal = whole_box && is_uniquely_minimal_form(f);
  c.flags.connected = is_connected(set);
  return c;
}

/// All classes of minimal sets with enclosing box congruent to f and size in [lo, hi].
inline std::vector<MinClass> classes_in_box(const StandardForm& f, std::int64_t lo,
                                            std::int64_t hi) {
  const Box box = standard_box(f);
  const std::int64_t size = box_size(f);
  const std::int64_t exc = box_excess(f);
  std::vector<MinClass> out;

  // Current level: canonical form -> a representative lying inside `box`.
  std::map<VertexSet, VertexSet> level;
  const VertexSet full = box_to_set(box);
  level.emplace(canonical_form(full), full);
  for (std::int64_t removed = 0;; ++removed) {
    const std::int64_t grading = size - removed;
    if (grading >= lo && grading <= hi) {
      for (const auto& [canon, rep] : level) out.push_back(make_class(rep, f, removed == 0));
    }
    if (removed == exc || grading - 1 < std::max<std::int64_t>(lo, 1)) break;
    std::map<VertexSet, VertexSet> next;
    for (const auto& [canon, rep] : level) {
      for (const auto& p : rep) {
        VertexSet smaller = rep.without(p);
        if (enclosing_box(smaller) != box) continue;
        if (!is_minimal(smaller)) continue;
        auto key = canonical_form(smaller);
        next.try_emplace(std::move(key), std::move(smaller));
      }
    }
    if (next.empty()) break;
    level = std::move(next);
  }
  return out;
}

inline bool class_less(const MinClass& a, const MinClass& b) {
  if (a.grading != b.grading) return a.grading < b.grading;
  return a.canonical < b.canonical;
}

}  // namespace detail

/// Every congruence class of minimal sets with size in [lo, hi], sorted by
/// (grading, canonical form).
inline std::vector<MinClass> enumerate_minimal_classes_range(std::int64_t lo, std::int64_t hi,
                                                             EnumerationOptions opts = {}) {
  if (lo < 1 || hi < lo) throw Error(ErrorKind::InvalidSize, "enumeration needs 1 <= lo <= hi");
  const auto boxes = detail::candidate_boxes(lo, hi);
  std::vector<std::vector<MinClass>> per_box(boxes.size());
  const unsigned threads = std::max(1u, opts.threads);
  if (threads == 1) {
    for (std::size_t i = 0; i < boxes.size(); ++i) per_box[i] = detail::classes_in_box(boxes[i], lo, hi);
  } else {
    std::vector<std::thread> pool;
    for (unsigned t = 0; t < threads; ++t) {
      pool.emplace_back([&, t] {
        for (std::size_t i = t; i < boxes.size(); i += threads) {
          per_box[i] = detail::classes_in_box(boxes[i], lo, hi);
        }
      });
    }
    for (auto& th : pool) th.join();
  }
  std::vector<MinClass> out;
  for (auto& v : per_box) {
    for (auto& c : v) out.push_back(std::move(c));
  }
  std::sort(out.begin(), out.end(), detail::class_less);
  return out;
}

inline std::vector<MinClass> enumerate_minimal_classes(std::int64_t n, EnumerationOptions opts = {}) {
  if (n < 1) throw Error(ErrorKind::InvalidSize, "enumerate_minimal_classes needs n >= 1");
  return enumerate_minimal_classes_range(n, n, opts);
}

/// Classes of sizes 1..n_max with all edges between them. Edges are found
/// upward: a symmetric difference of one between sets of sizes n and n+1 means
/// the larger contains the smaller. Only vertices within l1-distance 2 are
/// tried; anything farther adds 4 to the boundary, more than a minimal set of
/// the next size can have.
inline MinGraph build_graph(std::int64_t n_max, EnumerationOptions opts = {}) {
  if (n_max < 1) throw Error(ErrorKind::InvalidSize, "build_graph needs n_max >= 1");
  MinGraph g;
  g.n_max = n_max;
  g.nodes = enumerate_minimal_classes_range(1, n_max, opts);
  std::set<std::pair<std::size_t, std::size_t>> edges;
  for (std::size_t i = 0; i < g.nodes.size(); ++i) {
    const auto& node = g.nodes[i];
    if (node.grading >= n_max) continue;
    for (const auto& v : saturation_candidates(node.canonical)) {
      VertexSet bigger = node.canonical.with(v);
      if (!is_minimal(bigger)) continue;
      const auto j = g.find(canonical_form(bigger));
      if (!j) throw std::logic_error("minimal extension missing from enumeration");
      edges.emplace(i, *j);
    }
  }
  g.edges.assign(edges.begin(), edges.end());
  return g;
}

namespace detail {

inline ComponentSummary summarize(const MinGraph& g, std::vector<std::size_t> members,
                                  const std::vector<std::vector<std::size_t>>& adj) {
  ComponentSummary s;
  std::sort(members.begin(), members.end());  // node order is by grading
  s.member_count = static_cast<std::int64_t>(members.size());
  s.grading_min = g.nodes[members.front()].grading;
  s.grading_max = g.nodes[members.back()].grading;
  std::map<std::size_t, std::int64_t> chain;  // longest increasing chain ending at node
  for (auto m : members) {
    std::int64_t best = 1;
    for (auto w : adj[m]) {
      if (g.nodes[w].grading + 1 == g.nodes[m].grading) best = std::max(best, chain[w] + 1);
    }
    chain[m] = best;
    s.height = std::max(s.height, best);
    if (s.gradings.empty() || s.gradings.back() != g.nodes[m].grading) {
      s.gradings.push_back(g.nodes[m].grading);
    }
    if (!g.nodes[m].flags.mortal) s.contains_immortal = true;
  }
  s.isolated = members.size() == 1 && adj[members.front()].empty();
  s.truncated = s.grading_max >= g.n_max;
  s.members = std::move(members);
  return s;
}

}  // namespace detail

/// Connected components, ordered by their first node.
inline std::vector<ComponentSummary> components(const MinGraph& g) {
  const auto adj = g.adjacency();
  std::vector<std::size_t> comp(g.nodes.size(), SIZE_MAX);
  std::vector<ComponentSummary> out;
  for (std::size_t start = 0; start < g.nodes.size(); ++start) {
    if (comp[start] != SIZE_MAX) continue;
    std::vector<std::size_t> members{start};
    comp[start] = out.size();
    for (std::size_t k = 0; k < members.size(); ++k) {
      for (auto w : adj[members[k]]) {
        if (comp[w] == SIZE_MAX) {
          comp[w] = out.size();
          members.push_back(w);
        }
      }
    }
    out.push_back(detail::summarize(g, std::move(members), adj));
  }
  return out;
}

/// Component containing the given node.
inline ComponentSummary component_of(const MinGraph& g, std::size_t node) {
  for (auto& c : components(g)) {
    if (std::binary_search(c.members.begin(), c.members.end(), node)) return c;
  }
  throw Error(ErrorKind::InvalidSize, "node index out of range");
}

/// Degree-zero nodes below the top grading; those at n_max may only look
/// isolated because the build stops there.
inline std::vector<MinClass> isolated_vertices(const MinGraph& g) {
  std::vector<std::size_t> degree(g.nodes.size(), 0);
  for (const auto& [lo, hi] : g.edges) {
    ++degree[lo];
    ++degree[hi];
  }
  std::vector<MinClass> out;
  for (std::size_t i = 0; i < g.nodes.size(); ++i) {
    if (degree[i] == 0 && g.nodes[i].grading < g.n_max) out.push_back(g.nodes[i]);
  }
  return out;
}

/// Which hypothesis of the finite-component criterion a box fails.
enum class ComponentHypothesis { Excess, Modulus, Dead, StandardLines };

inline const char* to_string(ComponentHypothesis h) {
  switch (h) {
    case ComponentHypothesis::Excess: return "excess";
    case ComponentHypothesis::Modulus: return "modulus";
    case ComponentHypothesis::Dead: return "dead";
    case ComponentHypothesis::StandardLines: return "standard-lines";
  }
  return "?";
}

/// Every failing hypothesis, in the order excess, modulus, dead, standard lines.
inline std::vector<ComponentHypothesis> failed_component_hypotheses(const Box& box) {
  std::vector<ComponentHypothesis> failed;
  const StandardForm f = standard_form(box);
  const std::int64_t d = box_excess(f);
  if (d < 0) failed.push_back(ComponentHypothesis::Excess);
  if (f.alpha < 2) failed.push_back(ComponentHypothesis::Modulus);
  // A box of nonnegative excess is minimal, so dead means inefficient.
  if (d < 0 || is_efficient_form(f)) failed.push_back(ComponentHypothesis::Dead);
  for (auto n : standard_line_counts(box)) {
    if (n < d + 2) {
      failed.push_back(ComponentHypothesis::StandardLines);
      break;
    }
  }
  return failed;
}

/// Component of a box from its excess alone, for boxes with nonnegative excess
/// d, both moduli at least 2, at least d + 2 points on every standard line
/// meeting it, and no minimal one-vertex extension. Such a component holds
/// exactly the sizes |B| - d .. |B| and has height d + 1. Throws
/// HypothesisFailed naming the first failing hypothesis otherwise.
inline ComponentSummary classify_component_of_box(const Box& box) {
  const auto failed = failed_component_hypotheses(box);
  if (!failed.empty()) {
    std::string all;
    for (auto h : failed) all += std::string(all.empty() ? "" : ",") + to_string(h);
    throw Error(ErrorKind::HypothesisFailed,
                std::string(to_string(failed.front())) + " (failed: " + all + ")");
  }
  const std::int64_t d = box_excess(box);
  const std::int64_t size = box_size(box);
  ComponentSummary s;
  s.grading_min = size - d;
  s.grading_max = size;
  for (std::int64_t k = s.grading_min; k <= s.grading_max; ++k) s.gradings.push_back(k);
  s.height = d + 1;
  s.isolated = d == 0;
  if (d == 0) s.member_count = 1;
  s.contains_immortal = false;
  return s;
}

}  // namespace latiso
