#pragma once

// Vertices of the planar grid graph with l1 edges, finite vertex sets and the
// boundary / neighborhood / component primitives everything else builds on.

#include <algorithm>
#include <array>
#include <cstdint>
#include <initializer_list>
#include <numeric>
#include <ostream>
#include <span>
#include <vector>

#include "latiso/error.hpp"

namespace latiso {

using Coord = std::int64_t;

/// Inputs with a coordinate magnitude above this are rejected.
inline constexpr Coord kMaxCoord = Coord{1} << 30;

struct Vertex {
  Coord x = 0;
  Coord y = 0;

  friend constexpr bool operator==(const Vertex&, const Vertex&) = default;

  /// Lexicographic on (y, x).
  friend constexpr auto operator<=>(const Vertex& a, const Vertex& b) {
    if (auto c = a.y <=> b.y; c != 0) return c;
    return a.x <=> b.x;
  }

  constexpr Vertex operator+(const Vertex& o) const { return {x + o.x, y + o.y}; }
  constexpr Vertex operator-(const Vertex& o) const { return {x - o.x, y - o.y}; }

  /// Diagonal coordinates used by boxes and cones.
  constexpr Coord u() const { return y - x; }
  constexpr Coord v() const { return y + x; }
};

inline std::ostream& operator<<(std::ostream& os, const Vertex& p) {
  return os << '(' << p.x << ',' << p.y << ')';
}

inline constexpr std::array<Vertex, 4> kL1Steps{{{1, 0}, {0, 1}, {-1, 0}, {0, -1}}};

inline constexpr std::array<Vertex, 8> kLinfSteps{
    {{1, 0}, {1, 1}, {0, 1}, {-1, 1}, {-1, 0}, {-1, -1}, {0, -1}, {1, -1}}};

constexpr Coord l1_norm(const Vertex& p) {
  return (p.x < 0 ? -p.x : p.x) + (p.y < 0 ? -p.y : p.y);
}

constexpr Coord l1_distance(const Vertex& a, const Vertex& b) { return l1_norm(a - b); }

constexpr Coord linf_distance(const Vertex& a, const Vertex& b) {
  const Coord dx = a.x > b.x ? a.x - b.x : b.x - a.x;
  const Coord dy = a.y > b.y ? a.y - b.y : b.y - a.y;
  return dx > dy ? dx : dy;
}

inline void check_coordinates(const Vertex& p) {
  if (p.x > kMaxCoord || p.x < -kMaxCoord || p.y > kMaxCoord || p.y < -kMaxCoord) {
    throw Error(ErrorKind::CoordinateOverflow, "coordinate magnitude exceeds 2^30");
  }
}

/// A finite set of lattice vertices, stored sorted by (y, x) without duplicates.
class VertexSet {
 public:
  using const_iterator = std::vector<Vertex>::const_iterator;

  VertexSet() = default;

  VertexSet(std::initializer_list<Vertex> vs) : VertexSet(std::vector<Vertex>(vs)) {}

  explicit VertexSet(std::vector<Vertex> vs) : pts_(std::move(vs)) {
    for (const auto& p : pts_) check_coordinates(p);
    std::sort(pts_.begin(), pts_.end());
    pts_.erase(std::unique(pts_.begin(), pts_.end()), pts_.end());
  }

  /// Takes ownership of a vector that is already sorted and duplicate free.
  static VertexSet from_sorted(std::vector<Vertex> vs) {
    VertexSet s;
    s.pts_ = std::move(vs);
    return s;
  }

  std::size_t size() const noexcept { return pts_.size(); }
  bool empty() const noexcept { return pts_.empty(); }
  const_iterator begin() const noexcept { return pts_.begin(); }
  const_iterator end() const noexcept { return pts_.end(); }
  const Vertex& operator[](std::size_t i) const { return pts_[i]; }
  std::span<const Vertex> points() const noexcept { return pts_; }
  const std::vector<Vertex>& vector() const noexcept { return pts_; }

  /// Least vertex in (y, x) order.
  const Vertex& front() const { return pts_.front(); }

  bool contains(const Vertex& p) const {
    return std::binary_search(pts_.begin(), pts_.end(), p);
  }

  VertexSet with(const Vertex& p) const {
    check_coordinates(p);
    std::vector<Vertex> out;
    out.reserve(pts_.size() + 1);
    auto it = std::lower_bound(pts_.begin(), pts_.end(), p);
    out.insert(out.end(), pts_.begin(), it);
    if (it == pts_.end() || *it != p) out.push_back(p);
    out.insert(out.end(), it, pts_.end());
    return from_sorted(std::move(out));
  }

  VertexSet without(const Vertex& p) const {
    std::vector<Vertex> out;
    out.reserve(pts_.size());
    for (const auto& q : pts_) {
      if (q != p) out.push_back(q);
    }
    return from_sorted(std::move(out));
  }

  VertexSet translated(const Vertex& t) const {
    std::vector<Vertex> out;
    out.reserve(pts_.size());
    for (const auto& q : pts_) out.push_back(q + t);
    for (const auto& q : out) check_coordinates(q);
    return from_sorted(std::move(out));
  }

  bool is_subset_of(const VertexSet& other) const {
    return std::includes(other.pts_.begin(), other.pts_.end(), pts_.begin(), pts_.end());
  }

  friend bool operator==(const VertexSet&, const VertexSet&) = default;
  friend auto operator<=>(const VertexSet& a, const VertexSet& b) {
    return std::lexicographical_compare_three_way(a.pts_.begin(), a.pts_.end(),
                                                  b.pts_.begin(), b.pts_.end());
  }

 private:
  std::vector<Vertex> pts_;
};

inline std::ostream& operator<<(std::ostream& os, const VertexSet& s) {
  os << '{';
  bool first = true;
  for (const auto& p : s) {
    if (!first) os << ',';
    os << p;
    first = false;
  }
  return os << '}';
}

inline VertexSet set_union(const VertexSet& a, const VertexSet& b) {
  std::vector<Vertex> out;
  out.reserve(a.size() + b.size());
  std::set_union(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return VertexSet::from_sorted(std::move(out));
}

inline VertexSet set_difference(const VertexSet& a, const VertexSet& b) {
  std::vector<Vertex> out;
  std::set_difference(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return VertexSet::from_sorted(std::move(out));
}

inline VertexSet set_intersection(const VertexSet& a, const VertexSet& b) {
  std::vector<Vertex> out;
  std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return VertexSet::from_sorted(std::move(out));
}

/// Vertices outside A with an l1-neighbor in A.
inline VertexSet boundary(const VertexSet& a) {
  std::vector<Vertex> out;
  out.reserve(4 * a.size());
  for (const auto& p : a) {
    for (const auto& s : kL1Steps) {
      const Vertex q = p + s;
      if (!a.contains(q)) out.push_back(q);
    }
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return VertexSet::from_sorted(std::move(out));
}

inline std::size_t boundary_size(const VertexSet& a) { return boundary(a).size(); }

/// A together with its boundary.
inline VertexSet closed_neighborhood(const VertexSet& a) { return set_union(a, boundary(a)); }

namespace detail {

template <typename Adjacent>
std::vector<VertexSet> components(const VertexSet& a, Adjacent adjacent) {
  const std::size_t n = a.size();
  std::vector<std::size_t> parent(n);
  std::iota(parent.begin(), parent.end(), std::size_t{0});
  auto find = [&](std::size_t i) {
    while (parent[i] != i) i = parent[i] = parent[parent[i]];
    return i;
  };
  for (std::size_t i = 0; i < n; ++i) {
    for (const auto& s : adjacent) {
      const Vertex q = a[i] + s;
      auto it = std::lower_bound(a.begin(), a.end(), q);
      if (it != a.end() && *it == q) {
        const auto j = static_cast<std::size_t>(it - a.begin());
        const auto ri = find(i);
        const auto rj = find(j);
        // The smaller index becomes the root so roots are least vertices.
        if (ri < rj) parent[rj] = ri;
        else if (rj < ri) parent[ri] = rj;
      }
    }
  }
  // Points are sorted, so components come out ordered by their least vertex.
  std::vector<std::vector<Vertex>> groups;
  std::vector<std::size_t> slot(n, n);
  for (std::size_t i = 0; i < n; ++i) {
    const auto r = find(i);
    if (slot[r] == n) {
      slot[r] = groups.size();
      groups.emplace_back();
    }
    groups[slot[r]].push_back(a[i]);
  }
  std::vector<VertexSet> out;
  out.reserve(groups.size());
  for (auto& g : groups) out.push_back(VertexSet::from_sorted(std::move(g)));
  return out;
}

}  // namespace detail

/// Maximal l1-connected subsets, ordered by least (y, x) vertex.
inline std::vector<VertexSet> l1_components(const VertexSet& a) {
  return detail::components(a, kL1Steps);
}

/// Maximal l-infinity-connected subsets, ordered by least (y, x) vertex.
inline std::vector<VertexSet> linf_components(const VertexSet& a) {
  return detail::components(a, kLinfSteps);
}

inline bool is_connected(const VertexSet& a) {
  if (a.empty()) throw Error(ErrorKind::EmptySet, "is_connected of empty set");
  return l1_components(a).size() == 1;
}

inline bool is_linf_connected(const VertexSet& a) {
  if (a.empty()) throw Error(ErrorKind::EmptySet, "is_linf_connected of empty set");
  return linf_components(a).size() == 1;
}

}  // namespace latiso
