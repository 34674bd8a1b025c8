#pragma once

// The Wang-Wang nested sequence of minimal sets and its boundary-size table.
//
// Order of vertices: x1 = (0,0), then layer by layer. Once the l1-ball of
// radius n is complete, the next layer |x|+|y| = n+1 is added as four rows
// written in diagonal coordinates (u, v) = (y - x, y + x):
//   1. v = n+1,    u = n-1, n-3, ..., -n+1        (n vertices)
//   2. u = -(n+1), v = n+1, n-1, ..., -n+1        (n+1 vertices)
//   3. u = n+1,    v = n+1, n-1, ..., -n+1        (n+1 vertices)
//   4. v = -(n+1), u = n+1, n-1, ..., -n-1        (n+2 vertices)
// Each row starts next to what is already present, so its first vertex adds
// one to the boundary and every later vertex adds nothing. The boxes passed on
// the way are B(2n,2n), B(2n,2n+1), B(2n+1,2n+1), B(2n+1,2n+2).

#include <algorithm>
#include <cstdint>
#include <mutex>
#include <string>
#include <unordered_set>
#include <vector>

#include "latiso/lattice.hpp"

namespace latiso {

struct VertexHash {
  std::size_t operator()(const Vertex& p) const noexcept {
    const auto h = static_cast<std::uint64_t>(p.x) * 0x9e3779b97f4a7c15ULL ^
                   (static_cast<std::uint64_t>(p.y) + 0x632be59bd9b4e019ULL);
    return static_cast<std::size_t>(h ^ (h >> 29));
  }
};

/// Size of the l1-ball of radius m.
constexpr std::int64_t ball_size(std::int64_t m) { return 2 * m * m + 2 * m + 1; }

namespace detail {

/// Lazily grown, process-wide table of the sequence and |boundary(WW_n)|.
class WangWangTable {
 public:
  static WangWangTable& instance() {
    static WangWangTable table;
    return table;
  }

  Vertex vertex(std::size_t index) {
    std::lock_guard lock(mu_);
    grow_to(index + 1);
    return order_[index];
  }

  std::vector<Vertex> prefix(std::size_t n) {
    std::lock_guard lock(mu_);
    grow_to(n);
    return {order_.begin(), order_.begin() + static_cast<std::ptrdiff_t>(n)};
  }

  std::int64_t boundary(std::size_t n) {
    std::lock_guard lock(mu_);
    grow_to(n);
    return bdry_[n - 1];
  }

  /// Smallest n with boundary(n) == b, or 0 if the value is skipped.
  std::size_t first_with_boundary(std::int64_t b) {
    std::lock_guard lock(mu_);
    while (bdry_.empty() || bdry_.back() < b) grow_to(order_.size() + 64);
    if (b == 4) return 1;
    auto it = std::lower_bound(bdry_.begin(), bdry_.end(), b);
    if (it == bdry_.end() || *it != b) return 0;
    return static_cast<std::size_t>(it - bdry_.begin()) + 1;
  }

 private:
  WangWangTable() = default;

  void push(const Vertex& p) {
    // Change in |boundary|: fresh neighbors minus p itself leaving the boundary.
    std::int64_t delta = in_nbhd_.count(p) ? -1 : 0;
    for (const auto& s : kL1Steps) {
      if (!in_nbhd_.count(p + s)) ++delta;
    }
    in_nbhd_.insert(p);
    for (const auto& s : kL1Steps) in_nbhd_.insert(p + s);
    order_.push_back(p);
    bdry_.push_back((bdry_.empty() ? 0 : bdry_.back()) + delta);
  }

  void grow_to(std::size_t n) {
    if (order_.empty()) push({0, 0});
    while (order_.size() < n) {
      const Coord m = layer_ + 1;
      auto add_uv = [this](Coord u, Coord v) { push({(v - u) / 2, (u + v) / 2}); };
      for (Coord u = m - 2; u >= -m + 2; u -= 2) add_uv(u, m);
      for (Coord v = m; v >= -m + 2; v -= 2) add_uv(-m, v);
      for (Coord v = m; v >= -m + 2; v -= 2) add_uv(m, v);
      for (Coord u = m; u >= -m; u -= 2) add_uv(u, -m);
      ++layer_;
    }
  }

  std::mutex mu_;
  std::vector<Vertex> order_;
  std::vector<std::int64_t> bdry_;
  std::unordered_set<Vertex, VertexHash> in_nbhd_;
  Coord layer_ = 0;  // radius of the last completed ball
};

}  // namespace detail

/// First n vertices of the Wang-Wang order.
inline VertexSet ww(std::int64_t n) {
  if (n < 1) throw Error(ErrorKind::InvalidSize, "ww needs n >= 1");
  return VertexSet(detail::WangWangTable::instance().prefix(static_cast<std::size_t>(n)));
}

/// The n-th vertex (1-based) of the Wang-Wang order.
inline Vertex ww_vertex(std::int64_t n) {
  if (n < 1) throw Error(ErrorKind::InvalidSize, "ww_vertex needs n >= 1");
  return detail::WangWangTable::instance().vertex(static_cast<std::size_t>(n - 1));
}

/// {v : |v|_1 <= n}.
inline VertexSet ball(std::int64_t n) {
  if (n < 0) throw Error(ErrorKind::InvalidSize, "ball needs n >= 0");
  std::vector<Vertex> out;
  out.reserve(static_cast<std::size_t>(ball_size(n)));
  for (Coord y = -n; y <= n; ++y) {
    const Coord w = n - (y < 0 ? -y : y);
    for (Coord x = -w; x <= w; ++x) out.push_back({x, y});
  }
  return VertexSet(std::move(out));
}

/// |boundary(ww(n))|.
inline std::int64_t ww_boundary(std::int64_t n) {
  if (n < 1) throw Error(ErrorKind::InvalidSize, "ww_boundary needs n >= 1");
  return detail::WangWangTable::instance().boundary(static_cast<std::size_t>(n));
}

/// Smallest size of a minimal set whose boundary has size b.
inline std::int64_t min_size_for_boundary(std::int64_t b) {
  if (b < 4 || b == 5) {
    throw Error(ErrorKind::NoSuchBoundary, "no minimal set has boundary " + std::to_string(b));
  }
  const auto n = detail::WangWangTable::instance().first_with_boundary(b);
  if (n == 0) {
    throw Error(ErrorKind::NoSuchBoundary, "no minimal set has boundary " + std::to_string(b));
  }
  return static_cast<std::int64_t>(n);
}

}  // namespace latiso
