#pragma once

// Deliberately naive reference computations used as test oracles. They share
// only the Vertex type with the library.

#include <algorithm>
#include <array>
#include <cstdint>
#include <set>
#include <utility>
#include <vector>

#include "latiso/lattice.hpp"

namespace ref {

using P = std::pair<std::int64_t, std::int64_t>;  // (x, y)
using Set = std::set<P>;

inline Set to_ref(const latiso::VertexSet& a) {
  Set s;
  for (const auto& p : a) s.insert({p.x, p.y});
  return s;
}

inline std::size_t boundary_size(const Set& a) {
  Set b;
  for (auto [x, y] : a) {
    for (P q : {P{x + 1, y}, P{x - 1, y}, P{x, y + 1}, P{x, y - 1}}) {
      if (!a.count(q)) b.insert(q);
    }
  }
  return b.size();
}

/// Points with a <= y-x <= b and c <= y+x <= d, scanning a bounding square.
inline Set band_points(std::int64_t a, std::int64_t b, std::int64_t c, std::int64_t d) {
  Set s;
  const std::int64_t r = std::max({std::abs(a), std::abs(b), std::abs(c), std::abs(d)}) + 1;
  for (std::int64_t x = -r; x <= r; ++x) {
    for (std::int64_t y = -r; y <= r; ++y) {
      if (a <= y - x && y - x <= b && c <= y + x && y + x <= d) s.insert({x, y});
    }
  }
  return s;
}

/// Translation-normalized image under each of the 8 signed permutation matrices.
inline Set normal_form(const Set& a) {
  static const std::array<std::array<int, 4>, 8> mats{{{1, 0, 0, 1},
                                                       {-1, 0, 0, 1},
                                                       {1, 0, 0, -1},
                                                       {-1, 0, 0, -1},
                                                       {0, 1, 1, 0},
                                                       {0, -1, 1, 0},
                                                       {0, 1, -1, 0},
                                                       {0, -1, -1, 0}}};
  std::vector<P> best;
  for (const auto& m : mats) {
    std::vector<P> img;
    for (auto [x, y] : a) img.push_back({m[0] * x + m[1] * y, m[2] * x + m[3] * y});
    std::int64_t mx = img[0].first, my = img[0].second;
    for (auto [x, y] : img) {
      mx = std::min(mx, x);
      my = std::min(my, y);
    }
    for (auto& [x, y] : img) {
      x -= mx;
      y -= my;
    }
    std::sort(img.begin(), img.end());
    if (best.empty() || img < best) best = img;
  }
  return Set(best.begin(), best.end());
}

inline bool congruent(const Set& a, const Set& b) {
  return a.size() == b.size() && normal_form(a) == normal_form(b);
}

/// Whether deleting one vertex of `big` can leave a copy of `small`.
inline bool differs_by_one(const Set& small, const Set& big) {
  for (auto q : big) {
    Set rest = big;
    rest.erase(q);
    if (congruent(rest, small)) return true;
  }
  return false;
}

}  // namespace ref
