#pragma once

// Graph automorphisms of the l1 grid: the eight point symmetries of the
// square composed with integer translations. Congruence classes are realized
// by a canonical representative.

#include <array>
#include <cstdint>
#include <string>
#include <vector>

#include "latiso/lattice.hpp"

namespace latiso {

/// Linear part of a grid automorphism, (x, y) -> (xx*x + xy*y, yx*x + yy*y).
struct PointSymmetry {
  int xx = 1, xy = 0, yx = 0, yy = 1;

  friend constexpr bool operator==(const PointSymmetry&, const PointSymmetry&) = default;

  constexpr Vertex operator()(const Vertex& p) const {
    return {xx * p.x + xy * p.y, yx * p.x + yy * p.y};
  }

  /// this after other.
  constexpr PointSymmetry compose(const PointSymmetry& o) const {
    return {xx * o.xx + xy * o.yx, xx * o.xy + xy * o.yy,
            yx * o.xx + yy * o.yx, yx * o.xy + yy * o.yy};
  }

  constexpr PointSymmetry inverse() const {
    // Orthogonal, so the inverse is the transpose.
    return {xx, yx, xy, yy};
  }

  static constexpr PointSymmetry identity() { return {1, 0, 0, 1}; }
  static constexpr PointSymmetry rot90() { return {0, -1, 1, 0}; }
  static constexpr PointSymmetry rot180() { return {-1, 0, 0, -1}; }
  static constexpr PointSymmetry rot270() { return {0, 1, -1, 0}; }
  static constexpr PointSymmetry flip_y() { return {1, 0, 0, -1}; }   // y -> -y
  static constexpr PointSymmetry flip_x() { return {-1, 0, 0, 1}; }   // x -> -x
  static constexpr PointSymmetry swap_xy() { return {0, 1, 1, 0}; }
  static constexpr PointSymmetry swap_neg() { return {0, -1, -1, 0}; }
};

inline constexpr std::array<PointSymmetry, 8> kPointSymmetries{
    PointSymmetry::identity(), PointSymmetry::rot90(),  PointSymmetry::rot180(),
    PointSymmetry::rot270(),   PointSymmetry::flip_y(), PointSymmetry::flip_x(),
    PointSymmetry::swap_xy(),  PointSymmetry::swap_neg()};

/// p -> point_symmetry(p) + translation.
struct Isometry {
  PointSymmetry point_symmetry{};
  Vertex translation{};

  friend constexpr bool operator==(const Isometry&, const Isometry&) = default;

  constexpr Vertex operator()(const Vertex& p) const { return point_symmetry(p) + translation; }

  /// this after other.
  constexpr Isometry compose(const Isometry& o) const {
    return {point_symmetry.compose(o.point_symmetry), point_symmetry(o.translation) + translation};
  }

  constexpr Isometry inverse() const {
    const PointSymmetry inv = point_symmetry.inverse();
    const Vertex t = inv(translation);
    return {inv, {-t.x, -t.y}};
  }
};

inline VertexSet apply(const Isometry& g, const VertexSet& a) {
  std::vector<Vertex> out;
  out.reserve(a.size());
  for (const auto& p : a) out.push_back(g(p));
  return VertexSet(std::move(out));
}

/// Among the eight point-symmetric images of A, each translated so that its
/// least vertex is the origin, the one with the lexicographically least sorted
/// coordinate list.
inline VertexSet canonical_form(const VertexSet& a) {
  if (a.empty()) throw Error(ErrorKind::EmptySet, "canonical_form of empty set");
  std::vector<Vertex> best;
  std::vector<Vertex> cur(a.size());
  for (const auto& sym : kPointSymmetries) {
    for (std::size_t i = 0; i < a.size(); ++i) cur[i] = sym(a[i]);
    std::sort(cur.begin(), cur.end());
    const Vertex origin = cur.front();
    for (auto& p : cur) p = p - origin;
    if (best.empty() || cur < best) best = cur;
  }
  return VertexSet::from_sorted(std::move(best));
}

inline bool are_congruent(const VertexSet& a, const VertexSet& b) {
  if (a.empty() || b.empty()) throw Error(ErrorKind::EmptySet, "are_congruent of empty set");
  if (a.size() != b.size()) return false;
  return canonical_form(a) == canonical_form(b);
}

/// 64-bit FNV-1a over the sorted coordinate list; stable across runs.
inline std::uint64_t stable_hash(const VertexSet& a) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  auto mix = [&h](Coord c) {
    auto u = static_cast<std::uint64_t>(c);
    for (int i = 0; i < 8; ++i) {
      h ^= (u >> (8 * i)) & 0xffU;
      h *= 0x100000001b3ULL;
    }
  };
  for (const auto& p : a) {
    mix(p.x);
    mix(p.y);
  }
  return h;
}

inline std::string hex_id(std::uint64_t h) {
  static constexpr char kDigits[] = "0123456789abcdef";
  std::string s(16, '0');
  for (int i = 15; i >= 0; --i) {
    s[static_cast<std::size_t>(i)] = kDigits[h & 0xf];
    h >>= 4;
  }
  return s;
}

}  // namespace latiso
