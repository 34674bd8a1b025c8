#include <gtest/gtest.h>

#include <random>
#include <set>

#include "latiso/symmetry.hpp"
#include "support.hpp"

using namespace latiso;

TEST(Symmetry, EightDistinctElementsClosedUnderComposition) {
  std::set<std::array<int, 4>> seen;
  for (const auto& g : kPointSymmetries) seen.insert({g.xx, g.xy, g.yx, g.yy});
  EXPECT_EQ(seen.size(), 8u);
  for (const auto& g : kPointSymmetries) {
    for (const auto& h : kPointSymmetries) {
      const auto gh = g.compose(h);
      EXPECT_TRUE(seen.count({gh.xx, gh.xy, gh.yx, gh.yy}));
    }
    EXPECT_EQ(g.compose(g.inverse()), PointSymmetry::identity());
  }
}

TEST(Symmetry, Apply) {
  const VertexSet a{{2, -1}, {0, 0}};
  EXPECT_EQ(apply(Isometry{}, a), a);
  EXPECT_EQ(apply(Isometry{PointSymmetry::rot90(), {0, 0}}, VertexSet{{1, 0}}), (VertexSet{{0, 1}}));
  EXPECT_EQ(apply(Isometry{PointSymmetry::flip_y(), {0, 1}}, VertexSet{{0, 0}}), (VertexSet{{0, 1}}));
}

TEST(Symmetry, IsometryInverseAndCompose) {
  const Isometry g{PointSymmetry::rot90(), {3, -2}}, h{PointSymmetry::swap_neg(), {1, 5}};
  const Vertex p{7, 4};
  EXPECT_EQ(g.inverse()(g(p)), p);
  EXPECT_EQ(g.compose(h)(p), g(h(p)));
}

TEST(Symmetry, CanonicalFormExamples) {
  EXPECT_EQ(canonical_form(VertexSet{{5, 7}}), (VertexSet{{0, 0}}));
  EXPECT_EQ(canonical_form(VertexSet{{3, 3}, {4, 3}}), canonical_form(VertexSet{{0, 0}, {0, 1}}));
  EXPECT_THROW(canonical_form(VertexSet{}), Error);
}

TEST(Symmetry, Congruence) {
  const VertexSet s{{0, 0}, {1, 0}, {1, 1}, {2, 1}};
  const VertexSet mirror{{0, 1}, {1, 1}, {1, 0}, {2, 0}};
  EXPECT_TRUE(are_congruent(s, s));
  EXPECT_FALSE(are_congruent(VertexSet{{0, 0}, {0, 1}}, VertexSet{{0, 0}, {1, 1}}));
  EXPECT_TRUE(are_congruent(s, mirror));
}

TEST(Symmetry, CanonicalFormAgreesWithNaiveNormalForm) {
  std::mt19937 rng(12345);
  std::uniform_int_distribution<int> coord(-4, 4), sym(0, 7), shift(-50, 50), size(1, 9);
  for (int trial = 0; trial < 500; ++trial) {
    std::vector<Vertex> pts;
    const int n = size(rng);
    for (int i = 0; i < n; ++i) pts.push_back({coord(rng), coord(rng)});
    const VertexSet a(pts);
    const Isometry g{kPointSymmetries[sym(rng)], {shift(rng), shift(rng)}};
    const VertexSet b = apply(g, a);
    EXPECT_EQ(canonical_form(a), canonical_form(b));
    EXPECT_EQ(canonical_form(canonical_form(a)), canonical_form(a));
    // Congruence classes match the independent normal form.
    const VertexSet c(std::vector<Vertex>{{0, 0}, {coord(rng), coord(rng)}, {coord(rng), coord(rng)}});
    EXPECT_EQ(are_congruent(a, c), ref::congruent(ref::to_ref(a), ref::to_ref(c)));
  }
}

TEST(Symmetry, StableHash) {
  // FNV-1a over little-endian 64-bit x then y.
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (std::int64_t c : {0, 0, 1, 0}) {
    for (int i = 0; i < 8; ++i) {
      h ^= (static_cast<std::uint64_t>(c) >> (8 * i)) & 0xff;
      h *= 0x100000001b3ULL;
    }
  }
  EXPECT_EQ(stable_hash(VertexSet{{0, 0}, {1, 0}}), h);
  EXPECT_EQ(hex_id(0xabcULL), "0000000000000abc");
}
