#include <gtest/gtest.h>

#include "latiso/lattice.hpp"

using namespace latiso;

TEST(Lattice, SingletonBoundary) {
  EXPECT_EQ(boundary(VertexSet{{0, 0}}), (VertexSet{{1, 0}, {-1, 0}, {0, 1}, {0, -1}}));
}

TEST(Lattice, DiagonalPairBoundary) {
  EXPECT_EQ(boundary(VertexSet{{0, 0}, {1, 1}}),
            (VertexSet{{1, 0}, {-1, 0}, {0, 1}, {0, -1}, {2, 1}, {1, 2}}));
}

TEST(Lattice, BallBoundaryIsSphereOfRadiusTwo) {
  const VertexSet b = boundary(VertexSet{{0, 0}, {1, 0}, {-1, 0}, {0, 1}, {0, -1}});
  EXPECT_EQ(b.size(), 8u);
  for (const auto& p : b) EXPECT_EQ(l1_norm(p), 2);
}

TEST(Lattice, ClosedNeighborhood) {
  EXPECT_TRUE(closed_neighborhood(VertexSet{}).empty());
  EXPECT_EQ(closed_neighborhood(VertexSet{{0, 0}}).size(), 5u);
  EXPECT_EQ(closed_neighborhood(VertexSet{{0, 0}, {1, 1}}).size(), 8u);
}

TEST(Lattice, Components) {
  EXPECT_EQ(l1_components(VertexSet{{0, 0}, {1, 0}}).size(), 1u);
  EXPECT_EQ(l1_components(VertexSet{{0, 0}, {1, 1}}).size(), 2u);
  EXPECT_EQ(l1_components(VertexSet{{0, 0}, {1, 0}, {5, 5}}).size(), 2u);
  EXPECT_EQ(linf_components(VertexSet{{0, 0}, {1, 1}}).size(), 1u);
  EXPECT_EQ(linf_components(VertexSet{{0, 0}, {2, 2}}).size(), 2u);
  EXPECT_EQ(linf_components(VertexSet{{0, 0}, {1, 1}, {100, 100}, {101, 101}}).size(), 2u);
}

TEST(Lattice, ComponentsOrderedByLeastVertex) {
  const auto comps = l1_components(VertexSet{{5, 5}, {0, 0}, {1, 0}, {-3, 2}});
  ASSERT_EQ(comps.size(), 3u);
  EXPECT_EQ(comps[0].front(), (Vertex{0, 0}));
  EXPECT_EQ(comps[1].front(), (Vertex{-3, 2}));
  EXPECT_EQ(comps[2].front(), (Vertex{5, 5}));
}

TEST(Lattice, Connectivity) {
  EXPECT_TRUE(is_connected(VertexSet{{0, 0}, {1, 0}, {2, 0}}));
  EXPECT_FALSE(is_connected(VertexSet{{0, 0}, {1, 1}}));
  EXPECT_TRUE(is_connected(VertexSet{{0, 0}}));
  EXPECT_THROW(is_connected(VertexSet{}), Error);
}

TEST(Lattice, SetIsSortedAndDeduplicated) {
  const VertexSet a{{1, 1}, {0, 0}, {1, 1}, {-1, 1}};
  EXPECT_EQ(a.size(), 3u);
  EXPECT_EQ(a[0], (Vertex{0, 0}));
  EXPECT_EQ(a[1], (Vertex{-1, 1}));
  EXPECT_TRUE(a.contains({1, 1}));
  EXPECT_FALSE(a.contains({1, 0}));
  EXPECT_EQ(a.with({1, 0}).size(), 4u);
  EXPECT_EQ(a.without({1, 1}).size(), 2u);
  EXPECT_TRUE(a.without({1, 1}).is_subset_of(a));
}

TEST(Lattice, CoordinateOverflow) {
  EXPECT_THROW(VertexSet({{kMaxCoord + 1, 0}}), Error);
  EXPECT_NO_THROW(VertexSet({{kMaxCoord, -kMaxCoord}}));
}

TEST(Lattice, SetAlgebra) {
  const VertexSet a{{0, 0}, {1, 0}}, b{{1, 0}, {2, 0}};
  EXPECT_EQ(set_union(a, b).size(), 3u);
  EXPECT_EQ(set_intersection(a, b), (VertexSet{{1, 0}}));
  EXPECT_EQ(set_difference(a, b), (VertexSet{{0, 0}}));
}
