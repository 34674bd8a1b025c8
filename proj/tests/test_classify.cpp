#include <gtest/gtest.h>

#include "latiso/boxes.hpp"
#include "latiso/classify.hpp"
#include "latiso/wangwang.hpp"
#include "support.hpp"

using namespace latiso;

namespace {

VertexSet box_set(std::int64_t al, std::int64_t be) { return box_to_set(standard_box(al, be)); }
VertexSet hat_set(std::int64_t al, std::int64_t be) { return box_to_set(standard_box_hat(al, be)); }

bool ref_saturated(const VertexSet& a) {
  const auto s = ref::to_ref(a);
  const auto b = ref::boundary_size(s);
  for (auto [x, y] : s) {
    for (std::int64_t dx = -3; dx <= 3; ++dx) {
      for (std::int64_t dy = -3; dy <= 3; ++dy) {
        auto t = s;
        if (!t.insert({x + dx, y + dy}).second) continue;
        if (ref::boundary_size(t) <= b) return false;
      }
    }
  }
  return true;
}

}  // namespace

TEST(Classify, Saturation) {
  for (const auto& f : standard_forms_up_to(8)) {
    EXPECT_TRUE(is_saturated(box_to_set(standard_box(f)))) << f;
  }
  EXPECT_FALSE(is_saturated(ww(4)));
  EXPECT_TRUE(is_saturated(VertexSet{{0, 0}}));
  const VertexSet t = ww(4);
  EXPECT_EQ(boundary_size(t.with({0, -1})), boundary_size(t));
}

TEST(Classify, SaturationAgreesWithDirectSearch) {
  for (std::int64_t n = 1; n <= 30; ++n) EXPECT_EQ(is_saturated(ww(n)), ref_saturated(ww(n))) << n;
  EXPECT_EQ(is_saturated(VertexSet{{0, 0}, {2, 0}}), ref_saturated(VertexSet{{0, 0}, {2, 0}}));
}

TEST(Classify, ForbiddenConfigurations) {
  for (const auto& f : standard_forms_up_to(6)) {
    EXPECT_FALSE(find_forbidden_configuration(box_to_set(standard_box(f))).has_value()) << f;
  }
  EXPECT_FALSE(find_forbidden_configuration(VertexSet{{0, 0}}).has_value());
  const VertexSet a{{1, -1}, {1, 1}, {0, 0}};
  const auto w = find_forbidden_configuration(a);
  ASSERT_TRUE(w.has_value());
  EXPECT_FALSE(is_saturated(a));
  // The witness really places the pattern.
  for (const auto& cfg : forbidden_configurations()) {
    if (cfg.id != w->configuration) continue;
    for (const auto& p : cfg.filled) EXPECT_TRUE(a.contains(w->placement(p)));
    for (const auto& p : cfg.empty) EXPECT_FALSE(a.contains(w->placement(p)));
  }
}

TEST(Classify, ForbiddenPatternsFillingTheGapNeverGrowsBoundary) {
  for (const auto& cfg : forbidden_configurations()) {
    const VertexSet f(cfg.filled);
    for (const auto& e : cfg.empty) {
      EXPECT_LE(boundary_size(f.with(e)), boundary_size(f)) << cfg.id;
    }
  }
}

TEST(Classify, Cones) {
  for (const auto& f : standard_forms_up_to(6)) {
    EXPECT_TRUE(complement_is_union_of_cones(box_to_set(standard_box(f)))) << f;
  }
  EXPECT_TRUE(complement_is_union_of_cones(ww(4)));
  EXPECT_FALSE(complement_is_union_of_cones(box_set(2, 2).without({0, 1})));
  const Cone up{{0, 0}, ConeOrientation::Above};
  EXPECT_TRUE(up.contains({0, 5}));
  EXPECT_TRUE(up.contains({1, 1}));
  EXPECT_FALSE(up.contains({1, 0}));
}

TEST(Classify, Excess) {
  EXPECT_EQ(excess_of_set(VertexSet{{0, 0}}), 0);
  EXPECT_EQ(excess_of_set(box_set(4, 4)), 2);
  EXPECT_EQ(excess_of_set(ww(4)), 0);
}

TEST(Classify, Minimality) {
  EXPECT_TRUE(is_minimal(box_set(0, 2), Verify::On));
  EXPECT_FALSE(is_minimal(box_set(0, 4), Verify::On));
  EXPECT_FALSE(is_minimal(VertexSet{{0, 0}, {2, 0}}, Verify::On));
  EXPECT_THROW(is_minimal(VertexSet{}), Error);
}

TEST(Classify, Certificates) {
  const auto c = minimality_certificate(ww(4));
  EXPECT_EQ(c.n_removed, 1);
  EXPECT_EQ(c.enc_excess, 1);
  EXPECT_TRUE(c.verdict);
  const auto d = minimality_certificate(box_set(2, 6));
  EXPECT_EQ(d.n_removed, 0);
  EXPECT_EQ(d.enc_excess, 0);
  EXPECT_TRUE(d.verdict);
  const auto e = minimality_certificate(box_set(0, 4));
  EXPECT_EQ(e.n_removed, 0);
  EXPECT_EQ(e.enc_excess, -1);
  EXPECT_FALSE(e.verdict);
}

TEST(Classify, Efficiency) {
  EXPECT_TRUE(is_efficient(box_set(3, 4)));
  EXPECT_TRUE(is_efficient(box_set(2, 4)));
  EXPECT_FALSE(is_efficient(hat_set(2, 2)));
  EXPECT_FALSE(is_efficient(ww(4)));
}

TEST(Classify, EfficientMeansLargestForItsBoundary) {
  // Efficient boxes are exactly the minimal boxes whose size equals the
  // largest ww prefix with the same boundary.
  for (const auto& f : standard_forms_up_to(12)) {
    if (box_excess(f) < 0) continue;
    const std::int64_t b = box_boundary_size(f);
    std::int64_t last = 0;
    for (std::int64_t n = 1; ww_boundary(n) <= b; ++n) {
      if (ww_boundary(n) == b) last = n;
    }
    EXPECT_EQ(is_efficient_form(f), box_size(f) == last) << f;
  }
}

TEST(Classify, DeadMortalUnique) {
  EXPECT_TRUE(is_dead(hat_set(2, 2)));
  EXPECT_TRUE(is_dead(box_set(2, 6)));
  EXPECT_FALSE(is_dead(box_set(2, 3)));
  EXPECT_FALSE(is_mortal(ww(4)));
  EXPECT_FALSE(is_mortal(box_set(2, 3)));
  EXPECT_TRUE(is_uniquely_minimal(box_set(4, 4)));
  EXPECT_TRUE(is_uniquely_minimal(box_set(1, 2)));
  EXPECT_FALSE(is_uniquely_minimal(ww(4)));
  EXPECT_THROW(is_dead(box_set(0, 4)), Error);
}

TEST(Classify, MortalAfterRemovingFromDeadBox) {
  const VertexSet full = box_set(4, 8);
  ASSERT_EQ(box_excess(standard_box(4, 8)), 1);
  int found = 0;
  for (const auto& p : corners(standard_box(4, 8))) {
    const VertexSet a = full.without(p);
    if (!is_minimal(a)) continue;
    ++found;
    EXPECT_TRUE(is_mortal(a));
    EXPECT_FALSE(is_dead(a));
  }
  EXPECT_GT(found, 0);
}
