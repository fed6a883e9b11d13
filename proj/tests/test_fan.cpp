#include "toric/fan.hpp"

#include <algorithm>

#include "gtest/gtest.h"
#include "toric/errors.hpp"

namespace toric {
namespace {

bool mentions(const FanDiagnostics& d, const std::string& needle) {
  return std::any_of(d.problems.begin(), d.problems.end(),
                     [&](const std::string& p) { return p.find(needle) != std::string::npos; });
}

TEST(Fan, BundledFansAreValid) {
  for (const Fan& f : {projective_line(), projective_plane(), p1_times_p1(), hirzebruch_f1()}) {
    auto d = validate_fan(f);
    EXPECT_TRUE(d.ok()) << f.name();
    EXPECT_NO_THROW(require_valid(f));
  }
}

TEST(Fan, ConesOfProjectivePlane) {
  Fan f = projective_plane();
  EXPECT_EQ(f.dim(), 2);
  EXPECT_EQ(f.num_rays(), 3);
  // zero cone, three rays, three 2-cones
  EXPECT_EQ(f.cones().size(), 7u);
  EXPECT_TRUE(f.is_cone_rayset({0, 1}));
  EXPECT_FALSE(f.is_cone_rayset({0, 1, 2}));
  ASSERT_EQ(f.primitive_collections().size(), 1u);
  EXPECT_EQ(f.primitive_collections()[0], make_set({0, 1, 2}));
}

TEST(Fan, PrimitiveCollectionsOfSquare) {
  Fan f = p1_times_p1();
  auto pc = f.primitive_collections();
  std::sort(pc.begin(), pc.end());
  std::vector<RaySet> expect{make_set({0, 1}), make_set({2, 3})};
  std::sort(expect.begin(), expect.end());
  EXPECT_EQ(pc, expect);
}

TEST(Fan, RaySetHelpers) {
  RaySet s = make_set({0, 3, 5});
  EXPECT_EQ(cardinality(s), 3);
  EXPECT_EQ(members(s), (std::vector<int>{0, 3, 5}));
  EXPECT_THROW(make_set({40}), InputError);
}

TEST(FanValidation, NonPrimitiveRay) {
  Fan f({{2, 0}, {0, 1}, {-1, -1}}, {{0, 1}, {1, 2}, {2, 0}});
  auto d = validate_fan(f);
  EXPECT_FALSE(d.primitive);
  EXPECT_TRUE(mentions(d, "primitivity failure at ray 0"));
  EXPECT_THROW(require_valid(f), InputError);
}

TEST(FanValidation, NotSmooth) {
  Fan f({{1, 0}, {1, 2}, {-1, -1}}, {{0, 1}, {1, 2}, {2, 0}});
  auto d = validate_fan(f);
  EXPECT_FALSE(d.smooth);
  EXPECT_TRUE(mentions(d, "smoothness failure"));
}

TEST(FanValidation, Incomplete) {
  Fan f({{1, 0}, {0, 1}, {-1, -1}}, {{0, 1}, {1, 2}});
  auto d = validate_fan(f);
  EXPECT_FALSE(d.complete);
  EXPECT_TRUE(mentions(d, "completeness failure"));
}

TEST(FanValidation, MalformedConeIndex) {
  Fan f({{1, 0}, {0, 1}, {-1, -1}}, {{0, 1}, {1, 7}, {2, 0}});
  auto d = validate_fan(f);
  EXPECT_FALSE(d.indices_ok);
  EXPECT_TRUE(mentions(d, "malformed cone index"));
  try {
    require_valid(f);
    FAIL() << "expected InvalidFan";
  } catch (const InputError& e) {
    EXPECT_EQ(e.code(), "InvalidFan");
    EXPECT_EQ(exit_code(e.kind()), 2);
  }
}

TEST(FanValidation, RepeatedRayAndWrongDimension) {
  Fan f({{1, 0}, {1, 0}, {-1, -1}, {0}}, {{0, 2}});
  auto d = validate_fan(f);
  EXPECT_FALSE(d.distinct_rays);
  EXPECT_FALSE(d.dimensions_ok);
}

}  // namespace
}  // namespace toric
