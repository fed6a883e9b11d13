#include "toric/curve_classes.hpp"

#include <map>

#include "gtest/gtest.h"

namespace toric {
namespace {

TEST(CurveLattice, Ranks) {
  EXPECT_EQ(curve_lattice(projective_line()).rank, 1);
  EXPECT_EQ(curve_lattice(projective_plane()).rank, 1);
  EXPECT_EQ(curve_lattice(p1_times_p1()).rank, 2);
  EXPECT_EQ(curve_lattice(hirzebruch_f1()).rank, 2);
}

TEST(CurveLattice, BasisIsBalanced) {
  for (const Fan& f : {projective_line(), projective_plane(), p1_times_p1(), hirzebruch_f1()}) {
    IntMatrix R = ray_matrix(f);
    for (const auto& v : curve_lattice(f).basis) {
      Profile r;
      for (const auto& x : v) r.push_back(static_cast<long>(x));
      EXPECT_TRUE(is_balanced(f, r));
      for (const auto& y : R * v) EXPECT_EQ(y, 0);
    }
  }
}

TEST(CurveLattice, Balanced) {
  EXPECT_TRUE(is_balanced(projective_plane(), {2, 2, 2}));
  EXPECT_FALSE(is_balanced(projective_plane(), {1, 2, 2}));
  // F1: rays (1,0),(0,1),(-1,-1),(1,1)
  EXPECT_TRUE(is_balanced(hirzebruch_f1(), {1, 1, 1, 0}));
  EXPECT_TRUE(is_balanced(hirzebruch_f1(), {0, 0, 1, 1}));
}

TEST(Index, Anticanonical) {
  EXPECT_EQ(index(projective_line(), anticanonical(2)), Rational(2));
  EXPECT_EQ(index(projective_plane(), anticanonical(3)), Rational(3));
  EXPECT_EQ(index(p1_times_p1(), anticanonical(4)), Rational(2));
  EXPECT_EQ(index(hirzebruch_f1(), anticanonical(4)), Rational(1));
  CampanaWeights w{{2, 2}};
  EXPECT_EQ(index(projective_line(), campana_degree(w)), Rational(1));
}

TEST(Alpha, ReferenceValues) {
  auto a = alpha_constant(projective_line(), NefSubcone::nef(), anticanonical(2));
  EXPECT_EQ(a.vol, Rational(1, 2));
  EXPECT_EQ(a.slice, Rational(1));
  auto b = alpha_constant(projective_plane(), NefSubcone::nef(), anticanonical(3));
  EXPECT_EQ(b.vol, Rational(1, 3));
  EXPECT_EQ(b.slice, Rational(1));
  auto c = alpha_constant(p1_times_p1(), NefSubcone::nef(), anticanonical(4));
  EXPECT_EQ(c.vol, Rational(1, 4));
  EXPECT_EQ(c.slice, Rational(1, 2));
}

TEST(Alpha, SliceIsIndexTimesVolume) {
  for (const Fan& f : {projective_line(), projective_plane(), p1_times_p1(), hirzebruch_f1()}) {
    auto a = alpha_constant(f, NefSubcone::nef(), anticanonical(f.num_rays()));
    EXPECT_EQ(a.slice, a.index * a.vol) << f.name();
  }
}

TEST(Alpha, SliceMatchesLevelCounts) {
  // P1 x P1: #{2a + 2b = 2d} = d + 1 ~ (2d) / 2.
  Fan f = p1_times_p1();
  auto phi = anticanonical(4);
  auto classes = enumerate_classes(f, NefSubcone::nef(), phi, Rational(40));
  std::map<Rational, int> level;
  for (const auto& r : classes) ++level[phi(r)];
  EXPECT_EQ(level[Rational(40)], 21);
  EXPECT_EQ(level[Rational(2)], 2);
}

TEST(EnumerateClasses, ProjectivePlane) {
  auto cls = enumerate_classes(projective_plane(), NefSubcone::nef(), anticanonical(3), Rational(9));
  ASSERT_EQ(cls.size(), 4u);
  EXPECT_EQ(cls.front(), (Profile{0, 0, 0}));
  EXPECT_EQ(cls.back(), (Profile{3, 3, 3}));
}

TEST(Proper, DegenerateFunctional) {
  Fan f = p1_times_p1();
  EXPECT_TRUE(is_proper(f, NefSubcone::nef(), anticanonical(4)));
  // sum over rays 0 and 1 only vanishes on the class with r0 = r1 = 0.
  EXPECT_FALSE(is_proper(f, NefSubcone::nef(), log_degree(4, make_set({2, 3}))));
}

TEST(CharacterGroup, Orders) {
  EXPECT_EQ(character_group(projective_line(), CampanaWeights{{2, 2}}).size(), 2u);
  EXPECT_EQ(character_group(projective_line(), CampanaWeights{{2, 3}}).size(), 1u);
  EXPECT_EQ(character_group(projective_plane(), CampanaWeights{{2, 2, 2}}).size(), 4u);
  EXPECT_EQ(character_group(projective_plane(), unit_weights(3)).size(), 1u);
}

TEST(CharacterValue, Phases) {
  CampanaWeights w{{2, 2}};
  auto p = character_value({1, 1}, {0, 0}, {1, 1}, w);
  EXPECT_EQ(p, (Phase{0, 1}));
  auto h = character_value({1, 0}, {0, 0}, {1, 1}, w);
  EXPECT_EQ(h, (Phase{1, 2}));
  EXPECT_NEAR(to_complex(h).real(), -1.0, 1e-15);
  EXPECT_EQ(make_phase(Rational(-1, 4)), (Phase{3, 4}));
  EXPECT_EQ(make_phase(Rational(6, 4)), (Phase{1, 2}));
}

}  // namespace
}  // namespace toric
