#include "toric/finite_field.hpp"

#include "gtest/gtest.h"
#include "toric/errors.hpp"

namespace toric {
namespace {

TEST(FieldSpec, PrimeAndPrimePower) {
  auto F2 = FieldSpec::make(2);
  EXPECT_EQ(F2.p(), 2);
  EXPECT_EQ(F2.e(), 1);
  auto F4 = FieldSpec::make(4);
  EXPECT_EQ(F4.p(), 2);
  EXPECT_EQ(F4.e(), 2);
  EXPECT_THROW(FieldSpec::make(6), InputError);
  EXPECT_THROW(FieldSpec::make(1), InputError);
}

TEST(FieldSpec, AxiomsOnSmallFields) {
  for (long q : {2, 3, 4, 5, 8, 9}) {
    auto F = FieldSpec::make(q);
    for (int a = 0; a < q; ++a) {
      EXPECT_EQ(F.add(a, F.neg(a)), 0);
      if (a != 0) EXPECT_EQ(F.mul(a, F.inv(a)), 1) << q << " " << a;
      for (int b = 0; b < q; ++b) {
        EXPECT_EQ(F.add(a, b), F.add(b, a));
        EXPECT_EQ(F.mul(a, b), F.mul(b, a));
        for (int c = 0; c < q; ++c) EXPECT_EQ(F.mul(a, F.add(b, c)), F.add(F.mul(a, b), F.mul(a, c)));
      }
    }
  }
}

TEST(Factor, XSquaredPlusXOverF2) {
  auto F = FieldSpec::make(2);
  auto fs = factor(F, Poly{0, 1, 1});
  ASSERT_EQ(fs.size(), 2u);
  EXPECT_EQ(fs[0].first, (Poly{0, 1}));
  EXPECT_EQ(fs[1].first, (Poly{1, 1}));
  EXPECT_EQ(fs[0].second, 1);
  EXPECT_EQ(fs[1].second, 1);
  EXPECT_TRUE(is_irreducible(F, Poly{1, 1, 1}));
  EXPECT_FALSE(is_irreducible(F, Poly{1, 0, 1}));
  EXPECT_THROW(factor(F, Poly{}), MathError);
}

TEST(Factor, ProductRoundTrip) {
  for (long q : {2, 3, 4, 5}) {
    auto F = FieldSpec::make(q);
    for (std::uint64_t code = 1; code < monic_offset(q, 5); ++code) {
      Poly g = monic_from_code(F, code);
      EXPECT_EQ(monic_code(F, g), code);
      Poly prod{1};
      for (const auto& [p, k] : factor(F, g)) {
        EXPECT_TRUE(is_irreducible(F, p));
        for (int j = 0; j < k; ++j) prod = poly_mul(F, prod, p);
      }
      EXPECT_EQ(prod, g);
    }
  }
}

TEST(ClosedPoints, Counts) {
  EXPECT_EQ(count_closed_points(Line::A1, 1, 2), 2u);
  EXPECT_EQ(count_closed_points(Line::P1, 1, 2), 3u);
  EXPECT_EQ(count_closed_points(Line::A1, 2, 2), 1u);
  EXPECT_EQ(count_closed_points(Line::A1, 3, 2), 2u);
  EXPECT_EQ(count_closed_points(Line::A1, 4, 2), 3u);
  EXPECT_EQ(count_closed_points(Line::A1, 2, 3), 3u);
  EXPECT_EQ(count_closed_points(Line::P1, 2, 3), 3u);
  auto F = FieldSpec::make(3);
  for (int e = 1; e <= 4; ++e) EXPECT_EQ(closed_points(F, e).size(), count_closed_points(Line::A1, e, 3));
}

TEST(ClosedPoints, NecklaceIdentity) {
  for (long q : {2, 3, 4, 5, 7}) {
    for (int n = 1; n <= 10; ++n) {
      std::uint64_t total = 0, qn = 1;
      for (int i = 0; i < n; ++i) qn *= q;
      for (int d = 1; d <= n; ++d)
        if (n % d == 0) total += d * count_closed_points(Line::A1, d, q);
      EXPECT_EQ(total, qn) << q << " " << n;
    }
  }
}

TEST(ClosedPoints, OverflowGuard) {
  EXPECT_THROW(count_closed_points(Line::A1, 200, 7), MathError);
}

TEST(Mobius, Values) {
  EXPECT_EQ(mobius(1), 1);
  EXPECT_EQ(mobius(2), -1);
  EXPECT_EQ(mobius(4), 0);
  EXPECT_EQ(mobius(6), 1);
  EXPECT_EQ(mobius(30), -1);
}

TEST(Valuation, FiniteAndInfinity) {
  auto F = FieldSpec::make(2);
  EffectiveDivisor w{4, Poly{0, 0, 1}};  // x^2, with 2 points at infinity
  EXPECT_EQ(w.mult_at_infinity(), 2);
  EXPECT_EQ(divisor_valuation(F, w, Place{false, {0, 1}}), 2);
  EXPECT_EQ(divisor_valuation(F, w, Place{false, {1, 1}}), 0);
  EXPECT_EQ(divisor_valuation(F, w, Place::at_infinity()), 2);
}

TEST(FactorTable, AgreesWithDirectFactorization) {
  auto F = FieldSpec::make(3);
  FactorTable T(F, 4);
  EXPECT_EQ(T.size(), monic_offset(3, 5));
  for (std::uint64_t code = 1; code < T.size(); ++code) {
    auto direct = factor(F, monic_from_code(F, code));
    auto table = T.factorization(code);
    ASSERT_EQ(direct.size(), table.size());
    for (std::size_t i = 0; i < direct.size(); ++i) {
      EXPECT_EQ(monic_code(F, direct[i].first), table[i].first);
      EXPECT_EQ(direct[i].second, table[i].second);
    }
    EXPECT_EQ(T.irreducible(code), is_irreducible(F, monic_from_code(F, code)));
  }
}

}  // namespace
}  // namespace toric
