#include "toric/lattice.hpp"

#include <random>

#include "gtest/gtest.h"
#include "toric/errors.hpp"
#include "toric/pair.hpp"

namespace toric {
namespace {

IntMatrix diagonal_of(const IntMatrix& A, const std::vector<BigInt>& d) {
  IntMatrix D(A.rows(), A.cols());
  for (std::size_t i = 0; i < d.size(); ++i) D(i, i) = d[i];
  return D;
}

TEST(SmithNormalForm, TextbookExample) {
  IntMatrix A{{2, 4, 4}, {-6, 6, 12}, {10, -4, -16}};
  auto s = smith_normal_form(A);
  ASSERT_EQ(s.diag.size(), 3u);
  EXPECT_EQ(s.diag[0], 2);
  EXPECT_EQ(s.diag[1], 6);
  EXPECT_EQ(s.diag[2], 12);
  EXPECT_EQ(s.U * A * s.V, diagonal_of(A, s.diag));
  EXPECT_EQ(s.rank(), 3u);
}

TEST(SmithNormalForm, RandomMatricesFactorAndDivide) {
  std::mt19937 rng(7);
  std::uniform_int_distribution<int> entry(-5, 5);
  for (int trial = 0; trial < 50; ++trial) {
    std::size_t r = 1 + trial % 4, c = 1 + (trial / 4) % 4;
    IntMatrix A(r, c);
    for (std::size_t i = 0; i < r; ++i)
      for (std::size_t j = 0; j < c; ++j) A(i, j) = entry(rng);
    auto s = smith_normal_form(A);
    EXPECT_EQ(s.U * A * s.V, diagonal_of(A, s.diag));
    EXPECT_EQ(abs(determinant(s.U)), 1);
    EXPECT_EQ(abs(determinant(s.V)), 1);
    for (std::size_t i = 0; i + 1 < s.diag.size(); ++i) {
      if (s.diag[i] == 0) {
        EXPECT_EQ(s.diag[i + 1], 0);
      } else {
        EXPECT_EQ(s.diag[i + 1] % s.diag[i], 0);
      }
    }
  }
}

TEST(Determinant, Bareiss) {
  EXPECT_EQ(determinant(IntMatrix{{2, 1}, {7, 4}}), 1);
  EXPECT_EQ(determinant(IntMatrix{{1, 2, 3}, {4, 5, 6}, {7, 8, 10}}), -3);
  EXPECT_EQ(determinant(IntMatrix{{0, 1}, {1, 0}}), -1);
}

TEST(KernelBasis, SaturatedAndAnnihilated) {
  IntMatrix A{{2, 4, 6}};
  auto K = kernel_basis(A);
  ASSERT_EQ(K.size(), 2u);
  for (const auto& v : K) EXPECT_EQ((A * v)[0], 0);
  // Saturation: the 2x2 minors of the kernel basis have gcd 1.
  BigInt g = 0;
  for (int i = 0; i < 3; ++i)
    for (int j = i + 1; j < 3; ++j) g = gcd(g, K[0][i] * K[1][j] - K[0][j] * K[1][i]);
  EXPECT_EQ(g, 1);
}

TEST(KernelBasis, RayMatrixOfProjectivePlane) {
  IntMatrix A{{1, 0, -1}, {0, 1, -1}};
  auto K = kernel_basis(A);
  ASSERT_EQ(K.size(), 1u);
  IntVector ones{1, 1, 1}, neg{-1, -1, -1};
  EXPECT_TRUE(K[0] == ones || K[0] == neg);
}

TEST(MinPositiveValue, Examples) {
  std::vector<IntVector> std2{{1, 0}, {0, 1}};
  EXPECT_EQ(min_positive_value({Rational(1, 2), Rational(1, 3)}, std2), Rational(1, 6));
  EXPECT_EQ(min_positive_value({Rational(2), Rational(4)}, std2), Rational(2));
  std::vector<IntVector> diag{{1, 1, 1}};
  EXPECT_EQ(min_positive_value({Rational(1), Rational(1), Rational(1)}, diag), Rational(3));
  EXPECT_THROW(min_positive_value({Rational(0), Rational(0)}, std2), MathError);
}

std::vector<Residue> brute_dual(const ResidueSubgroup& G) {
  std::vector<Residue> out;
  Residue a(G.moduli.size(), 0);
  while (true) {
    bool ok = true;
    for (const auto& g : G.generators) {
      Rational s = 0;
      for (std::size_t i = 0; i < a.size(); ++i) s += Rational(a[i] * g[i], G.moduli[i]);
      if (denominator(s) != 1) ok = false;
    }
    if (ok) out.push_back(a);
    std::size_t i = a.size();
    while (i > 0) {
      --i;
      if (++a[i] < G.moduli[i]) break;
      a[i] = 0;
      if (i == 0) return out;
    }
  }
}

TEST(OrthogonalDual, DiagonalGenerator) {
  ResidueSubgroup G{{2, 2}, {{1, 1}}};
  auto D = orthogonal_dual_mod(G);
  ASSERT_EQ(D.size(), 2u);
  EXPECT_EQ(D[0], (Residue{0, 0}));
  EXPECT_EQ(D[1], (Residue{1, 1}));
  EXPECT_EQ(subgroup_order(G), 2u);
}

TEST(OrthogonalDual, MatchesBruteForce) {
  std::mt19937 rng(11);
  for (int trial = 0; trial < 40; ++trial) {
    int k = 1 + trial % 3;
    ResidueSubgroup G;
    for (int i = 0; i < k; ++i) G.moduli.push_back(1 + rng() % 4);
    int gens = rng() % 3;
    for (int g = 0; g < gens; ++g) {
      std::vector<long> v;
      for (int i = 0; i < k; ++i) v.push_back(static_cast<long>(rng() % 7) - 3);
      G.generators.push_back(v);
    }
    auto D = orthogonal_dual_mod(G);
    EXPECT_EQ(D, brute_dual(G));
    // |G| * |G-perp| = prod m
    std::size_t prod = 1;
    for (long m : G.moduli) prod *= m;
    EXPECT_EQ(subgroup_order(G) * D.size(), prod);
  }
}

TEST(RationalSolve, UsesRightHandSide) {
  linalg::RatMatrix M{{Rational(1), Rational(1)}, {Rational(1), Rational(-1)}};
  RatVector x;
  ASSERT_TRUE(linalg::solve(M, {Rational(3), Rational(1)}, x));
  EXPECT_EQ(x[0], Rational(2));
  EXPECT_EQ(x[1], Rational(1));
  ASSERT_TRUE(linalg::solve({{Rational(0), Rational(2)}, {Rational(3), Rational(0)}}, {Rational(1), Rational(1)}, x));
  EXPECT_EQ(x[0], Rational(1, 3));
  EXPECT_EQ(x[1], Rational(1, 2));
  EXPECT_FALSE(linalg::solve({{Rational(1), Rational(2)}, {Rational(2), Rational(4)}}, {Rational(1), Rational(1)}, x));
}

TEST(PositiveSpan, HalfPlaneIsNotSpanning) {
  EXPECT_FALSE(positively_spans({{1, 0}, {0, 1}, {-1, 1}, {-2, 1}}, 2));
  EXPECT_FALSE(positively_spans({{1, 0}, {-1, 0}}, 2));
  EXPECT_FALSE(positively_spans({{1, 0}, {0, 1}}, 2));
}

TEST(PositiveSpan, SpanningSets) {
  EXPECT_TRUE(positively_spans({{1, 0}, {0, 1}, {-1, -1}}, 2));
  EXPECT_TRUE(positively_spans({{1, 0}, {-1, 0}, {0, 1}, {0, -1}}, 2));
  EXPECT_TRUE(positively_spans({{1}, {-1}}, 1));
  EXPECT_TRUE(positively_spans({{1, 0, 0}, {0, 1, 0}, {0, 0, 1}, {-1, -1, -1}}, 3));
  EXPECT_FALSE(positively_spans({{1, 0, 0}, {0, 1, 0}, {0, 0, 1}, {-1, -1, 0}}, 3));
}

TEST(Gcd, BigIntegers) {
  EXPECT_EQ(gcd(BigInt(12), BigInt(18)), 6);
  EXPECT_EQ(lcm(BigInt(4), BigInt(6)), 12);
  EXPECT_EQ(gcd(BigInt(0), BigInt(-5)), 5);
}

}  // namespace
}  // namespace toric
