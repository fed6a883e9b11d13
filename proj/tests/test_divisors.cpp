#include "toric/divisors.hpp"

#include "gtest/gtest.h"
#include "toric/errors.hpp"

namespace toric {
namespace {

// Independent arithmetic in F_p[x] for the brute-force oracle (prime p only).
using P = std::vector<long>;

P trim(P a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
  return a;
}

long inverse_mod(long a, long p) {
  for (long b = 1; b < p; ++b)
    if (a * b % p == 1) return b;
  return 0;
}

P rem(P a, const P& b, long p) {
  a = trim(a);
  long lead = inverse_mod(b.back(), p);
  while (a.size() >= b.size()) {
    long c = a.back() * lead % p;
    std::size_t shift = a.size() - b.size();
    for (std::size_t i = 0; i < b.size(); ++i) a[shift + i] = ((a[shift + i] - c * b[i]) % p + p) % p;
    a = trim(a);
  }
  return a;
}

P quo(P a, const P& b, long p) {
  a = trim(a);
  P q(a.size() >= b.size() ? a.size() - b.size() + 1 : 0, 0);
  long lead = inverse_mod(b.back(), p);
  while (a.size() >= b.size()) {
    long c = a.back() * lead % p;
    std::size_t shift = a.size() - b.size();
    q[shift] = c;
    for (std::size_t i = 0; i < b.size(); ++i) a[shift + i] = ((a[shift + i] - c * b[i]) % p + p) % p;
    a = trim(a);
  }
  return q;
}

int deg(const P& a) { return static_cast<int>(a.size()) - 1; }

bool coprime(P a, P b, long p) {
  while (!b.empty()) {
    P r = rem(a, b, p);
    a = b;
    b = r;
  }
  return deg(a) == 0;
}

std::vector<P> monics(long p, int d) {
  std::vector<P> out;
  long n = 1;
  for (int i = 0; i < d; ++i) n *= p;
  for (long c = 0; c < n; ++c) {
    P g(d + 1, 0);
    g[d] = 1;
    long x = c;
    for (int i = 0; i < d; ++i, x /= p) g[i] = x % p;
    out.push_back(g);
  }
  return out;
}

// Multiplicities of the irreducible factors, by trial division in increasing degree.
std::vector<int> multiplicities(P f, long p) {
  std::vector<int> out;
  for (int d = 1; deg(f) > 0; ++d) {
    for (const P& g : monics(p, d)) {
      int k = 0;
      while (deg(f) >= d && rem(f, g, p).empty()) {
        f = quo(f, g, p);
        ++k;
      }
      if (k > 0) out.push_back(k);
    }
  }
  return out;
}

// #U_{(r0, r1)} for P1 over F_p: pairs of effective divisors with disjoint supports,
// each multiplicity 0 or >= m_i.
std::uint64_t oracle_p1(long p, long r0, long r1, long m0, long m1) {
  std::uint64_t count = 0;
  auto ok = [&](const P& f, int inf, long m) {
    if (inf > 0 && inf < m) return false;
    for (int k : multiplicities(f, p))
      if (k < m) return false;
    return true;
  };
  for (int d0 = 0; d0 <= r0; ++d0)
    for (const P& f0 : monics(p, d0)) {
      int i0 = static_cast<int>(r0) - d0;
      if (!ok(f0, i0, m0)) continue;
      for (int d1 = 0; d1 <= r1; ++d1) {
        int i1 = static_cast<int>(r1) - d1;
        if (i0 > 0 && i1 > 0) continue;
        for (const P& f1 : monics(p, d1))
          if (ok(f1, i1, m1) && coprime(f0, f1, p)) ++count;
      }
    }
  return count;
}

TEST(CountU, ReferenceValues) {
  EXPECT_EQ(count_U(projective_line(), {1, 1}, CountingConstraint::none(), 2), 6u);
  EXPECT_EQ(count_U(projective_plane(), {1, 1, 1}, CountingConstraint::none(), 2), 24u);
  EXPECT_EQ(count_U(projective_plane(), {1, 1, 1}, CountingConstraint::none(), 3), 60u);
  EXPECT_EQ(moduli_count(projective_plane(), {1, 1, 1}, CountingConstraint::none(), 3), 240);
  CampanaWeights w{{2, 2}};
  EXPECT_EQ(moduli_count(projective_line(), {2, 2}, CountingConstraint::campana(w), 2), 6);
}

TEST(CountU, ProjectiveLineAgainstBruteForce) {
  for (long p : {2, 3}) {
    DivisorCounter counter(projective_line(), p);
    for (long r = 0; r <= (p == 2 ? 5 : 3); ++r) {
      EXPECT_EQ(counter.count_U({r, r}, CountingConstraint::none()), oracle_p1(p, r, r, 1, 1)) << p << " " << r;
      CampanaWeights w{{2, 2}};
      EXPECT_EQ(counter.count_U({r, r}, CountingConstraint::campana(w)), oracle_p1(p, r, r, 2, 2)) << p << " " << r;
      CampanaWeights w3{{2, 3}};
      EXPECT_EQ(counter.count_U({r, r}, CountingConstraint::campana(w3)), oracle_p1(p, r, r, 2, 3)) << p << " " << r;
    }
  }
}

TEST(CountU, UnbalancedProfileCountsDivisorPairs) {
  EXPECT_EQ(count_U(projective_line(), {1, 2}, CountingConstraint::none(), 2), oracle_p1(2, 1, 2, 1, 1));
  EXPECT_EQ(count_U(projective_line(), {1, 2}, CountingConstraint::none(), 2), 12u);
}

TEST(CountU, WorkersGiveSameCount) {
  DivisorCounter counter(p1_times_p1(), 2);
  CountOptions one, four;
  four.workers = 4;
  for (long a = 0; a <= 3; ++a)
    for (long b = 0; b <= 3; ++b)
      EXPECT_EQ(counter.count_U({a, a, b, b}, CountingConstraint::none(), one),
                counter.count_U({a, a, b, b}, CountingConstraint::none(), four));
}

TEST(CountU, CeilingRaisesResourceLimit) {
  CountOptions tiny;
  tiny.ceiling = 10;
  EXPECT_THROW(count_U(projective_plane(), {4, 4, 4}, CountingConstraint::none(), 3, tiny), ResourceLimit);
}

TEST(CountU, A1FaceForcesBoundaryZero) {
  Fan f = projective_plane();
  RaySet D = make_set({2});
  // A = empty forces r_2 = 0, impossible for a nonzero balanced class.
  EXPECT_EQ(count_U(f, {1, 1, 1}, CountingConstraint::a1_at_face(D, 0), 2), 0u);
  EXPECT_GT(count_U(f, {1, 1, 1}, CountingConstraint::a1_at_face(D, D), 2), 0u);
}

TEST(Constraint, Satisfaction) {
  auto F = FieldSpec::make(2);
  CampanaWeights w{{2, 2}};
  auto k = CountingConstraint::campana(w);
  DivisorTuple ok{{EffectiveDivisor{2, Poly{0, 0, 1}}, EffectiveDivisor{2, Poly{1, 0, 1}}}};
  EXPECT_TRUE(satisfies_support_condition(F, ok, projective_line()));
  EXPECT_TRUE(satisfies_constraint(F, ok, k));
  DivisorTuple simple{{EffectiveDivisor{2, Poly{0, 1, 1}}, EffectiveDivisor{2, Poly{1, 1, 1}}}};
  EXPECT_FALSE(satisfies_constraint(F, simple, k));
  DivisorTuple shared{{EffectiveDivisor{1, Poly{0, 1}}, EffectiveDivisor{1, Poly{0, 1}}}};
  EXPECT_FALSE(satisfies_support_condition(F, shared, projective_line()));
}

TEST(CountingFunction, ProjectiveLine) {
  DivisorCounter counter(projective_line(), 2);
  auto k = CountingConstraint::none();
  // classes (0,0) and (1,1): 1 + (q-1) * 6
  EXPECT_EQ(counting_function(counter, k, counting_cone(k), counting_degree(k, 2), Rational(2)), 7);
  auto rows = count_table(counter, k, counting_cone(k), counting_degree(k, 2), Rational(4));
  ASSERT_EQ(rows.size(), 3u);
  EXPECT_EQ(rows[2].u_count, oracle_p1(2, 2, 2, 1, 1));
}

TEST(CountingFunction, NotProper) {
  DivisorCounter counter(p1_times_p1(), 2);
  auto k = CountingConstraint::none();
  EXPECT_THROW(counting_function(counter, k, NefSubcone::nef(), log_degree(4, make_set({2, 3})), Rational(4)),
               MathError);
}

}  // namespace
}  // namespace toric
