#pragma once

#include <cstdint>
#include <map>
#include <memory>
#include <string>
#include <vector>

#include "toric/curve_classes.hpp"
#include "toric/fan.hpp"
#include "toric/finite_field.hpp"
#include "toric/lattice.hpp"

namespace toric {

struct CountingConstraint {
  enum class Kind { None, Campana, A1, A1AtFace };
  Kind kind = Kind::None;
  std::vector<long> m;    // Campana weights
  RaySet boundary = 0;    // A1 variants
  RaySet face = 0;        // A1AtFace: A inside the boundary

  static CountingConstraint none() { return {}; }
  static CountingConstraint campana(const CampanaWeights& w) { return {Kind::Campana, w.m, 0, 0}; }
  static CountingConstraint a1(RaySet boundary) { return {Kind::A1, {}, boundary, 0}; }
  static CountingConstraint a1_at_face(RaySet boundary, RaySet A) {
    return {Kind::A1AtFace, {}, boundary, A};
  }

  // Smallest allowed positive multiplicity on ray i (1 unless Campana).
  long lower(int i) const { return kind == Kind::Campana ? m[i] : 1; }
  bool forces_infinity(int i) const { return kind != Kind::None && kind != Kind::Campana && ((boundary >> i) & 1); }
  // Rays that must have r_i = 0 (boundary minus the face).
  RaySet forced_zero() const { return kind == Kind::A1AtFace ? (boundary & ~face) : 0; }
  std::string tag() const;
};

struct DivisorTuple {
  std::vector<EffectiveDivisor> w;
};

bool satisfies_support_condition(const FieldSpec& F, const DivisorTuple& w, const Fan& f);
bool satisfies_constraint(const FieldSpec& F, const DivisorTuple& w, const CountingConstraint& k);

struct CountOptions {
  int workers = 1;
  std::uint64_t ceiling = 100'000'000;
};

// Enumerates the F_q-points of U_r (and its constrained variants) for one fan and one q.
// Factorization tables are shared across calls; the object is safe to use from one thread
// at a time, while each count may itself use several workers.
class DivisorCounter {
 public:
  DivisorCounter(Fan fan, long q);

  const Fan& fan() const { return fan_; }
  const FieldSpec& field() const { return F_; }

  // Throws ResourceLimit if the product search space exceeds opts.ceiling.
  std::uint64_t count_U(const Profile& r, const CountingConstraint& k, const CountOptions& opts = {});
  BigInt moduli_count(const Profile& r, const CountingConstraint& k, const CountOptions& opts = {});

 private:
  const FactorTable& table(int degree, std::uint64_t ceiling);

  Fan fan_;
  FieldSpec F_;
  std::unique_ptr<FactorTable> table_;
  std::vector<bool> cone_table_;
};

std::uint64_t count_U(const Fan& f, const Profile& r, const CountingConstraint& k, long q,
                      const CountOptions& opts = {});
BigInt moduli_count(const Fan& f, const Profile& r, const CountingConstraint& k, long q,
                    const CountOptions& opts = {});

struct CountRow {
  Profile r;
  std::string tag;
  long q = 0;
  std::uint64_t u_count = 0;
  BigInt moduli;
};

// The counting cone and degree functional matching a constraint: Campana uses the nef cone and
// sum r_i/m_i, A1AtFace the face cone and sum_{i not in boundary} r_i, plain the nef cone and sum r_i.
NefSubcone counting_cone(const CountingConstraint& k);
DegreeFunctional counting_degree(const CountingConstraint& k, int rays);

std::vector<CountRow> count_table(DivisorCounter& counter, const CountingConstraint& k, const NefSubcone& C,
                                  const DegreeFunctional& phi, const Rational& B, const CountOptions& opts = {});

// Sum of moduli counts over the classes of C with phi <= B. Throws MathError("NotProper").
BigInt counting_function(DivisorCounter& counter, const CountingConstraint& k, const NefSubcone& C,
                         const DegreeFunctional& phi, const Rational& B, const CountOptions& opts = {});

}  // namespace toric
