#pragma once

#include <complex>
#include <vector>

#include "toric/fan.hpp"
#include "toric/lattice.hpp"

namespace toric {

using Profile = std::vector<long>;

struct CurveClassLattice {
  // Basis of N_1(X)_Z inside Z^{rays}; entry i of a basis vector is r_i = Delta_i . alpha.
  std::vector<IntVector> basis;
  int rank = 0;
};

CurveClassLattice curve_lattice(const Fan& f);

// The ray map Z^{rays} -> Z^n as an n x #rays matrix.
IntMatrix ray_matrix(const Fan& f);

bool is_balanced(const Fan& f, const Profile& r);

struct CampanaWeights {
  std::vector<long> m;
  long lcm() const;
  long product() const;
  bool trivial() const;
};

CampanaWeights unit_weights(int rays);

struct DegreeFunctional {
  RatVector coeffs;
  Rational operator()(const Profile& r) const;
  Rational operator()(const IntVector& r) const;
};

// sum r_i
DegreeFunctional anticanonical(int rays);
// sum r_i / m_i
DegreeFunctional campana_degree(const CampanaWeights& w);
// sum over i outside the boundary of r_i
DegreeFunctional log_degree(int rays, RaySet boundary);

// A rational polyhedral subcone of the nef cone: balanced, r_i >= 0, r_i = 0 for the
// rays in `zero_rays`, and lambda . r >= 0 for every extra inequality.
struct NefSubcone {
  RaySet zero_rays = 0;
  std::vector<RatVector> inequalities;

  static NefSubcone nef() { return {}; }
  static NefSubcone face(RaySet zero) { return {zero, {}}; }
  static NefSubcone degenerate(int rays);
  // Delta_i . alpha >= eps * phi(alpha) for all i
  static NefSubcone shrunk(const DegreeFunctional& phi, int rays, const Rational& eps);
};

// Extreme rays and span lattice of a subcone, in r-coordinates.
struct RealizedCone {
  std::vector<IntVector> rays;        // primitive extreme rays
  std::vector<IntVector> span_basis;  // saturated lattice of the linear span, HNF
  // inequalities (lambda with lambda . r >= 0), nonnegativity included
  std::vector<RatVector> inequalities;
  int dim() const { return static_cast<int>(span_basis.size()); }
  bool contains(const IntVector& r) const;
};

RealizedCone realize(const Fan& f, const NefSubcone& C);

// min positive value of phi on the span lattice of C (default: all of N_1(X)_Z).
Rational index(const Fan& f, const DegreeFunctional& phi, const NefSubcone& C = NefSubcone::nef());

struct AlphaConstants {
  Rational vol;     // dim * lattice volume of {alpha in C : phi <= 1}
  Rational slice;   // leading coefficient of #{phi = r d} in (r d)^{dim-1}
  Rational index;   // r(phi) on the span lattice
  int dim = 0;
  long period = 1;  // quasi-polynomial period used by the fit
  int window = 0;   // number of levels counted
};

AlphaConstants alpha_constant(const Fan& f, const NefSubcone& C, const DegreeFunctional& phi);

// Lattice tuples in C with phi(r) <= B, in lexicographic order.
std::vector<Profile> enumerate_classes(const Fan& f, const NefSubcone& C, const DegreeFunctional& phi,
                                       const Rational& B);

// True iff phi > 0 on C minus the origin.
bool is_proper(const Fan& f, const NefSubcone& C, const DegreeFunctional& phi);

std::vector<Residue> character_group(const Fan& f, const CampanaWeights& w);

// exp(2 pi i num / den) with 0 <= num < den, gcd(num, den) = 1.
struct Phase {
  long num = 0;
  long den = 1;
  friend bool operator==(const Phase&, const Phase&) = default;
};

Phase make_phase(const Rational& x);
Phase character_value(const Residue& a, const Residue& b, const Profile& r, const CampanaWeights& w);
std::complex<double> to_complex(const Phase& p);

}  // namespace toric
