#pragma once

#include <complex>
#include <string>
#include <vector>

#include "toric/curve_classes.hpp"
#include "toric/divisors.hpp"
#include "toric/fan.hpp"
#include "toric/finite_field.hpp"
#include "toric/pair.hpp"
#include "toric/series.hpp"

namespace toric {

enum class PlaceKind { Finite, Infinity };

// F(u) = sum over allowed cones A of prod_{i in A} sum_{r >= lower_i} u_i^r.
struct LocalFactor {
  int rays = 0;
  std::vector<RaySet> cones;  // allowed supports, zero cone included
  std::vector<long> lower;    // per ray

  static LocalFactor campana(const Fan& f, const CampanaWeights& w);
  // Cones inside `allowed`, lower bound 1.
  static LocalFactor restricted(const Fan& f, RaySet allowed);
  // The factor used by `k` at a place of the given kind. Over P1 (plain, Campana) the kind is ignored.
  static LocalFactor for_constraint(const Fan& f, const CountingConstraint& k, PlaceKind kind);

  int delta(const Profile& r) const;
  // F(x^e) expanded within t.
  IntSeries series(const Truncation& t, int e = 1) const;
  // sum over cones of prod y_i^{lower_i} / (1 - y_i); throws MathError("DivergentEvaluation") if some |y_i| >= 1.
  std::complex<double> value(const std::vector<std::complex<double>>& y) const;
};

int local_delta(const Fan& f, const CountingConstraint& k, const Profile& r, PlaceKind kind = PlaceKind::Finite);

// Predicted #U counts: prod_e F(x^e)^{N_e} over |P1|, or prod_e F_fin(x^e)^{N_e(A1)} * F_inf(x).
IntSeries euler_coefficients(const Fan& f, const CountingConstraint& k, long q, const Truncation& t);

// Residue a in prod Z/m_i; plain constraints use m_i = 1.
struct TwistSpec {
  Residue a;
  Residue b;
};

// sum_r prod (zeta_i^e u_i)^{r_i} delta(r), u_i = q^{-e t_i}, zeta_i = exp(2 pi i a_i / m_i).
std::complex<double> twisted_local_value(const Fan& f, const CountingConstraint& k, const TwistSpec& a, int e,
                                         const std::vector<std::complex<double>>& t, long q);

struct ConstantComponent {
  std::string label;
  std::complex<double> value;
  double tail_bound = 0;
};

struct ConstantReport {
  double value = 0;
  std::complex<double> complex_value;
  int E = 0;
  double tail_bound = 0;
  std::vector<ConstantComponent> breakdown;
  std::string normalization_note;
  std::vector<std::string> warnings;

  bool positive() const { return value - tail_bound > 0; }
};

// prod over places c of P1 of (1 - q_c^{-1})^{#rays} F_c(a; t = 1/m), times (q/(q-1))^{#rays - n}.
ConstantReport tau_campana(const Fan& f, const CampanaWeights& m, const Residue& a, long q, int E = 8);

// (1 - q^{-1})^n * prod_{c in |A1|} (1 - q_c^{-1})^{k'} F_fin(q_c^{-1}) * sum_{A <= B <= (rays \ boundary) u A}
// prod_{i in B \ A} q^{-1}/(1 - q^{-1}), with k' = #(rays \ boundary).
ConstantReport tau_a1(const Fan& f, RaySet boundary, RaySet A, long q, int E = 8);

enum class AlphaNormalization { Slice, Volume };

ConstantReport leading_constant(const Fan& f, const CampanaWeights& m, long q, int E = 8,
                                AlphaNormalization norm = AlphaNormalization::Slice);
ConstantReport leading_constant(const ToricPair& p, RaySet A, long q, int E = 8,
                                AlphaNormalization norm = AlphaNormalization::Slice);

// Regularized product over places of degree e of h_e^{N_e}, h_e = (1 - q^{-e})^{k_reg} F(y(e)) with
// y_i(e) = omega^{e c_i} sigma_e^{s_i}, sigma_e = q^{-e/L}, omega = exp(2 pi i / L). Requires h_e - 1 = O(sigma^{L+1}).
struct RegularizedProduct {
  LocalFactor factor;
  long L = 1;
  std::vector<long> s;
  std::vector<long> c;
  int k_reg = 0;
  Line line = Line::P1;
  long q = 2;
};

struct ProductValue {
  std::complex<double> value;
  std::complex<double> partial;  // places of degree <= E
  double tail_bound = 0;         // absolute, +inf when not controlled
  int E = 0;
  int series_order = 0;
  int last_degree = 0;           // last degree summed in the tail correction
};

ProductValue evaluate(const RegularizedProduct& p, int E);

}  // namespace toric
