#pragma once

#include <optional>
#include <string>
#include <vector>

#include "toric/curve_classes.hpp"
#include "toric/fan.hpp"

namespace toric {

struct ToricPair {
  Fan fan;
  RaySet boundary = 0;  // the index set of the boundary divisor D
};

struct A1Evidence {
  bool connected = false;        // non-boundary rays span N_Q
  int nonboundary_rank = 0;
  bool picard_independent = false;  // boundary classes independent in Pic_Q
  bool agree = false;
  std::string label = "A1-connected (rank criterion)";
};

A1Evidence is_a1_connected(const ToricPair& p);

struct ClemensElement {
  RaySet A = 0;
  int clemens_dim() const { return cardinality(A); }
};

// All A in the boundary with the rays of A spanning a cone, ordered by size then lexicographically.
std::vector<ClemensElement> clemens_complex(const ToricPair& p);

// True iff the rays outside the boundary together with the rays of A fail to positively span N_R.
bool has_analytic_obstruction(const ToricPair& p, RaySet A);

struct NefFace {
  RaySet A = 0;
  NefSubcone cone;  // r_i = 0 for i in boundary \ A
  int dimension = 0;
  bool degenerate = false;
  std::optional<Rational> index;  // of sum_{i not in boundary} r_i on the span lattice
};

NefFace face(const ToricPair& p, RaySet A);

// True iff the face meets {sum_{i not in boundary} r_i = 0} only at the origin.
bool northcott_check(const ToricPair& p, RaySet A);

// Positive-span test by exact enumeration of basic subsets (exposed for testing).
bool positively_spans(const std::vector<std::vector<long>>& generators, int dim);

}  // namespace toric
