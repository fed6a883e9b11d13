#include "toric/pair.hpp"

#include <algorithm>
#include <numeric>

#include "toric/errors.hpp"
#include "toric/lattice.hpp"

namespace toric {

A1Evidence is_a1_connected(const ToricPair& p) {
  const Fan& f = p.fan;
  A1Evidence ev;
  linalg::RatMatrix rows;
  for (int i = 0; i < f.num_rays(); ++i) {
    if ((p.boundary >> i) & 1) continue;
    RatVector v;
    for (long x : f.rays()[i]) v.emplace_back(x);
    rows.push_back(v);
  }
  ev.nonboundary_rank = static_cast<int>(linalg::rank(rows));
  ev.connected = ev.nonboundary_rank == f.dim();

  // Pic_Q = Q^{rays} / M_Q with M spanned by (<m, v_i>)_i. The boundary classes are
  // independent iff adjoining their unit vectors raises the rank by #boundary.
  linalg::RatMatrix M;
  for (int j = 0; j < f.dim(); ++j) {
    RatVector row;
    for (int i = 0; i < f.num_rays(); ++i) row.emplace_back(f.rays()[i][j]);
    M.push_back(row);
  }
  const std::size_t base = linalg::rank(M);
  linalg::RatMatrix aug = M;
  for (int i : members(p.boundary)) {
    RatVector e(f.num_rays(), Rational(0));
    e[i] = 1;
    aug.push_back(e);
  }
  ev.picard_independent = linalg::rank(aug) == base + static_cast<std::size_t>(cardinality(p.boundary));
  ev.agree = ev.connected == ev.picard_independent;
  return ev;
}

std::vector<ClemensElement> clemens_complex(const ToricPair& p) {
  std::vector<ClemensElement> out;
  const RaySet B = p.boundary;
  for (RaySet s = B;; s = (s - 1) & B) {
    if (p.fan.is_cone_rayset(s)) out.push_back({s});
    if (s == 0) break;
  }
  std::sort(out.begin(), out.end(), [](const ClemensElement& a, const ClemensElement& b) {
    if (a.clemens_dim() != b.clemens_dim()) return a.clemens_dim() < b.clemens_dim();
    return members(a.A) < members(b.A);
  });
  return out;
}

bool positively_spans(const std::vector<std::vector<long>>& generators, int dim) {
  const std::size_t g = generators.size();
  auto in_cone = [&](const RatVector& target) {
    // Caratheodory: target is a nonnegative combination of some linearly independent subset.
    for (std::size_t size = 1; size <= static_cast<std::size_t>(dim) && size <= g; ++size) {
      std::vector<std::size_t> pick(size);
      std::iota(pick.begin(), pick.end(), 0);
      while (true) {
        linalg::RatMatrix cols;
        for (auto i : pick) {
          RatVector v;
          for (long x : generators[i]) v.emplace_back(x);
          cols.push_back(v);
        }
        if (linalg::rank(cols) == size) {
          linalg::RatMatrix sys(dim, RatVector(size + 1));
          for (int r = 0; r < dim; ++r) {
            for (std::size_t c = 0; c < size; ++c) sys[r][c] = cols[c][r];
            sys[r][size] = target[r];
          }
          // target in the span: solve on independent coordinate rows
          linalg::RatMatrix withT = cols;
          withT.push_back(target);
          if (linalg::rank(withT) == size) {
            std::vector<int> use;
            linalg::RatMatrix picked;
            for (int r = 0; r < dim && use.size() < size; ++r) {
              linalg::RatMatrix trial = picked;
              RatVector row(sys[r].begin(), sys[r].begin() + size);
              trial.push_back(row);
              if (linalg::rank(trial) == trial.size()) {
                picked = std::move(trial);
                use.push_back(r);
              }
            }
            RatVector rhs;
            for (int r : use) rhs.push_back(sys[r][size]);
            RatVector lambda;
            if (linalg::solve(picked, rhs, lambda) &&
                std::all_of(lambda.begin(), lambda.end(), [](const Rational& x) { return x >= 0; }))
              return true;
          }
        }
        std::size_t i = size;
        while (i > 0 && pick[i - 1] == g - size + i - 1) --i;
        if (i == 0) break;
        ++pick[i - 1];
        for (std::size_t j = i; j < size; ++j) pick[j] = pick[j - 1] + 1;
      }
    }
    return false;
  };
  for (int j = 0; j < dim; ++j)
    for (int s : {1, -1}) {
      RatVector e(dim, Rational(0));
      e[j] = s;
      if (!in_cone(e)) return false;
    }
  return true;
}

bool has_analytic_obstruction(const ToricPair& p, RaySet A) {
  std::vector<std::vector<long>> gens;
  for (int i = 0; i < p.fan.num_rays(); ++i) {
    bool in_boundary = (p.boundary >> i) & 1;
    bool in_A = (A >> i) & 1;
    if (!in_boundary || in_A) gens.push_back(p.fan.rays()[i]);
  }
  return !positively_spans(gens, p.fan.dim());
}

NefFace face(const ToricPair& p, RaySet A) {
  NefFace F;
  F.A = A;
  F.cone = NefSubcone::face(p.boundary & ~A);
  RealizedCone rc = realize(p.fan, F.cone);
  F.dimension = rc.dim();
  F.degenerate = F.dimension == 0;
  if (!F.degenerate) {
    DegreeFunctional phi = log_degree(p.fan.num_rays(), p.boundary);
    try {
      F.index = min_positive_value(phi.coeffs, rc.span_basis);
    } catch (const MathError&) {
      F.index.reset();
    }
  }
  return F;
}

bool northcott_check(const ToricPair& p, RaySet A) {
  NefFace F = face(p, A);
  return is_proper(p.fan, F.cone, log_degree(p.fan.num_rays(), p.boundary));
}

}  // namespace toric
