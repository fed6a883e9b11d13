#include "toric/curve_classes.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <numeric>
#include <set>

#include "toric/errors.hpp"

namespace toric {

IntMatrix ray_matrix(const Fan& f) {
  IntMatrix m(f.dim(), f.num_rays());
  for (int j = 0; j < f.num_rays(); ++j)
    for (int i = 0; i < f.dim(); ++i) m(i, j) = f.rays()[j][i];
  return m;
}

CurveClassLattice curve_lattice(const Fan& f) {
  CurveClassLattice L;
  L.basis = kernel_basis(ray_matrix(f));
  L.rank = static_cast<int>(L.basis.size());
  return L;
}

bool is_balanced(const Fan& f, const Profile& r) {
  if (static_cast<int>(r.size()) != f.num_rays()) return false;
  for (int i = 0; i < f.dim(); ++i) {
    long s = 0;
    for (int j = 0; j < f.num_rays(); ++j) s += r[j] * f.rays()[j][i];
    if (s != 0) return false;
  }
  return true;
}

long CampanaWeights::lcm() const {
  long l = 1;
  for (long x : m) l = std::lcm(l, x);
  return l;
}

long CampanaWeights::product() const {
  long p = 1;
  for (long x : m) p *= x;
  return p;
}

bool CampanaWeights::trivial() const {
  return std::all_of(m.begin(), m.end(), [](long x) { return x == 1; });
}

CampanaWeights unit_weights(int rays) { return {std::vector<long>(rays, 1)}; }

Rational DegreeFunctional::operator()(const Profile& r) const {
  Rational s = 0;
  for (std::size_t i = 0; i < coeffs.size(); ++i) s += coeffs[i] * r[i];
  return s;
}

Rational DegreeFunctional::operator()(const IntVector& r) const {
  Rational s = 0;
  for (std::size_t i = 0; i < coeffs.size(); ++i) s += coeffs[i] * Rational(r[i]);
  return s;
}

DegreeFunctional anticanonical(int rays) { return {RatVector(rays, Rational(1))}; }

DegreeFunctional campana_degree(const CampanaWeights& w) {
  DegreeFunctional phi;
  for (long x : w.m) phi.coeffs.emplace_back(1, x);
  return phi;
}

DegreeFunctional log_degree(int rays, RaySet boundary) {
  DegreeFunctional phi;
  for (int i = 0; i < rays; ++i) phi.coeffs.emplace_back((boundary >> i) & 1 ? 0 : 1);
  return phi;
}

NefSubcone NefSubcone::degenerate(int rays) {
  return {rays == 32 ? ~RaySet{0} : (RaySet{1} << rays) - 1, {}};
}

NefSubcone NefSubcone::shrunk(const DegreeFunctional& phi, int rays, const Rational& eps) {
  NefSubcone c;
  for (int i = 0; i < rays; ++i) {
    RatVector h(rays);
    for (int j = 0; j < rays; ++j) h[j] = -eps * phi.coeffs[j];
    h[i] += 1;
    c.inequalities.push_back(std::move(h));
  }
  return c;
}

bool RealizedCone::contains(const IntVector& r) const {
  RatVector x = linalg::to_rational(r);
  return std::all_of(inequalities.begin(), inequalities.end(),
                     [&](const RatVector& h) { return linalg::dot(h, x) >= 0; });
}

namespace {

RatVector in_r_space(const RatVector& y, const linalg::RatMatrix& G, std::size_t k) {
  RatVector r(k, Rational(0));
  for (std::size_t t = 0; t < y.size(); ++t)
    for (std::size_t i = 0; i < k; ++i) r[i] += y[t] * G[t][i];
  return r;
}

// Coordinates of r in the basis S (rows), assuming r lies in the span.
RatVector coordinates(const std::vector<IntVector>& S, const RatVector& r) {
  const std::size_t b = S.size();
  if (b == 0) return {};
  // pick b independent columns greedily
  std::vector<std::size_t> cols;
  linalg::RatMatrix picked;
  for (std::size_t j = 0; j < r.size() && cols.size() < b; ++j) {
    linalg::RatMatrix trial = picked;
    RatVector col;
    for (std::size_t t = 0; t < b; ++t) col.emplace_back(S[t][j]);
    trial.push_back(col);
    if (linalg::rank(trial) == trial.size()) {
      picked = std::move(trial);
      cols.push_back(j);
    }
  }
  // solve sum_t c_t S_t[j] = r_j over the picked columns
  linalg::RatMatrix M(b, RatVector(b));
  RatVector rhs(b);
  for (std::size_t e = 0; e < b; ++e) {
    for (std::size_t t = 0; t < b; ++t) M[e][t] = Rational(S[t][cols[e]]);
    rhs[e] = r[cols[e]];
  }
  RatVector c;
  if (!linalg::solve(M, rhs, c)) throw std::logic_error("coordinates: singular basis");
  return c;
}

BigInt floor_r(const Rational& x) {
  BigInt q = numerator(x) / denominator(x);
  if (x < 0 && q * denominator(x) != numerator(x)) q -= 1;
  return q;
}

BigInt ceil_r(const Rational& x) { return -floor_r(-x); }

}  // namespace

RealizedCone realize(const Fan& f, const NefSubcone& C) {
  const std::size_t k = f.num_rays();
  CurveClassLattice L = curve_lattice(f);
  RealizedCone out;
  for (std::size_t i = 0; i < k; ++i) {
    RatVector e(k, Rational(0));
    e[i] = 1;
    out.inequalities.push_back(e);
  }
  for (const auto& h : C.inequalities) {
    if (h.size() != k) throw InputError("InvalidCone", "inequality has wrong length");
    out.inequalities.push_back(h);
  }

  // W = N_1 intersected with the equalities r_i = 0 (i in zero_rays)
  linalg::RatMatrix eq;
  for (int i : members(C.zero_rays)) {
    if (i >= static_cast<int>(k)) continue;
    RatVector row;
    for (const auto& b : L.basis) row.emplace_back(b[i]);
    eq.push_back(row);
  }
  linalg::RatMatrix Wc = linalg::nullspace(eq, L.basis.size());
  linalg::RatMatrix G;  // basis of W in r-space
  for (const auto& w : Wc) {
    RatVector r(k, Rational(0));
    for (std::size_t j = 0; j < w.size(); ++j)
      for (std::size_t i = 0; i < k; ++i) r[i] += w[j] * Rational(L.basis[j][i]);
    G.push_back(r);
  }
  const std::size_t w = G.size();

  // inequalities in W coordinates
  linalg::RatMatrix H;
  for (const auto& h : out.inequalities) {
    RatVector hw(w);
    for (std::size_t t = 0; t < w; ++t) hw[t] = linalg::dot(h, G[t]);
    H.push_back(hw);
  }

  std::set<IntVector> rays;
  auto consider = [&](const RatVector& dir) {
    int sign = 0;
    for (const auto& h : H) {
      Rational v = linalg::dot(h, dir);
      int s = v > 0 ? 1 : (v < 0 ? -1 : 0);
      if (s == 0) continue;
      if (sign == 0) sign = s;
      if (s != sign) return;
    }
    if (sign == 0) return;
    RatVector r = in_r_space(dir, G, k);
    if (sign < 0)
      for (auto& x : r) x = -x;
    rays.insert(linalg::primitive(r));
  };
  if (w == 1) {
    consider(RatVector{Rational(1)});
  } else if (w >= 2) {
    const std::size_t need = w - 1;
    std::vector<std::size_t> pick(need);
    std::iota(pick.begin(), pick.end(), 0);
    const std::size_t m = H.size();
    while (true) {
      linalg::RatMatrix rows;
      for (auto p : pick) rows.push_back(H[p]);
      if (linalg::rank(rows) == need) {
        auto ns = linalg::nullspace(rows, w);
        if (ns.size() == 1) consider(ns[0]);
      }
      // next combination
      std::size_t i = need;
      while (i > 0 && pick[i - 1] == m - need + i - 1) --i;
      if (i == 0) break;
      ++pick[i - 1];
      for (std::size_t j = i; j < need; ++j) pick[j] = pick[j - 1] + 1;
    }
  }
  out.rays.assign(rays.begin(), rays.end());

  if (!out.rays.empty()) {
    linalg::RatMatrix rr;
    for (const auto& r : out.rays) rr.push_back(linalg::to_rational(r));
    linalg::RatMatrix comp = linalg::nullspace(rr, k);
    std::vector<IntVector> rows;
    for (const auto& c : comp) rows.push_back(linalg::primitive(c));
    out.span_basis = kernel_basis(IntMatrix::from_rows(rows, k));
  }
  return out;
}

Rational index(const Fan& f, const DegreeFunctional& phi, const NefSubcone& C) {
  RealizedCone rc = realize(f, C);
  return min_positive_value(phi.coeffs, rc.span_basis);
}

bool is_proper(const Fan& f, const NefSubcone& C, const DegreeFunctional& phi) {
  RealizedCone rc = realize(f, C);
  return std::all_of(rc.rays.begin(), rc.rays.end(), [&](const IntVector& r) { return phi(r) > 0; });
}

namespace {

std::vector<Profile> enumerate_realized(const RealizedCone& rc, const DegreeFunctional& phi,
                                        const Rational& B, std::size_t k) {
  std::vector<Profile> out;
  if (B < 0) return out;
  for (const auto& r : rc.rays)
    if (phi(r) <= 0) throw MathError("NotProper", "degree functional is not positive on the cone");
  const std::size_t b = rc.span_basis.size();
  if (b == 0) {
    out.emplace_back(k, 0);
    return out;
  }
  std::vector<BigInt> lo(b, BigInt(0)), hi(b, BigInt(0));
  for (const auto& r : rc.rays) {
    RatVector c = coordinates(rc.span_basis, linalg::to_rational(r));
    Rational scale = B / phi(r);
    for (std::size_t j = 0; j < b; ++j) {
      Rational v = c[j] * scale;
      lo[j] = std::min(lo[j], floor_r(v));
      hi[j] = std::max(hi[j], ceil_r(v));
    }
  }
  std::vector<long> c(b);
  std::vector<long> clo(b), chi(b);
  for (std::size_t j = 0; j < b; ++j) {
    clo[j] = lo[j].convert_to<long>();
    chi[j] = hi[j].convert_to<long>();
    c[j] = clo[j];
  }
  std::vector<std::vector<long>> S(b, std::vector<long>(k));
  for (std::size_t j = 0; j < b; ++j)
    for (std::size_t i = 0; i < k; ++i) S[j][i] = rc.span_basis[j][i].convert_to<long>();
  while (true) {
    Profile r(k, 0);
    for (std::size_t j = 0; j < b; ++j)
      for (std::size_t i = 0; i < k; ++i) r[i] += c[j] * S[j][i];
    bool ok = true;
    for (const auto& h : rc.inequalities) {
      Rational v = 0;
      for (std::size_t i = 0; i < k; ++i)
        if (r[i] != 0) v += h[i] * r[i];
      if (v < 0) {
        ok = false;
        break;
      }
    }
    if (ok && phi(r) <= B) out.push_back(std::move(r));
    std::size_t j = 0;
    while (j < b && c[j] == chi[j]) {
      c[j] = clo[j];
      ++j;
    }
    if (j == b) break;
    ++c[j];
  }
  std::sort(out.begin(), out.end());
  return out;
}

long factorial(int n) {
  long f = 1;
  for (int i = 2; i <= n; ++i) f *= i;
  return f;
}

using Simplex = std::vector<int>;

void triangulate(const std::vector<int>& face, int d, const std::vector<RatVector>& verts,
                 const std::vector<RatVector>& H, std::vector<Simplex>& out) {
  if (static_cast<int>(face.size()) == d) {
    out.push_back(face);
    return;
  }
  const int apex = face[0];
  std::set<std::vector<int>> seen;
  for (const auto& h : H) {
    std::vector<int> z;
    for (int v : face)
      if (linalg::dot(h, verts[v]) == 0) z.push_back(v);
    if (z.size() == face.size() || z.empty()) continue;
    if (std::find(z.begin(), z.end(), apex) != z.end()) continue;
    if (!seen.insert(z).second) continue;
    linalg::RatMatrix m;
    for (int v : z) m.push_back(verts[v]);
    if (static_cast<int>(linalg::rank(m)) != d - 1) continue;
    std::vector<Simplex> sub;
    triangulate(z, d - 1, verts, H, sub);
    for (auto& s : sub) {
      s.insert(s.begin(), apex);
      out.push_back(std::move(s));
    }
  }
}

}  // namespace

std::vector<Profile> enumerate_classes(const Fan& f, const NefSubcone& C, const DegreeFunctional& phi,
                                       const Rational& B) {
  RealizedCone rc = realize(f, C);
  return enumerate_realized(rc, phi, B, f.num_rays());
}

AlphaConstants alpha_constant(const Fan& f, const NefSubcone& C, const DegreeFunctional& phi) {
  RealizedCone rc = realize(f, C);
  AlphaConstants a;
  a.dim = rc.dim();
  if (a.dim == 0) {
    a.vol = a.slice = a.index = 0;
    return a;
  }
  for (const auto& r : rc.rays)
    if (phi(r) <= 0) throw MathError("UnboundedPolytope", "degree functional not positive on the cone");
  a.index = min_positive_value(phi.coeffs, rc.span_basis);
  const int b = a.dim;

  // slice vertices at phi = 1 in span-lattice coordinates
  std::vector<RatVector> verts;
  for (const auto& r : rc.rays) {
    RatVector c = coordinates(rc.span_basis, linalg::to_rational(r));
    Rational s = 1 / phi(r);
    for (auto& x : c) x *= s;
    verts.push_back(std::move(c));
  }
  std::vector<RatVector> Hc;  // inequalities in lattice coordinates
  for (const auto& h : rc.inequalities) {
    RatVector hc(b);
    for (int j = 0; j < b; ++j) hc[j] = linalg::dot(h, linalg::to_rational(rc.span_basis[j]));
    Hc.push_back(std::move(hc));
  }
  std::vector<int> all(verts.size());
  std::iota(all.begin(), all.end(), 0);
  std::vector<Simplex> simplices;
  triangulate(all, b, verts, Hc, simplices);
  Rational total = 0;
  for (const auto& s : simplices) {
    linalg::RatMatrix m;
    for (int v : s) m.push_back(verts[v]);
    total += abs(linalg::determinant(m));
  }
  a.vol = total * b / factorial(b);

  // quasi-polynomial fit of the level counts
  const int g = b - 1;
  BigInt period = 1;
  for (const auto& v : verts)
    for (const auto& x : v) period = lcm(period, denominator(Rational(x * a.index)));
  BigInt den_phi = 1;
  for (const auto& c : phi.coeffs) den_phi = lcm(den_phi, denominator(c));
  const long P = period.convert_to<long>();
  const long rho = curve_lattice(f).rank;
  const long window = std::max<long>(2 * den_phi.convert_to<long>() * rho, P * (g + 2));
  a.period = P;
  a.window = static_cast<int>(window);

  std::vector<BigInt> count(window + 1, BigInt(0));
  for (const auto& r : enumerate_realized(rc, phi, a.index * window, f.num_rays())) {
    Rational level = phi(r) / a.index;
    if (denominator(level) != 1) throw std::logic_error("alpha_constant: index does not divide level");
    long d = numerator(level).convert_to<long>();
    if (d >= 1) count[d] += 1;
  }
  std::vector<BigInt> diffs;
  for (long s = 1; s <= P; ++s) {
    std::vector<BigInt> seq;
    for (long d = s; d <= window; d += P) seq.push_back(count[d]);
    for (int step = 0; step < g; ++step) {
      for (std::size_t i = 0; i + 1 < seq.size(); ++i) seq[i] = seq[i + 1] - seq[i];
      seq.pop_back();
    }
    diffs.insert(diffs.end(), seq.begin(), seq.end());
  }
  if (diffs.size() < 2 || std::any_of(diffs.begin(), diffs.end(), [&](const BigInt& x) { return x != diffs[0]; }))
    throw MathError("FitError", "lattice-point quasi-polynomial did not stabilize on the fit window");
  Rational lead = Rational(diffs[0]) / Rational(factorial(g));
  for (int i = 0; i < g; ++i) lead /= P;
  for (int i = 0; i < g; ++i) lead /= a.index;
  a.slice = lead;
  return a;
}

std::vector<Residue> character_group(const Fan& f, const CampanaWeights& w) {
  ResidueSubgroup G;
  G.moduli = w.m;
  for (const auto& b : curve_lattice(f).basis) {
    std::vector<long> g;
    for (const auto& x : b) g.push_back(x.convert_to<long>());
    G.generators.push_back(g);
  }
  return orthogonal_dual_mod(G);
}

Phase make_phase(const Rational& x) {
  BigInt num = numerator(x), den = denominator(x);
  num %= den;
  if (num < 0) num += den;
  return {num.convert_to<long>(), den.convert_to<long>()};
}

Phase character_value(const Residue& a, const Residue& b, const Profile& r, const CampanaWeights& w) {
  Rational s = 0;
  for (std::size_t i = 0; i < w.m.size(); ++i) s += Rational(a[i] * (r[i] - b[i]), w.m[i]);
  return make_phase(s);
}

std::complex<double> to_complex(const Phase& p) {
  if (p.num == 0) return {1.0, 0.0};
  if (2 * p.num == p.den) return {-1.0, 0.0};
  if (4 * p.num == p.den) return {0.0, 1.0};
  if (4 * p.num == 3 * p.den) return {0.0, -1.0};
  double t = 2.0 * std::numbers::pi * static_cast<double>(p.num) / static_cast<double>(p.den);
  return {std::cos(t), std::sin(t)};
}

}  // namespace toric
