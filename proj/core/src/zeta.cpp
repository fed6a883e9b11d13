#include "toric/zeta.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>
#include <stdexcept>

#include "toric/errors.hpp"

namespace toric {

namespace {

long max_cone_size(const LocalFactor& lf) {
  int n = 0;
  for (RaySet c : lf.cones) n = std::max(n, cardinality(c));
  return n;
}

std::string residue_string(const Residue& a) {
  std::ostringstream os;
  os << '(';
  for (std::size_t i = 0; i < a.size(); ++i) os << (i ? "," : "") << a[i];
  os << ')';
  return os.str();
}

// N_e * q^{-x e} for the closed points of degree e, in long double.
long double scaled_points(Line line, int e, long q, long double x) {
  const long double lq = std::log(static_cast<long double>(q));
  long double s = 0;
  for (int d = 1; d <= e; ++d) {
    if (e % d) continue;
    const int mu = mobius(d);
    if (mu == 0) continue;
    s += mu * std::exp(lq * (static_cast<long double>(e / d) - x * e));
  }
  s /= e;
  if (line == Line::P1 && e == 1) s += std::exp(-lq * x);
  return s;
}

long double points(Line line, int e, long q) {
  try {
    return static_cast<long double>(count_closed_points(line, e, q));
  } catch (const MathError&) {
    return scaled_points(line, e, q, 0);
  }
}

// Coefficients of log(A) for a series with A_0 = 1.
template <class T>
std::vector<T> log_series(const std::vector<T>& A, int order) {
  std::vector<T> B(order + 1, T{});
  for (int n = 1; n <= order; ++n) {
    T acc = static_cast<double>(n) * (n < static_cast<int>(A.size()) ? A[n] : T{});
    for (int k = 1; k < n; ++k)
      if (n - k < static_cast<int>(A.size())) acc -= static_cast<double>(k) * B[k] * A[n - k];
    B[n] = acc / static_cast<double>(n);
  }
  return B;
}

}  // namespace

LocalFactor LocalFactor::campana(const Fan& f, const CampanaWeights& w) {
  if (static_cast<int>(w.m.size()) != f.num_rays())
    throw InputError("InvalidWeights", "weight count differs from ray count");
  for (long mi : w.m)
    if (mi < 1) throw InputError("InvalidWeights", "weights must be positive");
  return {f.num_rays(), f.cones(), w.m};
}

LocalFactor LocalFactor::restricted(const Fan& f, RaySet allowed) {
  LocalFactor lf{f.num_rays(), {}, std::vector<long>(f.num_rays(), 1)};
  for (RaySet c : f.cones())
    if ((c & ~allowed) == 0) lf.cones.push_back(c);
  return lf;
}

LocalFactor LocalFactor::for_constraint(const Fan& f, const CountingConstraint& k, PlaceKind kind) {
  using K = CountingConstraint::Kind;
  const RaySet open = f.all_rays() & ~k.boundary;
  switch (k.kind) {
    case K::None: return campana(f, unit_weights(f.num_rays()));
    case K::Campana: return campana(f, {k.m});
    case K::A1:
      return kind == PlaceKind::Finite ? restricted(f, open) : campana(f, unit_weights(f.num_rays()));
    case K::A1AtFace: return restricted(f, kind == PlaceKind::Finite ? open : (open | k.face));
  }
  return campana(f, unit_weights(f.num_rays()));
}

int LocalFactor::delta(const Profile& r) const {
  if (static_cast<int>(r.size()) != rays) throw InputError("InvalidProfile", "profile length differs from ray count");
  RaySet supp = 0;
  for (int i = 0; i < rays; ++i) {
    if (r[i] < 0) throw InputError("InvalidProfile", "profile entries must be nonnegative");
    if (r[i] > 0) {
      if (r[i] < lower[i]) return 0;
      supp |= RaySet{1} << i;
    }
  }
  return std::find(cones.begin(), cones.end(), supp) != cones.end() ? 1 : 0;
}

IntSeries LocalFactor::series(const Truncation& t, int e) const {
  IntSeries out(t);
  std::vector<long> ex(rays, 0);
  for (RaySet c : cones) {
    const auto idx = members(c);
    std::vector<long> r(idx.size());
    bool feasible = true;
    for (std::size_t j = 0; j < idx.size(); ++j) {
      r[j] = lower[idx[j]];
      if (e * r[j] > t.max_exp[idx[j]]) feasible = false;
    }
    if (!feasible) continue;
    while (true) {
      std::fill(ex.begin(), ex.end(), 0);
      for (std::size_t j = 0; j < idx.size(); ++j) ex[idx[j]] = e * r[j];
      out.add(ex, 1);
      std::size_t j = 0;
      for (; j < idx.size(); ++j) {
        ++r[j];
        if (e * r[j] <= t.max_exp[idx[j]]) break;
        r[j] = lower[idx[j]];
      }
      if (j == idx.size()) break;
    }
  }
  return out;
}

std::complex<double> LocalFactor::value(const std::vector<std::complex<double>>& y) const {
  std::complex<double> total = 0;
  for (RaySet c : cones) {
    std::complex<double> term = 1;
    for (int i : members(c)) {
      if (std::abs(y[i]) >= 1.0)
        throw MathError("DivergentEvaluation", "geometric tail with |u_" + std::to_string(i) + "| >= 1");
      term *= std::pow(y[i], static_cast<double>(lower[i])) / (1.0 - y[i]);
    }
    total += term;
  }
  return total;
}

int local_delta(const Fan& f, const CountingConstraint& k, const Profile& r, PlaceKind kind) {
  return LocalFactor::for_constraint(f, k, kind).delta(r);
}

IntSeries euler_coefficients(const Fan& f, const CountingConstraint& k, long q, const Truncation& t) {
  require_valid(f);
  if (t.vars() != f.num_rays()) throw InputError("InvalidTruncation", "truncation length differs from ray count");
  FieldSpec::make(q);
  using K = CountingConstraint::Kind;
  const bool affine = k.kind == K::A1 || k.kind == K::A1AtFace;
  const LocalFactor fin = LocalFactor::for_constraint(f, k, PlaceKind::Finite);
  IntSeries result = affine ? LocalFactor::for_constraint(f, k, PlaceKind::Infinity).series(t, 1) : IntSeries::one(t);
  const int top = t.max_degree();
  for (int e = 1; e <= top; ++e) {
    IntSeries local = fin.series(t, e);
    if (local.is_one()) continue;
    result = result * local.pow(count_closed_points(affine ? Line::A1 : Line::P1, e, q));
  }
  return result;
}

std::complex<double> twisted_local_value(const Fan& f, const CountingConstraint& k, const TwistSpec& a, int e,
                                         const std::vector<std::complex<double>>& t, long q) {
  const int nr = f.num_rays();
  if (static_cast<int>(t.size()) != nr) throw InputError("InvalidProfile", "t length differs from ray count");
  const std::vector<long> m = k.kind == CountingConstraint::Kind::Campana ? k.m : std::vector<long>(nr, 1);
  if (!a.a.empty() && static_cast<int>(a.a.size()) != nr)
    throw InputError("InvalidTwist", "twist length differs from ray count");
  const double lq = std::log(static_cast<double>(q));
  std::vector<std::complex<double>> y(nr);
  for (int i = 0; i < nr; ++i) {
    const long ai = a.a.empty() ? 0 : a.a[i];
    const std::complex<double> zeta = to_complex(make_phase(Rational(ai * e, m[i])));
    y[i] = zeta * std::exp(-static_cast<double>(e) * lq * t[i]);
  }
  return LocalFactor::for_constraint(f, k, PlaceKind::Finite).value(y);
}

ProductValue evaluate(const RegularizedProduct& p, int E) {
  if (E < 0) throw InputError("InvalidTruncation", "E must be nonnegative");
  const LocalFactor& lf = p.factor;
  const long L = p.L;
  const int k = lf.rays;
  const long n = max_cone_size(lf);
  const double eps = std::numeric_limits<double>::epsilon();
  const long double lq = std::log(static_cast<long double>(p.q));
  auto omega = [&](long t) {
    t %= L;
    if (t < 0) t += L;
    return to_complex(make_phase(Rational(t, L)));
  };

  ProductValue out;
  out.E = E;

  // places of degree <= E, exactly
  std::complex<double> log_partial = 0;
  double err = 0;
  for (int e = 1; e <= E; ++e) {
    const long double N = points(p.line, e, p.q);
    std::vector<std::complex<double>> y(k);
    for (int i = 0; i < k; ++i)
      y[i] = omega(e * p.c[i]) * static_cast<double>(std::exp(-lq * e * p.s[i] / L));
    const double reg = std::pow(1.0 - static_cast<double>(std::exp(-lq * e)), p.k_reg);
    const std::complex<double> h = reg * lf.value(y);
    if (h == 0.0) {
      out.value = out.partial = 0;
      out.tail_bound = 0;
      return out;
    }
    double mag = 0;
    for (RaySet c : lf.cones) {
      double t = 1;
      for (int i : members(c)) t *= std::pow(std::abs(y[i]), static_cast<double>(lf.lower[i])) / (1.0 - std::abs(y[i]));
      mag += t;
    }
    log_partial += static_cast<double>(N) * std::log(h);
    err += static_cast<double>(N) * 32 * eps * (1 + reg * mag) / std::abs(h);
  }
  out.partial = std::exp(log_partial);

  // log h as a series in sigma with coefficients in Z[w]/(w^L - 1)
  const int J = static_cast<int>(4 * L + 4);
  const int Jbig = 4 * J;
  out.series_order = J;
  using Grid = std::vector<std::vector<std::int64_t>>;
  auto mul = [&](const Grid& a, const Grid& b) {
    Grid r(Jbig + 1, std::vector<std::int64_t>(L, 0));
    for (int i = 0; i <= Jbig; ++i)
      for (long u = 0; u < L; ++u) {
        if (!a[i][u]) continue;
        for (int j = 0; i + j <= Jbig; ++j)
          for (long v = 0; v < L; ++v)
            if (b[j][v])
              r[i + j][(u + v) % L] = detail::checked_add(r[i + j][(u + v) % L], detail::checked_mul(a[i][u], b[j][v]));
      }
    return r;
  };
  Grid H(Jbig + 1, std::vector<std::int64_t>(L, 0));
  for (RaySet c : lf.cones) {
    Grid term(Jbig + 1, std::vector<std::int64_t>(L, 0));
    term[0][0] = 1;
    for (int i : members(c)) {
      Grid g(Jbig + 1, std::vector<std::int64_t>(L, 0));
      for (long t = lf.lower[i]; p.s[i] * t <= Jbig; ++t) g[p.s[i] * t][((p.c[i] * t) % L + L) % L] += 1;
      term = mul(term, g);
    }
    for (int j = 0; j <= Jbig; ++j)
      for (long u = 0; u < L; ++u) H[j][u] += term[j][u];
  }
  {
    Grid reg(Jbig + 1, std::vector<std::int64_t>(L, 0));
    std::int64_t binom = 1;
    for (int t = 0; t <= p.k_reg && L * t <= Jbig; ++t) {
      reg[L * t][0] = (t % 2 ? -binom : binom);
      binom = binom * (p.k_reg - t) / (t + 1);
    }
    H = mul(H, reg);
  }
  for (int j = 0; j <= std::min<long>(L, Jbig); ++j)
    for (long u = 0; u < L; ++u)
      if (H[j][u] != ((j == 0 && u == 0) ? 1 : 0))
        throw std::logic_error("regularized local factor is not 1 + O(sigma^(L+1))");

  std::vector<double> Xhat(Jbig + 1, 0.0);
  for (int j = L + 1; j <= Jbig; ++j)
    for (long u = 0; u < L; ++u) Xhat[j] += std::abs(static_cast<double>(H[j][u]));

  const long double sigma0 = std::exp(-lq * (E + 1) / L);
  auto xhat_at = [&](long double s) {
    long double v = 0;
    for (int j = L + 1; j <= Jbig; ++j) v += Xhat[j] * std::pow(s, static_cast<long double>(j));
    // coefficients beyond Jbig: |H_j| <= 4^k (j+1)^n
    const long double c4 = std::pow(4.0L, k);
    for (int j = Jbig + 1;; ++j) {
      const long double term = c4 * std::pow(static_cast<long double>(j + 1), n) * std::pow(s, static_cast<long double>(j));
      const long double ratio = std::pow(static_cast<long double>(j + 2) / (j + 1), n) * s;
      if (ratio < 0.5L || term < 1e-300L) {
        v += term / (1 - ratio);
        break;
      }
      v += term;
      if (j > 1000000) return std::numeric_limits<long double>::infinity();
    }
    return v;
  };
  const long double x0 = xhat_at(sigma0);
  if (!(x0 < 0.5L)) {
    out.value = out.partial;
    out.tail_bound = std::numeric_limits<double>::infinity();
    out.last_degree = E;
    return out;
  }

  // majorant P = -log(1 - Xhat)
  std::vector<double> A(Jbig + 1, 0.0);
  A[0] = 1;
  for (int j = 1; j <= Jbig; ++j) A[j] = -Xhat[j];
  std::vector<double> P = log_series(A, J);
  for (double& v : P) v = -v;
  const long double P0 = -std::log1p(-x0);
  long double T0 = 0;
  for (int j = L + 1; j <= J; ++j) T0 += P[j] * std::pow(sigma0, static_cast<long double>(j));
  const long double R0 = std::max(0.0L, P0 - T0) + 64 * eps * P0;

  // log coefficients for each residue of e mod L
  std::vector<std::vector<std::complex<double>>> ell(L);
  for (long rho = 0; rho < L; ++rho) {
    std::vector<std::complex<double>> X(J + 1, 0.0);
    X[0] = 1;
    for (int j = 1; j <= J; ++j)
      for (long u = 0; u < L; ++u)
        if (H[j][u]) X[j] += static_cast<double>(H[j][u]) * omega(rho * u);
    ell[rho] = log_series(X, J);
  }

  const long double rho_q = std::exp(-lq / L);
  auto beyond = [&](int emax) {
    return P0 * std::pow(sigma0, -static_cast<long double>(L + 1)) * 2 * std::pow(rho_q, emax + 1) /
           ((emax + 1) * (1 - rho_q));
  };
  std::complex<long double> tail = 0;
  long double tail_err = 0, tail_mag = 0;
  int e = E + 1;
  for (;; ++e) {
    const long rho = e % L;
    for (int j = L + 1; j <= J; ++j) {
      const long double w = scaled_points(p.line, e, p.q, static_cast<long double>(j) / L);
      const std::complex<double> lj = ell[rho][j];
      tail += std::complex<long double>(lj.real(), lj.imag()) * w;
      tail_mag += std::abs(lj) * w;
    }
    const long double shift = static_cast<long double>(J + 1) / L;
    const long double Nw = scaled_points(p.line, e, p.q, shift) * std::exp(lq * shift * (E + 1));
    tail_err += Nw * R0;
    if (beyond(e) < 1e-18L || e > 20000) break;
  }
  out.last_degree = e;
  tail_err += beyond(e) + 64 * eps * tail_mag;
  err += static_cast<double>(tail_err);

  const std::complex<double> total = log_partial + std::complex<double>(static_cast<double>(tail.real()),
                                                                         static_cast<double>(tail.imag()));
  out.value = std::exp(total);
  out.tail_bound = std::abs(out.value) * std::expm1(err);
  return out;
}

ConstantReport tau_campana(const Fan& f, const CampanaWeights& m, const Residue& a, long q, int E) {
  require_valid(f);
  FieldSpec::make(q);
  const int k = f.num_rays();
  if (static_cast<int>(m.m.size()) != k) throw InputError("InvalidWeights", "weight count differs from ray count");
  if (static_cast<int>(a.size()) != k) throw InputError("InvalidTwist", "character length differs from ray count");
  RegularizedProduct p;
  p.factor = LocalFactor::campana(f, m);
  p.L = m.lcm();
  p.k_reg = k;
  p.line = Line::P1;
  p.q = q;
  Residue ar(k);
  for (int i = 0; i < k; ++i) {
    ar[i] = ((a[i] % m.m[i]) + m.m[i]) % m.m[i];
    p.s.push_back(p.L / m.m[i]);
    p.c.push_back(ar[i] * (p.L / m.m[i]));
  }
  const ProductValue pv = evaluate(p, E);
  const double scale = std::pow(static_cast<double>(q) / (q - 1), k - f.dim());
  ConstantReport r;
  r.complex_value = scale * pv.value;
  r.value = r.complex_value.real();
  r.E = E;
  r.tail_bound = scale * pv.tail_bound;
  r.breakdown.push_back({"partial_product", pv.partial, 0});
  r.breakdown.push_back({"product", pv.value, pv.tail_bound});
  r.breakdown.push_back({"tau" + residue_string(ar), r.complex_value, r.tail_bound});
  r.normalization_note =
      "tau_a = (q/(q-1))^(#rays-n) * prod over places c of P1 of (1-q_c^-1)^#rays * F_c(a; t=1/m)";
  return r;
}

ConstantReport tau_a1(const Fan& f, RaySet boundary, RaySet A, long q, int E) {
  require_valid(f);
  FieldSpec::make(q);
  if ((boundary & ~f.all_rays()) != 0) throw InputError("InvalidBoundary", "boundary index out of range");
  if ((A & ~boundary) != 0) throw InputError("InvalidFace", "face is not inside the boundary");
  if (!f.is_cone_rayset(A)) throw InputError("InvalidFace", "face rays do not span a cone");
  const RaySet open = f.all_rays() & ~boundary;
  RegularizedProduct p;
  p.factor = LocalFactor::restricted(f, open);
  p.L = 1;
  p.s.assign(f.num_rays(), 1);
  p.c.assign(f.num_rays(), 0);
  p.k_reg = cardinality(open);
  p.line = Line::A1;
  p.q = q;
  const ProductValue pv = evaluate(p, E);

  const double g = 1.0 / (q - 1);
  double inf = 0;
  for (RaySet B : f.cones())
    if ((B & A) == A && (B & ~(open | A)) == 0) inf += std::pow(g, cardinality(B & ~A));
  const double scale = std::pow(1.0 - 1.0 / q, f.dim());

  ConstantReport r;
  r.complex_value = scale * pv.value * inf;
  r.value = r.complex_value.real();
  r.E = E;
  r.tail_bound = scale * inf * pv.tail_bound;
  r.breakdown.push_back({"finite_partial_product", pv.partial, 0});
  r.breakdown.push_back({"finite_product", pv.value, pv.tail_bound});
  r.breakdown.push_back({"infinity_factor", inf, 0});
  r.normalization_note =
      "tau = (1-q^-1)^n * prod over places c of A1 of (1-q_c^-1)^#(rays\\boundary) * F_c * "
      "sum over cones A <= B <= (rays\\boundary)+A of prod_{i in B\\A} q^-1/(1-q^-1)";
  return r;
}

namespace {

double alpha_value(const AlphaConstants& a, AlphaNormalization norm) {
  return (norm == AlphaNormalization::Slice ? a.slice : a.vol).convert_to<double>();
}

const char* alpha_name(AlphaNormalization norm) {
  return norm == AlphaNormalization::Slice ? "alpha_slice" : "alpha_vol";
}

}  // namespace

ConstantReport leading_constant(const Fan& f, const CampanaWeights& m, long q, int E, AlphaNormalization norm) {
  require_valid(f);
  const AlphaConstants al = alpha_constant(f, NefSubcone::nef(), campana_degree(m));
  ConstantReport r;
  r.E = E;
  const double alpha = alpha_value(al, norm);
  const double idx = al.index.convert_to<double>();
  const double pref = alpha * std::pow(static_cast<double>(q), f.dim()) /
                      ((1 - std::pow(static_cast<double>(q), -idx)) * static_cast<double>(m.product()));
  r.breakdown.push_back({alpha_name(norm), alpha, 0});
  r.breakdown.push_back({"index", idx, 0});
  std::complex<double> sum = 0;
  double tail = 0;
  std::string tau_note;
  for (const Residue& a : character_group(f, m)) {
    const ConstantReport t = tau_campana(f, m, a, q, E);
    sum += t.complex_value;
    tail += t.tail_bound;
    r.breakdown.push_back({"tau" + residue_string(a), t.complex_value, t.tail_bound});
    tau_note = t.normalization_note;
  }
  r.complex_value = pref * sum;
  r.value = r.complex_value.real();
  r.tail_bound = pref * tail;
  if (std::abs(r.complex_value.imag()) > r.tail_bound + 1e-12 * std::abs(r.complex_value))
    r.warnings.push_back("character sum has a nonzero imaginary part");
  r.normalization_note = std::string("c = ") + alpha_name(norm) +
                         " * q^n / ((1-q^-r) * prod m_i) * sum over a in X(T)_m of tau_a; " + tau_note;
  return r;
}

ConstantReport leading_constant(const ToricPair& p, RaySet A, long q, int E, AlphaNormalization norm) {
  require_valid(p.fan);
  ConstantReport r;
  r.E = E;
  if (!is_a1_connected(p).connected) r.warnings.push_back("pair is not A1-connected");
  if (has_analytic_obstruction(p, A)) r.warnings.push_back("ObstructedFace: the face has an analytic obstruction");
  const NefFace nf = face(p, A);
  const ConstantReport t = tau_a1(p.fan, p.boundary, A, q, E);
  if (nf.degenerate) {
    r.breakdown.push_back({"degenerate_face", 0.0, 0});
    r.normalization_note = "degenerate face: the counting function is constant, leading constant 0";
    return r;
  }
  const AlphaConstants al = alpha_constant(p.fan, nf.cone, log_degree(p.fan.num_rays(), p.boundary));
  const double alpha = alpha_value(al, norm);
  const double idx = al.index.convert_to<double>();
  const double pref =
      alpha * std::pow(static_cast<double>(q), p.fan.dim()) / (1 - std::pow(static_cast<double>(q), -idx));
  r.breakdown.push_back({alpha_name(norm), alpha, 0});
  r.breakdown.push_back({"index", idx, 0});
  for (const auto& c : t.breakdown) r.breakdown.push_back(c);
  r.breakdown.push_back({"tau", t.complex_value, t.tail_bound});
  r.complex_value = pref * t.complex_value;
  r.value = r.complex_value.real();
  r.tail_bound = pref * t.tail_bound;
  r.normalization_note = std::string("c = ") + alpha_name(norm) + " * q^n / (1-q^-r) * tau; " + t.normalization_note;
  return r;
}

}  // namespace toric
