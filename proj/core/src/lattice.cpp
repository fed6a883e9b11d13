#include "toric/lattice.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

#include "toric/errors.hpp"

namespace toric {

BigInt gcd(const BigInt& a, const BigInt& b) {
  BigInt x = abs(a), y = abs(b);
  while (y != 0) {
    BigInt t = x % y;
    x = y;
    y = t;
  }
  return x;
}

BigInt lcm(const BigInt& a, const BigInt& b) {
  if (a == 0 || b == 0) return 0;
  return abs(a / gcd(a, b) * b);
}

namespace {

BigInt floor_div(const BigInt& a, const BigInt& b) {
  BigInt q = a / b;
  if ((a % b != 0) && ((a < 0) != (b < 0))) q -= 1;
  return q;
}

}  // namespace

IntMatrix::IntMatrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), data_(rows * cols) {}

IntMatrix::IntMatrix(std::initializer_list<std::initializer_list<long>> rows) {
  rows_ = rows.size();
  cols_ = rows_ == 0 ? 0 : rows.begin()->size();
  for (const auto& r : rows) {
    if (r.size() != cols_) throw std::invalid_argument("IntMatrix: ragged rows");
    for (long v : r) data_.emplace_back(v);
  }
}

IntMatrix IntMatrix::identity(std::size_t n) {
  IntMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

IntMatrix IntMatrix::from_rows(const std::vector<IntVector>& rows, std::size_t cols) {
  IntMatrix m(rows.size(), cols);
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (rows[i].size() != cols) throw std::invalid_argument("IntMatrix: row length");
    for (std::size_t j = 0; j < cols; ++j) m(i, j) = rows[i][j];
  }
  return m;
}

IntMatrix IntMatrix::from_columns(const std::vector<IntVector>& cols, std::size_t rows) {
  IntMatrix m(rows, cols.size());
  for (std::size_t j = 0; j < cols.size(); ++j) {
    if (cols[j].size() != rows) throw std::invalid_argument("IntMatrix: column length");
    for (std::size_t i = 0; i < rows; ++i) m(i, j) = cols[j][i];
  }
  return m;
}

IntVector IntMatrix::row(std::size_t i) const {
  return IntVector(data_.begin() + i * cols_, data_.begin() + (i + 1) * cols_);
}

IntVector IntMatrix::column(std::size_t j) const {
  IntVector c(rows_);
  for (std::size_t i = 0; i < rows_; ++i) c[i] = (*this)(i, j);
  return c;
}

IntMatrix IntMatrix::transpose() const {
  IntMatrix t(cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
  return t;
}

void IntMatrix::swap_rows(std::size_t a, std::size_t b) {
  if (a == b) return;
  for (std::size_t j = 0; j < cols_; ++j) std::swap((*this)(a, j), (*this)(b, j));
}

void IntMatrix::swap_cols(std::size_t a, std::size_t b) {
  if (a == b) return;
  for (std::size_t i = 0; i < rows_; ++i) std::swap((*this)(i, a), (*this)(i, b));
}

void IntMatrix::add_row(std::size_t a, std::size_t b, const BigInt& k) {
  if (k == 0) return;
  for (std::size_t j = 0; j < cols_; ++j) (*this)(a, j) += k * (*this)(b, j);
}

void IntMatrix::add_col(std::size_t a, std::size_t b, const BigInt& k) {
  if (k == 0) return;
  for (std::size_t i = 0; i < rows_; ++i) (*this)(i, a) += k * (*this)(i, b);
}

void IntMatrix::negate_row(std::size_t a) {
  for (std::size_t j = 0; j < cols_; ++j) (*this)(a, j) = -(*this)(a, j);
}

void IntMatrix::negate_col(std::size_t a) {
  for (std::size_t i = 0; i < rows_; ++i) (*this)(i, a) = -(*this)(i, a);
}

IntMatrix operator*(const IntMatrix& a, const IntMatrix& b) {
  if (a.cols_ != b.rows_) throw std::invalid_argument("IntMatrix: shape mismatch");
  IntMatrix c(a.rows_, b.cols_);
  for (std::size_t i = 0; i < a.rows_; ++i)
    for (std::size_t k = 0; k < a.cols_; ++k) {
      const BigInt& x = a(i, k);
      if (x == 0) continue;
      for (std::size_t j = 0; j < b.cols_; ++j) c(i, j) += x * b(k, j);
    }
  return c;
}

IntVector operator*(const IntMatrix& a, const IntVector& x) {
  if (a.cols() != x.size()) throw std::invalid_argument("IntMatrix: shape mismatch");
  IntVector y(a.rows());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) y[i] += a(i, j) * x[j];
  return y;
}

std::ostream& operator<<(std::ostream& os, const IntMatrix& m) {
  os << '[';
  for (std::size_t i = 0; i < m.rows_; ++i) {
    os << (i ? ", [" : "[");
    for (std::size_t j = 0; j < m.cols_; ++j) os << (j ? ", " : "") << m(i, j);
    os << ']';
  }
  return os << ']';
}

std::size_t SmithDecomposition::rank() const {
  return static_cast<std::size_t>(
      std::count_if(diag.begin(), diag.end(), [](const BigInt& d) { return d != 0; }));
}

SmithDecomposition smith_normal_form(const IntMatrix& A) {
  const std::size_t r = A.rows(), c = A.cols();
  IntMatrix D = A;
  IntMatrix U = IntMatrix::identity(r);
  IntMatrix V = IntMatrix::identity(c);
  const std::size_t n = std::min(r, c);

  for (std::size_t t = 0; t < n; ++t) {
    while (true) {
      // pivot: minimal nonzero absolute value, lowest index on ties
      bool found = false;
      std::size_t pi = 0, pj = 0;
      BigInt best;
      for (std::size_t i = t; i < r; ++i)
        for (std::size_t j = t; j < c; ++j) {
          if (D(i, j) == 0) continue;
          BigInt a = abs(D(i, j));
          if (!found || a < best) {
            found = true;
            best = a;
            pi = i;
            pj = j;
          }
        }
      if (!found) goto done;
      D.swap_rows(t, pi);
      U.swap_rows(t, pi);
      D.swap_cols(t, pj);
      V.swap_cols(t, pj);

      bool clean = true;
      for (std::size_t i = t + 1; i < r; ++i) {
        if (D(i, t) == 0) continue;
        BigInt q = D(i, t) / D(t, t);
        D.add_row(i, t, -q);
        U.add_row(i, t, -q);
        if (D(i, t) != 0) clean = false;
      }
      for (std::size_t j = t + 1; j < c; ++j) {
        if (D(t, j) == 0) continue;
        BigInt q = D(t, j) / D(t, t);
        D.add_col(j, t, -q);
        V.add_col(j, t, -q);
        if (D(t, j) != 0) clean = false;
      }
      if (!clean) continue;

      bool divisible = true;
      for (std::size_t i = t + 1; i < r && divisible; ++i)
        for (std::size_t j = t + 1; j < c; ++j)
          if (D(i, j) % D(t, t) != 0) {
            D.add_row(t, i, 1);
            U.add_row(t, i, 1);
            divisible = false;
            break;
          }
      if (divisible) break;
    }
    if (D(t, t) < 0) {
      D.negate_row(t);
      U.negate_row(t);
    }
  }
done:
  SmithDecomposition s{std::move(U), std::move(V), {}};
  s.diag.resize(n);
  for (std::size_t i = 0; i < n; ++i) s.diag[i] = D(i, i);
  return s;
}

BigInt determinant(const IntMatrix& A) {
  if (A.rows() != A.cols()) throw std::invalid_argument("determinant: not square");
  const std::size_t n = A.rows();
  if (n == 0) return 1;
  IntMatrix M = A;
  BigInt sign = 1, prev = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (M(k, k) == 0) {
      std::size_t p = k + 1;
      while (p < n && M(p, k) == 0) ++p;
      if (p == n) return 0;
      M.swap_rows(k, p);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i)
      for (std::size_t j = k + 1; j < n; ++j)
        M(i, j) = (M(i, j) * M(k, k) - M(i, k) * M(k, j)) / prev;
    prev = M(k, k);
  }
  return sign * M(n - 1, n - 1);
}

std::vector<IntVector> hermite_rows(const std::vector<IntVector>& vectors, std::size_t dim) {
  std::vector<IntVector> a;
  for (const auto& v : vectors) {
    if (v.size() != dim) throw std::invalid_argument("hermite_rows: length");
    if (std::any_of(v.begin(), v.end(), [](const BigInt& x) { return x != 0; })) a.push_back(v);
  }
  auto sub = [&](std::size_t i, std::size_t k, const BigInt& q) {
    for (std::size_t j = 0; j < dim; ++j) a[i][j] -= q * a[k][j];
  };
  std::size_t r = 0;
  for (std::size_t col = 0; col < dim && r < a.size(); ++col) {
    while (true) {
      std::size_t best = a.size();
      for (std::size_t i = r; i < a.size(); ++i)
        if (a[i][col] != 0 && (best == a.size() || abs(a[i][col]) < abs(a[best][col]))) best = i;
      if (best == a.size()) break;
      std::swap(a[r], a[best]);
      bool clean = true;
      for (std::size_t i = r + 1; i < a.size(); ++i) {
        if (a[i][col] == 0) continue;
        sub(i, r, a[i][col] / a[r][col]);
        if (a[i][col] != 0) clean = false;
      }
      if (clean) break;
    }
    if (a[r][col] == 0) continue;
    if (a[r][col] < 0)
      for (auto& x : a[r]) x = -x;
    for (std::size_t i = 0; i < r; ++i) sub(i, r, floor_div(a[i][col], a[r][col]));
    ++r;
  }
  a.resize(r);
  return a;
}

std::vector<IntVector> kernel_basis(const IntMatrix& A) {
  SmithDecomposition s = smith_normal_form(A);
  const std::size_t rk = s.rank();
  std::vector<IntVector> basis;
  for (std::size_t j = rk; j < A.cols(); ++j) basis.push_back(s.V.column(j));
  return hermite_rows(basis, A.cols());
}

Rational min_positive_value(const RatVector& f, const std::vector<IntVector>& basis) {
  std::vector<Rational> values;
  BigInt den = 1;
  for (const auto& b : basis) {
    if (b.size() != f.size()) throw std::invalid_argument("min_positive_value: length");
    Rational v = 0;
    for (std::size_t i = 0; i < f.size(); ++i) v += f[i] * Rational(b[i]);
    values.push_back(v);
    den = lcm(den, denominator(v));
  }
  BigInt g = 0;
  for (const auto& v : values) g = gcd(g, numerator(v * Rational(den)));
  if (g == 0) throw MathError("ZeroFunctional", "functional vanishes on the lattice");
  return Rational(g, den);
}

namespace {

Residue reduce(const std::vector<BigInt>& v, const std::vector<long>& m) {
  Residue r(m.size());
  for (std::size_t i = 0; i < m.size(); ++i) {
    BigInt x = v[i] % m[i];
    if (x < 0) x += m[i];
    r[i] = x.convert_to<long>();
  }
  return r;
}

std::set<Residue> closure(const std::vector<Residue>& gens, const std::vector<long>& m) {
  std::set<Residue> seen{Residue(m.size(), 0)};
  std::vector<Residue> frontier{Residue(m.size(), 0)};
  while (!frontier.empty()) {
    std::vector<Residue> next;
    for (const auto& x : frontier)
      for (const auto& g : gens) {
        Residue y(m.size());
        for (std::size_t i = 0; i < m.size(); ++i) y[i] = (x[i] + g[i]) % m[i];
        if (seen.insert(y).second) next.push_back(std::move(y));
      }
    frontier = std::move(next);
  }
  return seen;
}

bool pairs_integrally(const Residue& a, const std::vector<long>& g, const std::vector<long>& m) {
  Rational s = 0;
  for (std::size_t i = 0; i < m.size(); ++i) s += Rational(a[i] * g[i], m[i]);
  return denominator(s) == 1;
}

}  // namespace

std::vector<Residue> orthogonal_dual_mod(const ResidueSubgroup& G) {
  const auto& m = G.moduli;
  const std::size_t k = m.size();
  for (long mi : m)
    if (mi <= 0) throw InputError("InvalidModulus", "moduli must be positive");
  BigInt L = 1;
  for (long mi : m) L = lcm(L, BigInt(mi));

  // a satisfies C a = 0 mod L where C_{j,i} = (L/m_i) g_{j,i}
  IntMatrix C(G.generators.size(), k);
  for (std::size_t j = 0; j < G.generators.size(); ++j)
    for (std::size_t i = 0; i < k; ++i) C(j, i) = (L / m[i]) * BigInt(G.generators[j][i]);

  std::vector<Residue> gens;
  if (G.generators.empty()) {
    for (std::size_t i = 0; i < k; ++i) {
      Residue e(k, 0);
      e[i] = 1 % m[i];
      gens.push_back(e);
    }
  } else {
    SmithDecomposition s = smith_normal_form(C);
    // with y = V^{-1} a the condition reads d_j y_j = 0 mod L
    for (std::size_t j = 0; j < k; ++j) {
      BigInt scale = 1;
      if (j < s.diag.size() && s.diag[j] != 0) scale = L / gcd(s.diag[j], L);
      IntVector col = s.V.column(j);
      for (auto& x : col) x *= scale;
      gens.push_back(reduce(col, m));
    }
  }
  std::set<Residue> group = closure(gens, m);
  for (const auto& a : group)
    for (const auto& g : G.generators)
      if (!pairs_integrally(a, g, m)) throw std::logic_error("orthogonal_dual_mod: membership check failed");
  return {group.begin(), group.end()};
}

std::size_t subgroup_order(const ResidueSubgroup& G) {
  std::vector<Residue> gens;
  for (const auto& g : G.generators) {
    std::vector<BigInt> v(g.begin(), g.end());
    gens.push_back(reduce(v, G.moduli));
  }
  return closure(gens, G.moduli).size();
}

namespace linalg {

namespace {

// Reduced row echelon form in place; returns pivot columns.
std::vector<std::size_t> rref(RatMatrix& a, std::size_t cols) {
  std::vector<std::size_t> pivots;
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < a.size(); ++c) {
    std::size_t p = r;
    while (p < a.size() && a[p][c] == 0) ++p;
    if (p == a.size()) continue;
    std::swap(a[r], a[p]);
    Rational inv = 1 / a[r][c];
    for (auto& x : a[r]) x *= inv;
    for (std::size_t i = 0; i < a.size(); ++i) {
      if (i == r || a[i][c] == 0) continue;
      Rational f = a[i][c];
      for (std::size_t j = 0; j < a[i].size(); ++j) a[i][j] -= f * a[r][j];
    }
    pivots.push_back(c);
    ++r;
  }
  return pivots;
}

}  // namespace

std::size_t rank(RatMatrix rows) {
  if (rows.empty()) return 0;
  return rref(rows, rows[0].size()).size();
}

RatMatrix nullspace(const RatMatrix& rows, std::size_t cols) {
  RatMatrix a = rows;
  auto pivots = rref(a, cols);
  std::vector<bool> is_pivot(cols, false);
  for (auto p : pivots) is_pivot[p] = true;
  RatMatrix basis;
  for (std::size_t f = 0; f < cols; ++f) {
    if (is_pivot[f]) continue;
    RatVector v(cols, Rational(0));
    v[f] = 1;
    for (std::size_t i = 0; i < pivots.size(); ++i) v[pivots[i]] = -a[i][f];
    basis.push_back(std::move(v));
  }
  return basis;
}

Rational determinant(RatMatrix m) {
  const std::size_t n = m.size();
  Rational det = 1;
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t p = c;
    while (p < n && m[p][c] == 0) ++p;
    if (p == n) return 0;
    if (p != c) {
      std::swap(m[p], m[c]);
      det = -det;
    }
    det *= m[c][c];
    for (std::size_t i = c + 1; i < n; ++i) {
      if (m[i][c] == 0) continue;
      Rational f = m[i][c] / m[c][c];
      for (std::size_t j = c; j < n; ++j) m[i][j] -= f * m[c][j];
    }
  }
  return det;
}

bool solve(RatMatrix m, RatVector b, RatVector& x) {
  const std::size_t n = m.size();
  for (std::size_t i = 0; i < n; ++i) m[i].push_back(b[i]);
  auto pivots = rref(m, n);
  if (pivots.size() != n) return false;
  x.assign(n, Rational(0));
  for (std::size_t i = 0; i < n; ++i) x[pivots[i]] = m[i][n];
  return true;
}

RatVector to_rational(const IntVector& v) {
  RatVector r;
  r.reserve(v.size());
  for (const auto& x : v) r.emplace_back(x);
  return r;
}

IntVector primitive(const RatVector& v) {
  BigInt den = 1;
  for (const auto& x : v) den = lcm(den, denominator(x));
  IntVector out(v.size());
  BigInt g = 0;
  for (std::size_t i = 0; i < v.size(); ++i) {
    out[i] = numerator(v[i] * Rational(den));
    g = gcd(g, out[i]);
  }
  if (g > 1)
    for (auto& x : out) x /= g;
  return out;
}

Rational dot(const RatVector& a, const RatVector& b) {
  Rational s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

}  // namespace linalg

}  // namespace toric
