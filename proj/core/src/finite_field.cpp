#include "toric/finite_field.hpp"

#include <algorithm>

#include "toric/errors.hpp"

namespace toric {

bool is_prime(long n) {
  if (n < 2) return false;
  for (long d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

namespace {

// Arithmetic on coefficient vectors over the prime field, used to build extension tables.
using PrimePoly = std::vector<long>;

PrimePoly prime_trim(PrimePoly a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
  return a;
}

PrimePoly prime_mod(PrimePoly a, const PrimePoly& m, long p) {
  a = prime_trim(std::move(a));
  const int dm = static_cast<int>(m.size()) - 1;
  // m is monic
  while (static_cast<int>(a.size()) - 1 >= dm) {
    long lead = a.back();
    int shift = static_cast<int>(a.size()) - 1 - dm;
    for (int i = 0; i <= dm; ++i) a[shift + i] = ((a[shift + i] - lead * m[i]) % p + p) % p;
    a = prime_trim(std::move(a));
  }
  return a;
}

bool prime_irreducible(const PrimePoly& g, long p) {
  const int d = static_cast<int>(g.size()) - 1;
  for (int k = 1; 2 * k <= d; ++k) {
    long count = 1;
    for (int i = 0; i < k; ++i) count *= p;
    for (long c = 0; c < count; ++c) {
      PrimePoly h(k + 1);
      long x = c;
      for (int i = 0; i < k; ++i) {
        h[i] = x % p;
        x /= p;
      }
      h[k] = 1;
      if (prime_mod(g, h, p).empty()) return false;
    }
  }
  return true;
}

}  // namespace

FieldSpec FieldSpec::make(long q) {
  if (q < 2) throw InputError("InvalidField", "q must be a prime power >= 2");
  long p = 2;
  while (q % p != 0) ++p;
  int e = 0;
  long x = q;
  while (x % p == 0) {
    x /= p;
    ++e;
  }
  if (x != 1 || !is_prime(p)) throw InputError("InvalidField", std::to_string(q) + " is not a prime power");
  return FieldSpec(p, e);
}

FieldSpec::FieldSpec(long p, int e) : p_(p), e_(e) {
  if (!is_prime(p) || e < 1) throw InputError("InvalidField", "bad characteristic or degree");
  q_ = 1;
  for (int i = 0; i < e; ++i) q_ *= p;
  if (q_ > 256) throw InputError("InvalidField", "q > 256 is outside desk scale");

  PrimePoly mod;
  if (e == 1) {
    mod = {0, 1};
  } else {
    // lexicographically least monic irreducible: smallest code with c_{e-1} most significant
    for (long c = 0; c < q_; ++c) {
      PrimePoly g(e + 1);
      long x = c;
      for (int i = 0; i < e; ++i) {
        g[i] = x % p;
        x /= p;
      }
      g[e] = 1;
      if (prime_irreducible(g, p)) {
        mod = g;
        break;
      }
    }
  }
  modulus_.assign(mod.begin(), mod.end());

  auto digits = [&](long a) {
    PrimePoly d(e);
    for (int i = 0; i < e; ++i) {
      d[i] = a % p;
      a /= p;
    }
    return d;
  };
  auto undigits = [&](const PrimePoly& d) {
    long a = 0, w = 1;
    for (std::size_t i = 0; i < d.size() && i < static_cast<std::size_t>(e); ++i) {
      a += d[i] * w;
      w *= p;
    }
    return static_cast<int>(a);
  };
  add_.assign(q_ * q_, 0);
  mul_.assign(q_ * q_, 0);
  neg_.assign(q_, 0);
  inv_.assign(q_, 0);
  for (long a = 0; a < q_; ++a) {
    PrimePoly da = digits(a);
    PrimePoly na(e);
    for (int i = 0; i < e; ++i) na[i] = (p - da[i]) % p;
    neg_[a] = undigits(na);
    for (long b = 0; b < q_; ++b) {
      PrimePoly db = digits(b);
      PrimePoly s(e);
      for (int i = 0; i < e; ++i) s[i] = (da[i] + db[i]) % p;
      add_[a * q_ + b] = undigits(s);
      PrimePoly prod(2 * e - 1, 0);
      for (int i = 0; i < e; ++i)
        for (int j = 0; j < e; ++j) prod[i + j] = (prod[i + j] + da[i] * db[j]) % p;
      if (e == 1) {
        mul_[a * q_ + b] = static_cast<int>(prod[0]);
      } else {
        PrimePoly r = prime_mod(prod, mod, p);
        r.resize(e, 0);
        mul_[a * q_ + b] = undigits(r);
      }
    }
  }
  for (long a = 1; a < q_; ++a)
    for (long b = 1; b < q_; ++b)
      if (mul_[a * q_ + b] == 1) inv_[a] = static_cast<int>(b);
}

int FieldSpec::inv(int a) const {
  if (a == 0) throw MathError("DivisionByZero", "inverse of zero in F_q");
  return inv_[a];
}

int degree(const Poly& g) { return static_cast<int>(g.size()) - 1; }

Poly normalize(Poly g) {
  while (!g.empty() && g.back() == 0) g.pop_back();
  return g;
}

Poly poly_mul(const FieldSpec& F, const Poly& a, const Poly& b) {
  if (a.empty() || b.empty()) return {};
  Poly c(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; j < b.size(); ++j) c[i + j] = F.add(c[i + j], F.mul(a[i], b[j]));
  }
  return normalize(std::move(c));
}

void poly_divmod(const FieldSpec& F, const Poly& a, const Poly& b, Poly& quot, Poly& rem) {
  if (b.empty()) throw MathError("ZeroPolynomial", "division by the zero polynomial");
  rem = normalize(a);
  const int db = degree(b);
  const int lead_inv = F.inv(b.back());
  quot.assign(std::max(0, degree(rem) - db + 1), 0);
  while (!rem.empty() && degree(rem) >= db) {
    const int shift = degree(rem) - db;
    const int c = F.mul(rem.back(), lead_inv);
    quot[shift] = c;
    for (int i = 0; i <= db; ++i) rem[shift + i] = F.sub(rem[shift + i], F.mul(c, b[i]));
    rem = normalize(std::move(rem));
  }
  quot = normalize(std::move(quot));
}

Poly make_monic(const FieldSpec& F, const Poly& g) {
  Poly h = normalize(g);
  if (h.empty()) return h;
  const int inv = F.inv(h.back());
  for (auto& c : h) c = F.mul(c, inv);
  return h;
}

std::uint64_t monic_offset(long q, int d) {
  std::uint64_t off = 0, pw = 1;
  for (int i = 0; i < d; ++i) {
    off += pw;
    pw *= static_cast<std::uint64_t>(q);
  }
  return off;
}

std::uint64_t monic_code(const FieldSpec& F, const Poly& g) {
  const int d = degree(g);
  std::uint64_t c = 0, w = 1;
  for (int i = 0; i < d; ++i) {
    c += static_cast<std::uint64_t>(g[i]) * w;
    w *= static_cast<std::uint64_t>(F.q());
  }
  return monic_offset(F.q(), d) + c;
}

Poly monic_from_code(const FieldSpec& F, std::uint64_t code) {
  const auto q = static_cast<std::uint64_t>(F.q());
  int d = 0;
  std::uint64_t off = 0, pw = 1;
  while (code >= off + pw) {
    off += pw;
    pw *= q;
    ++d;
  }
  std::uint64_t rem = code - off;
  Poly g(d + 1);
  for (int i = 0; i < d; ++i) {
    g[i] = static_cast<int>(rem % q);
    rem /= q;
  }
  g[d] = 1;
  return g;
}

std::vector<std::pair<Poly, int>> factor(const FieldSpec& F, const Poly& g) {
  Poly rest = make_monic(F, g);
  if (rest.empty()) throw MathError("ZeroPolynomial", "cannot factor the zero polynomial");
  std::vector<std::pair<Poly, int>> out;
  for (int d = 1; 2 * d <= degree(rest); ++d) {
    const std::uint64_t lo = monic_offset(F.q(), d), hi = monic_offset(F.q(), d + 1);
    for (std::uint64_t c = lo; c < hi && 2 * d <= degree(rest); ++c) {
      Poly h = monic_from_code(F, c);
      int mult = 0;
      while (true) {
        Poly quot, rem;
        poly_divmod(F, rest, h, quot, rem);
        if (!rem.empty()) break;
        rest = std::move(quot);
        ++mult;
      }
      if (mult > 0) out.emplace_back(h, mult);
    }
  }
  if (degree(rest) >= 1) {
    auto it = std::find_if(out.begin(), out.end(), [&](const auto& f) { return f.first == rest; });
    if (it != out.end())
      ++it->second;
    else
      out.emplace_back(rest, 1);
  }
  std::sort(out.begin(), out.end(), [&](const auto& a, const auto& b) {
    return monic_code(F, a.first) < monic_code(F, b.first);
  });
  return out;
}

bool is_irreducible(const FieldSpec& F, const Poly& g) {
  if (degree(g) < 1) return false;
  auto f = factor(F, g);
  return f.size() == 1 && f[0].second == 1;
}

std::vector<Poly> closed_points(const FieldSpec& F, int e) {
  std::vector<Poly> out;
  const std::uint64_t lo = monic_offset(F.q(), e), hi = monic_offset(F.q(), e + 1);
  for (std::uint64_t c = lo; c < hi; ++c) {
    Poly h = monic_from_code(F, c);
    if (is_irreducible(F, h)) out.push_back(std::move(h));
  }
  return out;
}

int mobius(int n) {
  int result = 1;
  for (int p = 2; p * p <= n; ++p) {
    if (n % p) continue;
    n /= p;
    if (n % p == 0) return 0;
    result = -result;
  }
  if (n > 1) result = -result;
  return result;
}

std::uint64_t count_closed_points(Line line, int e, long q) {
  if (e < 1) throw InputError("InvalidDegree", "closed point degree must be >= 1");
  __int128 total = 0;
  for (int d = 1; d <= e; ++d) {
    if (e % d) continue;
    int mu = mobius(d);
    if (mu == 0) continue;
    __int128 pw = 1;
    for (int i = 0; i < e / d; ++i) {
      pw *= q;
      if (pw > (static_cast<__int128>(1) << 100)) throw MathError("Overflow", "closed point count too large");
    }
    total += mu * pw;
  }
  total /= e;
  if (line == Line::P1 && e == 1) total += 1;
  if (total > static_cast<__int128>(UINT64_MAX)) throw MathError("Overflow", "closed point count too large");
  return static_cast<std::uint64_t>(total);
}

int divisor_valuation(const FieldSpec& F, const EffectiveDivisor& w, const Place& c) {
  if (c.infinity) return w.mult_at_infinity();
  int v = 0;
  Poly rest = w.finite;
  while (degree(rest) >= degree(c.poly)) {
    Poly quot, rem;
    poly_divmod(F, rest, c.poly, quot, rem);
    if (!rem.empty()) break;
    rest = std::move(quot);
    ++v;
  }
  return v;
}

FactorTable::FactorTable(const FieldSpec& F, int max_degree, std::uint64_t ceiling)
    : F_(F), max_degree_(max_degree) {
  const std::uint64_t n = monic_offset(F.q(), max_degree + 1);
  if (n > ceiling || n >= (std::uint64_t{1} << 32))
    throw ResourceLimit("factor table for q=" + std::to_string(F.q()) + " up to degree " +
                        std::to_string(max_degree) + " needs " + std::to_string(n) + " entries");
  spf_.assign(n, 0);
  cof_.assign(n, 0);
  for (std::uint64_t a = 1; a < n; ++a) {
    if (spf_[a] != 0) continue;
    spf_[a] = static_cast<std::uint32_t>(a);
    Poly pa = monic_from_code(F, a);
    const int da = degree(pa);
    const std::uint64_t limit = monic_offset(F.q(), max_degree - da + 1);
    for (std::uint64_t b = 1; b < limit; ++b) {
      std::uint64_t prod = monic_code(F, poly_mul(F, pa, monic_from_code(F, b)));
      if (spf_[prod] == 0) {
        spf_[prod] = static_cast<std::uint32_t>(a);
        cof_[prod] = static_cast<std::uint32_t>(b);
      }
    }
  }
}

int FactorTable::degree_of(std::uint64_t code) const { return degree(monic_from_code(F_, code)); }

std::vector<std::pair<std::uint64_t, int>> FactorTable::factorization(std::uint64_t code) const {
  std::vector<std::pair<std::uint64_t, int>> out;
  while (code != 0) {
    std::uint64_t a = spf_[code];
    if (!out.empty() && out.back().first == a)
      ++out.back().second;
    else
      out.emplace_back(a, 1);
    code = cof_[code];
  }
  return out;
}

}  // namespace toric
