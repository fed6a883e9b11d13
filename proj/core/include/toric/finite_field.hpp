#pragma once

#include <cstdint>
#include <utility>
#include <vector>

namespace toric {

// F_q with q = p^e. Elements are integers in [0, q): the base-p digits of an element are its
// coordinates in the power basis of F_p[a]/(modulus).
class FieldSpec {
 public:
  // Throws InputError("InvalidField") unless q is a prime power >= 2.
  static FieldSpec make(long q);
  FieldSpec(long p, int e);

  long p() const { return p_; }
  int e() const { return e_; }
  long q() const { return q_; }
  // Monic modulus over F_p, coefficients low to high (size e + 1). For e = 1 this is x.
  const std::vector<int>& modulus() const { return modulus_; }

  int add(int a, int b) const { return add_[a * q_ + b]; }
  int sub(int a, int b) const { return add_[a * q_ + neg_[b]]; }
  int mul(int a, int b) const { return mul_[a * q_ + b]; }
  int neg(int a) const { return neg_[a]; }
  int inv(int a) const;

 private:
  long p_ = 0;
  int e_ = 0;
  long q_ = 0;
  std::vector<int> modulus_;
  std::vector<int> add_, mul_, neg_, inv_;
};

bool is_prime(long n);

// Polynomial over F_q: coefficients low to high, no trailing zeros; the zero polynomial is empty.
using Poly = std::vector<int>;

int degree(const Poly& g);
Poly normalize(Poly g);
Poly poly_mul(const FieldSpec& F, const Poly& a, const Poly& b);
// a = quot * b + rem
void poly_divmod(const FieldSpec& F, const Poly& a, const Poly& b, Poly& quot, Poly& rem);
Poly make_monic(const FieldSpec& F, const Poly& g);

// Monic irreducible factors with multiplicities, in increasing monic code order.
// Throws MathError("ZeroPolynomial") for g = 0.
std::vector<std::pair<Poly, int>> factor(const FieldSpec& F, const Poly& g);
bool is_irreducible(const FieldSpec& F, const Poly& g);

// Monic irreducible polynomials of degree e (the closed points of A^1 of degree e).
std::vector<Poly> closed_points(const FieldSpec& F, int e);

enum class Line { A1, P1 };

// Number of closed points of degree e. Throws MathError("Overflow") past 64 bits.
std::uint64_t count_closed_points(Line line, int e, long q);
int mobius(int n);

struct EffectiveDivisor {
  int degree = 0;
  Poly finite{1};  // monic, deg <= degree
  int mult_at_infinity() const { return degree - toric::degree(finite); }
};

struct Place {
  bool infinity = false;
  Poly poly;  // monic irreducible when finite
  int degree() const { return infinity ? 1 : toric::degree(poly); }
  static Place at_infinity() { return {true, {}}; }
};

int divisor_valuation(const FieldSpec& F, const EffectiveDivisor& w, const Place& c);

// Monic polynomials are numbered: degree d occupies codes [offset(d), offset(d+1)),
// offset(d) = (q^d - 1)/(q - 1), and within a degree the code is sum c_i q^i over i < d.
// The codes below offset(r + 1) are exactly the monic polynomials of degree <= r.
std::uint64_t monic_offset(long q, int d);
std::uint64_t monic_code(const FieldSpec& F, const Poly& g);
Poly monic_from_code(const FieldSpec& F, std::uint64_t code);

// Factorizations of every monic polynomial of degree <= max_degree, built by a sieve that
// records the smallest irreducible factor and its cofactor.
class FactorTable {
 public:
  FactorTable(const FieldSpec& F, int max_degree, std::uint64_t ceiling = 50'000'000);

  const FieldSpec& field() const { return F_; }
  int max_degree() const { return max_degree_; }
  std::uint64_t size() const { return spf_.size(); }
  int degree_of(std::uint64_t code) const;
  bool irreducible(std::uint64_t code) const { return code > 0 && spf_[code] == code; }
  // (irreducible code, multiplicity), ascending codes.
  std::vector<std::pair<std::uint64_t, int>> factorization(std::uint64_t code) const;

 private:
  FieldSpec F_;
  int max_degree_;
  std::vector<std::uint32_t> spf_;
  std::vector<std::uint32_t> cof_;
};

}  // namespace toric
