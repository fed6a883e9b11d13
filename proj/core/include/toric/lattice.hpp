#pragma once

#include <cstddef>
#include <initializer_list>
#include <ostream>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace toric {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

using IntVector = std::vector<BigInt>;
using RatVector = std::vector<Rational>;

class IntMatrix {
 public:
  IntMatrix() = default;
  IntMatrix(std::size_t rows, std::size_t cols);
  IntMatrix(std::initializer_list<std::initializer_list<long>> rows);

  static IntMatrix identity(std::size_t n);
  static IntMatrix from_rows(const std::vector<IntVector>& rows, std::size_t cols);
  static IntMatrix from_columns(const std::vector<IntVector>& cols, std::size_t rows);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  BigInt& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const BigInt& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

  IntVector row(std::size_t i) const;
  IntVector column(std::size_t j) const;
  IntMatrix transpose() const;

  void swap_rows(std::size_t a, std::size_t b);
  void swap_cols(std::size_t a, std::size_t b);
  // row a += k * row b
  void add_row(std::size_t a, std::size_t b, const BigInt& k);
  void add_col(std::size_t a, std::size_t b, const BigInt& k);
  void negate_row(std::size_t a);
  void negate_col(std::size_t a);

  friend IntMatrix operator*(const IntMatrix& a, const IntMatrix& b);
  friend bool operator==(const IntMatrix& a, const IntMatrix& b) = default;
  friend std::ostream& operator<<(std::ostream& os, const IntMatrix& m);

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<BigInt> data_;
};

IntVector operator*(const IntMatrix& a, const IntVector& x);

// U * A * V = D with D "diagonal" of shape A, diag = (d_1 | d_2 | ...).
struct SmithDecomposition {
  IntMatrix U;
  IntMatrix V;
  std::vector<BigInt> diag;
  std::size_t rank() const;
};

SmithDecomposition smith_normal_form(const IntMatrix& A);

// Integer determinant of a square matrix (Bareiss).
BigInt determinant(const IntMatrix& A);

// Saturated basis of {x : A x = 0}, returned in row Hermite normal form.
std::vector<IntVector> kernel_basis(const IntMatrix& A);

// Row Hermite normal form of the lattice spanned by the given vectors (zero rows dropped).
std::vector<IntVector> hermite_rows(const std::vector<IntVector>& vectors, std::size_t dim);

// min{ f(x) > 0 : x in Z-span(basis) }. Throws MathError("ZeroFunctional") if f vanishes.
Rational min_positive_value(const RatVector& f, const std::vector<IntVector>& basis);

struct ResidueSubgroup {
  std::vector<long> moduli;
  std::vector<std::vector<long>> generators;
};

using Residue = std::vector<long>;

// All a in prod Z/m_i with sum a_i g_i / m_i in Z for every generator g, sorted lexicographically.
std::vector<Residue> orthogonal_dual_mod(const ResidueSubgroup& G);

// Order of the subgroup generated by G.generators.
std::size_t subgroup_order(const ResidueSubgroup& G);

// Exact rational linear algebra helpers used by the geometry modules.
namespace linalg {

using RatMatrix = std::vector<RatVector>;

std::size_t rank(RatMatrix rows);
// Basis of {x : M x = 0} for a matrix given by rows with `cols` columns.
RatMatrix nullspace(const RatMatrix& rows, std::size_t cols);
Rational determinant(RatMatrix m);
// Solve M x = b for square invertible M; returns false if singular.
bool solve(RatMatrix m, RatVector b, RatVector& x);
RatVector to_rational(const IntVector& v);
// Scale a rational vector to the primitive integer vector with the same direction.
IntVector primitive(const RatVector& v);
Rational dot(const RatVector& a, const RatVector& b);

}  // namespace linalg

BigInt gcd(const BigInt& a, const BigInt& b);
BigInt lcm(const BigInt& a, const BigInt& b);

}  // namespace toric
