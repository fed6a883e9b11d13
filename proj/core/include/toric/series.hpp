#pragma once

#include <complex>
#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <utility>
#include <vector>

#include "toric/errors.hpp"

namespace toric {

// Per-variable maximum exponents plus an optional cap on the total degree (negative = none).
struct Truncation {
  std::vector<int> max_exp;
  int total = -1;

  static Truncation box(int vars, int max_each) { return {std::vector<int>(vars, max_each), -1}; }
  static Truncation total_degree(int vars, int cap) { return {std::vector<int>(vars, cap), cap}; }

  bool admits(const std::vector<long>& e) const;
  int vars() const { return static_cast<int>(max_exp.size()); }
  int max_degree() const;  // largest single exponent allowed
};

namespace detail {

inline std::int64_t checked_add(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_add_overflow(a, b, &r)) throw MathError("Overflow", "truncation overflow guard tripped");
  return r;
}
inline std::int64_t checked_mul(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_mul_overflow(a, b, &r)) throw MathError("Overflow", "truncation overflow guard tripped");
  return r;
}
inline std::complex<double> checked_add(std::complex<double> a, std::complex<double> b) { return a + b; }
inline std::complex<double> checked_mul(std::complex<double> a, std::complex<double> b) { return a * b; }

}  // namespace detail

// Truncated multivariate power series; coefficients outside the truncation are dropped on every
// operation. Coeff is std::int64_t (exact, overflow-checked) or std::complex<double>.
template <class Coeff>
class MultiSeries {
 public:
  explicit MultiSeries(Truncation t) : t_(std::move(t)) {
    stride_.resize(t_.vars());
    std::size_t s = 1;
    for (int i = 0; i < t_.vars(); ++i) {
      stride_[i] = s;
      s *= static_cast<std::size_t>(t_.max_exp[i] + 1);
    }
    data_.assign(s, Coeff{});
  }

  static MultiSeries one(Truncation t) {
    MultiSeries m(std::move(t));
    m.data_[0] = Coeff{1};
    return m;
  }

  const Truncation& truncation() const { return t_; }

  Coeff coefficient(const std::vector<long>& e) const {
    if (!t_.admits(e)) return Coeff{};
    return data_[index(e)];
  }

  void add(const std::vector<long>& e, Coeff v) {
    if (!t_.admits(e)) return;
    auto& c = data_[index(e)];
    c = detail::checked_add(c, v);
  }

  // Nonzero terms in increasing index order.
  std::vector<std::pair<std::vector<long>, Coeff>> terms() const {
    std::vector<std::pair<std::vector<long>, Coeff>> out;
    for (std::size_t i = 0; i < data_.size(); ++i)
      if (data_[i] != Coeff{}) out.emplace_back(exponent(i), data_[i]);
    return out;
  }

  MultiSeries operator*(const MultiSeries& other) const {
    MultiSeries out(t_);
    const auto a = nonzero();
    const auto b = other.nonzero();
    const int n = t_.vars();
    for (const auto& [ia, ea, ta] : a)
      for (const auto& [ib, eb, tb] : b) {
        if (t_.total >= 0 && ta + tb > t_.total) continue;
        bool fits = true;
        for (int v = 0; v < n && fits; ++v) fits = ea[v] + eb[v] <= t_.max_exp[v];
        if (!fits) continue;
        auto& c = out.data_[ia + ib];
        c = detail::checked_add(c, detail::checked_mul(data_[ia], other.data_[ib]));
      }
    return out;
  }

  MultiSeries pow(std::uint64_t N) const {
    MultiSeries result = one(t_);
    MultiSeries base = *this;
    while (N) {
      if (N & 1) result = result * base;
      N >>= 1;
      if (N) {
        if (base.is_one()) break;
        base = base * base;
      }
    }
    return result;
  }

  bool is_one() const {
    if (data_[0] != Coeff{1}) return false;
    for (std::size_t i = 1; i < data_.size(); ++i)
      if (data_[i] != Coeff{}) return false;
    return true;
  }

 private:
  struct Entry {
    std::size_t idx;
    std::vector<long> e;
    long total;
  };

  std::vector<Entry> nonzero() const {
    std::vector<Entry> out;
    for (std::size_t i = 0; i < data_.size(); ++i)
      if (data_[i] != Coeff{}) {
        auto e = exponent(i);
        long tot = std::accumulate(e.begin(), e.end(), 0L);
        out.push_back({i, std::move(e), tot});
      }
    return out;
  }

  std::size_t index(const std::vector<long>& e) const {
    std::size_t i = 0;
    for (int v = 0; v < t_.vars(); ++v) i += static_cast<std::size_t>(e[v]) * stride_[v];
    return i;
  }

  std::vector<long> exponent(std::size_t i) const {
    std::vector<long> e(t_.vars());
    for (int v = 0; v < t_.vars(); ++v) {
      e[v] = static_cast<long>(i % static_cast<std::size_t>(t_.max_exp[v] + 1));
      i /= static_cast<std::size_t>(t_.max_exp[v] + 1);
    }
    return e;
  }

  Truncation t_;
  std::vector<std::size_t> stride_;
  std::vector<Coeff> data_;
};

using IntSeries = MultiSeries<std::int64_t>;
using ComplexSeries = MultiSeries<std::complex<double>>;

}  // namespace toric
