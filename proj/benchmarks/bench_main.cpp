#include <benchmark/benchmark.h>

#include "toric/divisors.hpp"
#include "toric/lattice.hpp"
#include "toric/zeta.hpp"

namespace {

using namespace toric;

void BM_CountU_P2(benchmark::State& state) {
  const long r = state.range(0);
  DivisorCounter counter(projective_plane(), 2);
  for (auto _ : state) benchmark::DoNotOptimize(counter.count_U({r, r, r}, CountingConstraint::none()));
}
BENCHMARK(BM_CountU_P2)->DenseRange(1, 4);

void BM_CountU_Campana_P1(benchmark::State& state) {
  const long r = state.range(0);
  DivisorCounter counter(projective_line(), 3);
  auto k = CountingConstraint::campana(CampanaWeights{{2, 2}});
  for (auto _ : state) benchmark::DoNotOptimize(counter.count_U({r, r}, k));
}
BENCHMARK(BM_CountU_Campana_P1)->DenseRange(2, 6, 2);

void BM_EulerCoefficients(benchmark::State& state) {
  const int cap = static_cast<int>(state.range(0));
  Fan f = p1_times_p1();
  for (auto _ : state)
    benchmark::DoNotOptimize(euler_coefficients(f, CountingConstraint::none(), 2, Truncation::total_degree(4, cap)));
}
BENCHMARK(BM_EulerCoefficients)->Arg(8)->Arg(12)->Arg(16);

void BM_TauCampana(benchmark::State& state) {
  const int E = static_cast<int>(state.range(0));
  CampanaWeights w{{2, 2}};
  for (auto _ : state) benchmark::DoNotOptimize(tau_campana(projective_line(), w, {1, 1}, 2, E));
}
BENCHMARK(BM_TauCampana)->Arg(4)->Arg(8)->Arg(16);

void BM_SmithNormalForm(benchmark::State& state) {
  const std::size_t n = static_cast<std::size_t>(state.range(0));
  IntMatrix A(n, n);
  long x = 1;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      x = (x * 1103515245 + 12345) % 2147483648;
      A(i, j) = x % 41 - 20;
    }
  for (auto _ : state) benchmark::DoNotOptimize(smith_normal_form(A));
}
BENCHMARK(BM_SmithNormalForm)->Arg(4)->Arg(8)->Arg(16);

}  // namespace
BENCHMARK_MAIN();
