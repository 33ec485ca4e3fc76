#include <benchmark/benchmark.h>

#include "clusterlab/models.hpp"
#include "clusterlab/phase_poly.hpp"
#include "clusterlab/spectra.hpp"

using namespace clusterlab;

namespace {

ChainSpec ring(ModelKind m, int n) {
  ChainSpec s;
  s.model = m;
  s.sites = n;
  s.boundary = Boundary::Closed;
  return s;
}

void BM_OpsumApply(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const auto h = interpolated(build(ring(ModelKind::CCZ, n)), 0.5);
  Vector v = Vector::Ones(Eigen::Index{1} << n);
  for (auto _ : state) {
    Vector w = opsum_apply(h, v);
    benchmark::DoNotOptimize(w.data());
  }
  state.SetItemsProcessed(state.iterations() * static_cast<long>(h.size()) * (1L << n));
}
BENCHMARK(BM_OpsumApply)->Arg(10)->Arg(14)->Arg(18);

void BM_DenseDiagonalize(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const auto h = interpolated(build(ring(ModelKind::ZXZ, n)), 0.5);
  for (auto _ : state) benchmark::DoNotOptimize(diagonalize_dense(h, 1).eigenvalues.data());
}
BENCHMARK(BM_DenseDiagonalize)->Arg(6)->Arg(8)->Arg(10)->Unit(benchmark::kMillisecond);

void BM_GroundSubspace(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const auto h = interpolated(build(ring(ModelKind::ZXZ, n)), 0.5);
  for (auto _ : state) benchmark::DoNotOptimize(ground_subspace(h, 2, 1e-8).eigenvalues.data());
}
BENCHMARK(BM_GroundSubspace)->Arg(12)->Arg(16)->Unit(benchmark::kMillisecond);

void BM_ExpToOpsum(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  PhasePolynomial p(n);
  for (int j = 1; j + 2 <= n; ++j) p.add_monomial({j, j + 1, j + 2}, 0.37 * j);
  for (auto _ : state) benchmark::DoNotOptimize(exp_to_opsum(p).size());
}
BENCHMARK(BM_ExpToOpsum)->Arg(6)->Arg(10)->Arg(12);

}  // namespace
BENCHMARK_MAIN();
