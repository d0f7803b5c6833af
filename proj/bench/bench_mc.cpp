#include <benchmark/benchmark.h>

#include "zonal/ensembles.hpp"
#include "zonal/mc.hpp"
#include "zonal/sympoly.hpp"

using namespace zonal;

namespace {

struct SchurSample {
  GinibreSampler sampler{Field::real, 3, Matrix::Identity(3, 3)};
  PolyEvaluator s{schur_poly(Partition{2, 2}, 3)};
  cplx operator()(Philox& rng) const { return s(eigenvalues(sampler(rng))).real(); }
};

void BM_serial(benchmark::State& state) {
  const SchurSample f;
  for (auto _ : state) benchmark::DoNotOptimize(mc_estimate_serial(state.range(0), 42, f));
  state.SetItemsProcessed(state.iterations() * state.range(0));
}

void BM_openmp(benchmark::State& state) {
  const SchurSample f;
  for (auto _ : state) benchmark::DoNotOptimize(mc_estimate(state.range(0), 42, f));
  state.SetItemsProcessed(state.iterations() * state.range(0));
}

void BM_philox(benchmark::State& state) {
  Philox rng(42, 0);
  for (auto _ : state) benchmark::DoNotOptimize(rng());
}

}  // namespace

BENCHMARK(BM_serial)->Arg(1 << 14)->Arg(1 << 17)->Unit(benchmark::kMillisecond)->UseRealTime();
BENCHMARK(BM_openmp)->Arg(1 << 14)->Arg(1 << 17)->Unit(benchmark::kMillisecond)->UseRealTime();
BENCHMARK(BM_philox);

BENCHMARK_MAIN();
