#include <benchmark/benchmark.h>

#include <numeric>

#include "knotcalc/dim_engine.hpp"
#include "knotcalc/inference.hpp"
#include "knotcalc/parity.hpp"

using namespace knotcalc;

static void BM_DimTable(benchmark::State& state) {
  KnotRecord rec;
  rec.name = "t25";
  rec.nu_sharp = 3;
  rec.r0 = 3;
  std::vector<Slope> slopes;
  for (long long n = -50; n <= 50; ++n)
    for (long long q = 1; q <= 8; ++q)
      if (std::gcd(std::abs(n), q) == 1) slopes.push_back(normalize(n, q));
  for (auto _ : state)
    benchmark::DoNotOptimize(dim_table(rec, slopes, Bundle::trivial));
}
BENCHMARK(BM_DimTable);

static void BM_SlopeBound(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(slope_bound(int(state.range(0))));
}
BENCHMARK(BM_SlopeBound)->Arg(20)->Arg(40)->Arg(60);

static void BM_VerifyIndexSet(benchmark::State& state) {
  IndexSet ix{int(state.range(0)), {}};
  for (int i = 1; i <= std::min<long long>(5, state.range(0)); ++i)
    ix.indices.push_back(i);
  for (auto _ : state) benchmark::DoNotOptimize(verify_index_set(ix));
}
BENCHMARK(BM_VerifyIndexSet)->Arg(6)->Arg(10)->Arg(14);

static void BM_Inference(benchmark::State& state) {
  KnotRecord rec;
  rec.name = "bench";
  rec.flags.quasipositive = true;
  rec.flags.slice = false;
  rec.slice_genus = 2;
  for (auto _ : state) benchmark::DoNotOptimize(apply_rules(rec));
}
BENCHMARK(BM_Inference);

BENCHMARK_MAIN();
