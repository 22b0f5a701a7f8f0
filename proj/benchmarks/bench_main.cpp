#include <benchmark/benchmark.h>

#include "modlat/canon.hpp"
#include "modlat/families.hpp"
#include "modlat/generator.hpp"
#include "modlat/listing.hpp"
#include "modlat/orbit_vectors.hpp"
#include "modlat/polya.hpp"
#include "modlat/store.hpp"

using namespace modlat;

static void BM_CanonicalForm(benchmark::State& state) {
  const Lattice l = grid(static_cast<int>(state.range(0)), static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(canonical_form(l));
}
BENCHMARK(BM_CanonicalForm)->Arg(3)->Arg(5)->Arg(7);

static void BM_GenerateRacks(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(generate_modular_vi_racks(n));
}
BENCHMARK(BM_GenerateRacks)->Arg(12)->Arg(14)->Arg(16)->Unit(benchmark::kMillisecond);

static void BM_GenerateVi(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(generate_modular_vi(n));
}
BENCHMARK(BM_GenerateVi)->Arg(10)->Arg(12)->Unit(benchmark::kMillisecond);

static void BM_FunctionSeries(benchmark::State& state) {
  const CycleIndex z = cycle_index(site_action(grid(4, 4)));
  const int order = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(function_series(z, order));
}
BENCHMARK(BM_FunctionSeries)->Arg(10)->Arg(40);

static void BM_OrbitVectorUnrank(benchmark::State& state) {
  const OrbitVectorFamily family(site_action(grid(4, 4)), static_cast<int>(state.range(0)));
  BigInt i = 0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(family.unrank(i));
    i = (i + 7919) % family.size();
  }
}
BENCHMARK(BM_OrbitVectorUnrank)->Arg(8)->Arg(20);

static void BM_ModularUnrank(benchmark::State& state) {
  static const RackStore store =
      RackStore::in_memory("rack", generate_up_to(Family::kModularViRack, 16));
  const ModularListing listing(store, static_cast<int>(state.range(0)));
  BigInt i = 0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(listing.unrank(i));
    i = (i + 104729) % listing.cardinality();
  }
}
BENCHMARK(BM_ModularUnrank)->Arg(12)->Arg(16);

BENCHMARK_MAIN();
