#include <benchmark/benchmark.h>

#include <random>

#include "bjq/builtins.hpp"
#include "bjq/grid.hpp"
#include "bjq/testgen.hpp"

namespace {

void BM_displacement(benchmark::State& state) {
  bjq::GridSpec spec = bjq::GridSpec::with_default_length(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(bjq::displacement(spec, 5, -3));
}
BENCHMARK(BM_displacement)->Arg(64)->Arg(256);

void BM_quantize_grid(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  bjq::GridSpec spec = bjq::GridSpec::with_default_length(n);
  std::mt19937_64 rng(1);
  bjq::PhaseSpaceGridFunction f = bjq::testgen::random_real_samples(rng, spec);
  for (auto _ : state)
    benchmark::DoNotOptimize(bjq::quantize_grid(f, bjq::OrderingRule::BornJordan));
}
BENCHMARK(BM_quantize_grid)->Arg(32)->Arg(64);

void BM_wigner_round_trip(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  bjq::GridSpec spec = bjq::GridSpec::with_default_length(n);
  std::mt19937_64 rng(2);
  bjq::PhaseSpaceGridFunction f = bjq::testgen::random_real_samples(rng, spec);
  bjq::GridOperator a = bjq::quantize_grid(f, bjq::OrderingRule::Weyl);
  for (auto _ : state) benchmark::DoNotOptimize(bjq::wigner_inverse(a));
}
BENCHMARK(BM_wigner_round_trip)->Arg(32)->Arg(64);

void BM_harper_quantize(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  bjq::GridSpec spec = bjq::GridSpec::with_default_length(n);
  bjq::PhaseSpaceGridFunction f = bjq::builtin_function(spec, "harper");
  for (auto _ : state)
    benchmark::DoNotOptimize(bjq::quantize_grid(f, bjq::OrderingRule::Weyl));
}
BENCHMARK(BM_harper_quantize)->Arg(64);

}  // namespace

BENCHMARK_MAIN();
