#include <benchmark/benchmark.h>

#include <random>

#include "bjq/quantize.hpp"
#include "bjq/testgen.hpp"

namespace {

bjq::OperatorPoly power_word(int r, int s) {
  bjq::OperatorPoly q = bjq::OperatorPoly::operator_q(1, 1);
  bjq::OperatorPoly p = bjq::OperatorPoly::operator_p(1, 1);
  bjq::OperatorPoly acc = bjq::OperatorPoly::identity(1);
  for (int k = 0; k < s; ++k) acc = acc * p;
  for (int k = 0; k < r; ++k) acc = acc * q;
  return acc;
}

void BM_reorder(benchmark::State& state) {
  const int deg = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(power_word(deg, deg));
}
BENCHMARK(BM_reorder)->Arg(4)->Arg(8)->Arg(12);

void BM_quantize(benchmark::State& state) {
  std::mt19937_64 rng(1);
  bjq::ClassicalPoly f =
      bjq::testgen::random_poly(rng, 2, static_cast<int>(state.range(0)), 8);
  for (auto _ : state)
    benchmark::DoNotOptimize(bjq::quantize(f, bjq::OrderingRule::BornJordan));
}
BENCHMARK(BM_quantize)->Arg(4)->Arg(8);

void BM_split_residual(benchmark::State& state) {
  std::mt19937_64 rng(2);
  bjq::ClassicalPoly f1 =
      bjq::testgen::random_poly(rng, 1, 6, 4, bjq::testgen::VarSet::QOnly);
  bjq::ClassicalPoly g1 =
      bjq::testgen::random_poly(rng, 1, 6, 4, bjq::testgen::VarSet::POnly);
  bjq::ClassicalPoly f2 =
      bjq::testgen::random_poly(rng, 1, 6, 4, bjq::testgen::VarSet::QOnly);
  bjq::ClassicalPoly g2 =
      bjq::testgen::random_poly(rng, 1, 6, 4, bjq::testgen::VarSet::POnly);
  for (auto _ : state)
    benchmark::DoNotOptimize(bjq::strengthened_rule_residual(
        f1, g1, f2, g2, bjq::OrderingRule::BornJordan));
}
BENCHMARK(BM_split_residual);

}  // namespace

BENCHMARK_MAIN();
