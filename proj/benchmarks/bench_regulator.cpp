#include <benchmark/benchmark.h>

#include "cyclo/regulator.hpp"

namespace {

void BM_Regulator(benchmark::State& state) {
  const std::int64_t m = state.range(0);
  for (auto _ : state) {
    double r = cyclo::regulator(m, cyclo::UnitKind::plus);
    benchmark::DoNotOptimize(r);
  }
}
BENCHMARK(BM_Regulator)->Arg(16)->Arg(32)->Arg(64)->Arg(128);

void BM_RegulatorExtended(benchmark::State& state) {
  const std::int64_t m = state.range(0);
  for (auto _ : state) {
    double r =
        cyclo::regulator(m, cyclo::UnitKind::plus, cyclo::Precision::extended);
    benchmark::DoNotOptimize(r);
  }
}
BENCHMARK(BM_RegulatorExtended)->Arg(16)->Arg(32)->Arg(64);

void BM_IndexRelation(benchmark::State& state) {
  const std::int64_t m = state.range(0);
  for (auto _ : state) {
    auto rep = cyclo::verify_index_relation(m);
    benchmark::DoNotOptimize(rep.residual);
  }
}
BENCHMARK(BM_IndexRelation)->Arg(16)->Arg(27)->Arg(32);

}  // namespace
