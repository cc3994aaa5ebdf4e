#include <benchmark/benchmark.h>

#include "cyclo/character.hpp"
#include "cyclo/unit_group.hpp"

namespace {

void BM_UnitGroupTable(benchmark::State& state) {
  const std::int64_t m = state.range(0);
  for (auto _ : state) {
    cyclo::UnitGroup g(m);
    benchmark::DoNotOptimize(g.order());
  }
}
BENCHMARK(BM_UnitGroupTable)->Arg(97)->Arg(1009)->Arg(3 * 5 * 7 * 11 * 13);

void BM_CharacterGroup(benchmark::State& state) {
  const std::int64_t m = state.range(0);
  for (auto _ : state) {
    auto chars = cyclo::character_group(m);
    benchmark::DoNotOptimize(chars.size());
  }
}
BENCHMARK(BM_CharacterGroup)->Arg(97)->Arg(360)->Arg(1009);

void BM_ConductorSweep(benchmark::State& state) {
  const std::int64_t m = state.range(0);
  const auto chars = cyclo::character_group(m);
  for (auto _ : state) {
    std::int64_t acc = 0;
    for (const auto& chi : chars) acc += chi.conductor();
    benchmark::DoNotOptimize(acc);
  }
}
BENCHMARK(BM_ConductorSweep)->Arg(96)->Arg(360);

}  // namespace
