#include <benchmark/benchmark.h>

#include <complex>
#include <vector>

#include "cyclo/character.hpp"
#include "cyclo/lfunction.hpp"
#include "cyclo/series.hpp"

namespace {

void BM_AcceleratedAlternating(benchmark::State& state) {
  const double tol = 1.0 / static_cast<double>(state.range(0));
  const std::vector<std::complex<double>> cycle{1.0, -1.0};
  for (auto _ : state) {
    auto r = cyclo::accelerated_periodic_sum(cycle, tol);
    benchmark::DoNotOptimize(r.value);
  }
}
BENCHMARK(BM_AcceleratedAlternating)->Arg(1'000'000)->Arg(1'000'000'000);

void BM_SeriesLValue(benchmark::State& state) {
  const std::int64_t f = state.range(0);
  // first primitive non-principal character at this conductor
  cyclo::DirichletCharacter chi = [&] {
    for (const auto& c : cyclo::character_group(f))
      if (!c.is_principal() && c.is_primitive()) return c;
    throw std::logic_error("no primitive character");
  }();
  for (auto _ : state) {
    auto r = cyclo::l_e_one_series(chi, 1e-8);
    benchmark::DoNotOptimize(r.value);
  }
  state.SetLabel(chi.label());
}
BENCHMARK(BM_SeriesLValue)->Arg(5)->Arg(13)->Arg(40);

}  // namespace
