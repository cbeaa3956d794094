#include <benchmark/benchmark.h>

#include "acload/lp.hpp"
#include "acload/prices.hpp"
#include "acload/rolling.hpp"
#include "acload/scheduler.hpp"

namespace {

acload::HorizonScenario day_scenario() {
  acload::HorizonScenario s;
  s.horizon = 24;
  s.t_initial_f = 75.0;
  s.t_out_series_f.assign(24, 95.0);
  s.prices = acload::synthesize_prices(7, 24, 10.0, 4.0, 1.0);
  return s;
}

void BM_ElasticLpSolve(benchmark::State& state) {
  const auto lp = acload::build_elastic_lp(day_scenario(), acload::ComfortZone{},
                                           acload::LoadSpec{}, acload::ThermalParams{});
  for (auto _ : state) {
    benchmark::DoNotOptimize(acload::solve(lp));
  }
}
BENCHMARK(BM_ElasticLpSolve);

void BM_SolveElasticDay(benchmark::State& state) {
  const auto scenario = day_scenario();
  for (auto _ : state) {
    benchmark::DoNotOptimize(acload::solve_elastic(scenario, acload::ComfortZone{},
                                                   acload::LoadSpec{},
                                                   acload::ThermalParams{}));
  }
}
BENCHMARK(BM_SolveElasticDay);

void BM_RecedingHorizonDay(benchmark::State& state) {
  const auto series = acload::synthesize_prices(7, 48, 10.0, 2.5, 0.25);
  const acload::PriceFeed feed{series, series};
  acload::ScenarioTemplate tpl;
  tpl.horizon = 24;
  tpl.t_initial_f = 75.0;
  tpl.t_out_series_f.assign(48, 95.0);
  for (auto _ : state) {
    benchmark::DoNotOptimize(acload::run_receding_horizon(
        feed, tpl, acload::ComfortZone{}, acload::LoadSpec{}, acload::ThermalParams{}, 24));
  }
}
BENCHMARK(BM_RecedingHorizonDay);

}  // namespace

BENCHMARK_MAIN();
