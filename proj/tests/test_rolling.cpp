#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <vector>

#include "acload/errors.hpp"
#include "acload/rolling.hpp"
#include "support/generators.hpp"

using namespace acload;
using acload::testing::perfect_forecast_feed;

namespace {

ScenarioTemplate default_template(std::size_t hours_covered, double t_initial = 75.0,
                                  double t_out = 95.0) {
  ScenarioTemplate tpl;
  tpl.horizon = 24;
  tpl.t_initial_f = t_initial;
  tpl.t_out_series_f.assign(hours_covered, t_out);
  return tpl;
}

HorizonScenario one_shot_scenario(const ScenarioTemplate& tpl, const PriceSeries& prices) {
  HorizonScenario s;
  s.horizon = tpl.horizon;
  s.t_initial_f = tpl.t_initial_f;
  s.t_out_series_f.assign(tpl.t_out_series_f.begin(),
                          tpl.t_out_series_f.begin() + static_cast<std::ptrdiff_t>(tpl.horizon));
  s.prices = validate_window(prices, 0, tpl.horizon);
  return s;
}

}  // namespace

TEST_CASE("perfect forecast reproduces the one-shot optimum") {
  const auto feed = perfect_forecast_feed(31);
  const auto tpl = default_template(48);
  const auto rolling =
      run_receding_horizon(feed, tpl, ComfortZone{}, LoadSpec{}, ThermalParams{}, 24);
  const auto one_shot = solve_elastic(one_shot_scenario(tpl, feed.day_ahead),
                                      ComfortZone{}, LoadSpec{}, ThermalParams{});
  CHECK(std::abs(rolling.realized_cost_cents - one_shot.total_cost_cents) <=
        1e-6 * (1.0 + one_shot.total_cost_cents));
}

TEST_CASE("constant prices settle on the warm-boundary steady power") {
  const PriceSeries flat(std::vector<double>(48, 5.0), "flat");
  const PriceFeed feed{flat, flat};
  const auto tpl = default_template(48, 75.0, 95.0);
  const auto rolling =
      run_receding_horizon(feed, tpl, ComfortZone{}, LoadSpec{}, ThermalParams{}, 24);
  const double hold_75 = steady_state_power(75.0, 95.0, ThermalParams{});  // 10 kW
  for (double p : rolling.applied_powers_kw) {
    CHECK(p == doctest::Approx(hold_75).epsilon(1e-9));
  }
  for (std::size_t h = 1; h < rolling.applied_temps.temps_f.size(); ++h) {
    CHECK(rolling.applied_temps.temps_f[h] == doctest::Approx(75.0).epsilon(1e-9));
  }
}

TEST_CASE("future price edits cannot reach back before their window") {
  auto feed = perfect_forecast_feed(77);
  const auto tpl = default_template(48);
  const auto before =
      run_receding_horizon(feed, tpl, ComfortZone{}, LoadSpec{}, ThermalParams{}, 12);

  std::vector<double> bumped = feed.day_ahead.values();
  bumped[30] *= 3.0;  // first window that sees hour 30 opens at hour 7
  feed.day_ahead = PriceSeries(bumped, "bumped");
  const auto after =
      run_receding_horizon(feed, tpl, ComfortZone{}, LoadSpec{}, ThermalParams{}, 12);

  for (std::size_t h = 0; h < 7; ++h) {
    CHECK(after.applied_powers_kw[h] == before.applied_powers_kw[h]);
  }
}

TEST_CASE("the applied power is each replan's first step") {
  const auto feed = perfect_forecast_feed(5);
  const auto tpl = default_template(40);
  const auto rolling =
      run_receding_horizon(feed, tpl, ComfortZone{}, LoadSpec{}, ThermalParams{}, 16);
  REQUIRE(rolling.replans.size() == 16);
  REQUIRE(rolling.applied_powers_kw.size() == 16);
  for (std::size_t h = 0; h < 16; ++h) {
    CHECK(rolling.applied_powers_kw[h] == rolling.replans[h].powers_kw.front());
    CHECK(rolling.replans[h].powers_kw.size() == 24);
  }
  CHECK(rolling.applied_temps.temps_f.size() == 17);
}

TEST_CASE("rolling keeps the zone even under forecast error") {
  auto feed = perfect_forecast_feed(13);
  std::vector<double> rt = feed.real_time.values();
  std::mt19937 rng(5);
  for (double& p : rt) {
    p *= 0.6 + 0.8 * (static_cast<double>(rng()) * 0x1p-32);
  }
  feed.real_time = PriceSeries(rt, "noisy-rt");
  const auto tpl = default_template(48, 72.0, 98.0);
  const auto rolling =
      run_receding_horizon(feed, tpl, ComfortZone{}, LoadSpec{}, ThermalParams{}, 24);
  for (std::size_t h = 1; h < rolling.applied_temps.temps_f.size(); ++h) {
    CHECK(rolling.applied_temps.temps_f[h] >= 70.0 - 1e-6);
    CHECK(rolling.applied_temps.temps_f[h] <= 75.0 + 1e-6);
  }
}

TEST_CASE("short feeds are input errors") {
  const auto feed = perfect_forecast_feed(1, 30);  // needs 47 for 24 sim hours
  const auto tpl = default_template(48);
  CHECK_THROWS_AS(
      run_receding_horizon(feed, tpl, ComfortZone{}, LoadSpec{}, ThermalParams{}, 24),
      InputError);
  CHECK_THROWS_AS(
      run_receding_horizon(feed, default_template(10), ComfortZone{}, LoadSpec{},
                           ThermalParams{}, 4),
      InputError);
}

TEST_CASE("an impossible future hour fails the window that first sees it") {
  const auto feed = perfect_forecast_feed(3);
  auto tpl = default_template(48);
  tpl.t_out_series_f[3] = 200.0;  // beyond any cooling capacity
  CHECK_THROWS_WITH_AS(
      run_receding_horizon(feed, tpl, ComfortZone{}, LoadSpec{}, ThermalParams{}, 8),
      doctest::Contains("hour 0"), InfeasibleError);
}

TEST_CASE("comparison refuses feeds shorter than the window") {
  const auto feed = perfect_forecast_feed(2, 12);
  CHECK_THROWS_AS(compare_day_ahead_real_time(feed, default_template(24), ComfortZone{},
                                              LoadSpec{}, ThermalParams{}),
                  InputError);
}

TEST_CASE("identical series price the plan identically") {
  const auto feed = perfect_forecast_feed(21, 24);
  const auto tpl = default_template(24);
  const auto cmp =
      compare_day_ahead_real_time(feed, tpl, ComfortZone{}, LoadSpec{}, ThermalParams{});
  CHECK(cmp.projected_cents == cmp.realized_cents);
  CHECK(cmp.projected_cents > 0.0);
}

TEST_CASE("halving the real-time prices halves the realized cost exactly") {
  auto feed = perfect_forecast_feed(22, 24);
  std::vector<double> halved = feed.day_ahead.values();
  for (double& p : halved) p *= 0.5;
  feed.real_time = PriceSeries(halved, "half");
  const auto tpl = default_template(24);
  const auto cmp =
      compare_day_ahead_real_time(feed, tpl, ComfortZone{}, LoadSpec{}, ThermalParams{});
  CHECK(cmp.realized_cents == 0.5 * cmp.projected_cents);
}

TEST_CASE("a real-time dip under scheduled consumption lands below the projection") {
  auto feed = perfect_forecast_feed(23, 24);
  const auto tpl = default_template(24);
  const auto planned = solve_elastic(one_shot_scenario(tpl, feed.day_ahead),
                                     ComfortZone{}, LoadSpec{}, ThermalParams{});
  // Discount the real-time price exactly where the plan consumes the most.
  std::size_t busiest = 0;
  for (std::size_t h = 1; h < 24; ++h) {
    if (planned.powers_kw[h] > planned.powers_kw[busiest]) busiest = h;
  }
  REQUIRE(planned.powers_kw[busiest] > 0.0);
  std::vector<double> rt = feed.day_ahead.values();
  rt[busiest] *= 0.5;
  feed.real_time = PriceSeries(rt, "dipped");
  const auto cmp =
      compare_day_ahead_real_time(feed, tpl, ComfortZone{}, LoadSpec{}, ThermalParams{});
  CHECK(cmp.realized_cents < cmp.projected_cents);
}

TEST_CASE("rolling projected cost equals realized cost by definition") {
  // Every window prices its first step at the real-time price, so the two
  // accumulations agree whenever the forecast is perfect or not.
  auto feed = perfect_forecast_feed(29);
  std::vector<double> rt = feed.real_time.values();
  for (std::size_t h = 0; h < rt.size(); h += 3) rt[h] *= 1.1;
  feed.real_time = PriceSeries(rt, "scaled");
  const auto tpl = default_template(48);
  const auto rolling =
      run_receding_horizon(feed, tpl, ComfortZone{}, LoadSpec{}, ThermalParams{}, 20);
  CHECK(rolling.projected_cost_cents ==
        doctest::Approx(rolling.realized_cost_cents).epsilon(1e-12));
}
