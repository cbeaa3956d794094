#include "acload/rolling.hpp"

#include <fmt/format.h>

#include "acload/errors.hpp"

namespace acload {

namespace {

void check_template(const ScenarioTemplate& tpl, std::size_t sim_hours) {
  if (tpl.horizon < 1) {
    throw InputError("window horizon must be at least 1");
  }
  if (sim_hours < 1) {
    throw InputError("simulation needs at least one hour");
  }
  const std::size_t needed = sim_hours + tpl.horizon - 1;
  if (tpl.t_out_series_f.size() < needed) {
    throw InputError(fmt::format(
        "outdoor temperature series covers {} hours but {} simulated hours with a "
        "{}-step window need {}",
        tpl.t_out_series_f.size(), sim_hours, tpl.horizon, needed));
  }
}

void check_feed(const PriceFeed& feed, std::size_t sim_hours, std::size_t horizon) {
  if (feed.real_time.size() < sim_hours) {
    throw InputError(fmt::format(
        "real-time series covers {} hours, fewer than the {} simulated hours",
        feed.real_time.size(), sim_hours));
  }
  const std::size_t needed = sim_hours + horizon - 1;
  if (feed.day_ahead.size() < needed) {
    throw InputError(fmt::format(
        "day-ahead series covers {} hours but {} simulated hours with a {}-step "
        "window need {}",
        feed.day_ahead.size(), sim_hours, horizon, needed));
  }
}

}  // namespace

RollingResult run_receding_horizon(const PriceFeed& feed,
                                   const ScenarioTemplate& scenario_template,
                                   const ComfortZone& zone, const LoadSpec& load,
                                   const ThermalParams& thermal, std::size_t sim_hours) {
  check_template(scenario_template, sim_hours);
  check_feed(feed, sim_hours, scenario_template.horizon);

  const std::size_t horizon = scenario_template.horizon;
  RollingResult result;
  result.applied_powers_kw.reserve(sim_hours);
  result.replans.reserve(sim_hours);
  result.applied_temps.temps_f.reserve(sim_hours + 1);
  result.applied_temps.temps_f.push_back(scenario_template.t_initial_f);

  double current_temp = scenario_template.t_initial_f;
  for (std::size_t hour = 0; hour < sim_hours; ++hour) {
    // Only the current hour has cleared; the rest of the window keeps the
    // day-ahead forecast.
    std::vector<double> window_prices;
    window_prices.reserve(horizon);
    window_prices.push_back(feed.real_time[hour]);
    for (std::size_t j = 1; j < horizon; ++j) {
      window_prices.push_back(feed.day_ahead[hour + j]);
    }

    HorizonScenario window;
    window.horizon = horizon;
    window.t_initial_f = current_temp;
    window.t_out_series_f.assign(
        scenario_template.t_out_series_f.begin() + static_cast<std::ptrdiff_t>(hour),
        scenario_template.t_out_series_f.begin() + static_cast<std::ptrdiff_t>(hour + horizon));
    window.prices = PriceSeries(std::move(window_prices), "window");

    Schedule replan;
    try {
      replan = solve_elastic(window, zone, load, thermal);
    } catch (const InfeasibleError& e) {
      throw InfeasibleError(fmt::format("hour {}: {}", hour, e.what()));
    }

    const double applied = replan.powers_kw.front();
    result.projected_cost_cents += window.prices[0] * applied;
    current_temp = step_temperature(current_temp, applied,
                                    scenario_template.t_out_series_f[hour], thermal);
    result.applied_powers_kw.push_back(applied);
    result.applied_temps.temps_f.push_back(current_temp);
    result.replans.push_back(std::move(replan));
  }

  std::vector<double> rt(feed.real_time.values().begin(),
                         feed.real_time.values().begin() + static_cast<std::ptrdiff_t>(sim_hours));
  result.realized_cost_cents = cost_of(result.applied_powers_kw, rt);
  return result;
}

CostComparison compare_day_ahead_real_time(const PriceFeed& feed,
                                           const ScenarioTemplate& scenario_template,
                                           const ComfortZone& zone, const LoadSpec& load,
                                           const ThermalParams& thermal) {
  const std::size_t horizon = scenario_template.horizon;
  if (feed.day_ahead.size() < horizon || feed.real_time.size() < horizon) {
    throw InputError(fmt::format(
        "comparison needs {} hours in both series (day-ahead has {}, real-time {})",
        horizon, feed.day_ahead.size(), feed.real_time.size()));
  }
  if (scenario_template.t_out_series_f.size() < horizon) {
    throw InputError(fmt::format(
        "outdoor temperature series covers {} hours, fewer than the {}-step window",
        scenario_template.t_out_series_f.size(), horizon));
  }

  HorizonScenario scenario;
  scenario.horizon = horizon;
  scenario.t_initial_f = scenario_template.t_initial_f;
  scenario.t_out_series_f.assign(scenario_template.t_out_series_f.begin(),
                                 scenario_template.t_out_series_f.begin() + static_cast<std::ptrdiff_t>(horizon));
  scenario.prices = validate_window(feed.day_ahead, 0, horizon);

  const Schedule planned = solve_elastic(scenario, zone, load, thermal);
  std::vector<double> rt(feed.real_time.values().begin(),
                         feed.real_time.values().begin() + static_cast<std::ptrdiff_t>(horizon));
  return CostComparison{planned.total_cost_cents, cost_of(planned.powers_kw, rt)};
}

}  // namespace acload
