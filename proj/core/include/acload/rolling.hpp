#pragma once

#include <cstddef>
#include <vector>

#include "acload/prices.hpp"
#include "acload/scheduler.hpp"
#include "acload/thermal.hpp"

namespace acload {

/// Day-ahead forecast plus the real-time clearing prices, both indexed from
/// the same hour 0. Alignment is positional; the day-ahead series must cover
/// every sliding window the simulation will open.
struct PriceFeed {
  PriceSeries day_ahead;
  PriceSeries real_time;
};

/// Everything except prices needed to open a window at any simulated hour:
/// t_out_series_f holds the outdoor temperature per absolute hour and must
/// cover sim_hours + horizon - 1 entries.
struct ScenarioTemplate {
  std::size_t horizon = 24;
  double t_initial_f = 75.0;
  std::vector<double> t_out_series_f;
};

struct RollingResult {
  std::vector<double> applied_powers_kw;  // one per simulated hour
  TemperatureTrajectory applied_temps;
  std::vector<Schedule> replans;          // full window plan per hour
  double projected_cost_cents = 0.0;      // priced at the forecasts each window used
  double realized_cost_cents = 0.0;       // applied powers at real-time prices
};

struct CostComparison {
  double projected_cents = 0.0;
  double realized_cents = 0.0;
};

/// Hourly re-planning: window h prices the current hour at the real-time
/// clearing price and hours h+1.. at the day-ahead forecast, re-solves from
/// the propagated zone temperature, and applies only the first step.
RollingResult run_receding_horizon(const PriceFeed& feed,
                                   const ScenarioTemplate& scenario_template,
                                   const ComfortZone& zone, const LoadSpec& load,
                                   const ThermalParams& thermal, std::size_t sim_hours);

/// One-shot study: optimize against the day-ahead forecast, then re-price that
/// same power profile at the real-time series.
CostComparison compare_day_ahead_real_time(const PriceFeed& feed,
                                           const ScenarioTemplate& scenario_template,
                                           const ComfortZone& zone, const LoadSpec& load,
                                           const ThermalParams& thermal);

}  // namespace acload
