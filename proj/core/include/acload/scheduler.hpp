#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "acload/lp.hpp"
#include "acload/prices.hpp"
#include "acload/thermal.hpp"

namespace acload {

/// User comfort band; the optimizer keeps every controlled-step temperature
/// inside it. The measured initial state is exempt.
struct ComfortZone {
  double t_min_f = 70.0;
  double t_max_f = 75.0;

  void validate() const;
};

/// AC consumption limits per hour.
struct LoadSpec {
  double p_min_kw = 0.0;
  double p_max_kw = 20.0;

  void validate() const;
};

/// One look-ahead optimization window.
struct HorizonScenario {
  std::size_t horizon = 24;
  double t_initial_f = 75.0;
  std::vector<double> t_out_series_f;  // length = horizon
  PriceSeries prices;                  // length = horizon, cents/kWh

  void validate() const;
};

/// An optimized (or set-point-tracking) window result. step_costs are
/// price * power * 1h in cents; temps always equals the trajectory simulated
/// from the powers.
struct Schedule {
  std::vector<double> powers_kw;
  TemperatureTrajectory temps;
  std::vector<double> step_costs_cents;
  double total_cost_cents = 0.0;
};

/// Sum of prices[k] * powers[k] * 1h, in cents.
double cost_of(std::span<const double> powers_kw, std::span<const double> prices_cents_kwh);

/// Lays the price-responsive window out as a dense LP. Variables are
/// P(0..K-1) followed by T(1..K); each step contributes the equality row
///
///   eps*T(k) + (1-eps)*gamma*P(k) - T(k+1) = -(1-eps)*t_out(k)
///
/// with the measured T(0) folded into the first row's rhs. Power variables
/// carry the load bounds, temperature variables the comfort zone.
LinearProgram build_elastic_lp(const HorizonScenario& scenario, const ComfortZone& zone,
                               const LoadSpec& load, const ThermalParams& thermal);

/// Minimum-cost schedule subject to the comfort zone. Throws InfeasibleError
/// when no power profile keeps the zone habitable.
Schedule solve_elastic(const HorizonScenario& scenario, const ComfortZone& zone,
                       const LoadSpec& load, const ThermalParams& thermal);

/// Set-point tracking: holds t_set regardless of price. Step 0 drives the
/// measured state onto the set point by inverting the dynamics; every later
/// step applies the steady-state power. Costed at the same prices so the two
/// modes are comparable. Throws InfeasibleError naming the first step whose
/// required power leaves the load bounds.
Schedule solve_inelastic(const HorizonScenario& scenario, double t_set_f,
                         const LoadSpec& load, const ThermalParams& thermal);

}  // namespace acload
