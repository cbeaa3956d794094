#pragma once

#include <cstddef>
#include <span>
#include <vector>

namespace acload {

/// Discrete-time zone thermal model:
///   T(k+1) = epsilon*T(k) + (1 - epsilon)*(T_out + gamma*P)
/// epsilon is the fraction of the current zone temperature retained over one
/// hour; gamma is the one-step equilibrium shift in degF per kW consumed,
/// negative for a cooling load.
class ThermalParams {
public:
  ThermalParams();  // Table-defaults: epsilon 0.8, gamma -2 degF/kW
  ThermalParams(double epsilon, double gamma_f_per_kw);

  double epsilon() const { return epsilon_; }
  double gamma() const { return gamma_; }

private:
  double epsilon_;
  double gamma_;
};

/// Continuous-time form of the zone model:
///   dT/dt = k1*(T_out - T) - k2*(T - T_d)
/// Kept as a faithful rendering of the underlying ODE; the discrete
/// parametrization above is what the optimizer uses, and no conversion
/// between the two is provided.
struct ContinuousOdeParams {
  double k1_per_hour = 0.0;
  double k2_per_hour = 0.0;
  double t_d_f = 0.0;

  void validate() const;  // throws InputError if k1 < 0 or k2 < 0
};

/// Zone temperatures over a window; temps_f[0] is the measured initial state,
/// so the length is always one more than the number of power steps.
struct TemperatureTrajectory {
  std::vector<double> temps_f;

  std::size_t steps() const { return temps_f.empty() ? 0 : temps_f.size() - 1; }
};

/// dT/dt at zone temperature t_f given outdoor temperature t_out_f.
double continuous_rate(double t_f, double t_out_f, const ContinuousOdeParams& ode);

/// One step of the discrete dynamics. power_kw must be >= 0.
double step_temperature(double t_f, double power_kw, double t_out_f,
                        const ThermalParams& params);

/// Applies the recursion over a window. powers_kw and t_out_series_f must have
/// equal, nonzero length.
TemperatureTrajectory simulate_trajectory(double t_initial_f,
                                          std::span<const double> powers_kw,
                                          std::span<const double> t_out_series_f,
                                          const ThermalParams& params);

/// Power holding t_set_f as a fixed point: (t_set - t_out)/gamma. Negative
/// when the outdoor temperature is below the set point (a cooling unit cannot
/// heat); callers treat that as infeasible.
double steady_state_power(double t_set_f, double t_out_f, const ThermalParams& params);

}  // namespace acload
