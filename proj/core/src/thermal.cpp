#include "acload/thermal.hpp"

#include <cmath>
#include <fmt/format.h>

#include "acload/errors.hpp"

namespace acload {

ThermalParams::ThermalParams() : ThermalParams(0.8, -2.0) {}

ThermalParams::ThermalParams(double epsilon, double gamma_f_per_kw)
    : epsilon_(epsilon), gamma_(gamma_f_per_kw) {
  if (!std::isfinite(epsilon) || epsilon < 0.0 || epsilon >= 1.0) {
    throw InputError(fmt::format("factor of inertia must be in [0, 1), got {}", epsilon));
  }
  if (!std::isfinite(gamma_f_per_kw) || gamma_f_per_kw >= 0.0) {
    throw InputError(fmt::format(
        "thermal conversion gamma must be negative for a cooling load, got {}",
        gamma_f_per_kw));
  }
}

void ContinuousOdeParams::validate() const {
  if (!(k1_per_hour >= 0.0) || !(k2_per_hour >= 0.0)) {
    throw InputError("ODE coupling coefficients k1, k2 must be non-negative");
  }
}

double continuous_rate(double t_f, double t_out_f, const ContinuousOdeParams& ode) {
  return ode.k1_per_hour * (t_out_f - t_f) - ode.k2_per_hour * (t_f - ode.t_d_f);
}

double step_temperature(double t_f, double power_kw, double t_out_f,
                        const ThermalParams& params) {
  return params.epsilon() * t_f +
         (1.0 - params.epsilon()) * (t_out_f + params.gamma() * power_kw);
}

TemperatureTrajectory simulate_trajectory(double t_initial_f,
                                          std::span<const double> powers_kw,
                                          std::span<const double> t_out_series_f,
                                          const ThermalParams& params) {
  if (powers_kw.size() != t_out_series_f.size()) {
    throw InputError(fmt::format(
        "power series length {} does not match outdoor temperature series length {}",
        powers_kw.size(), t_out_series_f.size()));
  }
  if (powers_kw.empty()) {
    throw InputError("trajectory simulation needs at least one step");
  }
  TemperatureTrajectory traj;
  traj.temps_f.reserve(powers_kw.size() + 1);
  traj.temps_f.push_back(t_initial_f);
  for (std::size_t k = 0; k < powers_kw.size(); ++k) {
    traj.temps_f.push_back(
        step_temperature(traj.temps_f.back(), powers_kw[k], t_out_series_f[k], params));
  }
  return traj;
}

double steady_state_power(double t_set_f, double t_out_f, const ThermalParams& params) {
  return (t_set_f - t_out_f) / params.gamma();
}

}  // namespace acload
