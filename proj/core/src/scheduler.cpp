#include "acload/scheduler.hpp"

#include <cmath>
#include <fmt/format.h>
#include <stdexcept>

#include "acload/errors.hpp"

namespace acload {

namespace {

constexpr double kMatchTol = 1e-6;  // LP temps vs re-simulated temps

}  // namespace

void ComfortZone::validate() const {
  if (!std::isfinite(t_min_f) || !std::isfinite(t_max_f) || !(t_min_f < t_max_f)) {
    throw InputError(fmt::format("comfort zone needs t_min < t_max, got [{}, {}]",
                                 t_min_f, t_max_f));
  }
}

void LoadSpec::validate() const {
  if (!std::isfinite(p_min_kw) || !std::isfinite(p_max_kw) || p_min_kw < 0.0 ||
      p_min_kw > p_max_kw) {
    throw InputError(fmt::format("load bounds need 0 <= p_min <= p_max, got [{}, {}]",
                                 p_min_kw, p_max_kw));
  }
}

void HorizonScenario::validate() const {
  if (horizon < 1) {
    throw InputError("scenario horizon must be at least 1");
  }
  if (!std::isfinite(t_initial_f)) {
    throw InputError("initial temperature must be finite");
  }
  if (t_out_series_f.size() != horizon) {
    throw InputError(fmt::format(
        "outdoor temperature series length {} does not match horizon {}",
        t_out_series_f.size(), horizon));
  }
  for (double t : t_out_series_f) {
    if (!std::isfinite(t)) throw InputError("outdoor temperature series has non-finite entry");
  }
  if (prices.size() != horizon) {
    throw InputError(fmt::format("price series length {} does not match horizon {}",
                                 prices.size(), horizon));
  }
}

double cost_of(std::span<const double> powers_kw, std::span<const double> prices_cents_kwh) {
  if (powers_kw.size() != prices_cents_kwh.size()) {
    throw InputError(fmt::format("power series length {} does not match price series length {}",
                                 powers_kw.size(), prices_cents_kwh.size()));
  }
  double total = 0.0;
  for (std::size_t k = 0; k < powers_kw.size(); ++k) {
    total += prices_cents_kwh[k] * powers_kw[k];
  }
  return total;
}

LinearProgram build_elastic_lp(const HorizonScenario& scenario, const ComfortZone& zone,
                               const LoadSpec& load, const ThermalParams& thermal) {
  scenario.validate();
  zone.validate();
  load.validate();

  const std::size_t k_steps = scenario.horizon;
  const double eps = thermal.epsilon();
  const double gamma = thermal.gamma();

  LinearProgram lp;
  lp.objective.assign(2 * k_steps, 0.0);
  lp.bounds.assign(2 * k_steps, VariableBounds{});
  for (std::size_t k = 0; k < k_steps; ++k) {
    lp.objective[k] = scenario.prices[k];
    lp.bounds[k] = VariableBounds{load.p_min_kw, load.p_max_kw};
    lp.bounds[k_steps + k] = VariableBounds{zone.t_min_f, zone.t_max_f};
  }

  lp.rows.reserve(k_steps);
  for (std::size_t k = 0; k < k_steps; ++k) {
    ConstraintRow row;
    row.coeffs.assign(2 * k_steps, 0.0);
    row.relation = Relation::Equal;
    row.coeffs[k] = (1.0 - eps) * gamma;    // P(k)
    row.coeffs[k_steps + k] = -1.0;         // T(k+1)
    row.rhs = -(1.0 - eps) * scenario.t_out_series_f[k];
    if (k == 0) {
      row.rhs -= eps * scenario.t_initial_f;
    } else {
      row.coeffs[k_steps + k - 1] = eps;    // T(k)
    }
    lp.rows.push_back(std::move(row));
  }
  return lp;
}

Schedule solve_elastic(const HorizonScenario& scenario, const ComfortZone& zone,
                       const LoadSpec& load, const ThermalParams& thermal) {
  const LinearProgram lp = build_elastic_lp(scenario, zone, load, thermal);
  const LpSolution sol = solve(lp);
  if (sol.status == LpStatus::Infeasible) {
    throw InfeasibleError(fmt::format(
        "no schedule satisfies comfort zone [{}, {}] over {} hours from {} degF "
        "with load limit {} kW",
        zone.t_min_f, zone.t_max_f, scenario.horizon, scenario.t_initial_f,
        load.p_max_kw));
  }
  if (sol.status == LpStatus::Unbounded) {
    // Power and temperature variables are boxed, so this cannot happen.
    throw std::logic_error("elastic LP reported unbounded despite boxed variables");
  }

  const std::size_t k_steps = scenario.horizon;
  Schedule schedule;
  schedule.powers_kw.assign(sol.x.begin(),
                            sol.x.begin() + static_cast<std::ptrdiff_t>(k_steps));
  schedule.temps = simulate_trajectory(scenario.t_initial_f, schedule.powers_kw,
                                       scenario.t_out_series_f, thermal);

  for (std::size_t k = 0; k < k_steps; ++k) {
    const double lp_temp = sol.x[k_steps + k];
    const double sim_temp = schedule.temps.temps_f[k + 1];
    if (std::abs(lp_temp - sim_temp) > kMatchTol) {
      throw std::logic_error(fmt::format(
          "LP temperature {} diverges from simulated trajectory {} at step {}",
          lp_temp, sim_temp, k));
    }
    if (sim_temp < zone.t_min_f - kMatchTol || sim_temp > zone.t_max_f + kMatchTol) {
      throw std::logic_error(fmt::format(
          "optimized temperature {} leaves comfort zone at step {}", sim_temp, k));
    }
  }

  schedule.step_costs_cents.reserve(k_steps);
  for (std::size_t k = 0; k < k_steps; ++k) {
    schedule.step_costs_cents.push_back(scenario.prices[k] * schedule.powers_kw[k]);
  }
  schedule.total_cost_cents = cost_of(schedule.powers_kw, scenario.prices.values());
  return schedule;
}

Schedule solve_inelastic(const HorizonScenario& scenario, double t_set_f,
                         const LoadSpec& load, const ThermalParams& thermal) {
  scenario.validate();
  load.validate();
  if (!std::isfinite(t_set_f)) {
    throw InputError("set point must be finite");
  }

  const std::size_t k_steps = scenario.horizon;
  std::vector<double> powers(k_steps, 0.0);
  for (std::size_t k = 0; k < k_steps; ++k) {
    double required;
    if (k == 0) {
      // Reach t_set from the measured state in one step:
      // t_set = eps*t0 + (1-eps)*(t_out + gamma*p).
      required = ((t_set_f - thermal.epsilon() * scenario.t_initial_f) /
                      (1.0 - thermal.epsilon()) -
                  scenario.t_out_series_f[0]) /
                 thermal.gamma();
    } else {
      required = steady_state_power(t_set_f, scenario.t_out_series_f[k], thermal);
    }
    if (required < load.p_min_kw - 1e-12 || required > load.p_max_kw + 1e-12) {
      throw InfeasibleError(fmt::format(
          "holding {} degF needs {:.3f} kW at step {} but the load allows [{}, {}] kW",
          t_set_f, required, k, load.p_min_kw, load.p_max_kw));
    }
    powers[k] = std::min(std::max(required, load.p_min_kw), load.p_max_kw);
  }

  Schedule schedule;
  schedule.powers_kw = std::move(powers);
  schedule.temps = simulate_trajectory(scenario.t_initial_f, schedule.powers_kw,
                                       scenario.t_out_series_f, thermal);
  schedule.step_costs_cents.reserve(k_steps);
  for (std::size_t k = 0; k < k_steps; ++k) {
    schedule.step_costs_cents.push_back(scenario.prices[k] * schedule.powers_kw[k]);
  }
  schedule.total_cost_cents = cost_of(schedule.powers_kw, scenario.prices.values());
  return schedule;
}

}  // namespace acload
