#pragma once

// Seeded input makers shared by the unit tests and the acceptance suite.

#include <cstdint>
#include <random>
#include <vector>

#include "acload/lp.hpp"
#include "acload/prices.hpp"
#include "acload/rolling.hpp"
#include "acload/scheduler.hpp"

namespace acload::testing {

inline double uniform(std::mt19937& rng, double lo, double hi) {
  return lo + (hi - lo) * (static_cast<double>(rng()) * 0x1p-32);
}

// Scenario with t_initial = 72 and mild hourly outdoor variation, built so the
// inelastic mode at t_set = 72 stays inside the default load limits.
inline HorizonScenario dominance_scenario(std::uint32_t seed, std::size_t horizon = 24,
                                          bool constant_prices = false) {
  std::mt19937 rng(seed);
  HorizonScenario s;
  s.horizon = horizon;
  s.t_initial_f = 72.0;
  const double t_out_base = uniform(rng, 85.0, 105.0);
  s.t_out_series_f.reserve(horizon);
  for (std::size_t k = 0; k < horizon; ++k) {
    s.t_out_series_f.push_back(t_out_base + uniform(rng, -3.0, 3.0));
  }
  if (constant_prices) {
    s.prices = PriceSeries(std::vector<double>(horizon, uniform(rng, 3.0, 15.0)),
                           "constant");
  } else {
    s.prices = synthesize_prices(rng(), horizon, 10.0, 4.0, 1.0);
  }
  return s;
}

// Small horizon for exhaustive grid comparison.
inline HorizonScenario grid_scenario(std::uint32_t seed, std::size_t horizon = 3) {
  std::mt19937 rng(seed);
  HorizonScenario s;
  s.horizon = horizon;
  s.t_initial_f = 72.0;
  const double t_out = uniform(rng, 85.0, 105.0);
  s.t_out_series_f.assign(horizon, t_out);
  std::vector<double> prices;
  prices.reserve(horizon);
  for (std::size_t k = 0; k < horizon; ++k) prices.push_back(uniform(rng, 2.0, 20.0));
  s.prices = PriceSeries(std::move(prices), "grid");
  return s;
}

// Perfect-forecast feed whose hour-over-hour price ratio stays well inside
// 1/epsilon, so a window never precools for hours beyond its own span.
inline PriceFeed perfect_forecast_feed(std::uint32_t seed, std::size_t hours = 48) {
  PriceSeries series = synthesize_prices(seed, hours, 10.0, 2.5, 0.25);
  return PriceFeed{series, series};
}

// Random LP over box-bounded variables with a handful of extra rows. The box
// keeps the feasible region bounded so vertex enumeration is exhaustive.
inline LinearProgram random_boxed_lp(std::uint32_t seed, std::size_t max_vars = 6,
                                     std::size_t max_rows = 8) {
  std::mt19937 rng(seed);
  const std::size_t n = 1 + rng() % max_vars;
  const std::size_t m = rng() % (max_rows + 1);

  auto grid = [&](double lo, double hi) {
    // Coarse 0.25 grid keeps the instances far from accidental degeneracy.
    return std::round(uniform(rng, lo, hi) * 4.0) / 4.0;
  };

  LinearProgram lp;
  lp.objective.resize(n);
  lp.bounds.resize(n);
  for (std::size_t j = 0; j < n; ++j) {
    lp.objective[j] = grid(-5.0, 5.0);
    const double width = std::max(0.25, grid(0.25, 8.0));
    const double lo = grid(-4.0, 4.0);
    lp.bounds[j] = VariableBounds{lo, lo + width};
  }
  for (std::size_t r = 0; r < m; ++r) {
    ConstraintRow row;
    row.coeffs.resize(n);
    bool nonzero = false;
    for (std::size_t j = 0; j < n; ++j) {
      row.coeffs[j] = grid(-2.0, 2.0);
      nonzero = nonzero || row.coeffs[j] != 0.0;
    }
    if (!nonzero) row.coeffs[rng() % n] = 1.0;
    // Equality rows drown everything in infeasibility, so keep them rare.
    const std::uint32_t kind = rng() % 5;
    row.relation = kind < 2 ? Relation::LessEq
                   : kind < 4 ? Relation::GreaterEq
                              : Relation::Equal;
    row.rhs = grid(-6.0, 6.0);
    lp.rows.push_back(std::move(row));
  }
  return lp;
}

}  // namespace acload::testing
