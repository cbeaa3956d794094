// acload: schedules an air-conditioning load against hourly market prices and
// simulates hourly re-planning as clearing prices arrive.

#include <CLI11.hpp>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fmt/format.h>
#include <fstream>
#include <json.hpp>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "acload/device_levels.hpp"
#include "acload/errors.hpp"
#include "acload/prices.hpp"
#include "acload/rolling.hpp"
#include "acload/scheduler.hpp"
#include "acload/thermal.hpp"

namespace fs = std::filesystem;
using nlohmann::ordered_json;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitUsage = 1;
constexpr int kExitInfeasible = 2;

struct CommonConfig {
  std::size_t horizon = 24;
  double t_initial = 75.0;
  std::string t_out = "95";  // number or CSV path
  double t_min = 70.0;
  double t_max = 75.0;
  double p_max = 20.0;
  double epsilon = 0.8;
  double gamma = -2.0;
  std::string prices_path;
  std::string price_unit = "cents_per_kwh";
  std::string out_dir = ".";
  bool enable = false;
};

std::string read_file(const fs::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in.good()) {
    throw acload::InputError(fmt::format("cannot open '{}'", path.string()));
  }
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

// All outputs go through a temp file and a rename so readers never observe a
// half-written report.
void atomic_write(const fs::path& path, const std::string& content) {
  const fs::path tmp = path.string() + ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out.good()) {
      throw acload::InputError(fmt::format("cannot write '{}'", tmp.string()));
    }
    out << content;
  }
  fs::rename(tmp, path);
}

acload::PriceUnit parse_unit(const std::string& unit) {
  if (unit == "cents_per_kwh") return acload::PriceUnit::CentsPerKwh;
  if (unit == "dollars_per_mwh") return acload::PriceUnit::DollarsPerMwh;
  throw acload::InputError(
      fmt::format("unknown price unit '{}' (use cents_per_kwh or dollars_per_mwh)", unit));
}

acload::PriceSeries load_prices(const std::string& path, const std::string& unit,
                                const std::string& label) {
  return acload::parse_price_csv(read_file(path), parse_unit(unit), label);
}

// `hour,temp_f` companion format for per-hour outdoor temperatures.
std::vector<double> parse_temp_csv(const std::string& text, const std::string& path) {
  std::istringstream in(text);
  std::string line;
  std::size_t line_no = 0;
  std::vector<double> temps;
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line_no == 1) {
      if (line != "hour,temp_f") {
        throw acload::InputError(fmt::format(
            "{}: line 1: expected header 'hour,temp_f', got '{}'", path, line));
      }
      continue;
    }
    if (line.empty()) continue;
    const auto comma = line.find(',');
    if (comma == std::string::npos) {
      throw acload::InputError(
          fmt::format("{}: line {}: expected 'hour,temp_f' row", path, line_no));
    }
    std::size_t hour = 0;
    const char* hbeg = line.data();
    auto [hp, hec] = std::from_chars(hbeg, hbeg + comma, hour);
    if (hec != std::errc{} || hp != hbeg + comma || hour != temps.size()) {
      throw acload::InputError(
          fmt::format("{}: line {}: hours must count up from 0", path, line_no));
    }
    double temp = 0.0;
    const char* tbeg = line.data() + comma + 1;
    const char* tend = line.data() + line.size();
    auto [tp, tec] = std::from_chars(tbeg, tend, temp);
    if (tec != std::errc{} || tp != tend || !std::isfinite(temp)) {
      throw acload::InputError(
          fmt::format("{}: line {}: non-numeric temperature", path, line_no));
    }
    temps.push_back(temp);
  }
  if (temps.empty()) {
    throw acload::InputError(fmt::format("{}: no temperature rows", path));
  }
  return temps;
}

// --t-out accepts either a number (constant series) or a CSV path.
std::vector<double> resolve_t_out(const std::string& value, std::size_t hours_needed) {
  double constant = 0.0;
  auto [p, ec] = std::from_chars(value.data(), value.data() + value.size(), constant);
  if (ec == std::errc{} && p == value.data() + value.size()) {
    return std::vector<double>(hours_needed, constant);
  }
  auto temps = parse_temp_csv(read_file(value), value);
  if (temps.size() < hours_needed) {
    throw acload::InputError(
        fmt::format("'{}' covers {} hours but {} are needed", value, temps.size(),
                    hours_needed));
  }
  temps.resize(hours_needed);
  return temps;
}

double to_dollars(double cents) { return std::round(cents / 100.0 * 10.0) / 10.0; }

bool default_operation_notice(const CommonConfig& cfg) {
  if (cfg.enable) return false;
  std::puts(
      "optimized control not enabled: system stays in default operation "
      "(pass --enable to activate)");
  return true;
}

ordered_json schedule_rows(const std::vector<double>& powers,
                           const std::vector<double>& temps,
                           const std::vector<double>& prices, double p_max) {
  ordered_json rows = ordered_json::array();
  for (std::size_t h = 0; h < powers.size(); ++h) {
    rows.push_back({{"hour", h},
                    {"price_cents_kwh", prices[h]},
                    {"power_kw", powers[h]},
                    {"level", acload::quantize(powers[h], p_max).value},
                    {"temp_f", temps[h + 1]}});
  }
  return rows;
}

std::string trajectory_csv(const std::vector<double>& powers,
                           const std::vector<double>& temps,
                           const std::vector<double>& prices, double p_max,
                           std::size_t first_hour = 0) {
  std::string out = "hour,price_cents_kwh,power_kw,level,temp_f\n";
  for (std::size_t h = 0; h < powers.size(); ++h) {
    out += fmt::format("{},{:.6f},{:.6f},{},{:.6f}\n", first_hour + h, prices[h],
                       powers[h], acload::quantize(powers[h], p_max).value,
                       temps[h + 1]);
  }
  return out;
}

void write_outputs(const CommonConfig& cfg, const ordered_json& report,
                   const std::string& trajectory) {
  fs::create_directories(cfg.out_dir);
  atomic_write(fs::path(cfg.out_dir) / "report.json", report.dump(2) + "\n");
  atomic_write(fs::path(cfg.out_dir) / "trajectory.csv", trajectory);
}

acload::HorizonScenario make_scenario(const CommonConfig& cfg,
                                      const acload::PriceSeries& prices) {
  acload::HorizonScenario scenario;
  scenario.horizon = cfg.horizon;
  scenario.t_initial_f = cfg.t_initial;
  scenario.t_out_series_f = resolve_t_out(cfg.t_out, cfg.horizon);
  scenario.prices = acload::validate_window(prices, 0, cfg.horizon);
  return scenario;
}

int cmd_optimize(const CommonConfig& cfg, const std::string& mode,
                 std::optional<double> t_set) {
  if (default_operation_notice(cfg)) return kExitOk;

  const acload::ThermalParams thermal(cfg.epsilon, cfg.gamma);
  const acload::ComfortZone zone{cfg.t_min, cfg.t_max};
  const acload::LoadSpec load{0.0, cfg.p_max};
  const auto scenario = make_scenario(cfg, load_prices(cfg.prices_path, cfg.price_unit,
                                                       "prices"));

  acload::Schedule schedule;
  if (mode == "elastic") {
    schedule = acload::solve_elastic(scenario, zone, load, thermal);
  } else if (mode == "inelastic") {
    if (!t_set) {
      throw acload::InputError("--t-set is required in inelastic mode");
    }
    schedule = acload::solve_inelastic(scenario, *t_set, load, thermal);
  } else {
    throw acload::InputError(
        fmt::format("unknown mode '{}' (use elastic or inelastic)", mode));
  }

  ordered_json report{
      {"schema_version", 1},
      {"mode", mode},
      {"horizon", cfg.horizon},
      {"total_cost_cents", schedule.total_cost_cents},
      {"total_cost_dollars", to_dollars(schedule.total_cost_cents)},
      {"rows", schedule_rows(schedule.powers_kw, schedule.temps.temps_f,
                             scenario.prices.values(), cfg.p_max)},
  };
  if (t_set) report["t_set_f"] = *t_set;
  write_outputs(cfg, report,
                trajectory_csv(schedule.powers_kw, schedule.temps.temps_f,
                               scenario.prices.values(), cfg.p_max));
  fmt::print("{} schedule over {} hours: ${:.1f}\n", mode, cfg.horizon,
             schedule.total_cost_cents / 100.0);
  return kExitOk;
}

int cmd_roll(const CommonConfig& cfg, const std::string& rt_path, std::size_t sim_hours) {
  if (default_operation_notice(cfg)) return kExitOk;

  const acload::ThermalParams thermal(cfg.epsilon, cfg.gamma);
  const acload::ComfortZone zone{cfg.t_min, cfg.t_max};
  const acload::LoadSpec load{0.0, cfg.p_max};

  acload::PriceFeed feed{load_prices(cfg.prices_path, cfg.price_unit, "day-ahead"),
                         load_prices(rt_path, cfg.price_unit, "real-time")};
  acload::ScenarioTemplate tpl;
  tpl.horizon = cfg.horizon;
  tpl.t_initial_f = cfg.t_initial;
  tpl.t_out_series_f = resolve_t_out(cfg.t_out, sim_hours + cfg.horizon - 1);

  const auto result =
      acload::run_receding_horizon(feed, tpl, zone, load, thermal, sim_hours);

  fs::create_directories(cfg.out_dir);
  ordered_json replan_files = ordered_json::array();
  for (std::size_t h = 0; h < result.replans.size(); ++h) {
    const auto& replan = result.replans[h];
    // The prices window h saw: the cleared hour followed by forecasts.
    std::vector<double> window_prices(cfg.horizon);
    window_prices[0] = feed.real_time[h];
    for (std::size_t j = 1; j < cfg.horizon; ++j) {
      window_prices[j] = feed.day_ahead[h + j];
    }
    const std::string name = fmt::format("replan_{:03}.csv", h);
    atomic_write(fs::path(cfg.out_dir) / name,
                 trajectory_csv(replan.powers_kw, replan.temps.temps_f, window_prices,
                                cfg.p_max, h));
    replan_files.push_back(name);
  }

  std::vector<double> rt_used(result.applied_powers_kw.size());
  for (std::size_t h = 0; h < rt_used.size(); ++h) rt_used[h] = feed.real_time[h];

  const ordered_json report{
      {"schema_version", 1},
      {"mode", "roll"},
      {"horizon", cfg.horizon},
      {"sim_hours", sim_hours},
      {"projected_cost_cents", result.projected_cost_cents},
      {"realized_cost_cents", result.realized_cost_cents},
      {"projected_cost_dollars", to_dollars(result.projected_cost_cents)},
      {"realized_cost_dollars", to_dollars(result.realized_cost_cents)},
      {"replan_files", replan_files},
      {"rows", schedule_rows(result.applied_powers_kw, result.applied_temps.temps_f,
                             rt_used, cfg.p_max)},
  };
  atomic_write(fs::path(cfg.out_dir) / "report.json", report.dump(2) + "\n");
  atomic_write(fs::path(cfg.out_dir) / "trajectory.csv",
               trajectory_csv(result.applied_powers_kw, result.applied_temps.temps_f,
                              rt_used, cfg.p_max));
  fmt::print("rolled {} hours: realized ${:.1f}\n", sim_hours,
             result.realized_cost_cents / 100.0);
  return kExitOk;
}

int cmd_compare(const CommonConfig& cfg, const std::string& rt_path) {
  if (default_operation_notice(cfg)) return kExitOk;

  const acload::ThermalParams thermal(cfg.epsilon, cfg.gamma);
  const acload::ComfortZone zone{cfg.t_min, cfg.t_max};
  const acload::LoadSpec load{0.0, cfg.p_max};

  acload::PriceFeed feed{load_prices(cfg.prices_path, cfg.price_unit, "day-ahead"),
                         load_prices(rt_path, cfg.price_unit, "real-time")};
  acload::ScenarioTemplate tpl;
  tpl.horizon = cfg.horizon;
  tpl.t_initial_f = cfg.t_initial;
  tpl.t_out_series_f = resolve_t_out(cfg.t_out, cfg.horizon);

  const auto cmp = acload::compare_day_ahead_real_time(feed, tpl, zone, load, thermal);

  // Re-derive the planned schedule for the per-hour table.
  const auto scenario = make_scenario(cfg, feed.day_ahead);
  const auto planned = acload::solve_elastic(scenario, zone, load, thermal);

  const ordered_json report{
      {"schema_version", 1},
      {"mode", "compare"},
      {"horizon", cfg.horizon},
      {"projected_cost_cents", cmp.projected_cents},
      {"realized_cost_cents", cmp.realized_cents},
      {"projected_cost_dollars", to_dollars(cmp.projected_cents)},
      {"realized_cost_dollars", to_dollars(cmp.realized_cents)},
      {"difference_cents", cmp.projected_cents - cmp.realized_cents},
      {"difference_dollars", to_dollars(cmp.projected_cents - cmp.realized_cents)},
      {"rows", schedule_rows(planned.powers_kw, planned.temps.temps_f,
                             scenario.prices.values(), cfg.p_max)},
  };
  write_outputs(cfg, report,
                trajectory_csv(planned.powers_kw, planned.temps.temps_f,
                               scenario.prices.values(), cfg.p_max));
  fmt::print("projected ${:.1f}, realized ${:.1f}\n", cmp.projected_cents / 100.0,
             cmp.realized_cents / 100.0);
  return kExitOk;
}

int cmd_synth(std::uint32_t seed, std::size_t hours, double base, double amplitude,
              double noise, const std::string& out_path) {
  const auto series = acload::synthesize_prices(seed, hours, base, amplitude, noise);
  if (const fs::path parent = fs::path(out_path).parent_path(); !parent.empty()) {
    fs::create_directories(parent);
  }
  atomic_write(out_path, acload::write_price_csv(series));
  fmt::print("wrote {} hours to {}\n", hours, out_path);
  return kExitOk;
}

void add_common_options(CLI::App* cmd, CommonConfig& cfg, bool with_horizon = true) {
  if (with_horizon) {
    cmd->add_option("--horizon", cfg.horizon, "look-ahead window length in hours")
        ->default_val(24)
        ->check(CLI::PositiveNumber);
  }
  cmd->add_option("--t-initial", cfg.t_initial, "measured zone temperature, degF")
      ->default_val(75.0);
  cmd->add_option("--t-out", cfg.t_out,
                  "outdoor temperature: a number or a CSV path (hour,temp_f)")
      ->default_val("95");
  cmd->add_option("--t-min", cfg.t_min, "comfort zone lower limit, degF")
      ->default_val(70.0);
  cmd->add_option("--t-max", cfg.t_max, "comfort zone upper limit, degF")
      ->default_val(75.0);
  cmd->add_option("--p-max", cfg.p_max, "cooling capacity, kW")->default_val(20.0);
  cmd->add_option("--epsilon", cfg.epsilon, "factor of inertia, [0,1)")
      ->default_val(0.8);
  cmd->add_option("--gamma", cfg.gamma, "thermal conversion, degF per kW (negative)")
      ->default_val(-2.0);
  cmd->add_option("--prices", cfg.prices_path, "price CSV (day-ahead forecast)")
      ->required();
  cmd->add_option("--price-unit", cfg.price_unit, "cents_per_kwh or dollars_per_mwh")
      ->default_val("cents_per_kwh");
  cmd->add_option("--out", cfg.out_dir, "output directory")->default_val(".");
  cmd->add_flag("--enable", cfg.enable,
                "activate optimized control (otherwise the system stays in "
                "default operation)");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"price-responsive AC load scheduler"};
  app.require_subcommand(1);

  CommonConfig opt_cfg;
  std::string mode;
  double t_set_value = 0.0;
  auto* optimize = app.add_subcommand("optimize", "solve one look-ahead window");
  add_common_options(optimize, opt_cfg);
  optimize->add_option("--mode", mode, "elastic or inelastic")->required();
  auto* t_set_opt =
      optimize->add_option("--t-set", t_set_value, "set point for inelastic mode, degF");

  CommonConfig roll_cfg;
  std::string roll_rt;
  std::size_t sim_hours = 24;
  auto* roll = app.add_subcommand("roll", "hourly receding-horizon simulation");
  add_common_options(roll, roll_cfg);
  roll->add_option("--rt-prices", roll_rt, "real-time price CSV")->required();
  roll->add_option("--sim-hours", sim_hours, "hours to simulate")
      ->default_val(24)
      ->check(CLI::PositiveNumber);

  CommonConfig cmp_cfg;
  std::string cmp_rt;
  auto* compare =
      app.add_subcommand("compare", "price a day-ahead plan at real-time prices");
  add_common_options(compare, cmp_cfg);
  compare->add_option("--rt-prices", cmp_rt, "real-time price CSV")->required();

  std::uint32_t seed = 1;
  std::size_t hours = 24;
  double base = 10.0, amplitude = 5.0, noise = 1.0;
  std::string synth_out = "prices.csv";
  auto* synth = app.add_subcommand("synth", "generate a synthetic price CSV");
  synth->add_option("--seed", seed, "generator seed")->default_val(1);
  synth->add_option("--hours", hours, "series length")->default_val(24);
  synth->add_option("--base", base, "base price, cents/kWh")->default_val(10.0);
  synth->add_option("--amplitude", amplitude, "diurnal swing, cents/kWh")
      ->default_val(5.0);
  synth->add_option("--noise", noise, "uniform noise half-width, cents/kWh")
      ->default_val(1.0);
  synth->add_option("--out", synth_out, "output CSV path")->default_val("prices.csv");

  try {
    app.parse(argc, argv);
    if (optimize->parsed()) {
      return cmd_optimize(opt_cfg, mode,
                          t_set_opt->count() > 0 ? std::optional<double>(t_set_value)
                                                 : std::nullopt);
    }
    if (roll->parsed()) return cmd_roll(roll_cfg, roll_rt, sim_hours);
    if (compare->parsed()) return cmd_compare(cmp_cfg, cmp_rt);
    if (synth->parsed()) return cmd_synth(seed, hours, base, amplitude, noise, synth_out);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitUsage;
  } catch (const acload::InfeasibleError& e) {
    fmt::print(stderr, "infeasible: {}\n", e.what());
    return kExitInfeasible;
  } catch (const acload::InputError& e) {
    fmt::print(stderr, "error: {}\n", e.what());
    return kExitUsage;
  } catch (const std::exception& e) {
    fmt::print(stderr, "error: {}\n", e.what());
    return kExitUsage;
  }
  return kExitOk;
}
