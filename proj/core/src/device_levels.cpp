#include "acload/device_levels.hpp"

#include <cmath>
#include <fmt/format.h>

#include "acload/errors.hpp"

namespace acload {

namespace {
constexpr int kLevels = 20;
}

PowerLevel quantize(double power_kw, double p_max_kw) {
  if (!(p_max_kw > 0.0)) {
    throw InputError(fmt::format("capacity must be positive, got {}", p_max_kw));
  }
  // Solver output may overshoot its bounds by rounding noise; absorb that
  // much and no more.
  const double slack = 1e-9 * std::max(1.0, p_max_kw);
  if (!std::isfinite(power_kw) || power_kw < -slack || power_kw > p_max_kw + slack) {
    throw InputError(fmt::format("power {} kW outside [0, {}] kW", power_kw, p_max_kw));
  }
  const double clamped = std::min(std::max(power_kw, 0.0), p_max_kw);
  return PowerLevel{static_cast<int>(std::floor(clamped / p_max_kw * kLevels + 0.5))};
}

double dequantize(PowerLevel level, double p_max_kw) {
  if (!(p_max_kw > 0.0)) {
    throw InputError(fmt::format("capacity must be positive, got {}", p_max_kw));
  }
  if (level.value < 0 || level.value > kLevels) {
    throw InputError(fmt::format("level {} outside 0..{}", level.value, kLevels));
  }
  return static_cast<double>(level.value) * p_max_kw / kLevels;
}

}  // namespace acload
