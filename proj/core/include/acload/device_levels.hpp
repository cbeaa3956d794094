#pragma once

namespace acload {

/// Discrete output stage: the controller delivers power as one of 21 bar-graph
/// levels (0 = off .. 20 = full capacity).
struct PowerLevel {
  int value = 0;

  friend constexpr bool operator==(PowerLevel, PowerLevel) = default;
  friend constexpr auto operator<=>(PowerLevel, PowerLevel) = default;
};

/// Nearest level for a power in [0, p_max]; exact halves round up.
PowerLevel quantize(double power_kw, double p_max_kw);

/// Power the level drives: value * p_max / 20.
double dequantize(PowerLevel level, double p_max_kw);

}  // namespace acload
