#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace acload {

/// One parsed row of the canonical price CSV.
struct PricePoint {
  std::size_t hour_index = 0;
  double price_cents_kwh = 0.0;
};

/// Hourly prices in cents/kWh at contiguous hour indices 0..n-1. Prices are
/// finite and non-negative; both are enforced at construction.
class PriceSeries {
public:
  PriceSeries() = default;
  PriceSeries(std::vector<double> cents_per_kwh, std::string label);

  /// Validates contiguity of the hour indices (no gaps, duplicates, or
  /// out-of-order rows).
  static PriceSeries from_points(const std::vector<PricePoint>& points,
                                 std::string label);

  std::size_t size() const { return values_.size(); }
  bool empty() const { return values_.empty(); }
  double operator[](std::size_t hour) const { return values_[hour]; }
  const std::vector<double>& values() const { return values_; }
  const std::string& label() const { return label_; }

private:
  std::vector<double> values_;
  std::string label_;
};

enum class PriceUnit { CentsPerKwh, DollarsPerMwh };

/// Parses the canonical CSV (header `hour,price`, LF or CRLF, no quoting).
/// Prices are converted into cents/kWh; 1 $/MWh = 0.1 cents/kWh. Throws
/// InputError with a line number on malformed input.
PriceSeries parse_price_csv(std::string_view text, PriceUnit unit,
                            std::string label = "prices");

/// Serializes to the canonical CSV in cents/kWh.
std::string write_price_csv(const PriceSeries& series);

/// Deterministic synthetic feed: a 24-hour sinusoid peaking at hour 17 on top
/// of `base`, plus seeded uniform noise in [-noise, +noise). Requires
/// base >= amplitude + noise >= 0 so prices stay non-negative.
PriceSeries synthesize_prices(std::uint32_t seed, std::size_t hours,
                              double base_cents_kwh, double amplitude_cents_kwh,
                              double noise_cents_kwh);

/// The contiguous slice [start_hour, start_hour + length), re-indexed from 0.
PriceSeries validate_window(const PriceSeries& series, std::size_t start_hour,
                            std::size_t length);

}  // namespace acload
