#include "acload/prices.hpp"

#include <charconv>
#include <cmath>
#include <fmt/format.h>
#include <numbers>
#include <random>

#include "acload/errors.hpp"

namespace acload {

namespace {

void check_price_value(double cents, const std::string& where) {
  if (!std::isfinite(cents)) {
    throw InputError(fmt::format("non-finite price {}", where));
  }
  if (cents < 0.0) {
    throw InputError(fmt::format("negative price {}", where));
  }
}

}  // namespace

PriceSeries::PriceSeries(std::vector<double> cents_per_kwh, std::string label)
    : values_(std::move(cents_per_kwh)), label_(std::move(label)) {
  for (std::size_t h = 0; h < values_.size(); ++h) {
    check_price_value(values_[h], fmt::format("at hour {} of series '{}'", h, label_));
  }
}

PriceSeries PriceSeries::from_points(const std::vector<PricePoint>& points,
                                     std::string label) {
  std::vector<double> values;
  values.reserve(points.size());
  for (std::size_t expected = 0; expected < points.size(); ++expected) {
    const auto& pt = points[expected];
    if (pt.hour_index > expected) {
      throw InputError(fmt::format("gap at hour {}", expected));
    }
    if (pt.hour_index < expected) {
      throw InputError(fmt::format("duplicate hour {}", pt.hour_index));
    }
    values.push_back(pt.price_cents_kwh);
  }
  return PriceSeries(std::move(values), std::move(label));
}

PriceSeries parse_price_csv(std::string_view text, PriceUnit unit, std::string label) {
  std::size_t line_no = 0;
  std::size_t pos = 0;
  std::vector<PricePoint> points;
  std::size_t expected_hour = 0;
  bool saw_header = false;

  while (pos <= text.size()) {
    if (pos == text.size() && line_no > 0) break;
    std::size_t eol = text.find('\n', pos);
    std::string_view line = (eol == std::string_view::npos)
                                ? text.substr(pos)
                                : text.substr(pos, eol - pos);
    pos = (eol == std::string_view::npos) ? text.size() : eol + 1;
    ++line_no;
    if (line.ends_with('\r')) line.remove_suffix(1);

    if (!saw_header) {
      if (line != "hour,price") {
        throw InputError(fmt::format(
            "line {}: expected header 'hour,price', got '{}'", line_no, line));
      }
      saw_header = true;
      continue;
    }
    if (line.empty()) {
      if (pos >= text.size()) break;  // trailing newline
      throw InputError(fmt::format("line {}: empty line", line_no));
    }

    const std::size_t comma = line.find(',');
    if (comma == std::string_view::npos) {
      throw InputError(fmt::format("line {}: expected 'hour,price' row", line_no));
    }
    const std::string_view hour_field = line.substr(0, comma);
    const std::string_view price_field = line.substr(comma + 1);

    std::size_t hour = 0;
    auto [hp, hec] = std::from_chars(hour_field.data(), hour_field.data() + hour_field.size(), hour);
    if (hec != std::errc{} || hp != hour_field.data() + hour_field.size()) {
      throw InputError(fmt::format("line {}: non-numeric hour '{}'", line_no, hour_field));
    }
    double price = 0.0;
    auto [pp, pec] = std::from_chars(price_field.data(), price_field.data() + price_field.size(), price);
    if (pec != std::errc{} || pp != price_field.data() + price_field.size()) {
      throw InputError(fmt::format("line {}: non-numeric price '{}'", line_no, price_field));
    }

    if (hour > expected_hour) {
      throw InputError(fmt::format("line {}: gap at hour {}", line_no, expected_hour));
    }
    if (hour < expected_hour) {
      throw InputError(fmt::format("line {}: duplicate hour {}", line_no, hour));
    }
    const double cents = unit == PriceUnit::DollarsPerMwh ? price / 10.0 : price;
    if (!std::isfinite(cents)) {
      throw InputError(fmt::format("line {}: non-finite price", line_no));
    }
    if (cents < 0.0) {
      throw InputError(fmt::format("line {}: negative price {}", line_no, price));
    }
    points.push_back(PricePoint{hour, cents});
    ++expected_hour;
  }
  if (!saw_header) {
    throw InputError("line 1: expected header 'hour,price', got empty input");
  }
  return PriceSeries::from_points(points, std::move(label));
}

std::string write_price_csv(const PriceSeries& series) {
  std::string out = "hour,price\n";
  for (std::size_t h = 0; h < series.size(); ++h) {
    out += fmt::format("{},{:.6f}\n", h, series[h]);
  }
  return out;
}

PriceSeries synthesize_prices(std::uint32_t seed, std::size_t hours,
                              double base_cents_kwh, double amplitude_cents_kwh,
                              double noise_cents_kwh) {
  if (hours == 0) {
    throw InputError("synthetic series needs at least one hour");
  }
  if (!(amplitude_cents_kwh >= 0.0) || !(noise_cents_kwh >= 0.0) ||
      !(base_cents_kwh >= amplitude_cents_kwh + noise_cents_kwh)) {
    throw InputError(fmt::format(
        "need base >= amplitude + noise >= 0 to keep prices non-negative "
        "(base {}, amplitude {}, noise {})",
        base_cents_kwh, amplitude_cents_kwh, noise_cents_kwh));
  }
  std::mt19937 rng(seed);
  std::vector<double> values;
  values.reserve(hours);
  for (std::size_t h = 0; h < hours; ++h) {
    // Map the raw draw to [-1, 1) ourselves so output is identical across
    // standard libraries.
    const double u = static_cast<double>(rng()) * 0x1p-32;
    const double diurnal = amplitude_cents_kwh *
                           std::cos(2.0 * std::numbers::pi *
                                    (static_cast<double>(h) - 17.0) / 24.0);
    values.push_back(base_cents_kwh + diurnal + noise_cents_kwh * (2.0 * u - 1.0));
  }
  return PriceSeries(std::move(values), fmt::format("synthetic(seed={})", seed));
}

PriceSeries validate_window(const PriceSeries& series, std::size_t start_hour,
                            std::size_t length) {
  if (length == 0) {
    throw InputError("requested window has zero length");
  }
  if (start_hour + length > series.size()) {
    throw InputError(fmt::format(
        "series '{}' covers hours 0..{} but the window needs hours {}..{}",
        series.label(), series.empty() ? 0 : series.size() - 1, start_hour,
        start_hour + length - 1));
  }
  std::vector<double> values(series.values().begin() + static_cast<std::ptrdiff_t>(start_hour),
                             series.values().begin() + static_cast<std::ptrdiff_t>(start_hour + length));
  return PriceSeries(std::move(values), series.label());
}

}  // namespace acload
