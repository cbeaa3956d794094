#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <fstream>
#include <random>
#include <sstream>
#include <string>

#include "acload/errors.hpp"
#include "acload/prices.hpp"

using namespace acload;

namespace {

std::string fixture_path(const char* name) {
  return std::string(ACLOAD_FIXTURE_DIR) + "/" + name;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  REQUIRE(in.good());
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

}  // namespace

TEST_CASE("single cents row parses as-is") {
  const auto s = parse_price_csv("hour,price\n0,5.0\n", PriceUnit::CentsPerKwh);
  REQUIRE(s.size() == 1);
  CHECK(s[0] == 5.0);
}

TEST_CASE("dollars per MWh convert by a factor of ten") {
  const auto s = parse_price_csv("hour,price\n0,50.0\n", PriceUnit::DollarsPerMwh);
  REQUIRE(s.size() == 1);
  CHECK(s[0] == 5.0);
}

TEST_CASE("a skipped hour is reported as a gap") {
  CHECK_THROWS_WITH_AS(
      parse_price_csv("hour,price\n0,1\n1,2\n3,4\n", PriceUnit::CentsPerKwh),
      doctest::Contains("gap at hour 2"), InputError);
}

TEST_CASE("a repeated hour is reported as a duplicate") {
  CHECK_THROWS_WITH_AS(
      parse_price_csv("hour,price\n0,1\n0,2\n", PriceUnit::CentsPerKwh),
      doctest::Contains("duplicate hour 0"), InputError);
}

TEST_CASE("parse errors carry line numbers") {
  CHECK_THROWS_WITH_AS(
      parse_price_csv("hour,price\n0,1\nx,2\n", PriceUnit::CentsPerKwh),
      doctest::Contains("line 3"), InputError);
  CHECK_THROWS_WITH_AS(
      parse_price_csv("hour,price\n0,abc\n", PriceUnit::CentsPerKwh),
      doctest::Contains("line 2"), InputError);
  CHECK_THROWS_WITH_AS(parse_price_csv("time,price\n", PriceUnit::CentsPerKwh),
                       doctest::Contains("line 1"), InputError);
}

TEST_CASE("negative prices are rejected") {
  CHECK_THROWS_WITH_AS(
      parse_price_csv("hour,price\n0,-3.0\n", PriceUnit::CentsPerKwh),
      doctest::Contains("negative"), InputError);
}

TEST_CASE("CRLF endings and a missing trailing newline both parse") {
  const auto crlf = parse_price_csv("hour,price\r\n0,1.5\r\n1,2.5\r\n", PriceUnit::CentsPerKwh);
  REQUIRE(crlf.size() == 2);
  CHECK(crlf[1] == 2.5);
  const auto bare = parse_price_csv("hour,price\n0,1.5\n1,2.5", PriceUnit::CentsPerKwh);
  REQUIRE(bare.size() == 2);
  CHECK(bare[1] == 2.5);
}

TEST_CASE("interior blank lines are malformed") {
  CHECK_THROWS_AS(parse_price_csv("hour,price\n\n0,1\n", PriceUnit::CentsPerKwh),
                  InputError);
}

TEST_CASE("unit round trip: $/MWh rows equal their cents equivalents") {
  // Build both encodings of the same decimal numbers by shifting the decimal
  // point in text, never through binary floating point.
  std::string mwh = "hour,price\n";
  std::string cents = "hour,price\n";
  std::mt19937 rng(7);
  for (int h = 0; h < 48; ++h) {
    const unsigned whole = rng() % 900 + 10;  // 10..909 $/MWh
    mwh += std::to_string(h) + "," + std::to_string(whole) + "\n";
    cents += std::to_string(h) + "," + std::to_string(whole / 10) + "." +
             std::to_string(whole % 10) + "\n";
  }
  const auto a = parse_price_csv(mwh, PriceUnit::DollarsPerMwh);
  const auto b = parse_price_csv(cents, PriceUnit::CentsPerKwh);
  REQUIRE(a.size() == b.size());
  for (std::size_t h = 0; h < a.size(); ++h) CHECK(a[h] == b[h]);
}

TEST_CASE("flat synthetic series is the base price") {
  const auto s = synthesize_prices(3, 24, 10.0, 0.0, 0.0);
  REQUIRE(s.size() == 24);
  for (std::size_t h = 0; h < s.size(); ++h) CHECK(s[h] == doctest::Approx(10.0));
}

TEST_CASE("same seed reproduces the same series") {
  const auto a = synthesize_prices(42, 48, 12.0, 4.0, 2.0);
  const auto b = synthesize_prices(42, 48, 12.0, 4.0, 2.0);
  REQUIRE(a.size() == b.size());
  for (std::size_t h = 0; h < a.size(); ++h) CHECK(a[h] == b[h]);
}

TEST_CASE("synthetic prices peak near hour 17 and stay non-negative") {
  const auto s = synthesize_prices(9, 24, 6.0, 5.0, 1.0);
  std::size_t argmax = 0;
  for (std::size_t h = 0; h < s.size(); ++h) {
    CHECK(s[h] >= 0.0);
    if (s[h] > s[argmax]) argmax = h;
  }
  CHECK(argmax >= 15);
  CHECK(argmax <= 19);
}

TEST_CASE("synthetic parameter violations are input errors") {
  CHECK_THROWS_AS(synthesize_prices(1, 24, 5.0, 4.0, 2.0), InputError);  // 5 < 4+2
  CHECK_THROWS_AS(synthesize_prices(1, 24, 5.0, -1.0, 0.0), InputError);
  CHECK_THROWS_AS(synthesize_prices(1, 0, 5.0, 1.0, 1.0), InputError);
}

TEST_CASE("frozen synthetic fixture matches the generator byte for byte") {
  const auto series = synthesize_prices(1, 24, 10.0, 5.0, 1.0);
  CHECK(write_price_csv(series) == read_file(fixture_path("day_ahead_synth_s1.csv")));
}

TEST_CASE("full-range window is the identity") {
  const auto s = synthesize_prices(4, 24, 10.0, 3.0, 1.0);
  const auto w = validate_window(s, 0, s.size());
  REQUIRE(w.size() == s.size());
  for (std::size_t h = 0; h < s.size(); ++h) CHECK(w[h] == s[h]);
}

TEST_CASE("zero-length window is an input error") {
  const auto s = synthesize_prices(4, 8, 10.0, 3.0, 1.0);
  CHECK_THROWS_AS(validate_window(s, 2, 0), InputError);
}

TEST_CASE("mid-series window re-indexes from zero") {
  const auto s = synthesize_prices(11, 48, 10.0, 3.0, 1.0);
  const auto w = validate_window(s, 12, 24);
  REQUIRE(w.size() == 24);
  for (std::size_t h = 0; h < 24; ++h) CHECK(w[h] == s[12 + h]);
}

TEST_CASE("window past the end names the missing range") {
  const auto s = synthesize_prices(4, 24, 10.0, 3.0, 1.0);
  CHECK_THROWS_WITH_AS(validate_window(s, 12, 24), doctest::Contains("12..35"),
                       InputError);
}

TEST_CASE("series construction rejects bad values") {
  CHECK_THROWS_AS(PriceSeries({1.0, -2.0}, "x"), InputError);
  CHECK_THROWS_AS(PriceSeries({std::nan("")}, "x"), InputError);
}

TEST_CASE("from_points enforces contiguity") {
  CHECK_THROWS_AS(PriceSeries::from_points({{1, 5.0}}, "x"), InputError);
  const auto ok = PriceSeries::from_points({{0, 5.0}, {1, 6.0}}, "x");
  CHECK(ok.size() == 2);
}
