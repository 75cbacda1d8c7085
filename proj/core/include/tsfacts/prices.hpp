#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "tsfacts/date.hpp"

namespace tsfacts {

struct PriceBar {
  Date date;
  double close = 0.0;
  double open = 0.0;
  double high = 0.0;
  double low = 0.0;
  std::uint64_t volume = 0;
  double change_pct = 0.0;

  friend bool operator==(const PriceBar&, const PriceBar&) = default;
};

struct PriceSeries {
  std::string symbol;
  std::vector<PriceBar> bars;  // strictly increasing dates, size >= 2

  friend bool operator==(const PriceSeries&, const PriceSeries&) = default;
};

struct CsvParseStats {
  std::size_t rows_total = 0;     // data rows seen (header and blanks excluded)
  std::size_t rows_rejected = 0;  // rows dropped for unparseable/invalid fields
};

// Parses the investing.com CSV layout: a header row followed by
// Date, Close, Open, High, Low, Volume, Change% columns. Handles quoted
// fields, thousands separators ("1,234.50"), volume suffixes
// ("1.2K" = 1200, "3.4M" = 3400000, "1B" = 1e9) and both "YYYY-MM-DD" and
// "Mon DD, YYYY" dates. Rows with any unparseable required field are
// dropped (counted in stats); bars are returned sorted by ascending date.
//
// Throws Error on: duplicate dates, any close <= 0, fewer than 2 valid rows.
PriceSeries parse_price_csv(std::string_view text, std::string_view symbol,
                            CsvParseStats* stats = nullptr);

// Canonical form that parse_price_csv round-trips exactly: ISO dates and
// shortest-round-trip numeric formatting.
std::string serialize_price_csv(const PriceSeries& series);

}  // namespace tsfacts
