#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "tsfacts/prices.hpp"

namespace tsfacts {

enum class Frequency { daily, weekly, monthly, quarterly };

// Trading-day block lengths: 1, 5, 21, 63. Fixed blocks rather than calendar
// periods keep aggregation deterministic and holiday-robust.
int default_block_length(Frequency f);
std::string_view to_string(Frequency f);

struct ReturnSeries {
  std::string symbol;
  Frequency frequency = Frequency::daily;
  std::vector<double> values;  // log returns, all finite, size >= 1
  Date start_date;             // date of the first return in the series
};

// values[i] = ln(close[i+1]) - ln(close[i]); output length = bars - 1.
ReturnSeries log_returns(const PriceSeries& series);

// Sums consecutive non-overlapping blocks of daily returns; a trailing
// partial block is dropped. Throws if the series is too short for one block.
ReturnSeries aggregate(const ReturnSeries& daily, Frequency target);
ReturnSeries aggregate(const ReturnSeries& daily, Frequency target, int block_len);

}  // namespace tsfacts
