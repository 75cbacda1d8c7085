#include "tsfacts/returns.hpp"

#include <cmath>

#include "tsfacts/error.hpp"

namespace tsfacts {

int default_block_length(Frequency f) {
  switch (f) {
    case Frequency::daily: return 1;
    case Frequency::weekly: return 5;
    case Frequency::monthly: return 21;
    case Frequency::quarterly: return 63;
  }
  throw Error("unknown frequency");
}

std::string_view to_string(Frequency f) {
  switch (f) {
    case Frequency::daily: return "daily";
    case Frequency::weekly: return "weekly";
    case Frequency::monthly: return "monthly";
    case Frequency::quarterly: return "quarterly";
  }
  throw Error("unknown frequency");
}

ReturnSeries log_returns(const PriceSeries& series) {
  if (series.bars.size() < 2) throw Error("log_returns: need at least 2 bars");
  ReturnSeries out;
  out.symbol = series.symbol;
  out.frequency = Frequency::daily;
  out.start_date = series.bars[1].date;
  out.values.reserve(series.bars.size() - 1);
  for (std::size_t i = 1; i < series.bars.size(); ++i) {
    const double prev = series.bars[i - 1].close;
    const double cur = series.bars[i].close;
    if (!(prev > 0.0) || !(cur > 0.0)) throw Error("log_returns: non-positive close");
    out.values.push_back(std::log(cur / prev));
  }
  return out;
}

ReturnSeries aggregate(const ReturnSeries& daily, Frequency target) {
  return aggregate(daily, target, default_block_length(target));
}

ReturnSeries aggregate(const ReturnSeries& daily, Frequency target, int block_len) {
  if (daily.frequency != Frequency::daily)
    throw Error("aggregate: input must be a daily series");
  if (block_len <= 1) throw Error("aggregate: block length must exceed 1");
  const std::size_t n_blocks = daily.values.size() / static_cast<std::size_t>(block_len);
  if (n_blocks == 0)
    throw Error("aggregate: series of length " + std::to_string(daily.values.size()) +
                " too short for block length " + std::to_string(block_len));
  ReturnSeries out;
  out.symbol = daily.symbol;
  out.frequency = target;
  out.start_date = daily.start_date;
  out.values.reserve(n_blocks);
  for (std::size_t b = 0; b < n_blocks; ++b) {
    double sum = 0.0;
    for (int j = 0; j < block_len; ++j) sum += daily.values[b * block_len + j];
    out.values.push_back(sum);
  }
  return out;
}

}  // namespace tsfacts
