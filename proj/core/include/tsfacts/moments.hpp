#pragma once

#include <cstddef>
#include <span>

#include "tsfacts/returns.hpp"

namespace tsfacts {

struct MomentSummary {
  std::size_t n = 0;
  double mean = 0.0;
  double variance = 0.0;  // population (divisor-n) central second moment
  double skewness = 0.0;  // g1 = m3 / m2^(3/2), population moments
};

// Throws for n < 3 or a (numerically) constant sample.
MomentSummary moment_summary(std::span<const double> values);

// Pearson correlation of the pairs (r_t, r_{t+lag}^2); lag 0 is the
// contemporaneous return/volatility coupling. Throws when either side has
// zero sample variance or when fewer than 3 pairs remain.
double leverage_correlation(const ReturnSeries& returns, int lag = 0);

}  // namespace tsfacts
