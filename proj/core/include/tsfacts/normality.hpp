#pragma once

#include <cstddef>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "tsfacts/dependence.hpp"
#include "tsfacts/returns.hpp"

namespace tsfacts {

// One-sample Kolmogorov-Smirnov against the standard normal after
// standardizing by the sample mean and (ddof-1) standard deviation.
// D = sup |F_n - Phi|; p-value from the asymptotic Kolmogorov distribution.
// No small-sample (Lilliefors) correction is applied, so p-values on truly
// Gaussian data are conservative (biased toward 1); callers that need exact
// size should not treat these as uniform.
HypothesisTestResult ks_normal_test(std::span<const double> values);

// Shapiro-Wilk W with Royston's polynomial p-value approximation, valid for
// 3 <= n <= 5000. statistic = W.
HypothesisTestResult shapiro_wilk(std::span<const double> values);

struct FrequencyNormality {
  Frequency frequency = Frequency::daily;
  std::size_t n = 0;  // observations actually tested
  HypothesisTestResult ks;
  HypothesisTestResult sw;
  std::vector<std::string> flags;  // e.g. truncation notices
};

struct GaussianityScan {
  std::vector<FrequencyNormality> results;  // daily -> quarterly order
  std::vector<std::pair<Frequency, std::string>> omitted;  // frequency, reason
};

// Runs both tests on the daily series and its weekly/monthly/quarterly
// aggregates. Frequencies whose aggregate has fewer than 8 points are
// omitted with a reason rather than failing the scan; a daily series too
// short even for the weekly scale (n < 40) is an error. Samples longer than
// 5000 are tested on their most recent 5000 points (flagged).
GaussianityScan gaussianity_scan(const ReturnSeries& daily);
GaussianityScan gaussianity_scan(const ReturnSeries& daily,
                                 int block_weekly, int block_monthly, int block_quarterly);

}  // namespace tsfacts
