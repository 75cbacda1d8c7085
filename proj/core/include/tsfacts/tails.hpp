#pragma once

#include <cstddef>
#include <span>
#include <string_view>

namespace tsfacts {

// Which tail the estimator looks at: upper uses the values as-is, lower
// negates them, both_abs takes magnitudes. Non-positive values after the
// transform are dropped.
enum class TailSide { upper, lower, both_abs };
std::string_view to_string(TailSide s);

struct TailIndexEstimate {
  double xi = 0.0;     // tail parameter, > 0
  double alpha = 0.0;  // tail index = 1/xi
  std::size_t k = 0;   // order statistics above the threshold
  std::size_t n_tail_sample = 0;  // positive values after the side transform
  double std_error = 0.0;         // xi / sqrt(k)
  TailSide side = TailSide::both_abs;
};

// Hill estimator at a fixed threshold order k: with descending order
// statistics X_(1) >= ... >= X_(n'),
//   xi = (1/k) * sum_{i=1..k} ln(X_(i) / X_(k+1)).
TailIndexEstimate hill_estimate(std::span<const double> values, std::size_t k, TailSide side);

// Hill-plot stability selection: evaluates xi(k) for
// k in [ceil(0.01 n'), floor(0.25 n')] and picks the k minimizing the
// standard deviation of xi over a centered moving window of
// 2*ceil(0.02 n') + 1 consecutive k values (ties go to the smallest k).
// Requires n' >= 100.
TailIndexEstimate adaptive_hill(std::span<const double> values, TailSide side);

enum class TailClass { infinite_variance, stylized_band, near_gaussian_tail };
std::string_view to_string(TailClass c);

// alpha <= 2: infinite variance; 2 < alpha < 5: the heavy-but-finite band
// typical of equity returns; alpha >= 5: effectively thin-tailed.
TailClass classify_tail(const TailIndexEstimate& estimate);

}  // namespace tsfacts
