#pragma once

// Internal helpers shared by the statistics translation units.

#include <cmath>
#include <cstddef>
#include <limits>
#include <span>

namespace tsfacts::detail {

inline double mean(std::span<const double> x) {
  double s = 0.0;
  for (double v : x) s += v;
  return s / static_cast<double>(x.size());
}

// Population (divisor-n) central second moment.
inline double variance_pop(std::span<const double> x, double mu) {
  double s = 0.0;
  for (double v : x) {
    const double d = v - mu;
    s += d * d;
  }
  return s / static_cast<double>(x.size());
}

// A sample is treated as constant when its central second moment is at
// rounding-noise level relative to its raw second moment: exact-constant
// inputs produce m2 of order (eps*scale)^2 rather than exactly zero.
inline bool effectively_zero_variance(double m2, std::span<const double> x) {
  if (m2 <= 0.0) return true;
  double raw2 = 0.0;
  for (double v : x) raw2 += v * v;
  raw2 /= static_cast<double>(x.size());
  const double eps = std::numeric_limits<double>::epsilon();
  return m2 <= 64.0 * eps * eps * raw2;
}

}  // namespace tsfacts::detail
