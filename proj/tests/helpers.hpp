#pragma once

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <utility>
#include <vector>

#include "tsfacts/returns.hpp"

namespace testutil {

inline tsfacts::ReturnSeries make_returns(std::vector<double> values) {
  tsfacts::ReturnSeries r;
  r.symbol = "TEST";
  r.frequency = tsfacts::Frequency::daily;
  r.values = std::move(values);
  r.start_date = tsfacts::Date{2010, 1, 4};
  return r;
}

// Kolmogorov-Smirnov distance of a sample from U(0, 1).
inline double ks_uniform_distance(std::vector<double> p) {
  std::sort(p.begin(), p.end());
  const double n = static_cast<double>(p.size());
  double d = 0.0;
  for (std::size_t i = 0; i < p.size(); ++i) {
    d = std::max(d, (static_cast<double>(i) + 1.0) / n - p[i]);
    d = std::max(d, p[i] - static_cast<double>(i) / n);
  }
  return d;
}

inline double median(std::vector<double> v) {
  std::sort(v.begin(), v.end());
  const std::size_t n = v.size();
  return n % 2 == 1 ? v[n / 2] : 0.5 * (v[n / 2 - 1] + v[n / 2]);
}

}  // namespace testutil
