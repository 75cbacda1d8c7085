#include "tsfacts/moments.hpp"

#include <algorithm>
#include <cmath>
#include <vector>

#include "sample_stats.hpp"
#include "tsfacts/error.hpp"

namespace tsfacts {

MomentSummary moment_summary(std::span<const double> values) {
  const std::size_t n = values.size();
  if (n < 3) throw Error("moment_summary: need at least 3 observations");

  const double mu = detail::mean(values);
  double m2 = 0.0, m3 = 0.0;
  for (double v : values) {
    const double d = v - mu;
    m2 += d * d;
    m3 += d * d * d;
  }
  m2 /= static_cast<double>(n);
  m3 /= static_cast<double>(n);

  if (detail::effectively_zero_variance(m2, values))
    throw Error("moment_summary: zero variance, skewness undefined");

  MomentSummary out;
  out.n = n;
  out.mean = mu;
  out.variance = m2;
  out.skewness = m3 / (m2 * std::sqrt(m2));
  return out;
}

double leverage_correlation(const ReturnSeries& returns, int lag) {
  if (lag < 0) throw Error("leverage_correlation: lag must be >= 0");
  const auto& r = returns.values;
  if (r.size() <= static_cast<std::size_t>(lag) + 2)
    throw Error("leverage_correlation: series length must exceed lag + 2");

  const std::size_t m = r.size() - static_cast<std::size_t>(lag);
  std::vector<double> a(m), b(m);
  for (std::size_t t = 0; t < m; ++t) {
    a[t] = r[t];
    const double s = r[t + static_cast<std::size_t>(lag)];
    b[t] = s * s;
  }

  const double ma = detail::mean(a);
  const double mb = detail::mean(b);
  double va = 0.0, vb = 0.0, cov = 0.0;
  for (std::size_t t = 0; t < m; ++t) {
    const double da = a[t] - ma;
    const double db = b[t] - mb;
    va += da * da;
    vb += db * db;
    cov += da * db;
  }
  va /= static_cast<double>(m);
  vb /= static_cast<double>(m);
  cov /= static_cast<double>(m);

  if (detail::effectively_zero_variance(va, a))
    throw Error("leverage_correlation: returns have zero variance");
  if (detail::effectively_zero_variance(vb, b))
    throw Error("leverage_correlation: squared returns have zero variance");

  return std::clamp(cov / std::sqrt(va * vb), -1.0, 1.0);
}

}  // namespace tsfacts
