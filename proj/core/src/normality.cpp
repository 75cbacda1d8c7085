#include "tsfacts/normality.hpp"

#include <algorithm>
#include <cmath>
#include <vector>

#include "sample_stats.hpp"
#include "tsfacts/dist.hpp"
#include "tsfacts/error.hpp"

namespace tsfacts {

HypothesisTestResult ks_normal_test(std::span<const double> values) {
  const std::size_t n = values.size();
  if (n < 8) throw Error("ks_normal_test: need n >= 8");

  const double mu = detail::mean(values);
  double ss = 0.0;
  for (double v : values) {
    const double d = v - mu;
    ss += d * d;
  }
  if (detail::effectively_zero_variance(ss / static_cast<double>(n), values))
    throw Error("ks_normal_test: zero variance");
  const double sd = std::sqrt(ss / static_cast<double>(n - 1));

  std::vector<double> z(values.begin(), values.end());
  for (double& v : z) v = (v - mu) / sd;
  std::sort(z.begin(), z.end());

  double d_stat = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    const double cdf = normal_cdf(z[i]);
    const double hi = static_cast<double>(i + 1) / static_cast<double>(n) - cdf;
    const double lo = cdf - static_cast<double>(i) / static_cast<double>(n);
    d_stat = std::max({d_stat, hi, lo});
  }

  HypothesisTestResult out;
  out.name = TestName::ks_normal;
  out.statistic = d_stat;
  out.p_value = kolmogorov_sf(std::sqrt(static_cast<double>(n)) * d_stat);
  out.n = n;
  out.reject_at = decide(out.p_value);
  return out;
}

namespace {

double royston_poly(const double* c, int nord, double x) {
  double p = c[nord - 1];
  for (int i = nord - 2; i >= 0; --i) p = p * x + c[i];
  return p;
}

// Royston's AS R94 for a complete (uncensored) sample, in double precision.
// Returns {W, p}.
std::pair<double, double> swilk(std::vector<double>& x) {
  static constexpr double c1[6] = {0.0, 0.221157, -0.147981, -2.071190, 4.434685, -2.706056};
  static constexpr double c2[6] = {0.0, 0.042981, -0.293762, -1.752461, 5.682633, -3.582633};
  static constexpr double c3[4] = {0.5440, -0.39978, 0.025054, -6.714e-4};
  static constexpr double c4[4] = {1.3822, -0.77857, 0.062767, -0.0020322};
  static constexpr double c5[4] = {-1.5861, -0.31082, -0.083751, 0.0038915};
  static constexpr double c6[3] = {-0.4803, -0.082676, 0.0030302};
  static constexpr double g[2] = {-2.273, 0.459};
  static constexpr double pi6 = 1.90985931710274;   // 6/pi
  static constexpr double stqr = 1.04719755119660;  // asin(sqrt(3/4))

  const int n = static_cast<int>(x.size());
  const double an = static_cast<double>(n);
  std::sort(x.begin(), x.end());

  const double range = x.back() - x.front();
  if (!(range > 1e-290)) throw Error("shapiro_wilk: zero range (constant sample)");

  // Coefficients a[0..n2-1] for the lower half, per Royston's normalization.
  const int n2 = n / 2;
  std::vector<double> a(static_cast<std::size_t>(n2));
  if (n == 3) {
    a[0] = std::sqrt(0.5);
  } else {
    const double an25 = an + 0.25;
    double summ2 = 0.0;
    for (int i = 1; i <= n2; ++i) {
      a[static_cast<std::size_t>(i - 1)] = normal_quantile((i - 0.375) / an25);
      summ2 += a[static_cast<std::size_t>(i - 1)] * a[static_cast<std::size_t>(i - 1)];
    }
    summ2 *= 2.0;
    const double ssumm2 = std::sqrt(summ2);
    const double rsn = 1.0 / std::sqrt(an);
    const double a1 = royston_poly(c1, 6, rsn) - a[0] / ssumm2;
    int i1;
    double fac;
    if (n > 5) {
      i1 = 3;
      const double a2 = -a[1] / ssumm2 + royston_poly(c2, 6, rsn);
      fac = std::sqrt((summ2 - 2.0 * a[0] * a[0] - 2.0 * a[1] * a[1]) /
                      (1.0 - 2.0 * a1 * a1 - 2.0 * a2 * a2));
      a[0] = a1;
      a[1] = a2;
    } else {
      i1 = 2;
      fac = std::sqrt((summ2 - 2.0 * a[0] * a[0]) / (1.0 - 2.0 * a1 * a1));
      a[0] = a1;
    }
    for (int i = i1; i <= n2; ++i) a[static_cast<std::size_t>(i - 1)] /= -fac;
  }

  // W as the squared correlation between the order statistics and the signed
  // coefficient vector; range scaling mirrors the reference implementation.
  auto coef = [&](int i) -> double {  // 0-based position in ascending order
    const int j = n - 1 - i;
    if (i < j) return -a[static_cast<std::size_t>(i)];
    if (i > j) return a[static_cast<std::size_t>(j)];
    return 0.0;
  };
  double sa = 0.0, sx = 0.0;
  for (int i = 0; i < n; ++i) {
    sa += coef(i);
    sx += x[static_cast<std::size_t>(i)] / range;
  }
  sa /= an;
  sx /= an;
  double ssa = 0.0, ssx = 0.0, sax = 0.0;
  for (int i = 0; i < n; ++i) {
    const double da = coef(i) - sa;
    const double dx = x[static_cast<std::size_t>(i)] / range - sx;
    ssa += da * da;
    ssx += dx * dx;
    sax += da * dx;
  }
  const double ssassx = std::sqrt(ssa * ssx);
  const double w1 = (ssassx - sax) * (ssassx + sax) / (ssa * ssx);
  const double w = 1.0 - w1;

  // Significance level.
  if (n == 3) {
    const double p = pi6 * (std::asin(std::sqrt(w)) - stqr);
    return {w, std::clamp(p, 0.0, 1.0)};
  }
  const double y = std::log(w1);
  double m, s, yy = y;
  if (n <= 11) {
    const double gamma = royston_poly(g, 2, an);
    if (y >= gamma) return {w, 1e-19};  // saturated far tail
    yy = -std::log(gamma - y);
    m = royston_poly(c3, 4, an);
    s = std::exp(royston_poly(c4, 4, an));
  } else {
    const double ln_n = std::log(an);
    m = royston_poly(c5, 4, ln_n);
    s = std::exp(royston_poly(c6, 3, ln_n));
  }
  return {w, normal_sf((yy - m) / s)};
}

}  // namespace

HypothesisTestResult shapiro_wilk(std::span<const double> values) {
  const std::size_t n = values.size();
  if (n < 3) throw Error("shapiro_wilk: need n >= 3");
  if (n > 5000) throw Error("shapiro_wilk: n > 5000 exceeds the approximation's validity range");

  std::vector<double> x(values.begin(), values.end());
  const double mu = detail::mean(x);
  const double m2 = detail::variance_pop(x, mu);
  if (detail::effectively_zero_variance(m2, x)) throw Error("shapiro_wilk: zero variance");

  auto [w, p] = swilk(x);

  HypothesisTestResult out;
  out.name = TestName::shapiro_wilk;
  out.statistic = w;
  out.p_value = p;
  out.n = n;
  out.reject_at = decide(p);
  return out;
}

GaussianityScan gaussianity_scan(const ReturnSeries& daily) {
  return gaussianity_scan(daily, default_block_length(Frequency::weekly),
                          default_block_length(Frequency::monthly),
                          default_block_length(Frequency::quarterly));
}

GaussianityScan gaussianity_scan(const ReturnSeries& daily, int block_weekly,
                                 int block_monthly, int block_quarterly) {
  if (daily.frequency != Frequency::daily)
    throw Error("gaussianity_scan: input must be a daily series");
  constexpr std::size_t kMinPerFrequency = 8;
  const std::size_t n = daily.values.size();
  if (n < kMinPerFrequency * 5)
    throw Error("gaussianity_scan: daily series too short even for the weekly scale (n=" +
                std::to_string(n) + ", need >= 40)");

  const std::pair<Frequency, int> scales[] = {
      {Frequency::daily, 1},
      {Frequency::weekly, block_weekly},
      {Frequency::monthly, block_monthly},
      {Frequency::quarterly, block_quarterly},
  };

  GaussianityScan scan;
  for (const auto& [freq, block] : scales) {
    std::vector<double> sample;
    if (freq == Frequency::daily) {
      sample = daily.values;
    } else {
      const std::size_t n_blocks = n / static_cast<std::size_t>(block);
      if (n_blocks < kMinPerFrequency) {
        scan.omitted.emplace_back(
            freq, "only " + std::to_string(n_blocks) + " aggregated observations (need >= 8)");
        continue;
      }
      sample = aggregate(daily, freq, block).values;
    }
    if (sample.size() < kMinPerFrequency) {
      scan.omitted.emplace_back(freq, "fewer than 8 observations");
      continue;
    }

    FrequencyNormality entry;
    entry.frequency = freq;
    if (sample.size() > 5000) {
      entry.flags.push_back("tested on the most recent 5000 of " +
                            std::to_string(sample.size()) + " observations");
      sample.erase(sample.begin(), sample.end() - 5000);
    }
    entry.n = sample.size();
    entry.ks = ks_normal_test(sample);
    entry.sw = shapiro_wilk(sample);
    scan.results.push_back(std::move(entry));
  }
  return scan;
}

}  // namespace tsfacts
