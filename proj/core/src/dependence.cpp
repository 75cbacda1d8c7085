#include "tsfacts/dependence.hpp"

#include <algorithm>
#include <cmath>

#include "sample_stats.hpp"
#include "tsfacts/dist.hpp"
#include "tsfacts/error.hpp"

namespace tsfacts {

std::string_view to_string(AcfKind k) {
  return k == AcfKind::acf ? "acf" : "pacf";
}

std::string_view to_string(InputTransform t) {
  switch (t) {
    case InputTransform::raw: return "raw";
    case InputTransform::squared: return "squared";
    case InputTransform::absolute: return "absolute";
  }
  throw Error("unknown input transform");
}

std::string_view to_string(TestName n) {
  switch (n) {
    case TestName::ljung_box: return "ljung_box";
    case TestName::box_pierce: return "box_pierce";
    case TestName::single_lag: return "single_lag";
    case TestName::ks_normal: return "ks_normal";
    case TestName::shapiro_wilk: return "shapiro_wilk";
  }
  throw Error("unknown test name");
}

double AcfSeries::at(int lag) const {
  if (lag < 1 || lag > max_lag()) throw Error("AcfSeries: lag out of range");
  return values[static_cast<std::size_t>(lag) - 1];
}

std::vector<SignificanceDecision> decide(double p_value) {
  return {{0.01, p_value < 0.01}, {0.05, p_value < 0.05}};
}

AcfSeries acf(std::span<const double> values, int max_lag, InputTransform label) {
  const std::size_t n = values.size();
  if (max_lag < 1) throw Error("acf: max_lag must be >= 1");
  if (n <= static_cast<std::size_t>(max_lag))
    throw Error("acf: need more observations than lags (n=" + std::to_string(n) +
                ", max_lag=" + std::to_string(max_lag) + ")");

  const double mu = detail::mean(values);
  double denom = 0.0;
  for (double v : values) {
    const double d = v - mu;
    denom += d * d;
  }
  if (detail::effectively_zero_variance(denom / static_cast<double>(n), values))
    throw Error("acf: zero sample variance");

  AcfSeries out;
  out.kind = AcfKind::acf;
  out.input_transform = label;
  out.n = n;
  out.band = normal_quantile(0.975) / std::sqrt(static_cast<double>(n));
  out.values.resize(static_cast<std::size_t>(max_lag));
  for (int k = 1; k <= max_lag; ++k) {
    double num = 0.0;
    for (std::size_t t = 0; t + static_cast<std::size_t>(k) < n; ++t)
      num += (values[t] - mu) * (values[t + static_cast<std::size_t>(k)] - mu);
    out.values[static_cast<std::size_t>(k) - 1] = num / denom;
  }
  return out;
}

AcfSeries pacf(std::span<const double> values, int max_lag, InputTransform label) {
  AcfSeries rho = acf(values, max_lag, label);

  AcfSeries out;
  out.kind = AcfKind::pacf;
  out.input_transform = label;
  out.n = rho.n;
  out.band = rho.band;
  out.values.resize(static_cast<std::size_t>(max_lag));

  // Durbin-Levinson. phi[j] holds phi_{k,j} for the current order k.
  std::vector<double> phi(static_cast<std::size_t>(max_lag) + 1, 0.0);
  std::vector<double> prev(static_cast<std::size_t>(max_lag) + 1, 0.0);
  double err = 1.0;  // prediction error variance relative to gamma(0)
  for (int k = 1; k <= max_lag; ++k) {
    double num = rho.at(k);
    for (int j = 1; j < k; ++j) num -= prev[static_cast<std::size_t>(j)] * rho.at(k - j);
    const double a = num / err;
    if (!std::isfinite(a) || std::fabs(a) >= 1.0)
      throw Error("pacf: Durbin-Levinson recursion singular at lag " + std::to_string(k) +
                  " (|phi| reached 1)");
    phi[static_cast<std::size_t>(k)] = a;
    for (int j = 1; j < k; ++j)
      phi[static_cast<std::size_t>(j)] =
          prev[static_cast<std::size_t>(j)] - a * prev[static_cast<std::size_t>(k - j)];
    err *= (1.0 - a * a);
    out.values[static_cast<std::size_t>(k) - 1] = a;
    prev = phi;
  }
  return out;
}

HypothesisTestResult portmanteau(std::span<const double> values, int m,
                                 PortmanteauVariant variant) {
  const AcfSeries rho = acf(values, m);  // validates n > m >= 1
  const double n = static_cast<double>(values.size());

  double q = 0.0;
  if (variant == PortmanteauVariant::ljung_box) {
    for (int k = 1; k <= m; ++k) {
      const double r = rho.at(k);
      q += r * r / (n - static_cast<double>(k));
    }
    q *= n * (n + 2.0);
  } else {
    for (int k = 1; k <= m; ++k) {
      const double r = rho.at(k);
      q += r * r;
    }
    q *= n;
  }

  HypothesisTestResult out;
  out.name = variant == PortmanteauVariant::ljung_box ? TestName::ljung_box
                                                      : TestName::box_pierce;
  out.statistic = q;
  out.null_params = {static_cast<double>(m)};
  out.p_value = chi_squared_sf(q, static_cast<double>(m));
  out.n = values.size();
  out.reject_at = decide(out.p_value);
  return out;
}

HypothesisTestResult single_lag_test(double rho_hat, std::size_t n) {
  if (!(std::fabs(rho_hat) < 1.0))
    throw Error("single_lag_test: |rho| must be < 1");
  if (n < 30) throw Error("single_lag_test: need n >= 30");

  const double x = std::sqrt(static_cast<double>(n)) * rho_hat / (1.0 - rho_hat * rho_hat);

  HypothesisTestResult out;
  out.name = TestName::single_lag;
  out.statistic = x;
  out.p_value = std::min(1.0, 2.0 * normal_sf(std::fabs(x)));
  out.n = n;
  out.reject_at = decide(out.p_value);
  return out;
}

PowerLawFit fit_power_law_decay(const AcfSeries& acf_series, int lag_min, int lag_max) {
  if (lag_min < 1 || lag_min >= lag_max)
    throw Error("fit_power_law_decay: need 1 <= lag_min < lag_max");
  if (lag_max > acf_series.max_lag())
    throw Error("fit_power_law_decay: ACF covers lags 1.." +
                std::to_string(acf_series.max_lag()) + ", requested up to " +
                std::to_string(lag_max));

  PowerLawFit fit;
  std::vector<double> lx, ly;
  for (int l = lag_min; l <= lag_max; ++l) {
    const double v = acf_series.at(l);
    if (v > 0.0) {
      lx.push_back(std::log(static_cast<double>(l)));
      ly.push_back(std::log(v));
      fit.lags_used.push_back(l);
    } else {
      fit.lags_omitted.push_back(l);
    }
  }
  if (fit.lags_used.size() < 3)
    throw Error("fit_power_law_decay: fewer than 3 positive ACF values in range");

  const std::size_t m = lx.size();
  const double mx = detail::mean(lx);
  const double my = detail::mean(ly);
  double sxx = 0.0, sxy = 0.0, syy = 0.0;
  for (std::size_t i = 0; i < m; ++i) {
    const double dx = lx[i] - mx;
    const double dy = ly[i] - my;
    sxx += dx * dx;
    sxy += dx * dy;
    syy += dy * dy;
  }
  fit.exponent = sxy / sxx;
  fit.intercept_log = my - fit.exponent * mx;

  double ss_res = 0.0;
  for (std::size_t i = 0; i < m; ++i) {
    const double resid = ly[i] - (fit.intercept_log + fit.exponent * lx[i]);
    ss_res += resid * resid;
  }
  fit.r_squared = syy > 0.0 ? std::clamp(1.0 - ss_res / syy, 0.0, 1.0) : 0.0;

  if (fit.exponent < 0.0) {
    fit.tail_index = -1.0 / fit.exponent;
    fit.tail_index_defined = true;
  } else {
    fit.tail_index = std::numeric_limits<double>::quiet_NaN();
    fit.tail_index_defined = false;
  }
  return fit;
}

}  // namespace tsfacts
