#pragma once

#include <cstddef>
#include <span>
#include <string_view>
#include <vector>

namespace tsfacts {

enum class AcfKind { acf, pacf };
enum class InputTransform { raw, squared, absolute };

std::string_view to_string(AcfKind k);
std::string_view to_string(InputTransform t);

struct AcfSeries {
  AcfKind kind = AcfKind::acf;
  InputTransform input_transform = InputTransform::raw;
  std::vector<double> values;  // indexed by lag 1..m, each in [-1, 1]
  std::size_t n = 0;           // sample size the estimate came from
  double band = 0.0;           // +- z_{0.975}/sqrt(n) half-width

  int max_lag() const { return static_cast<int>(values.size()); }
  double at(int lag) const;  // 1-based; throws on out-of-range lag
};

enum class TestName { ljung_box, box_pierce, single_lag, ks_normal, shapiro_wilk };
std::string_view to_string(TestName n);

struct SignificanceDecision {
  double level = 0.0;
  bool reject = false;
  friend bool operator==(const SignificanceDecision&, const SignificanceDecision&) = default;
};

struct HypothesisTestResult {
  TestName name = TestName::ljung_box;
  double statistic = 0.0;
  std::vector<double> null_params;  // e.g. chi-square degrees of freedom
  double p_value = 1.0;
  std::size_t n = 0;
  std::vector<SignificanceDecision> reject_at;  // at 1% and 5%
};

// Decisions at the battery's two fixed levels.
std::vector<SignificanceDecision> decide(double p_value);

struct PowerLawFit {
  double exponent = 0.0;       // OLS slope on (log lag, log acf)
  double intercept_log = 0.0;  // OLS intercept (log of the scale constant)
  double tail_index = 0.0;     // -1/exponent, meaningful only when defined
  bool tail_index_defined = false;  // false when the slope is non-negative
  double r_squared = 0.0;
  std::vector<int> lags_used;     // strictly increasing
  std::vector<int> lags_omitted;  // lags dropped for non-positive ACF values
};

// Method-of-moments autocorrelation, divisor-n convention with global mean:
// rho(k) = sum_{t=1}^{n-k} (x_t - xbar)(x_{t+k} - xbar) / sum (x_t - xbar)^2.
// The divisor-n form keeps every value inside [-1, 1].
AcfSeries acf(std::span<const double> values, int max_lag,
              InputTransform label = InputTransform::raw);

// Partial autocorrelations from the ACF via the Durbin-Levinson recursion;
// the lag-1 value equals the lag-1 autocorrelation exactly. Throws when the
// recursion hits |phi| >= 1 (perfectly predictable input).
AcfSeries pacf(std::span<const double> values, int max_lag,
               InputTransform label = InputTransform::raw);

enum class PortmanteauVariant { ljung_box, box_pierce };

// Ljung-Box: Q = n(n+2) * sum_{k=1}^m rho_k^2/(n-k);
// Box-Pierce: Q = n * sum rho_k^2. Upper-tail p from chi-square(m).
HypothesisTestResult portmanteau(std::span<const double> values, int m,
                                 PortmanteauVariant variant);

// Single-lag statistic X = sqrt(n) * rho / (1 - rho^2), asymptotically
// standard normal; two-sided p-value.
HypothesisTestResult single_lag_test(double rho_hat, std::size_t n);

// OLS of log(acf) on log(lag) over [lag_min, lag_max], skipping non-positive
// ACF values; slope is the decay exponent, -1/slope the implied tail index.
PowerLawFit fit_power_law_decay(const AcfSeries& acf_series, int lag_min, int lag_max);

}  // namespace tsfacts
