#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "tsfacts/dependence.hpp"
#include "tsfacts/returns.hpp"
#include "tsfacts/tails.hpp"

namespace tsfacts {

// Conditional-variance recursion
//   sigma2_t = omega + sum_i arch[i] * eps_{t-1-i}^2 + sum_j garch[j] * sigma2_{t-1-j}
// with omega > 0, arch/garch >= 0 (positivity) and sum(arch) + sum(garch) < 1
// (stationarity). q = arch.size() >= 1, p = garch.size() >= 0.
struct GarchSpec {
  double omega = 0.0;
  std::vector<double> arch;   // q coefficients on lagged squared innovations
  std::vector<double> garch;  // p coefficients on lagged conditional variances

  int q() const { return static_cast<int>(arch.size()); }
  int p() const { return static_cast<int>(garch.size()); }
  double persistence() const;
  double unconditional_variance() const;  // omega / (1 - persistence)
  void validate() const;                  // throws Error on any violation
};

struct GarchFit {
  GarchSpec spec;
  double mu = 0.0;                // fitted constant conditional mean
  std::vector<double> cond_var;   // sigma2_t, all > 0, one per observation
  std::vector<double> residuals;  // standardized: (x_t - mu) / sigma_t
  double log_likelihood = 0.0;    // -(1/2) * sum(ln sigma2_t + eps_t^2/sigma2_t)
  bool converged = false;
  std::size_t iterations = 0;     // simplex iterations of the winning restart
};

// Simulates the recursion with iid standard-normal innovations, starting at
// the unconditional variance; the first burn_in draws are discarded.
// Deterministic for a fixed seed.
ReturnSeries garch_simulate(const GarchSpec& spec, std::size_t n, std::uint64_t seed,
                            std::size_t burn_in = 500);

// Gaussian quasi-log-likelihood of a centered series under spec, dropping
// the constant term: -(1/2) * sum(ln sigma2_t + x_t^2 / sigma2_t).
// Pre-sample squared innovations and variances are set to the sample
// variance of the centered series.
double garch_log_likelihood(std::span<const double> centered, const GarchSpec& spec);

// Demeans by the sample mean, then maximizes the quasi-log-likelihood via
// Nelder-Mead over an unconstrained reparameterization (log omega, logit of
// total persistence, softmax shares), with deterministic jittered restarts.
// Needs length >= 250 and p + q <= 4. A fit that exhausts the iteration cap
// comes back with converged = false rather than throwing.
GarchFit garch_fit(const ReturnSeries& returns, int p = 1, int q = 1,
                   std::uint64_t restart_seed = 0x5EEDFACEULL);

struct ResidualBattery {
  HypothesisTestResult squared_portmanteau;  // Ljung-Box, m = 10
  TailIndexEstimate tail;                    // adaptive Hill, both_abs
};

// Re-runs the dependence and tail analyses on standardized residuals of a
// converged fit; throws on a non-converged fit.
ResidualBattery residual_battery(const GarchFit& fit);

}  // namespace tsfacts
