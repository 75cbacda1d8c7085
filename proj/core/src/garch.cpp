#include "tsfacts/garch.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <numeric>

#include "sample_stats.hpp"
#include "tsfacts/error.hpp"
#include "tsfacts/rng.hpp"

namespace tsfacts {

double GarchSpec::persistence() const {
  double s = 0.0;
  for (double a : arch) s += a;
  for (double g : garch) s += g;
  return s;
}

double GarchSpec::unconditional_variance() const { return omega / (1.0 - persistence()); }

void GarchSpec::validate() const {
  if (!(omega > 0.0)) throw Error("GarchSpec: omega must be > 0");
  if (arch.empty()) throw Error("GarchSpec: need at least one arch coefficient (q >= 1)");
  for (double a : arch)
    if (!(a >= 0.0)) throw Error("GarchSpec: arch coefficients must be >= 0");
  for (double g : garch)
    if (!(g >= 0.0)) throw Error("GarchSpec: garch coefficients must be >= 0");
  if (!(persistence() < 1.0))
    throw Error("GarchSpec: stationarity requires sum(arch) + sum(garch) < 1");
}

ReturnSeries garch_simulate(const GarchSpec& spec, std::size_t n, std::uint64_t seed,
                            std::size_t burn_in) {
  spec.validate();
  if (n < 1) throw Error("garch_simulate: n must be >= 1");

  const std::size_t q = spec.arch.size();
  const std::size_t p = spec.garch.size();
  const double v0 = spec.unconditional_variance();
  const std::size_t total = burn_in + n;

  Rng rng(seed);
  std::vector<double> eps2(total), sig2(total), eps(total);
  for (std::size_t t = 0; t < total; ++t) {
    double s2 = spec.omega;
    for (std::size_t i = 0; i < q; ++i)
      s2 += spec.arch[i] * (t > i ? eps2[t - 1 - i] : v0);
    for (std::size_t j = 0; j < p; ++j)
      s2 += spec.garch[j] * (t > j ? sig2[t - 1 - j] : v0);
    sig2[t] = s2;
    const double e = std::sqrt(s2) * rng.normal();
    eps[t] = e;
    eps2[t] = e * e;
  }

  ReturnSeries out;
  out.symbol = "synthetic-garch";
  out.frequency = Frequency::daily;
  out.start_date = Date{1970, 1, 1};
  out.values.assign(eps.begin() + static_cast<std::ptrdiff_t>(burn_in), eps.end());
  return out;
}

namespace {

// Core filter: returns the quasi-log-likelihood; optionally records the
// conditional variances. Pre-sample terms are pinned at init_var.
double garch_filter(std::span<const double> x, const GarchSpec& spec, double init_var,
                    std::vector<double>* cond_var) {
  const std::size_t n = x.size();
  const std::size_t q = spec.arch.size();
  const std::size_t p = spec.garch.size();
  if (cond_var) cond_var->resize(n);

  // Ring-free histories: small fixed lags, direct indexing.
  std::vector<double> eps2(n), sig2(n);
  double ll = 0.0;
  for (std::size_t t = 0; t < n; ++t) {
    double s2 = spec.omega;
    for (std::size_t i = 0; i < q; ++i)
      s2 += spec.arch[i] * (t > i ? eps2[t - 1 - i] : init_var);
    for (std::size_t j = 0; j < p; ++j)
      s2 += spec.garch[j] * (t > j ? sig2[t - 1 - j] : init_var);
    sig2[t] = s2;
    eps2[t] = x[t] * x[t];
    ll += std::log(s2) + eps2[t] / s2;
    if (cond_var) (*cond_var)[t] = s2;
  }
  return -0.5 * ll;
}

struct NelderMeadResult {
  std::vector<double> x;
  double f = 0.0;
  bool converged = false;
  std::size_t iterations = 0;
};

// Standard Nelder-Mead (reflection 1, expansion 2, contraction 0.5,
// shrink 0.5). Stops when the simplex function-value spread falls below
// f_tol, or after max_iter iterations.
NelderMeadResult nelder_mead(const std::function<double(const std::vector<double>&)>& f,
                             const std::vector<double>& x0, double step, double f_tol,
                             std::size_t max_iter) {
  const std::size_t d = x0.size();
  std::vector<std::vector<double>> pts(d + 1, x0);
  std::vector<double> fv(d + 1);
  for (std::size_t i = 0; i < d; ++i) pts[i + 1][i] += step;
  for (std::size_t i = 0; i <= d; ++i) fv[i] = f(pts[i]);

  std::vector<std::size_t> order(d + 1);
  NelderMeadResult res;
  for (res.iterations = 0; res.iterations < max_iter; ++res.iterations) {
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(),
              [&](std::size_t a, std::size_t b) { return fv[a] < fv[b]; });
    const std::size_t best = order[0], worst = order[d], second = order[d - 1];

    if (fv[worst] - fv[best] < f_tol) {
      res.converged = true;
      break;
    }

    std::vector<double> centroid(d, 0.0);
    for (std::size_t i = 0; i <= d; ++i) {
      if (i == worst) continue;
      for (std::size_t j = 0; j < d; ++j) centroid[j] += pts[i][j];
    }
    for (double& c : centroid) c /= static_cast<double>(d);

    auto blend = [&](double t) {
      std::vector<double> y(d);
      for (std::size_t j = 0; j < d; ++j)
        y[j] = centroid[j] + t * (centroid[j] - pts[worst][j]);
      return y;
    };

    std::vector<double> xr = blend(1.0);
    const double fr = f(xr);
    if (fr < fv[order[0]]) {
      std::vector<double> xe = blend(2.0);
      const double fe = f(xe);
      if (fe < fr) {
        pts[worst] = std::move(xe);
        fv[worst] = fe;
      } else {
        pts[worst] = std::move(xr);
        fv[worst] = fr;
      }
      continue;
    }
    if (fr < fv[second]) {
      pts[worst] = std::move(xr);
      fv[worst] = fr;
      continue;
    }
    // Contraction: outside if the reflected point improved on the worst.
    std::vector<double> xc = blend(fr < fv[worst] ? 0.5 : -0.5);
    const double fc = f(xc);
    if (fc < std::min(fr, fv[worst])) {
      pts[worst] = std::move(xc);
      fv[worst] = fc;
      continue;
    }
    // Shrink toward the best point.
    for (std::size_t i = 0; i <= d; ++i) {
      if (i == best) continue;
      for (std::size_t j = 0; j < d; ++j)
        pts[i][j] = pts[best][j] + 0.5 * (pts[i][j] - pts[best][j]);
      fv[i] = f(pts[i]);
    }
  }

  std::size_t arg = 0;
  for (std::size_t i = 1; i <= d; ++i)
    if (fv[i] < fv[arg]) arg = i;
  res.x = pts[arg];
  res.f = fv[arg];
  return res;
}

double logistic(double t) { return 1.0 / (1.0 + std::exp(-t)); }

// theta layout: [ln omega, logit(total persistence), q+p-1 free share logits]
// (the last share logit is pinned at 0). Shares times persistence give the
// arch coefficients first, then the garch coefficients.
GarchSpec spec_from_theta(const std::vector<double>& theta, int p, int q) {
  GarchSpec spec;
  spec.omega = std::exp(std::clamp(theta[0], -700.0, 700.0));
  const double s = logistic(std::clamp(theta[1], -40.0, 40.0));
  const int m = p + q;
  std::vector<double> logits(static_cast<std::size_t>(m), 0.0);
  for (int i = 0; i + 1 < m; ++i)
    logits[static_cast<std::size_t>(i)] = std::clamp(theta[static_cast<std::size_t>(2 + i)], -40.0, 40.0);
  double zmax = 0.0;
  for (double z : logits) zmax = std::max(zmax, z);
  double denom = 0.0;
  for (double z : logits) denom += std::exp(z - zmax);
  spec.arch.resize(static_cast<std::size_t>(q));
  spec.garch.resize(static_cast<std::size_t>(p));
  for (int i = 0; i < m; ++i) {
    const double share = std::exp(logits[static_cast<std::size_t>(i)] - zmax) / denom;
    if (i < q) spec.arch[static_cast<std::size_t>(i)] = s * share;
    else spec.garch[static_cast<std::size_t>(i - q)] = s * share;
  }
  return spec;
}

}  // namespace

double garch_log_likelihood(std::span<const double> centered, const GarchSpec& spec) {
  spec.validate();
  if (centered.empty()) throw Error("garch_log_likelihood: empty series");
  const double init = detail::variance_pop(centered, detail::mean(centered));
  if (!(init > 0.0)) throw Error("garch_log_likelihood: zero-variance series");
  return garch_filter(centered, spec, init, nullptr);
}

GarchFit garch_fit(const ReturnSeries& returns, int p, int q, std::uint64_t restart_seed) {
  if (p < 0 || q < 1) throw Error("garch_fit: need p >= 0 and q >= 1");
  if (p + q > 4) throw Error("garch_fit: p + q must not exceed 4");
  const std::size_t n = returns.values.size();
  if (n < 250) throw Error("garch_fit: need at least 250 observations, got " + std::to_string(n));

  const double mu = detail::mean(returns.values);
  std::vector<double> x(returns.values.begin(), returns.values.end());
  for (double& v : x) v -= mu;
  // Same init formula as garch_log_likelihood so a recomputation of the
  // returned likelihood reproduces it exactly.
  const double var = detail::variance_pop(x, detail::mean(x));
  if (detail::effectively_zero_variance(var, x)) throw Error("garch_fit: constant input");

  const std::size_t dim = static_cast<std::size_t>(p + q + 1);
  auto neg_ll = [&](const std::vector<double>& theta) {
    const GarchSpec s = spec_from_theta(theta, p, q);
    const double ll = garch_filter(x, s, var, nullptr);
    return std::isfinite(ll) ? -ll : 1e100;
  };

  // Restarts sweep the persistence axis from calm to explosive; low
  // persistence goes first so that near-flat likelihoods (e.g. white noise,
  // where any omega = var * (1 - s) lies on a ridge) resolve to the simplest
  // model unless a later start is a genuine improvement.
  constexpr double kStartPersistence[] = {0.10, 0.30, 0.60, 0.90, 0.97};
  constexpr double kFTol = 1e-8;
  constexpr double kMinGain = 1e-6;
  constexpr std::size_t kMaxIter = 2000;

  NelderMeadResult best;
  bool have_best = false;
  for (std::size_t r = 0; r < std::size(kStartPersistence); ++r) {
    Rng jitter(restart_seed, r);
    const double s0 = kStartPersistence[r];
    std::vector<double> theta0(dim);
    theta0[0] = std::log(var * (1.0 - s0)) + 0.05 * jitter.normal();
    theta0[1] = std::log(s0 / (1.0 - s0)) + 0.05 * jitter.normal();
    for (std::size_t i = 2; i < dim; ++i) theta0[i] = 0.1 * jitter.normal();

    NelderMeadResult run = nelder_mead(neg_ll, theta0, 0.5, kFTol, kMaxIter);
    if (!have_best || run.f < best.f - kMinGain) {
      best = std::move(run);
      have_best = true;
    }
  }

  GarchFit fit;
  fit.spec = spec_from_theta(best.x, p, q);
  fit.spec.validate();
  fit.mu = mu;
  fit.converged = best.converged;
  fit.iterations = best.iterations;
  fit.log_likelihood = garch_filter(x, fit.spec, var, &fit.cond_var);
  fit.residuals.resize(n);
  for (std::size_t t = 0; t < n; ++t) fit.residuals[t] = x[t] / std::sqrt(fit.cond_var[t]);
  return fit;
}

ResidualBattery residual_battery(const GarchFit& fit) {
  if (!fit.converged) throw Error("residual_battery: fit did not converge");
  std::vector<double> sq(fit.residuals.size());
  for (std::size_t i = 0; i < sq.size(); ++i) sq[i] = fit.residuals[i] * fit.residuals[i];

  ResidualBattery out;
  out.squared_portmanteau = portmanteau(sq, 10, PortmanteauVariant::ljung_box);
  out.tail = adaptive_hill(fit.residuals, TailSide::both_abs);
  return out;
}

}  // namespace tsfacts
