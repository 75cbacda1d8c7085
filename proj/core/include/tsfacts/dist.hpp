#pragma once

namespace tsfacts {

// Standard normal CDF / survival function via erfc.
double normal_cdf(double x);
double normal_sf(double x);

// Inverse standard normal CDF (Wichura's AS 241, double-precision branch).
// Throws Error for p outside (0, 1).
double normal_quantile(double p);

// Upper-tail probability of the chi-square distribution with df degrees of
// freedom, via the regularized incomplete gamma function.
double chi_squared_sf(double x, double df);

// Survival function of the asymptotic Kolmogorov distribution:
// P(K > lambda) = 2 * sum_{j>=1} (-1)^{j-1} exp(-2 j^2 lambda^2),
// evaluated through a theta-function form for small lambda where the
// alternating series converges slowly.
double kolmogorov_sf(double lambda);

}  // namespace tsfacts
