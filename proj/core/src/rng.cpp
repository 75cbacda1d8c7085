#include "tsfacts/rng.hpp"

#include <cmath>
#include <numbers>

#include "tsfacts/dist.hpp"
#include "tsfacts/error.hpp"

namespace tsfacts {

double Rng::normal() {
  // Inverse-CDF rather than Box-Muller/ziggurat: one draw per output keeps
  // the counter-based stream splittable without per-sampler cached state.
  return normal_quantile(uniform());
}

double Rng::student_t(double nu) {
  if (!(nu > 0.0)) throw Error("student_t: degrees of freedom must be positive");
  // Bailey's polar method in trigonometric form: exact t(nu) from two
  // uniforms, no gamma sampling required.
  const double u = uniform();
  const double v = uniform();
  const double r = std::sqrt(nu * (std::pow(u, -2.0 / nu) - 1.0));
  return r * std::cos(2.0 * std::numbers::pi * v);
}

double Rng::pareto(double alpha, double x_min) {
  if (!(alpha > 0.0) || !(x_min > 0.0)) throw Error("pareto: alpha and x_min must be positive");
  return x_min * std::pow(uniform(), -1.0 / alpha);
}

}  // namespace tsfacts
