#include "tsfacts/synth.hpp"

#include <cmath>

#include "tsfacts/error.hpp"
#include "tsfacts/rng.hpp"

namespace tsfacts {

std::vector<double> generate(const GeneratorSpec& spec) {
  if (spec.n < 1) throw Error("generate: n must be >= 1");
  Rng rng(spec.seed);
  std::vector<double> out;
  out.reserve(spec.n);

  switch (spec.kind) {
    case GeneratorKind::gaussian_wn: {
      if (!(spec.sigma > 0.0)) throw Error("generate: sigma must be > 0");
      for (std::size_t i = 0; i < spec.n; ++i) out.push_back(spec.sigma * rng.normal());
      return out;
    }
    case GeneratorKind::student_t: {
      if (!(spec.nu > 0.0)) throw Error("generate: nu must be > 0");
      for (std::size_t i = 0; i < spec.n; ++i) out.push_back(rng.student_t(spec.nu));
      return out;
    }
    case GeneratorKind::pareto: {
      if (!(spec.alpha > 0.0) || !(spec.x_min > 0.0))
        throw Error("generate: pareto needs alpha > 0 and x_min > 0");
      for (std::size_t i = 0; i < spec.n; ++i)
        out.push_back(rng.pareto(spec.alpha, spec.x_min));
      return out;
    }
    case GeneratorKind::ar1: {
      if (!(std::fabs(spec.phi) < 1.0)) throw Error("generate: ar1 needs |phi| < 1");
      if (!(spec.sigma > 0.0)) throw Error("generate: sigma must be > 0");
      double x = rng.normal() * spec.sigma / std::sqrt(1.0 - spec.phi * spec.phi);
      for (std::size_t i = 0; i < spec.n; ++i) {
        out.push_back(x);
        x = spec.phi * x + spec.sigma * rng.normal();
      }
      return out;
    }
    case GeneratorKind::garch:
      return garch_simulate(spec.garch, spec.n, spec.seed, spec.burn_in).values;
  }
  throw Error("generate: unknown generator kind");
}

}  // namespace tsfacts
