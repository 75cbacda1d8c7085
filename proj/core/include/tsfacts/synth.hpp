#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "tsfacts/garch.hpp"

namespace tsfacts {

// Seeded synthetic generators used as ground-truth oracles by the test and
// acceptance suites (and available for experiments).
enum class GeneratorKind { gaussian_wn, student_t, pareto, ar1, garch };

struct GeneratorSpec {
  GeneratorKind kind = GeneratorKind::gaussian_wn;
  std::size_t n = 0;
  std::uint64_t seed = 0;

  double sigma = 1.0;   // gaussian_wn, ar1: innovation standard deviation
  double nu = 3.0;      // student_t: degrees of freedom
  double alpha = 3.0;   // pareto: tail index
  double x_min = 1.0;   // pareto: scale / lower bound
  double phi = 0.0;     // ar1: autoregressive coefficient, |phi| < 1
  GarchSpec garch;      // garch kind only
  std::size_t burn_in = 500;  // garch kind only
};

// Deterministic for a fixed spec. pareto draws x_min * U^(-1/alpha); ar1
// starts from its stationary distribution N(0, sigma^2/(1-phi^2)).
std::vector<double> generate(const GeneratorSpec& spec);

}  // namespace tsfacts
