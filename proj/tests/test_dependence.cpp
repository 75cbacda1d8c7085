#include <doctest.h>

#include <cmath>
#include <vector>

#include "helpers.hpp"
#include "tsfacts/dependence.hpp"
#include "tsfacts/error.hpp"
#include "tsfacts/rng.hpp"
#include "tsfacts/synth.hpp"

using namespace tsfacts;

namespace {
const std::vector<double> kDev{0.5, -0.2, 0.3, 0.9, -1.1, 0.4, -0.3, 0.2, 0.05, -0.6};
}

TEST_CASE("acf reference values") {
  const AcfSeries a = acf(kDev, 3);
  REQUIRE(a.max_lag() == 3);
  CHECK(a.n == 10);
  // cross-checked against an independent implementation
  CHECK(a.at(1) == doctest::Approx(-0.4996229817228096).epsilon(1e-12));
  CHECK(a.at(2) == doctest::Approx(0.0880419637734612).epsilon(1e-12));
  CHECK(a.at(3) == doctest::Approx(0.1641914597164167).epsilon(1e-12));
  CHECK(a.band == doctest::Approx(1.9599639845400545 / std::sqrt(10.0)).epsilon(1e-12));
  CHECK(a.kind == AcfKind::acf);
  CHECK_THROWS_AS(a.at(0), Error);
  CHECK_THROWS_AS(a.at(4), Error);
}

TEST_CASE("acf values stay inside [-1, 1]") {
  Rng rng(11);
  std::vector<double> x(300);
  for (double& v : x) v = rng.student_t(3.0);
  const AcfSeries a = acf(x, 50);
  for (int k = 1; k <= 50; ++k) {
    CHECK(a.at(k) >= -1.0);
    CHECK(a.at(k) <= 1.0);
  }
}

TEST_CASE("acf is affine-invariant") {
  const AcfSeries base = acf(kDev, 5);
  std::vector<double> scaled(kDev.size());
  for (std::size_t i = 0; i < kDev.size(); ++i) scaled[i] = -3.7 * kDev[i] + 42.0;
  const AcfSeries moved = acf(scaled, 5);
  for (int k = 1; k <= 5; ++k)
    CHECK(moved.at(k) == doctest::Approx(base.at(k)).epsilon(1e-10));
}

TEST_CASE("acf preconditions") {
  CHECK_THROWS_AS(acf(std::vector<double>{1, 1, 1, 1}, 2), Error);  // zero variance
  CHECK_THROWS_AS(acf(kDev, 0), Error);
  CHECK_THROWS_AS(acf(kDev, 10), Error);  // needs n > max_lag
  CHECK_NOTHROW(acf(kDev, 9));
}

TEST_CASE("acf of a long AR(1) matches the analytic decay") {
  GeneratorSpec spec;
  spec.kind = GeneratorKind::ar1;
  spec.n = 100000;
  spec.seed = 20240501;
  spec.phi = 0.5;
  const std::vector<double> x = generate(spec);
  const AcfSeries a = acf(x, 10);
  for (int k = 1; k <= 5; ++k)
    CHECK(std::fabs(a.at(k) - std::pow(0.5, k)) < 0.02);
}

TEST_CASE("acf band coverage on iid input") {
  int good = 0;
  const int runs = 200;
  for (int seed = 0; seed < runs; ++seed) {
    GeneratorSpec spec;
    spec.kind = GeneratorKind::gaussian_wn;
    spec.n = 10000;
    spec.seed = static_cast<std::uint64_t>(seed) + 1000;
    const std::vector<double> x = generate(spec);
    const AcfSeries a = acf(x, 10);
    int outside = 0;
    for (int k = 1; k <= 10; ++k)
      if (std::fabs(a.at(k)) > a.band) ++outside;
    if (outside <= 2) ++good;
  }
  CHECK(good >= 180);  // >= 90% of runs
}

TEST_CASE("pacf base case equals the lag-1 autocorrelation exactly") {
  const AcfSeries a = acf(kDev, 4);
  const AcfSeries p = pacf(kDev, 4);
  CHECK(p.kind == AcfKind::pacf);
  CHECK(p.at(1) == a.at(1));  // bitwise, not approximately
}

TEST_CASE("pacf of an AR(1) cuts off after lag 1") {
  GeneratorSpec spec;
  spec.kind = GeneratorKind::ar1;
  spec.n = 100000;
  spec.seed = 99;
  spec.phi = 0.5;
  const std::vector<double> x = generate(spec);
  const AcfSeries p = pacf(x, 10);
  CHECK(std::fabs(p.at(1) - 0.5) < 0.02);
  for (int k = 2; k <= 10; ++k) CHECK(std::fabs(p.at(k)) < 0.02);
}

TEST_CASE("pacf stays inside the band for iid input") {
  int good = 0;
  const int runs = 200;
  for (int seed = 0; seed < runs; ++seed) {
    GeneratorSpec spec;
    spec.kind = GeneratorKind::gaussian_wn;
    spec.n = 10000;
    spec.seed = static_cast<std::uint64_t>(seed) + 5000;
    const std::vector<double> x = generate(spec);
    const AcfSeries p = pacf(x, 10);
    int inside = 0;
    for (int k = 1; k <= 10; ++k)
      if (std::fabs(p.at(k)) < p.band) ++inside;
    if (inside >= 9) ++good;
  }
  CHECK(good >= 180);
}

TEST_CASE("portmanteau reference values") {
  const HypothesisTestResult lb = portmanteau(kDev, 3, PortmanteauVariant::ljung_box);
  CHECK(lb.name == TestName::ljung_box);
  CHECK(lb.statistic == doctest::Approx(3.9067305937351802).epsilon(1e-12));
  CHECK(lb.p_value == doctest::Approx(0.27171326722492239).epsilon(1e-12));
  REQUIRE(lb.null_params.size() == 1);
  CHECK(lb.null_params[0] == 3.0);
  CHECK(lb.n == 10);

  const HypothesisTestResult bp = portmanteau(kDev, 3, PortmanteauVariant::box_pierce);
  CHECK(bp.name == TestName::box_pierce);
  CHECK(bp.statistic == doctest::Approx(2.8433334669448609).epsilon(1e-12));
  CHECK(bp.p_value == doctest::Approx(0.41641604641161023).epsilon(1e-12));
}

TEST_CASE("portmanteau null statistic") {
  // sample lag-1 autocorrelation of {1, 0, -1, 0} is exactly zero
  const std::vector<double> x{1.0, 0.0, -1.0, 0.0};
  const HypothesisTestResult lb = portmanteau(x, 1, PortmanteauVariant::ljung_box);
  CHECK(lb.statistic == 0.0);
  CHECK(lb.p_value == 1.0);
}

TEST_CASE("ljung-box dominates box-pierce") {
  for (std::uint64_t seed = 0; seed < 50; ++seed) {
    GeneratorSpec spec;
    spec.kind = GeneratorKind::student_t;
    spec.n = 120;
    spec.seed = seed;
    spec.nu = 4.0;
    const std::vector<double> x = generate(spec);
    const double lb = portmanteau(x, 10, PortmanteauVariant::ljung_box).statistic;
    const double bp = portmanteau(x, 10, PortmanteauVariant::box_pierce).statistic;
    CHECK(lb >= bp);
  }
}

TEST_CASE("portmanteau p-values are near-uniform under the null") {
  std::vector<double> pvals;
  pvals.reserve(500);
  for (std::uint64_t seed = 0; seed < 500; ++seed) {
    GeneratorSpec spec;
    spec.kind = GeneratorKind::gaussian_wn;
    spec.n = 2750;
    spec.seed = seed + 77000;
    const std::vector<double> x = generate(spec);
    pvals.push_back(portmanteau(x, 10, PortmanteauVariant::ljung_box).p_value);
  }
  CHECK(testutil::ks_uniform_distance(pvals) < 0.1);
}

TEST_CASE("portmanteau preconditions and decisions") {
  CHECK_THROWS_AS(portmanteau(kDev, 10, PortmanteauVariant::ljung_box), Error);
  CHECK_THROWS_AS(portmanteau(kDev, 0, PortmanteauVariant::ljung_box), Error);
  const auto decisions = decide(0.03);
  REQUIRE(decisions.size() == 2);
  CHECK(decisions[0] == SignificanceDecision{0.01, false});
  CHECK(decisions[1] == SignificanceDecision{0.05, true});
}

TEST_CASE("single-lag statistic reference values") {
  const HypothesisTestResult t = single_lag_test(0.1, 2500);
  CHECK(t.name == TestName::single_lag);
  CHECK(t.statistic == doctest::Approx(50.0 * 0.1 / 0.99).epsilon(1e-14));
  CHECK(t.p_value == doctest::Approx(4.406434601044703e-07).epsilon(1e-10));
  CHECK(t.p_value < 1e-6);

  const HypothesisTestResult null = single_lag_test(0.0, 100);
  CHECK(null.statistic == 0.0);
  CHECK(null.p_value == 1.0);
}

TEST_CASE("single-lag statistic is odd in rho") {
  for (double rho : {0.05, 0.3, 0.8}) {
    const HypothesisTestResult plus = single_lag_test(rho, 400);
    const HypothesisTestResult minus = single_lag_test(-rho, 400);
    CHECK(minus.statistic == doctest::Approx(-plus.statistic).epsilon(1e-14));
    CHECK(minus.p_value == doctest::Approx(plus.p_value).epsilon(1e-14));
  }
}

TEST_CASE("single-lag preconditions") {
  CHECK_THROWS_AS(single_lag_test(1.0, 100), Error);
  CHECK_THROWS_AS(single_lag_test(-1.2, 100), Error);
  CHECK_THROWS_AS(single_lag_test(0.1, 29), Error);
  CHECK_NOTHROW(single_lag_test(0.1, 30));
}

namespace {
AcfSeries planted_decay(double c, double beta, int lags) {
  AcfSeries a;
  a.kind = AcfKind::acf;
  a.input_transform = InputTransform::absolute;
  a.n = 5000;
  a.band = 1.9599639845400545 / std::sqrt(5000.0);
  for (int l = 1; l <= lags; ++l)
    a.values.push_back(c * std::pow(static_cast<double>(l), -beta));
  return a;
}
}  // namespace

TEST_CASE("power-law fit recovers a planted exponent exactly") {
  const PowerLawFit fit = fit_power_law_decay(planted_decay(0.5, 0.3, 100), 1, 100);
  CHECK(std::fabs(fit.exponent - (-0.3)) < 1e-9);
  REQUIRE(fit.tail_index_defined);
  CHECK(std::fabs(fit.tail_index - 10.0 / 3.0) < 1e-7);
  CHECK(fit.r_squared > 1.0 - 1e-9);
  CHECK(fit.lags_used.size() == 100);
  CHECK(fit.lags_omitted.empty());
  CHECK(fit.intercept_log == doctest::Approx(std::log(0.5)).epsilon(1e-9));
}

TEST_CASE("power-law exponent is independent of the scale constant") {
  const PowerLawFit a = fit_power_law_decay(planted_decay(0.5, 0.25, 100), 1, 100);
  const PowerLawFit b = fit_power_law_decay(planted_decay(2.7, 0.25, 100), 1, 100);
  CHECK(a.exponent == doctest::Approx(b.exponent).epsilon(1e-12));
}

TEST_CASE("power-law fit drops non-positive values and records them") {
  AcfSeries a = planted_decay(0.5, 0.3, 100);
  a.values[36] = -0.01;  // lag 37
  a.values[53] = 0.0;    // lag 54
  const PowerLawFit fit = fit_power_law_decay(a, 1, 100);
  CHECK(fit.lags_omitted == std::vector<int>{37, 54});
  CHECK(fit.lags_used.size() == 98);
  // remaining points still sit exactly on the line
  CHECK(std::fabs(fit.exponent - (-0.3)) < 1e-9);
}

TEST_CASE("power-law fit edge cases") {
  // too few positive points
  AcfSeries flat = planted_decay(0.5, 0.3, 10);
  for (std::size_t i = 0; i < flat.values.size(); ++i)
    if (i != 1 && i != 5) flat.values[i] = -0.2;
  CHECK_THROWS_AS(fit_power_law_decay(flat, 1, 10), Error);

  // non-decaying input: slope >= 0 leaves the tail index undefined
  AcfSeries rising = planted_decay(0.001, -1.0, 50);  // ac(l) = 0.001 * l
  const PowerLawFit fit = fit_power_law_decay(rising, 1, 50);
  CHECK(fit.exponent > 0.0);
  CHECK_FALSE(fit.tail_index_defined);

  // requested range must be covered by the series
  CHECK_THROWS_AS(fit_power_law_decay(planted_decay(0.5, 0.3, 50), 1, 100), Error);
  CHECK_THROWS_AS(fit_power_law_decay(planted_decay(0.5, 0.3, 50), 0, 50), Error);
}
