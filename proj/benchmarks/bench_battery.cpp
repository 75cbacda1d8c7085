#include <benchmark/benchmark.h>

#include <cmath>
#include <cstdint>
#include <vector>

#include "tsfacts/battery.hpp"
#include "tsfacts/dependence.hpp"
#include "tsfacts/garch.hpp"
#include "tsfacts/prices.hpp"
#include "tsfacts/returns.hpp"
#include "tsfacts/synth.hpp"
#include "tsfacts/tails.hpp"

using namespace tsfacts;

namespace {

std::vector<double> clustered_returns(std::size_t n, std::uint64_t seed) {
  GarchSpec g;
  g.omega = 2e-5;
  g.arch = {0.10};
  g.garch = {0.85};
  return garch_simulate(g, n, seed).values;
}

Date next_day(Date d) {
  ++d.day;
  if (!date_valid(d)) {
    d.day = 1;
    ++d.month;
    if (d.month > 12) {
      d.month = 1;
      ++d.year;
    }
  }
  return d;
}

PriceSeries synthetic_prices(std::size_t n_bars, std::uint64_t seed) {
  const std::vector<double> r = clustered_returns(n_bars - 1, seed);
  PriceSeries ps;
  ps.symbol = "BENCH";
  Date d{2010, 1, 4};
  double close = 100.0;
  for (std::size_t i = 0; i <= r.size(); ++i) {
    if (i > 0) {
      d = next_day(d);
      close *= std::exp(r[i - 1]);
    }
    PriceBar bar;
    bar.date = d;
    bar.close = close;
    bar.open = close;
    bar.high = close * 1.01;
    bar.low = close * 0.99;
    bar.volume = 1000;
    ps.bars.push_back(bar);
  }
  return ps;
}

void BM_Acf(benchmark::State& state) {
  const std::vector<double> x = clustered_returns(static_cast<std::size_t>(state.range(0)), 1);
  for (auto _ : state) {
    benchmark::DoNotOptimize(acf(x, 10));
  }
}
BENCHMARK(BM_Acf)->Arg(2750)->Arg(20000);

void BM_Pacf(benchmark::State& state) {
  const std::vector<double> x = clustered_returns(static_cast<std::size_t>(state.range(0)), 2);
  for (auto _ : state) {
    benchmark::DoNotOptimize(pacf(x, 10));
  }
}
BENCHMARK(BM_Pacf)->Arg(2750)->Arg(20000);

void BM_LjungBox(benchmark::State& state) {
  const std::vector<double> x = clustered_returns(static_cast<std::size_t>(state.range(0)), 3);
  for (auto _ : state) {
    benchmark::DoNotOptimize(portmanteau(x, 10, PortmanteauVariant::ljung_box));
  }
}
BENCHMARK(BM_LjungBox)->Arg(2750)->Arg(20000);

void BM_AdaptiveHill(benchmark::State& state) {
  const std::vector<double> x = clustered_returns(static_cast<std::size_t>(state.range(0)), 4);
  for (auto _ : state) {
    benchmark::DoNotOptimize(adaptive_hill(x, TailSide::both_abs));
  }
}
BENCHMARK(BM_AdaptiveHill)->Arg(2750)->Arg(20000);

void BM_GarchFit(benchmark::State& state) {
  GarchSpec g;
  g.omega = 2e-5;
  g.arch = {0.10};
  g.garch = {0.85};
  const ReturnSeries r = garch_simulate(g, static_cast<std::size_t>(state.range(0)), 5);
  for (auto _ : state) {
    benchmark::DoNotOptimize(garch_fit(r));
  }
}
BENCHMARK(BM_GarchFit)->Arg(1000)->Arg(2750);

void BM_FullBattery(benchmark::State& state) {
  const PriceSeries ps = synthetic_prices(static_cast<std::size_t>(state.range(0)), 6);
  for (auto _ : state) {
    benchmark::DoNotOptimize(run_battery(ps));
  }
}
BENCHMARK(BM_FullBattery)->Arg(2750)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
