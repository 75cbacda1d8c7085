#include "tsfacts/battery.hpp"

#include <algorithm>
#include <atomic>
#include <cctype>
#include <cmath>
#include <fstream>
#include <sstream>
#include <thread>
#include <utility>

#include "tsfacts/error.hpp"

namespace tsfacts {
namespace {

template <typename T, typename Fn>
void attempt(Section<T>& section, Fn&& fn) {
  try {
    section.value = fn();
  } catch (const Error& e) {
    section.skip_reason = e.what();
  }
}

bool rejects_at(const HypothesisTestResult& test, double level) {
  for (const auto& d : test.reject_at)
    if (d.level == level) return d.reject;
  return false;
}

}  // namespace

void AnalysisConfig::validate() const {
  if (max_lag < 1) throw Error("config: max_lag must be >= 1");
  if (powerlaw_lag_min < 1 || powerlaw_lag_max < powerlaw_lag_min)
    throw Error("config: power-law lag range must satisfy 1 <= min <= max");
  if (garch_q < 1 || garch_p < 0)
    throw Error("config: garch orders need q >= 1 and p >= 0");
  if (block_weekly < 1 || block_monthly < 1 || block_quarterly < 1)
    throw Error("config: aggregation block lengths must be >= 1");
}

StockReport run_battery(const PriceSeries& prices, const AnalysisConfig& config) {
  config.validate();
  const ReturnSeries returns = log_returns(prices);

  StockReport rep;
  rep.symbol = prices.symbol;
  rep.n_bars = prices.bars.size();
  rep.n_returns = returns.values.size();
  rep.first_date = prices.bars.front().date;
  rep.last_date = prices.bars.back().date;

  // Inputs too short or constant-priced cannot support any section; fail the
  // whole report instead of emitting a page of skip reasons.
  rep.moments = moment_summary(returns.values);

  const std::vector<double>& r = returns.values;
  std::vector<double> squared(r.size());
  std::vector<double> absolute(r.size());
  for (std::size_t i = 0; i < r.size(); ++i) {
    squared[i] = r[i] * r[i];
    absolute[i] = std::fabs(r[i]);
  }

  attempt(rep.leverage, [&] {
    const double c = leverage_correlation(returns, 0);
    return LeverageResult{0, c, c > 0.0};
  });

  attempt(rep.gaussianity, [&] {
    return gaussianity_scan(returns, config.block_weekly, config.block_monthly,
                            config.block_quarterly);
  });

  attempt(rep.dependence.acf_raw,
          [&] { return acf(r, config.max_lag, InputTransform::raw); });
  attempt(rep.dependence.acf_squared,
          [&] { return acf(squared, config.max_lag, InputTransform::squared); });
  attempt(rep.dependence.acf_absolute,
          [&] { return acf(absolute, config.max_lag, InputTransform::absolute); });
  attempt(rep.dependence.pacf_raw,
          [&] { return pacf(r, config.max_lag, InputTransform::raw); });
  attempt(rep.dependence.pacf_squared,
          [&] { return pacf(squared, config.max_lag, InputTransform::squared); });
  attempt(rep.dependence.pacf_absolute,
          [&] { return pacf(absolute, config.max_lag, InputTransform::absolute); });

  attempt(rep.dependence.squared_lag_tests, [&] {
    if (!rep.dependence.acf_squared.present())
      throw Error(rep.dependence.acf_squared.skip_reason);
    const AcfSeries& src = *rep.dependence.acf_squared;
    std::vector<SingleLagEntry> out;
    out.reserve(static_cast<std::size_t>(src.max_lag()));
    for (int lag = 1; lag <= src.max_lag(); ++lag) {
      const double rho = src.at(lag);
      out.push_back(SingleLagEntry{lag, rho, single_lag_test(rho, src.n)});
    }
    return out;
  });

  attempt(rep.portmanteau.raw, [&] {
    return PortmanteauPair{
        portmanteau(r, config.max_lag, PortmanteauVariant::ljung_box),
        portmanteau(r, config.max_lag, PortmanteauVariant::box_pierce)};
  });
  attempt(rep.portmanteau.squared, [&] {
    return PortmanteauPair{
        portmanteau(squared, config.max_lag, PortmanteauVariant::ljung_box),
        portmanteau(squared, config.max_lag, PortmanteauVariant::box_pierce)};
  });

  attempt(rep.power_law, [&] {
    PowerLawSection pl;
    pl.decay = acf(absolute, config.powerlaw_lag_max, InputTransform::absolute);
    pl.fit = fit_power_law_decay(pl.decay, config.powerlaw_lag_min,
                                 config.powerlaw_lag_max);
    return pl;
  });

  attempt(rep.tail_returns, [&] {
    const TailIndexEstimate est = adaptive_hill(r, TailSide::both_abs);
    return TailResult{est, classify_tail(est)};
  });

  attempt(rep.garch, [&] {
    GarchSection g;
    g.fit = garch_fit(returns, config.garch_p, config.garch_q);
    if (!g.fit.converged) {
      g.residual_squared_lb.skip_reason = "garch fit did not converge";
      g.residual_tail.skip_reason = "garch fit did not converge";
      return g;
    }
    attempt(g.residual_squared_lb, [&] {
      std::vector<double> res_sq(g.fit.residuals.size());
      for (std::size_t i = 0; i < res_sq.size(); ++i)
        res_sq[i] = g.fit.residuals[i] * g.fit.residuals[i];
      return portmanteau(res_sq, config.max_lag, PortmanteauVariant::ljung_box);
    });
    attempt(g.residual_tail, [&] {
      const TailIndexEstimate est = adaptive_hill(g.fit.residuals, TailSide::both_abs);
      return TailResult{est, classify_tail(est)};
    });
    return g;
  });

  return rep;
}

void TailIndexHistogram::add(double alpha) {
  if (!(alpha >= lower)) return;  // estimators guarantee alpha > 0; be safe
  const double offset = (alpha - lower) / bin_width;
  if (!(offset < static_cast<double>(counts.size()))) {
    ++overflow;
    return;
  }
  ++counts[static_cast<std::size_t>(offset)];
}

std::size_t TailIndexHistogram::total() const {
  std::size_t sum = overflow;
  for (std::size_t c : counts) sum += c;
  return sum;
}

BatchTallies compute_tallies(const std::vector<StockReport>& reports) {
  BatchTallies t;
  t.n_reports = reports.size();
  for (const StockReport& rep : reports) {
    if (rep.portmanteau.raw.present() &&
        rejects_at(rep.portmanteau.raw->ljung_box, 0.01))
      ++t.portmanteau_raw_reject_1pct;
    if (rep.portmanteau.squared.present() &&
        rejects_at(rep.portmanteau.squared->ljung_box, 0.01))
      ++t.portmanteau_squared_reject_1pct;
    if (rep.moments.skewness > 0.0) ++t.positive_skewness;
    if (rep.leverage.present() && rep.leverage->correlation > 0.0)
      ++t.positive_leverage;
    if (rep.tail_returns.present())
      t.tail_alpha_returns.add(rep.tail_returns->estimate.alpha);
    if (rep.garch.present() && rep.garch->residual_tail.present())
      t.tail_alpha_residuals.add(rep.garch->residual_tail->estimate.alpha);
  }
  return t;
}

BatchReport run_batch(const std::filesystem::path& directory,
                      const AnalysisConfig& config) {
  namespace fs = std::filesystem;
  config.validate();
  if (!fs::is_directory(directory))
    throw Error("not a directory: " + directory.string());

  std::vector<fs::path> files;
  for (const auto& entry : fs::directory_iterator(directory)) {
    if (!entry.is_regular_file()) continue;
    std::string ext = entry.path().extension().string();
    std::transform(ext.begin(), ext.end(), ext.begin(),
                   [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
    if (ext == ".csv") files.push_back(entry.path());
  }
  std::sort(files.begin(), files.end(), [](const fs::path& a, const fs::path& b) {
    return a.filename().string() < b.filename().string();
  });
  if (files.empty())
    throw Error("no .csv files in " + directory.string());

  struct Slot {
    std::optional<StockReport> report;
    std::optional<BatchFailure> failure;
  };
  std::vector<Slot> slots(files.size());

  // Per-file work is pure and independent; indices keep the merge order
  // deterministic no matter how the pool interleaves.
  std::atomic<std::size_t> cursor{0};
  auto worker = [&] {
    for (;;) {
      const std::size_t i = cursor.fetch_add(1);
      if (i >= files.size()) return;
      const std::string name = files[i].filename().string();
      try {
        std::ifstream in(files[i], std::ios::binary);
        if (!in) throw Error("cannot open " + name);
        std::ostringstream buf;
        buf << in.rdbuf();
        CsvParseStats stats;
        const PriceSeries prices =
            parse_price_csv(buf.str(), files[i].stem().string(), &stats);
        StockReport rep = run_battery(prices, config);
        rep.parse_stats = stats;
        slots[i].report = std::move(rep);
      } catch (const std::exception& e) {
        slots[i].failure = BatchFailure{name, e.what()};
      }
    }
  };

  const unsigned hw = std::thread::hardware_concurrency();
  const std::size_t n_threads =
      std::min(files.size(), static_cast<std::size_t>(hw == 0 ? 4 : hw));
  if (n_threads <= 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    pool.reserve(n_threads);
    for (std::size_t i = 0; i < n_threads; ++i) pool.emplace_back(worker);
    for (std::thread& th : pool) th.join();
  }

  BatchReport batch;
  batch.config = config;
  for (Slot& s : slots) {
    if (s.report)
      batch.reports.push_back(std::move(*s.report));
    else if (s.failure)
      batch.failures.push_back(std::move(*s.failure));
  }
  if (batch.reports.empty())
    throw Error("no parseable CSV files in " + directory.string() + " (" +
                std::to_string(batch.failures.size()) + " failed)");
  std::stable_sort(batch.reports.begin(), batch.reports.end(),
                   [](const StockReport& a, const StockReport& b) {
                     return a.symbol < b.symbol;
                   });
  batch.tallies = compute_tallies(batch.reports);
  return batch;
}

}  // namespace tsfacts
