#pragma once

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include "tsfacts/dependence.hpp"
#include "tsfacts/garch.hpp"
#include "tsfacts/moments.hpp"
#include "tsfacts/normality.hpp"
#include "tsfacts/prices.hpp"
#include "tsfacts/returns.hpp"
#include "tsfacts/tails.hpp"

namespace tsfacts {

struct AnalysisConfig {
  int max_lag = 10;          // ACF/PACF depth and portmanteau m
  int powerlaw_lag_min = 1;  // absolute-return ACF decay fit range
  int powerlaw_lag_max = 100;
  int garch_p = 1;
  int garch_q = 1;
  int block_weekly = 5;  // trading-day block lengths for aggregation
  int block_monthly = 21;
  int block_quarterly = 63;
  std::uint64_t seed = 0;  // reserved for stochastic sub-procedures

  void validate() const;  // throws Error on an empty or non-positive range
};

// A battery section either holds its result or names why it was skipped;
// nothing is omitted silently.
template <typename T>
struct Section {
  std::optional<T> value;
  std::string skip_reason;  // non-empty exactly when value is absent

  bool present() const { return value.has_value(); }
  const T& operator*() const { return *value; }
  const T* operator->() const { return &*value; }
};

struct LeverageResult {
  int lag = 0;
  double correlation = 0.0;  // corr(r_t, r_{t+lag}^2)
  bool positive = false;
};

struct SingleLagEntry {
  int lag = 0;
  double rho = 0.0;  // squared-return autocorrelation at this lag
  HypothesisTestResult test;
};

struct DependenceBundle {
  Section<AcfSeries> acf_raw;
  Section<AcfSeries> acf_squared;
  Section<AcfSeries> acf_absolute;
  Section<AcfSeries> pacf_raw;
  Section<AcfSeries> pacf_squared;
  Section<AcfSeries> pacf_absolute;
  // Volatility-clustering check: one normal test per squared-return ACF lag.
  Section<std::vector<SingleLagEntry>> squared_lag_tests;
};

struct PortmanteauPair {
  HypothesisTestResult ljung_box;
  HypothesisTestResult box_pierce;
};

struct PortmanteauBundle {
  Section<PortmanteauPair> raw;
  Section<PortmanteauPair> squared;
};

struct PowerLawSection {
  AcfSeries decay;  // absolute-return ACF over the full fit range
  PowerLawFit fit;
};

struct TailResult {
  TailIndexEstimate estimate;
  TailClass classification = TailClass::stylized_band;
};

struct GarchSection {
  GarchFit fit;
  // Residual re-analysis; skipped (with reason) when the fit did not converge.
  Section<HypothesisTestResult> residual_squared_lb;
  Section<TailResult> residual_tail;
};

struct StockReport {
  std::string symbol;
  std::size_t n_bars = 0;
  std::size_t n_returns = 0;
  Date first_date;
  Date last_date;
  std::optional<CsvParseStats> parse_stats;  // set when built from a file

  MomentSummary moments;  // guaranteed: degenerate input fails the report
  Section<LeverageResult> leverage;
  Section<GaussianityScan> gaussianity;
  DependenceBundle dependence;
  PortmanteauBundle portmanteau;
  Section<PowerLawSection> power_law;  // absolute-return ACF decay
  Section<TailResult> tail_returns;
  Section<GarchSection> garch;
};

// Count of tail-index point estimates falling in [lower + i*bin_width,
// lower + (i+1)*bin_width); estimates at or beyond the last edge land in
// overflow.
struct TailIndexHistogram {
  double lower = 0.0;
  double bin_width = 0.5;
  std::vector<std::size_t> counts = std::vector<std::size_t>(20, 0);
  std::size_t overflow = 0;

  void add(double alpha);
  std::size_t total() const;
};

struct BatchTallies {
  std::size_t n_reports = 0;
  std::size_t portmanteau_raw_reject_1pct = 0;      // Ljung-Box, raw returns
  std::size_t portmanteau_squared_reject_1pct = 0;  // Ljung-Box, squared returns
  std::size_t positive_skewness = 0;
  std::size_t positive_leverage = 0;
  TailIndexHistogram tail_alpha_returns;
  TailIndexHistogram tail_alpha_residuals;
};

struct BatchFailure {
  std::string file;  // filename within the batch directory
  std::string message;
};

struct BatchReport {
  AnalysisConfig config;
  std::vector<StockReport> reports;    // sorted by symbol
  std::vector<BatchFailure> failures;  // sorted by file name
  BatchTallies tallies;
};

// Runs the whole stylized-facts battery on one price series. Sections whose
// preconditions fail (series too short for a given analysis, degenerate
// transforms, non-converged fits) carry a skip reason; an input too
// degenerate to compute returns and moments on at all is an error.
StockReport run_battery(const PriceSeries& prices, const AnalysisConfig& config = {});

// Cross-sectional counts over per-stock reports; pure recount, so
// compute_tallies(batch.reports) == batch.tallies always holds.
BatchTallies compute_tallies(const std::vector<StockReport>& reports);

// Analyzes every *.csv file in the directory (non-recursive). Per-file
// failures are recorded, not fatal; output ordering is deterministic
// (reports by symbol, failures by file name) regardless of the parallel
// fan-out. Errors when the directory holds no parseable CSV at all.
BatchReport run_batch(const std::filesystem::path& directory,
                      const AnalysisConfig& config = {});

}  // namespace tsfacts
