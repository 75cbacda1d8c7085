#include "tsfacts/report.hpp"

#include <charconv>
#include <cmath>
#include <fstream>
#include <string_view>
#include <system_error>

#include <json.hpp>

#include "tsfacts/date.hpp"
#include "tsfacts/error.hpp"

namespace tsfacts {
namespace {

using json = nlohmann::ordered_json;

// Shortest round-trip formatting, matching the price serializer's convention.
std::string fmt(double v) {
  if (std::isnan(v)) return "nan";
  char buf[32];
  const auto res = std::to_chars(buf, buf + sizeof buf, v);
  return std::string(buf, res.ptr);
}

json decisions_json(const std::vector<SignificanceDecision>& decisions) {
  json arr = json::array();
  for (const auto& d : decisions)
    arr.push_back(json{{"level", d.level}, {"reject", d.reject}});
  return arr;
}

json test_json(const HypothesisTestResult& t) {
  return json{{"name", std::string(to_string(t.name))},
              {"statistic", t.statistic},
              {"null_params", t.null_params},
              {"p_value", t.p_value},
              {"n", t.n},
              {"reject_at", decisions_json(t.reject_at)}};
}

json acf_json(const AcfSeries& s) {
  return json{{"kind", std::string(to_string(s.kind))},
              {"transform", std::string(to_string(s.input_transform))},
              {"n", s.n},
              {"band", s.band},
              {"values", s.values}};
}

template <typename T, typename Fn>
json section_json(const Section<T>& s, Fn&& fn) {
  if (!s.present()) return json{{"skipped", s.skip_reason}};
  return fn(*s);
}

json config_json(const AnalysisConfig& c) {
  return json{{"max_lag", c.max_lag},
              {"powerlaw_lag_min", c.powerlaw_lag_min},
              {"powerlaw_lag_max", c.powerlaw_lag_max},
              {"garch_p", c.garch_p},
              {"garch_q", c.garch_q},
              {"block_weekly", c.block_weekly},
              {"block_monthly", c.block_monthly},
              {"block_quarterly", c.block_quarterly},
              {"seed", c.seed}};
}

json moments_json(const MomentSummary& m) {
  return json{{"n", m.n},
              {"mean", m.mean},
              {"variance", m.variance},
              {"skewness", m.skewness},
              {"method", "population central moments; skewness g1 = m3 / m2^(3/2)"}};
}

json leverage_json(const LeverageResult& l) {
  return json{{"lag", l.lag},
              {"correlation", l.correlation},
              {"positive", l.positive},
              {"method", "pearson correlation of (r_t, r_{t+lag}^2)"}};
}

json gaussianity_json(const GaussianityScan& g) {
  json results = json::array();
  for (const auto& fr : g.results)
    results.push_back(json{{"frequency", std::string(to_string(fr.frequency))},
                           {"n", fr.n},
                           {"ks", test_json(fr.ks)},
                           {"shapiro_wilk", test_json(fr.sw)},
                           {"flags", fr.flags}});
  json omitted = json::array();
  for (const auto& [freq, reason] : g.omitted)
    omitted.push_back(
        json{{"frequency", std::string(to_string(freq))}, {"reason", reason}});
  return json{{"results", results},
              {"omitted", omitted},
              {"method",
               "block sums of log returns; ks vs fitted normal (no small-sample "
               "correction, so p is conservative); shapiro-wilk with royston p"}};
}

json dependence_json(const DependenceBundle& d) {
  json acf_obj{{"raw", section_json(d.acf_raw, acf_json)},
               {"squared", section_json(d.acf_squared, acf_json)},
               {"absolute", section_json(d.acf_absolute, acf_json)}};
  json pacf_obj{{"raw", section_json(d.pacf_raw, acf_json)},
                {"squared", section_json(d.pacf_squared, acf_json)},
                {"absolute", section_json(d.pacf_absolute, acf_json)}};
  json single = section_json(d.squared_lag_tests, [](const std::vector<SingleLagEntry>& v) {
    json arr = json::array();
    for (const auto& e : v)
      arr.push_back(json{{"lag", e.lag}, {"rho", e.rho}, {"test", test_json(e.test)}});
    return json{{"entries", arr},
                {"method", "x = sqrt(n) rho/(1 - rho^2) vs standard normal, two-sided"}};
  });
  return json{{"acf", acf_obj},
              {"pacf", pacf_obj},
              {"squared_lag_tests", single},
              {"method",
               "divisor-n autocorrelation about the global mean; pacf via "
               "durbin-levinson; band = z_0.975/sqrt(n)"}};
}

json portmanteau_json(const PortmanteauBundle& b) {
  auto pair_json = [](const PortmanteauPair& p) {
    return json{{"ljung_box", test_json(p.ljung_box)},
                {"box_pierce", test_json(p.box_pierce)}};
  };
  return json{{"raw", section_json(b.raw, pair_json)},
              {"squared", section_json(b.squared, pair_json)},
              {"method", "chi-square(m) upper tail; decisions at 1% and 5%"}};
}

json power_law_json(const PowerLawSection& p) {
  json fit{{"exponent", p.fit.exponent},
           {"intercept_log", p.fit.intercept_log},
           {"tail_index", p.fit.tail_index_defined ? json(p.fit.tail_index) : json()},
           {"tail_index_defined", p.fit.tail_index_defined},
           {"r_squared", p.fit.r_squared},
           {"lags_used", p.fit.lags_used},
           {"lags_omitted", p.fit.lags_omitted}};
  return json{{"decay_acf", acf_json(p.decay)},
              {"fit", fit},
              {"method",
               "ols of log acf on log lag over absolute returns; non-positive "
               "acf values dropped; tail index = -1/slope"}};
}

json tail_json(const TailResult& t) {
  return json{{"xi", t.estimate.xi},
              {"alpha", t.estimate.alpha},
              {"k", t.estimate.k},
              {"n_tail_sample", t.estimate.n_tail_sample},
              {"std_error", t.estimate.std_error},
              {"side", std::string(to_string(t.estimate.side))},
              {"classification", std::string(to_string(t.classification))},
              {"method", "hill estimator; adaptive k by hill-plot stability"}};
}

json garch_json(const GarchSection& g) {
  const GarchFit& f = g.fit;
  json spec{{"omega", f.spec.omega},
            {"arch", f.spec.arch},
            {"garch", f.spec.garch},
            {"p", f.spec.p()},
            {"q", f.spec.q()},
            {"persistence", f.spec.persistence()},
            {"unconditional_variance", f.spec.unconditional_variance()}};
  return json{{"spec", spec},
              {"mu", f.mu},
              {"log_likelihood", f.log_likelihood},
              {"converged", f.converged},
              {"iterations", f.iterations},
              {"n", f.residuals.size()},
              {"residual_squared_ljung_box", section_json(g.residual_squared_lb, test_json)},
              {"residual_tail", section_json(g.residual_tail, tail_json)},
              {"method",
               "gaussian qmle; nelder-mead over (log omega, logit persistence, "
               "softmax shares) with deterministic restarts"}};
}

json stock_json(const StockReport& r, const AnalysisConfig& c) {
  json data{{"n_bars", r.n_bars},
            {"n_returns", r.n_returns},
            {"first_date", to_iso(r.first_date)},
            {"last_date", to_iso(r.last_date)}};
  if (r.parse_stats) {
    data["rows_total"] = r.parse_stats->rows_total;
    data["rows_rejected"] = r.parse_stats->rows_rejected;
  }
  return json{{"format", "tsfacts.stock_report"},
              {"version", 1},
              {"symbol", r.symbol},
              {"data", data},
              {"config", config_json(c)},
              {"moments", moments_json(r.moments)},
              {"leverage", section_json(r.leverage, leverage_json)},
              {"gaussianity", section_json(r.gaussianity, gaussianity_json)},
              {"dependence", dependence_json(r.dependence)},
              {"portmanteau", portmanteau_json(r.portmanteau)},
              {"power_law", section_json(r.power_law, power_law_json)},
              {"tail_returns", section_json(r.tail_returns, tail_json)},
              {"garch", section_json(r.garch, garch_json)}};
}

json histogram_json(const TailIndexHistogram& h) {
  return json{{"lower", h.lower},
              {"bin_width", h.bin_width},
              {"counts", h.counts},
              {"overflow", h.overflow}};
}

json tallies_json(const BatchTallies& t) {
  return json{{"n_reports", t.n_reports},
              {"portmanteau_raw_reject_1pct", t.portmanteau_raw_reject_1pct},
              {"portmanteau_squared_reject_1pct", t.portmanteau_squared_reject_1pct},
              {"positive_skewness", t.positive_skewness},
              {"positive_leverage", t.positive_leverage},
              {"tail_alpha_returns", histogram_json(t.tail_alpha_returns)},
              {"tail_alpha_residuals", histogram_json(t.tail_alpha_residuals)}};
}

json batch_json(const BatchReport& b) {
  json failures = json::array();
  for (const auto& f : b.failures)
    failures.push_back(json{{"file", f.file}, {"message", f.message}});
  json reports = json::array();
  for (const auto& r : b.reports) reports.push_back(stock_json(r, b.config));
  return json{{"format", "tsfacts.batch_report"},
              {"version", 1},
              {"config", config_json(b.config)},
              {"tallies", tallies_json(b.tallies)},
              {"failures", failures},
              {"reports", reports}};
}

void write_file(const std::filesystem::path& path, std::string_view content) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw Error("cannot open " + path.string() + " for writing");
  out.write(content.data(), static_cast<std::streamsize>(content.size()));
  out.flush();
  if (!out) throw Error("write failed for " + path.string());
}

}  // namespace

std::string stock_report_json(const StockReport& report, const AnalysisConfig& config) {
  return stock_json(report, config).dump(2) + "\n";
}

std::string batch_report_json(const BatchReport& batch) {
  return batch_json(batch).dump(2) + "\n";
}

void write_batch_outputs(const BatchReport& batch, const std::filesystem::path& out_dir) {
  std::error_code ec;
  std::filesystem::create_directories(out_dir, ec);
  if (!std::filesystem::is_directory(out_dir))
    throw Error("cannot create output directory " + out_dir.string());

  for (const auto& rep : batch.reports)
    write_file(out_dir / (rep.symbol + ".json"), stock_report_json(rep, batch.config));
  write_file(out_dir / "batch.json", batch_report_json(batch));

  std::string skew = "symbol,skewness\n";
  for (const auto& r : batch.reports)
    skew += r.symbol + "," + fmt(r.moments.skewness) + "\n";
  write_file(out_dir / "skewness.csv", skew);

  std::string norm = "symbol,frequency,n,ks_p,shapiro_wilk_p\n";
  for (const auto& r : batch.reports) {
    if (!r.gaussianity.present()) continue;
    for (const auto& fr : r.gaussianity->results)
      norm += r.symbol + "," + std::string(to_string(fr.frequency)) + "," +
              std::to_string(fr.n) + "," + fmt(fr.ks.p_value) + "," +
              fmt(fr.sw.p_value) + "\n";
  }
  write_file(out_dir / "normality_pvalues.csv", norm);

  std::string lev = "symbol,lag,correlation\n";
  for (const auto& r : batch.reports)
    if (r.leverage.present())
      lev += r.symbol + "," + std::to_string(r.leverage->lag) + "," +
             fmt(r.leverage->correlation) + "\n";
  write_file(out_dir / "leverage.csv", lev);

  std::string decay = "symbol,lag,acf_absolute\n";
  for (const auto& r : batch.reports) {
    if (!r.power_law.present()) continue;
    const AcfSeries& a = r.power_law->decay;
    for (int lag = 1; lag <= a.max_lag(); ++lag)
      decay += r.symbol + "," + std::to_string(lag) + "," + fmt(a.at(lag)) + "\n";
  }
  write_file(out_dir / "acf_decay.csv", decay);

  std::string tails = "symbol,source,xi,alpha,k,n_tail_sample\n";
  auto tail_row = [&tails](const std::string& symbol, std::string_view source,
                           const TailIndexEstimate& e) {
    tails += symbol + "," + std::string(source) + "," + fmt(e.xi) + "," +
             fmt(e.alpha) + "," + std::to_string(e.k) + "," +
             std::to_string(e.n_tail_sample) + "\n";
  };
  for (const auto& r : batch.reports) {
    if (r.tail_returns.present())
      tail_row(r.symbol, "returns", r.tail_returns->estimate);
    if (r.garch.present() && r.garch->residual_tail.present())
      tail_row(r.symbol, "garch_residuals", r.garch->residual_tail->estimate);
  }
  write_file(out_dir / "tail_index.csv", tails);
}

}  // namespace tsfacts
