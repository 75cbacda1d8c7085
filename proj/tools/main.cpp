#include <charconv>
#include <cstdint>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "tsfacts/battery.hpp"
#include "tsfacts/error.hpp"
#include "tsfacts/report.hpp"

namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t' || s.front() == '\r'))
    s.remove_prefix(1);
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\r'))
    s.remove_suffix(1);
  return s;
}

template <typename Int>
Int parse_int(std::string_view key, std::string_view value) {
  Int out{};
  const auto res = std::from_chars(value.data(), value.data() + value.size(), out);
  if (res.ec != std::errc{} || res.ptr != value.data() + value.size())
    throw tsfacts::Error("config: bad value for '" + std::string(key) + "': " +
                         std::string(value));
  return out;
}

// key = value lines; blank lines and #-comments ignored. Unknown keys are
// errors so typos do not silently fall back to defaults.
void apply_config_file(tsfacts::AnalysisConfig& cfg, const std::string& path) {
  std::ifstream in(path);
  if (!in) throw tsfacts::Error("cannot open config file " + path);
  std::string line;
  while (std::getline(in, line)) {
    std::string_view sv = trim(line);
    if (sv.empty() || sv.front() == '#') continue;
    const std::size_t eq = sv.find('=');
    if (eq == std::string_view::npos)
      throw tsfacts::Error("config: expected key = value, got: " + std::string(sv));
    const std::string_view key = trim(sv.substr(0, eq));
    const std::string_view value = trim(sv.substr(eq + 1));
    if (key == "max_lag")
      cfg.max_lag = parse_int<int>(key, value);
    else if (key == "powerlaw_lag_min")
      cfg.powerlaw_lag_min = parse_int<int>(key, value);
    else if (key == "powerlaw_lag_max")
      cfg.powerlaw_lag_max = parse_int<int>(key, value);
    else if (key == "garch_p")
      cfg.garch_p = parse_int<int>(key, value);
    else if (key == "garch_q")
      cfg.garch_q = parse_int<int>(key, value);
    else if (key == "block_weekly")
      cfg.block_weekly = parse_int<int>(key, value);
    else if (key == "block_monthly")
      cfg.block_monthly = parse_int<int>(key, value);
    else if (key == "block_quarterly")
      cfg.block_quarterly = parse_int<int>(key, value);
    else if (key == "seed")
      cfg.seed = parse_int<std::uint64_t>(key, value);
    else
      throw tsfacts::Error("config: unknown key '" + std::string(key) + "'");
  }
}

void apply_garch_orders(tsfacts::AnalysisConfig& cfg, const std::string& orders) {
  const std::size_t comma = orders.find(',');
  if (comma == std::string::npos)
    throw tsfacts::Error("--garch expects p,q (e.g. 1,1)");
  cfg.garch_p = parse_int<int>("garch_p", trim(orders.substr(0, comma)));
  cfg.garch_q = parse_int<int>("garch_q", trim(orders.substr(comma + 1)));
}

int fail(const std::vector<std::string>& messages) {
  nlohmann::ordered_json errors = nlohmann::ordered_json::array();
  for (const auto& m : messages) errors.push_back({{"message", m}});
  std::cout << nlohmann::ordered_json{{"errors", errors}}.dump(2) << "\n";
  return 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"stylized-facts battery over daily OHLCV stock histories"};
  app.set_version_flag("--version", "tsfacts 1.0.0");
  app.require_subcommand(1);

  auto* analyze = app.add_subcommand(
      "analyze", "run the battery over a directory of per-symbol CSV files");
  std::string dir;
  std::string config_path;
  std::string out_dir = "reports";
  int max_lag = 0;
  std::string garch_orders;
  std::uint64_t seed = 0;
  analyze->add_option("dir", dir, "directory containing <symbol>.csv files")
      ->required();
  analyze->add_option("--config", config_path, "key = value config file");
  analyze->add_option("--out", out_dir, "output directory (default: reports)");
  analyze->add_option("--max-lag", max_lag, "ACF/portmanteau lag depth");
  analyze->add_option("--garch", garch_orders, "GARCH orders as p,q");
  analyze->add_option("--seed", seed, "seed for stochastic sub-procedures");

  CLI11_PARSE(app, argc, argv);

  try {
    tsfacts::AnalysisConfig cfg;
    if (!config_path.empty()) apply_config_file(cfg, config_path);
    // command-line flags win over the config file
    if (analyze->count("--max-lag") > 0) cfg.max_lag = max_lag;
    if (!garch_orders.empty()) apply_garch_orders(cfg, garch_orders);
    if (analyze->count("--seed") > 0) cfg.seed = seed;
    cfg.validate();

    const tsfacts::BatchReport batch = tsfacts::run_batch(dir, cfg);
    tsfacts::write_batch_outputs(batch, out_dir);

    std::cout << "analyzed " << batch.reports.size() << " of "
              << (batch.reports.size() + batch.failures.size())
              << " files; reports in " << out_dir << "\n";
    for (const auto& f : batch.failures)
      std::cerr << "failed: " << f.file << ": " << f.message << "\n";
    return 0;
  } catch (const std::exception& e) {
    return fail({e.what()});
  }
}
