#pragma once

#include <filesystem>
#include <string>

#include "tsfacts/battery.hpp"

namespace tsfacts {

// JSON renderings of battery results: 2-space indent, trailing newline,
// insertion-ordered keys, non-finite numbers as null. Output is
// byte-deterministic for identical inputs. Schemas are versioned via the
// top-level "format"/"version" pair and documented in the README.
std::string stock_report_json(const StockReport& report, const AnalysisConfig& config);
std::string batch_report_json(const BatchReport& batch);

// Writes one <symbol>.json per stock, batch.json, and the plot-data CSVs
// (skewness.csv, normality_pvalues.csv, leverage.csv, acf_decay.csv,
// tail_index.csv) into out_dir, which is created if missing.
void write_batch_outputs(const BatchReport& batch, const std::filesystem::path& out_dir);

}  // namespace tsfacts
