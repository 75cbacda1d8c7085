#include "tsfacts/tails.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <limits>
#include <vector>

#include "tsfacts/error.hpp"

namespace tsfacts {

std::string_view to_string(TailSide s) {
  switch (s) {
    case TailSide::upper: return "upper";
    case TailSide::lower: return "lower";
    case TailSide::both_abs: return "both_abs";
  }
  throw Error("unknown tail side");
}

std::string_view to_string(TailClass c) {
  switch (c) {
    case TailClass::infinite_variance: return "infinite_variance";
    case TailClass::stylized_band: return "stylized_band";
    case TailClass::near_gaussian_tail: return "near_gaussian_tail";
  }
  throw Error("unknown tail class");
}

namespace {

std::vector<double> tail_sample(std::span<const double> values, TailSide side) {
  std::vector<double> out;
  out.reserve(values.size());
  for (double v : values) {
    double t = v;
    if (side == TailSide::lower) t = -v;
    else if (side == TailSide::both_abs) t = std::fabs(v);
    if (t > 0.0) out.push_back(t);
  }
  return out;
}

TailIndexEstimate from_sorted_logs(const std::vector<double>& log_desc, std::size_t k,
                                   std::size_t n_tail, TailSide side) {
  double sum = 0.0;
  for (std::size_t i = 0; i < k; ++i) sum += log_desc[i];
  const double xi = sum / static_cast<double>(k) - log_desc[k];
  if (!(xi > 0.0))
    throw Error("hill_estimate: degenerate tail (top order statistics all equal)");
  TailIndexEstimate est;
  est.xi = xi;
  est.alpha = 1.0 / xi;
  est.k = k;
  est.n_tail_sample = n_tail;
  est.std_error = xi / std::sqrt(static_cast<double>(k));
  est.side = side;
  return est;
}

}  // namespace

TailIndexEstimate hill_estimate(std::span<const double> values, std::size_t k, TailSide side) {
  std::vector<double> v = tail_sample(values, side);
  const std::size_t np = v.size();
  if (k < 1 || k >= np)
    throw Error("hill_estimate: need 1 <= k < positive-sample size (k=" + std::to_string(k) +
                ", n'=" + std::to_string(np) + ")");

  // Only the top k+1 order statistics matter.
  std::nth_element(v.begin(), v.begin() + static_cast<std::ptrdiff_t>(k), v.end(),
                   std::greater<>());
  std::vector<double> logs(k + 1);
  for (std::size_t i = 0; i <= k; ++i) logs[i] = std::log(v[i]);
  // from_sorted_logs only needs position k exact plus the sum of the first k,
  // which nth_element guarantees.
  return from_sorted_logs(logs, k, np, side);
}

TailIndexEstimate adaptive_hill(std::span<const double> values, TailSide side) {
  std::vector<double> v = tail_sample(values, side);
  const std::size_t np = v.size();
  if (np < 100) throw Error("adaptive_hill: need at least 100 positive values, got " +
                            std::to_string(np));

  const auto k_min = static_cast<std::size_t>(std::ceil(0.01 * static_cast<double>(np)));
  const auto k_max = static_cast<std::size_t>(std::floor(0.25 * static_cast<double>(np)));
  const auto half = static_cast<std::size_t>(std::ceil(0.02 * static_cast<double>(np)));

  std::sort(v.begin(), v.end(), std::greater<>());
  std::vector<double> logs(k_max + 1);
  for (std::size_t i = 0; i <= k_max; ++i) logs[i] = std::log(v[i]);

  // xi(k) for the whole scan range via a running sum of the top-k logs.
  std::vector<double> xi(k_max - k_min + 1);
  double log_sum = 0.0;
  for (std::size_t i = 0; i < k_min; ++i) log_sum += logs[i];
  bool any_valid = false;
  for (std::size_t k = k_min; k <= k_max; ++k) {
    xi[k - k_min] = log_sum / static_cast<double>(k) - logs[k];
    if (xi[k - k_min] > 0.0) any_valid = true;
    log_sum += logs[k];
  }
  if (!any_valid) throw Error("adaptive_hill: degenerate tail (ties throughout the scan range)");

  // Slide the stability window; skip windows containing degenerate xi = 0
  // entries (possible with heavily tied data).
  if (k_min + half > k_max || k_max - half < k_min + half)
    throw Error("adaptive_hill: sample too small for the stability window");

  std::size_t best_k = 0;
  double best_sd = std::numeric_limits<double>::infinity();
  const std::size_t w = 2 * half + 1;
  for (std::size_t k = k_min + half; k + half <= k_max; ++k) {
    const std::size_t lo = k - half - k_min;
    double s1 = 0.0;
    bool ok = true;
    for (std::size_t i = lo; i < lo + w; ++i) {
      if (!(xi[i] > 0.0)) { ok = false; break; }
      s1 += xi[i];
    }
    if (!ok) continue;
    const double mean = s1 / static_cast<double>(w);
    double s2 = 0.0;
    for (std::size_t i = lo; i < lo + w; ++i) {
      const double d = xi[i] - mean;
      s2 += d * d;
    }
    const double sd = std::sqrt(s2 / static_cast<double>(w));
    if (sd < best_sd) {
      best_sd = sd;
      best_k = k;
    }
  }
  if (best_k == 0)
    throw Error("adaptive_hill: no stable threshold found (degenerate scan range)");

  return from_sorted_logs(logs, best_k, np, side);
}

TailClass classify_tail(const TailIndexEstimate& estimate) {
  if (!(estimate.xi > 0.0)) throw Error("classify_tail: invalid estimate");
  if (estimate.alpha <= 2.0) return TailClass::infinite_variance;
  if (estimate.alpha < 5.0) return TailClass::stylized_band;
  return TailClass::near_gaussian_tail;
}

}  // namespace tsfacts
