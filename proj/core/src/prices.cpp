#include "tsfacts/prices.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <cmath>
#include <optional>

#include "tsfacts/error.hpp"

namespace tsfacts {

namespace {

std::vector<std::string> split_csv_line(std::string_view line) {
  std::vector<std::string> out;
  std::string cur;
  bool in_quotes = false;
  for (std::size_t i = 0; i < line.size(); ++i) {
    const char c = line[i];
    if (in_quotes) {
      if (c == '"') {
        if (i + 1 < line.size() && line[i + 1] == '"') {
          cur += '"';
          ++i;
        } else {
          in_quotes = false;
        }
      } else {
        cur += c;
      }
    } else if (c == '"') {
      in_quotes = true;
    } else if (c == ',') {
      out.push_back(std::move(cur));
      cur.clear();
    } else {
      cur += c;
    }
  }
  out.push_back(std::move(cur));
  return out;
}

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

// Plain decimal number, tolerating thousands separators and a trailing '%'.
std::optional<double> parse_number(std::string_view raw) {
  std::string_view s = trim(raw);
  if (!s.empty() && s.back() == '%') s.remove_suffix(1);
  std::string compact;
  compact.reserve(s.size());
  for (char c : s) {
    if (c == ',' || c == ' ') continue;
    compact += c;
  }
  if (compact.empty()) return std::nullopt;
  double v = 0.0;
  auto [p, ec] = std::from_chars(compact.data(), compact.data() + compact.size(), v);
  if (ec != std::errc() || p != compact.data() + compact.size()) return std::nullopt;
  if (!std::isfinite(v)) return std::nullopt;
  return v;
}

std::optional<std::uint64_t> parse_volume(std::string_view raw) {
  std::string_view s = trim(raw);
  if (s.empty()) return std::nullopt;
  // Plain integer counts parse exactly, so serialized series round-trip even
  // when the count exceeds the 2^53 integer range of a double.
  {
    std::uint64_t exact = 0;
    auto [p, ec] = std::from_chars(s.data(), s.data() + s.size(), exact);
    if (ec == std::errc() && p == s.data() + s.size()) return exact;
  }
  double scale = 1.0;
  const char suffix = s.back();
  if (suffix == 'K' || suffix == 'k') {
    scale = 1e3;
    s.remove_suffix(1);
  } else if (suffix == 'M' || suffix == 'm') {
    scale = 1e6;
    s.remove_suffix(1);
  } else if (suffix == 'B' || suffix == 'b') {
    scale = 1e9;
    s.remove_suffix(1);
  }
  auto v = parse_number(s);
  if (!v || *v < 0.0) return std::nullopt;
  const double scaled = std::round(*v * scale);
  // stay clear of the uint64 edge, where the double->integer cast is undefined
  if (scaled >= 1.8e19) return std::nullopt;
  return static_cast<std::uint64_t>(scaled);
}

void append_double(std::string& out, double v) {
  char buf[32];
  auto [p, ec] = std::to_chars(buf, buf + sizeof buf, v);
  out.append(buf, p);
  (void)ec;
}

}  // namespace

PriceSeries parse_price_csv(std::string_view text, std::string_view symbol,
                            CsvParseStats* stats) {
  PriceSeries series;
  series.symbol = std::string(symbol);
  CsvParseStats st;

  std::size_t pos = 0;
  bool header_skipped = false;
  while (pos <= text.size()) {
    const std::size_t eol = text.find('\n', pos);
    std::string_view line = text.substr(pos, eol == std::string_view::npos ? std::string_view::npos : eol - pos);
    pos = eol == std::string_view::npos ? text.size() + 1 : eol + 1;
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    if (trim(line).empty()) continue;
    if (!header_skipped) {
      header_skipped = true;
      continue;
    }
    ++st.rows_total;

    auto cells = split_csv_line(line);
    if (cells.size() < 7) {
      ++st.rows_rejected;
      continue;
    }
    const auto date = parse_date(cells[0]);
    const auto close = parse_number(cells[1]);
    const auto open = parse_number(cells[2]);
    const auto high = parse_number(cells[3]);
    const auto low = parse_number(cells[4]);
    const auto volume = parse_volume(cells[5]);
    const auto change = parse_number(cells[6]);
    if (!date || !close || !open || !high || !low || !volume || !change) {
      ++st.rows_rejected;
      continue;
    }
    if (*close <= 0.0)
      throw Error("non-positive close " + std::string(trim(cells[1])) + " on " + to_iso(*date) +
                  " in " + series.symbol);
    // Bars violating basic OHLC consistency are dropped, same as unparseable rows.
    if (*open <= 0.0 || *low > *high || *close < *low || *close > *high || *open < *low ||
        *open > *high) {
      ++st.rows_rejected;
      continue;
    }
    series.bars.push_back(PriceBar{*date, *close, *open, *high, *low, *volume, *change});
  }

  std::stable_sort(series.bars.begin(), series.bars.end(),
                   [](const PriceBar& a, const PriceBar& b) { return a.date < b.date; });
  for (std::size_t i = 1; i < series.bars.size(); ++i) {
    if (series.bars[i].date == series.bars[i - 1].date)
      throw Error("duplicate date " + to_iso(series.bars[i].date) + " in " + series.symbol);
  }
  if (series.bars.size() < 2)
    throw Error("fewer than 2 valid rows in " + series.symbol +
                " (got " + std::to_string(series.bars.size()) + ")");

  if (stats) *stats = st;
  return series;
}

std::string serialize_price_csv(const PriceSeries& series) {
  std::string out = "Date,Close,Open,High,Low,Volume,ChangePct\n";
  for (const auto& b : series.bars) {
    out += to_iso(b.date);
    out += ',';
    append_double(out, b.close);
    out += ',';
    append_double(out, b.open);
    out += ',';
    append_double(out, b.high);
    out += ',';
    append_double(out, b.low);
    out += ',';
    out += std::to_string(b.volume);
    out += ',';
    append_double(out, b.change_pct);
    out += '\n';
  }
  return out;
}

}  // namespace tsfacts
