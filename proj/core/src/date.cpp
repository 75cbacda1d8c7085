#include "tsfacts/date.hpp"

#include <array>
#include <cctype>
#include <charconv>

namespace tsfacts {

namespace {

bool leap(int y) { return (y % 4 == 0 && y % 100 != 0) || y % 400 == 0; }

int days_in_month(int y, int m) {
  static constexpr std::array<int, 13> d = {0, 31, 28, 31, 30, 31, 30,
                                            31, 31, 30, 31, 30, 31};
  if (m == 2 && leap(y)) return 29;
  return d[m];
}

bool parse_int(std::string_view s, int& out) {
  if (s.empty()) return false;
  auto [p, ec] = std::from_chars(s.data(), s.data() + s.size(), out);
  return ec == std::errc() && p == s.data() + s.size();
}

int month_from_abbrev(std::string_view s) {
  static constexpr std::array<std::string_view, 12> names = {
      "jan", "feb", "mar", "apr", "may", "jun",
      "jul", "aug", "sep", "oct", "nov", "dec"};
  if (s.size() != 3) return 0;
  std::string lower;
  for (char c : s) lower += static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
  for (int i = 0; i < 12; ++i)
    if (lower == names[i]) return i + 1;
  return 0;
}

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

}  // namespace

bool date_valid(const Date& d) {
  return d.year >= 1 && d.year <= 9999 && d.month >= 1 && d.month <= 12 &&
         d.day >= 1 && d.day <= days_in_month(d.year, d.month);
}

std::optional<Date> parse_date(std::string_view text) {
  std::string_view s = trim(text);

  // ISO-8601: YYYY-MM-DD
  if (s.size() == 10 && s[4] == '-' && s[7] == '-') {
    Date d;
    if (parse_int(s.substr(0, 4), d.year) && parse_int(s.substr(5, 2), d.month) &&
        parse_int(s.substr(8, 2), d.day) && date_valid(d))
      return d;
    return std::nullopt;
  }

  // "Mon DD, YYYY"
  auto comma = s.find(',');
  auto space = s.find(' ');
  if (comma != std::string_view::npos && space != std::string_view::npos && space < comma) {
    Date d;
    d.month = month_from_abbrev(trim(s.substr(0, space)));
    if (d.month == 0) return std::nullopt;
    if (!parse_int(trim(s.substr(space + 1, comma - space - 1)), d.day)) return std::nullopt;
    if (!parse_int(trim(s.substr(comma + 1)), d.year)) return std::nullopt;
    if (!date_valid(d)) return std::nullopt;
    return d;
  }

  return std::nullopt;
}

std::string to_iso(const Date& d) {
  char buf[11];
  std::snprintf(buf, sizeof buf, "%04d-%02d-%02d", d.year, d.month, d.day);
  return buf;
}

}  // namespace tsfacts
