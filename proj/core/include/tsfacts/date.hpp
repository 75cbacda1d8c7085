#pragma once

#include <compare>
#include <optional>
#include <string>
#include <string_view>

namespace tsfacts {

struct Date {
  int year = 0;
  int month = 0;  // 1..12
  int day = 0;    // 1..31

  friend auto operator<=>(const Date&, const Date&) = default;
};

bool date_valid(const Date& d);

// Accepts "YYYY-MM-DD" and "Mon DD, YYYY" (e.g. "Feb 19, 2017"). Anything
// else -- including ambiguous numeric layouts like "02/03/2017" -- is
// rejected by returning nullopt.
std::optional<Date> parse_date(std::string_view text);

std::string to_iso(const Date& d);

}  // namespace tsfacts
