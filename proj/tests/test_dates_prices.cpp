#include <doctest.h>

#include <string>

#include "tsfacts/date.hpp"
#include "tsfacts/error.hpp"
#include "tsfacts/prices.hpp"

using namespace tsfacts;

TEST_CASE("iso dates parse strictly") {
  auto d = parse_date("2017-02-19");
  REQUIRE(d.has_value());
  CHECK(*d == Date{2017, 2, 19});
  CHECK(to_iso(*d) == "2017-02-19");

  CHECK_FALSE(parse_date("2017-2-19").has_value());   // not zero-padded
  CHECK_FALSE(parse_date("02/03/2017").has_value());  // ambiguous layout
  CHECK_FALSE(parse_date("2017-13-01").has_value());
  CHECK_FALSE(parse_date("2017-00-10").has_value());
  CHECK_FALSE(parse_date("").has_value());
  CHECK_FALSE(parse_date("yesterday").has_value());
}

TEST_CASE("month-name dates parse") {
  CHECK(*parse_date("Feb 19, 2017") == Date{2017, 2, 19});
  CHECK(*parse_date("Jan 02, 2007") == Date{2007, 1, 2});
  CHECK(*parse_date("Dec 31, 1999") == Date{1999, 12, 31});
  CHECK(*parse_date("sep 5, 2012") == Date{2012, 9, 5});  // case-insensitive
  CHECK_FALSE(parse_date("Foo 19, 2017").has_value());
  CHECK_FALSE(parse_date("Feb 19 2017").has_value());  // missing comma
}

TEST_CASE("calendar validity including leap years") {
  CHECK(date_valid(Date{2016, 2, 29}));   // leap
  CHECK_FALSE(date_valid(Date{2017, 2, 29}));
  CHECK_FALSE(date_valid(Date{1900, 2, 29}));  // century, not a leap year
  CHECK(date_valid(Date{2000, 2, 29}));        // 400-year rule
  CHECK_FALSE(date_valid(Date{2017, 4, 31}));
  CHECK_FALSE(parse_date("2017-02-29").has_value());
  CHECK_FALSE(parse_date("Feb 30, 2016").has_value());
}

TEST_CASE("dates order chronologically") {
  CHECK(Date{2010, 1, 2} < Date{2010, 1, 3});
  CHECK(Date{2010, 1, 31} < Date{2010, 2, 1});
  CHECK(Date{2009, 12, 31} < Date{2010, 1, 1});
}

namespace {
const char* kSample =
    "\"Date\",\"Price\",\"Open\",\"High\",\"Low\",\"Vol.\",\"Change %\"\n"
    "\"Feb 21, 2017\",\"1,250.50\",\"1,240.00\",\"1,260.00\",\"1,235.25\",\"1.2M\",\"0.85%\"\n"
    "\"Feb 20, 2017\",\"1,240.00\",\"1,233.00\",\"1,245.00\",\"1,230.00\",\"850.5K\",\"0.57%\"\n"
    "\"Feb 17, 2017\",\"1,233.00\",\"1,228.00\",\"1,236.00\",\"1,221.00\",\"2.1M\",\"-0.40%\"\n";
}  // namespace

TEST_CASE("investing-style csv parses and sorts ascending") {
  CsvParseStats stats;
  const PriceSeries s = parse_price_csv(kSample, "DEMO", &stats);
  REQUIRE(s.bars.size() == 3);
  CHECK(stats.rows_total == 3);
  CHECK(stats.rows_rejected == 0);
  CHECK(s.symbol == "DEMO");
  // descending input comes out ascending
  CHECK(s.bars[0].date == Date{2017, 2, 17});
  CHECK(s.bars[2].date == Date{2017, 2, 21});
  CHECK(s.bars[2].close == doctest::Approx(1250.50));
  CHECK(s.bars[2].open == doctest::Approx(1240.00));
  CHECK(s.bars[2].high == doctest::Approx(1260.00));
  CHECK(s.bars[2].low == doctest::Approx(1235.25));
  CHECK(s.bars[2].volume == 1200000);
  CHECK(s.bars[1].volume == 850500);
  CHECK(s.bars[0].volume == 2100000);
  CHECK(s.bars[0].change_pct == doctest::Approx(-0.40));
}

TEST_CASE("volume suffixes") {
  auto csv = [](const std::string& vol) {
    return "Date,Price,Open,High,Low,Vol.,Change %\n"
           "2017-01-02,100,100,101,99," + vol + ",0.0%\n"
           "2017-01-03,101,100,102,99,1K,1.0%\n";
  };
  CHECK(parse_price_csv(csv("1.2K"), "V").bars[0].volume == 1200);
  CHECK(parse_price_csv(csv("3.4M"), "V").bars[0].volume == 3400000);
  CHECK(parse_price_csv(csv("2B"), "V").bars[0].volume == 2000000000ULL);
  CHECK(parse_price_csv(csv("12345"), "V").bars[0].volume == 12345);
}

TEST_CASE("unparseable rows are rejected and counted") {
  const std::string text =
      "Date,Price,Open,High,Low,Vol.,Change %\n"
      "2017-01-02,100,100,101,99,1K,0.0%\n"
      "not-a-date,100,100,101,99,1K,0.0%\n"          // bad date
      "2017-01-03,101,100,102,99,-,1.0%\n"           // missing volume
      "2017-01-04,abc,100,102,99,1K,1.0%\n"          // bad close
      "2017-01-05,too,few,cells\n"                   // short row
      "2017-01-06,104,103,105,102,2K,1.0%\n";
  CsvParseStats stats;
  const PriceSeries s = parse_price_csv(text, "REJ", &stats);
  CHECK(s.bars.size() == 2);
  CHECK(stats.rows_total == 6);
  CHECK(stats.rows_rejected == 4);
}

TEST_CASE("ohlc-inconsistent rows are rejected") {
  const std::string text =
      "Date,Price,Open,High,Low,Vol.,Change %\n"
      "2017-01-02,100,100,101,99,1K,0.0%\n"
      "2017-01-03,105,100,102,99,1K,1.0%\n"   // close above high
      "2017-01-04,101,100,99,102,1K,1.0%\n"   // low > high
      "2017-01-05,104,103,105,102,2K,1.0%\n";
  CsvParseStats stats;
  const PriceSeries s = parse_price_csv(text, "OHLC", &stats);
  CHECK(s.bars.size() == 2);
  CHECK(stats.rows_rejected == 2);
}

TEST_CASE("hard errors: duplicates, non-positive close, too few rows") {
  const std::string dup =
      "Date,Price,Open,High,Low,Vol.,Change %\n"
      "2017-01-02,100,100,101,99,1K,0.0%\n"
      "\"Jan 02, 2017\",101,100,102,99,1K,1.0%\n";
  CHECK_THROWS_WITH_AS(parse_price_csv(dup, "DUP"),
                       doctest::Contains("duplicate date 2017-01-02"), Error);

  const std::string neg =
      "Date,Price,Open,High,Low,Vol.,Change %\n"
      "2017-01-02,-5,100,101,99,1K,0.0%\n"
      "2017-01-03,101,100,102,99,1K,1.0%\n";
  CHECK_THROWS_AS(parse_price_csv(neg, "NEG"), Error);

  const std::string one =
      "Date,Price,Open,High,Low,Vol.,Change %\n"
      "2017-01-02,100,100,101,99,1K,0.0%\n";
  CHECK_THROWS_AS(parse_price_csv(one, "ONE"), Error);

  CHECK_THROWS_AS(parse_price_csv("Date,Price\n", "EMPTY"), Error);
}

TEST_CASE("serialize/parse round-trip is exact") {
  CsvParseStats stats;
  const PriceSeries s = parse_price_csv(kSample, "DEMO", &stats);
  const std::string canon = serialize_price_csv(s);
  const PriceSeries again = parse_price_csv(canon, "DEMO");
  CHECK(again == s);
  // and the canonical form itself is a fixed point
  CHECK(serialize_price_csv(again) == canon);
}

TEST_CASE("round-trip preserves awkward doubles") {
  PriceSeries s;
  s.symbol = "RT";
  s.bars = {
      PriceBar{Date{2016, 7, 1}, 0.1, 0.1, 0.30000000000000004, 0.05, 0, -12.75},
      PriceBar{Date{2016, 7, 4}, 1234.5678901234567, 1000.1, 2000.25, 999.9,
               18446744073709551615ULL, 3.14159},
  };
  const PriceSeries back = parse_price_csv(serialize_price_csv(s), "RT");
  CHECK(back == s);
}
