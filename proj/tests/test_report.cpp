#include <catch2/catch_amalgamated.hpp>

#include "zdc/report.hpp"

using namespace zdc;

TEST_CASE("json round-trip is exact") {
  auto sched = default_schedule();
  auto rc = compute_row(sched[0].spec, sched[0].params, D3Mode::Table);
  Record rec = make_record(rc);
  auto j = to_json(rec);
  std::string text = j.dump();
  Record back = record_from_json(nlohmann::json::parse(text));
  CHECK(back == rec);
}

TEST_CASE("display formats") {
  CHECK(format_big_c(37341.719) == "37341.72");
  CHECK(format_big_c(999999.994) == "999999.99");
  CHECK(format_big_c(1.1163e6) == "1.12e+06");
  CHECK(format_big_c(5.761e8) == "5.76e+08");
  CHECK(format_big_b(14.1596740) == "14.160");
  CHECK(format_big_b(7.9350558) == "7.936");   // rounds up, not to nearest
  CHECK(format_big_b(2.1514866) == "2.152");
  CHECK(round_up_decimals(0.1294007, 3) == 0.130);
  CHECK(round_down_decimals(0.9808549, 3) == 0.980);
  CHECK(round_up_decimals(0.13, 3) == 0.13);  // exact values stay put
}

TEST_CASE("format parsing") {
  CHECK(parse_format("csv") == OutputFormat::Csv);
  CHECK(parse_format("markdown") == OutputFormat::Markdown);
  CHECK(parse_format("json") == OutputFormat::Json);
  CHECK_THROWS_AS(parse_format("yaml"), domain_error);
}
