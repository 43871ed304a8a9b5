#pragma once

// Flat record of one computed row plus csv / markdown / json rendering.
// JSON carries full-precision doubles (exact round-trip); the table formats
// use the display rounding of the tabulated values: last digit rounded up
// for upper-bound columns, down for the lower bound c1.

#include <cmath>
#include <cstdio>
#include <string>
#include <vector>

#include <json.hpp>

#include "zdc/pipeline.hpp"

namespace zdc {

enum class OutputFormat { Csv, Markdown, Json };

inline OutputFormat parse_format(const std::string& s) {
  if (s == "csv") return OutputFormat::Csv;
  if (s == "markdown" || s == "md") return OutputFormat::Markdown;
  if (s == "json") return OutputFormat::Json;
  throw domain_error("unknown output format: " + s);
}

struct Record {
  double t0_log, t1_log, alpha0;
  double u, v, w, x;
  double d11, d12, d21, d22, d3, d4, d5;
  double b1, b2;
  double c1, c2, c3, c4, c5;
  double c1_part, c2_part, big_c, big_b;
  std::string d3_mode;

  bool operator==(const Record&) const = default;
};

inline Record make_record(const RowConstants& rc) {
  Record r{};
  r.t0_log = rc.spec.t0.value;
  r.t1_log = rc.spec.t1.value;
  r.alpha0 = rc.spec.alpha0;
  r.u = rc.params.u;
  r.v = rc.params.v;
  r.w = rc.params.w;
  r.x = rc.params.x;
  r.d11 = rc.d.d11;
  r.d12 = rc.d.d12;
  r.d21 = rc.d.d21;
  r.d22 = rc.d.d22;
  r.d3 = rc.d.d3;
  r.d4 = rc.d.d4;
  r.d5 = rc.d.d5;
  r.b1 = rc.zc.b1;
  r.b2 = rc.zc.b2;
  r.c1 = rc.c.c1;
  r.c2 = rc.c.c2;
  r.c3 = rc.c.c3;
  r.c4 = rc.c.c4;
  r.c5 = rc.c.c5;
  r.c1_part = rc.est.c1_part;
  r.c2_part = rc.est.c2_part;
  r.big_c = rc.est.big_c;
  r.big_b = rc.est.big_b;
  r.d3_mode = rc.d3_mode == D3Mode::Literal ? "literal" : "table";
  return r;
}

namespace detail {
inline const std::vector<std::pair<const char*, double Record::*>>& record_fields() {
  static const std::vector<std::pair<const char*, double Record::*>> f = {
      {"t0_log", &Record::t0_log}, {"t1_log", &Record::t1_log}, {"alpha0", &Record::alpha0},
      {"u", &Record::u},           {"v", &Record::v},           {"w", &Record::w},
      {"x", &Record::x},           {"d11", &Record::d11},       {"d12", &Record::d12},
      {"d21", &Record::d21},       {"d22", &Record::d22},       {"d3", &Record::d3},
      {"d4", &Record::d4},         {"d5", &Record::d5},         {"b1", &Record::b1},
      {"b2", &Record::b2},         {"c1", &Record::c1},         {"c2", &Record::c2},
      {"c3", &Record::c3},         {"c4", &Record::c4},         {"c5", &Record::c5},
      {"C1_part", &Record::c1_part}, {"C2_part", &Record::c2_part},
      {"C", &Record::big_c},       {"B", &Record::big_b}};
  return f;
}
}  // namespace detail

inline nlohmann::json to_json(const Record& r) {
  nlohmann::json j;
  for (const auto& [name, ptr] : detail::record_fields()) j[name] = r.*ptr;
  j["mode"] = r.d3_mode;
  return j;
}

inline Record record_from_json(const nlohmann::json& j) {
  Record r{};
  for (const auto& [name, ptr] : detail::record_fields()) r.*ptr = j.at(name).get<double>();
  r.d3_mode = j.at("mode").get<std::string>();
  return r;
}

// decimal rounding helpers for table display
inline double round_up_decimals(double v, int k) {
  double s = std::pow(10.0, k);
  return std::ceil(v * s - 1e-9) / s;
}
inline double round_down_decimals(double v, int k) {
  double s = std::pow(10.0, k);
  return std::floor(v * s + 1e-9) / s;
}

inline std::string format_fixed(double v, int k) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.*f", k, v);
  return buf;
}

// C: two decimals below 1e6, three significant digits above.
inline std::string format_big_c(double c) {
  char buf[64];
  if (c < 1e6) {
    std::snprintf(buf, sizeof buf, "%.2f", c);
  } else {
    std::snprintf(buf, sizeof buf, "%.3g", c);
  }
  return buf;
}

inline std::string format_big_b(double b) { return format_fixed(round_up_decimals(b, 3), 3); }

inline std::string format_full(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

}  // namespace zdc
