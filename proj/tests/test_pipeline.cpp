#include <catch2/catch_amalgamated.hpp>

#include <cmath>

#include "zdc/pipeline.hpp"
#include "zdc/report.hpp"

using namespace zdc;
using Catch::Matchers::WithinAbs;
using Catch::Matchers::WithinRel;

TEST_CASE("schedule shape") {
  auto sched = default_schedule();
  REQUIRE(sched.size() == 39);
  CHECK(sched[0].spec.t0.value == kLogRiemannHeight);
  for (size_t i = 0; i + 1 < sched.size(); ++i)
    CHECK(sched[i].spec.t1.value == sched[i + 1].spec.t0.value);
  CHECK(sched.back().spec.t1.value == 6.7e12);
  CHECK(sched.back().params.u == reference::kUniformU);
  for (const auto& row : sched) {
    CHECK_NOTHROW(row.spec.validate());
    CHECK(row.params.feasible());
  }
}

TEST_CASE("stored table is internally consistent") {
  // B column equals 2x rounded up to three decimals; C and B move monotonically
  double prev_c = 0.0, prev_b = 1e9;
  for (const auto& r : reference::kRows) {
    CHECK(round_up_decimals(2.0 * r.x, 3) == r.big_b);
    CHECK(r.big_c >= prev_c);
    CHECK(r.big_b < prev_b);
    prev_c = r.big_c;
    prev_b = r.big_b;
    if (r.t0_log >= 1000.0) CHECK(r.big_b < 2.0);
  }
  CHECK(reference::kUniformBigB < reference::kRows.back().big_b);
}

TEST_CASE("reassembly from the stored columns reproduces stored C") {
  for (const auto& r : reference::kRows) {
    double csum = r.c2 + r.c3 + r.c4;
    double denom = r.c1 * r.c1 - r.c5;
    RangeSpec spec{LogHeight{r.t0_log}, LogHeight{r.t1_log}, r.alpha0};
    auto kind = select_region(spec.t1);
    double nu_log_t0 = zero_free_width(kind, spec.t0) * r.t0_log;
    double c = csum / denom * (r.b1 + r.b2 / nu_log_t0);
    // rows past 1e6 are stored at three significant digits; allow that
    // quantization on top of the 0.5% algebra tolerance
    double slack = r.big_c >= 1e6 ? 0.005 * r.big_c : 0.0;
    CHECK_THAT(c, WithinAbs(r.big_c, 0.005 * r.big_c + slack));
  }
  // the first row by hand
  const auto& r0 = reference::kRows[0];
  CHECK_THAT(r0.c2 + r0.c3 + r0.c4, WithinAbs(2704.129, 0.001));
  CHECK_THAT(r0.c1 * r0.c1 - r0.c5, WithinAbs(0.9004, 0.0001));
}

TEST_CASE("recomputed estimate lands on the stored one") {
  auto sched = default_schedule();
  for (int i : {0, 19, 31, 37}) {
    auto rc = compute_row(sched[i].spec, sched[i].params, D3Mode::Table);
    CHECK_THAT(rc.est.big_c, WithinRel(reference::kRows[i].big_c, 0.02));
    CHECK(rc.est.big_b == 2.0 * sched[i].params.x);
  }
}

TEST_CASE("uniform range satisfies the stated cap") {
  auto sched = default_schedule();
  auto rc = compute_row(sched[38].spec, sched[38].params, D3Mode::Table);
  CHECK(rc.est.big_c <= 1.62e11);
  CHECK(rc.est.big_b == 1.4477476);
  CHECK(round_up_decimals(rc.est.big_b, 3) == 1.448);
}

TEST_CASE("degenerate numerator gives a zero bound") {
  DetectorConstants c{0.9, 0.0, 0.0, 0.0, 0.01};
  ZeroCountCoefficients zc{0.71, 2.2};
  auto est = assemble_estimate(c, zc, 7.0, 0.18);
  CHECK_THAT(est.big_c, WithinAbs(0.0, 1e-300));  // up to defensive ulp rounding
  CHECK(est.big_b == 14.0);
  DetectorConstants bad{0.9, 1.0, 1.0, 1.0, 0.81};
  CHECK_THROWS_AS(assemble_estimate(bad, zc, 7.0, 0.18), invalid_row_error);
}

TEST_CASE("bound evaluation") {
  auto sched = default_schedule();
  auto rc = compute_row(sched[0].spec, sched[0].params, D3Mode::Table);
  const auto& spec = sched[0].spec;
  // sigma = 1 collapses to C
  CHECK_THAT(evaluate_bound(rc.est, spec, 1.0, spec.t1), WithinRel(rc.est.big_c, 1e-12));
  // alpha0 corner: direct formula
  double v = evaluate_bound(rc.est, spec, spec.alpha0, spec.t1);
  CHECK_THAT(v, WithinRel(rc.est.big_c * std::exp(29.0 * rc.est.big_b * (1.0 - 0.9927)), 1e-9));
  // monotone: increasing in T, decreasing in sigma
  double prev = 0.0;
  for (int i = 1; i <= 16; ++i) {
    double lt = spec.t0.value + (spec.t1.value - spec.t0.value) * i / 16.0;
    double cur = evaluate_bound(rc.est, spec, 0.995, LogHeight{lt});
    CHECK(cur > prev);
    prev = cur;
  }
  prev = 1e300;
  for (int i = 0; i <= 16; ++i) {
    double sigma = spec.alpha0 + (1.0 - spec.alpha0) * i / 16.0;
    double cur = evaluate_bound(rc.est, spec, sigma, spec.t1);
    CHECK(cur < prev);
    prev = cur;
  }
  CHECK_THROWS_AS(evaluate_bound(rc.est, spec, 0.9, spec.t1), domain_error);
  CHECK_THROWS_AS(evaluate_bound(rc.est, spec, 0.995, LogHeight{spec.t1.value + 1.0}),
                  domain_error);
  CHECK_THROWS_AS(evaluate_bound(rc.est, spec, 0.995, spec.t0), domain_error);  // left-open
}

TEST_CASE("range preconditions") {
  auto reject = [](RangeSpec s) { CHECK_THROWS_AS(s.validate(), domain_error); };
  reject(RangeSpec{height(1e12), height(1e13), 0.99});
  reject(RangeSpec{LogHeight{30.0}, LogHeight{29.0}, 0.99});
  reject(RangeSpec{LogHeight{30.0}, LogHeight{31.0}, 0.9999});
  reject(RangeSpec{LogHeight{30.0}, LogHeight{6.8e12}, 0.99});
  CHECK(!(ParamVector{1.0, 0.9, 0.5, 3.0}.feasible()));   // v < u
  CHECK(!(ParamVector{1.0, 2.0, 0.5, 2.9}.feasible()));   // x < u+v
  CHECK((ParamVector{1.0, 2.0, 0.5, 3.1}.feasible()));
}
