#pragma once

// Row assembly: constants -> final density estimate N(sigma, T) <= C T^{B(1-sigma)},
// plus the published height schedule.

#include <cmath>
#include <optional>
#include <vector>

#include "zdc/arith.hpp"
#include "zdc/detector.hpp"
#include "zdc/foundations.hpp"
#include "zdc/params.hpp"
#include "zdc/reference_tables.hpp"
#include "zdc/zerocount.hpp"

namespace zdc {

// Everything that depends on the range alone (not on u,v,w,x). Hoisted so a
// parameter search pays for the quadratures and the b-fit once per range.
struct RowContext {
  RangeSpec spec;
  ZeroCountCoefficients zc;
  ZeroFreeRegionKind kind = ZeroFreeRegionKind::Classical;
  double nu_at_t1 = 0.0;
  double nu_log_t0 = 0.0;  // nu_kind(T0) * log T0
  double c4_integral = 0.0;
  JBounds j;
};

inline RowContext make_row_context(const RangeSpec& spec) {
  spec.validate();
  RowContext ctx;
  ctx.spec = spec;
  ctx.zc = fit_rectangle_count(spec);
  ctx.kind = select_region(spec.t1);  // (T0, T1]: T1 is in the range, T0 is not
  ctx.nu_at_t1 = zero_free_width(ctx.kind, spec.t1);
  ctx.nu_log_t0 = zero_free_width(ctx.kind, spec.t0) * spec.t0.value;
  ctx.c4_integral = c4_integral_upper(spec.alpha0);
  ctx.j = certify_j_bounds(spec.alpha0);
  return ctx;
}

struct RowConstants {
  RangeSpec spec;
  ParamVector params;
  D3Mode d3_mode = D3Mode::Literal;
  DivisorSumConstants d;
  ZeroCountCoefficients zc;
  DetectorConstants c;
  DensityEstimate est;
};

inline DensityEstimate assemble_estimate(const DetectorConstants& c,
                                         const ZeroCountCoefficients& zc, double x,
                                         double nu_log_t0) {
  double denom = c.c1 * c.c1 - c.c5;
  if (!(denom > 0.0)) throw invalid_row_error("assemble_estimate: c1^2 <= c5");
  double csum = c.c2 + c.c3 + c.c4;
  DensityEstimate est;
  est.big_b = 2.0 * x;
  est.c1_part = inflate_upper(csum * zc.b1 / denom);
  est.c2_part = inflate_upper(csum * zc.b2 / (denom * nu_log_t0));
  est.big_c = est.c1_part + est.c2_part;
  return est;
}

inline RowConstants compute_row(const RowContext& ctx, const ParamVector& p,
                                D3Mode mode = D3Mode::Literal, int grid = 1024) {
  p.validate();
  RowConstants rc;
  rc.spec = ctx.spec;
  rc.params = p;
  rc.d3_mode = mode;
  rc.zc = ctx.zc;
  rc.d = divisor_sum_constants(ctx.spec, p, mode, grid);
  rc.c.c1 = c1_lower_bound(ctx.spec, p, rc.d.d21, grid);
  rc.c.c2 = c2_constant(rc.d.d4, rc.d.d5, p.w);
  rc.c.c3 = c3_constant(rc.d.d4, rc.d.d5, p.w, ctx.nu_at_t1);
  rc.c.c4 = c4_constant_from_integral(rc.d.d4, rc.d.d5, p.w, ctx.c4_integral);
  rc.c.c5 = c5_constant(ctx.spec, p, rc.d.d4, rc.d.d5, ctx.j, grid);
  rc.est = assemble_estimate(rc.c, ctx.zc, p.x, ctx.nu_log_t0);
  return rc;
}

inline RowConstants compute_row(const RangeSpec& spec, const ParamVector& p,
                                D3Mode mode = D3Mode::Literal, int grid = 1024) {
  return compute_row(make_row_context(spec), p, mode, grid);
}

inline std::optional<RowConstants> try_compute_row(const RowContext& ctx,
                                                   const ParamVector& p,
                                                   D3Mode mode = D3Mode::Literal,
                                                   int grid = 1024) {
  if (!p.feasible()) return std::nullopt;
  try {
    return compute_row(ctx, p, mode, grid);
  } catch (const invalid_row_error&) {
    return std::nullopt;
  } catch (const domain_error&) {
    return std::nullopt;
  }
}

struct ScheduleRow {
  RangeSpec spec;
  ParamVector params;
};

// The 38 tabulated ranges plus the uniform Korobov-Vinogradov range.
inline std::vector<ScheduleRow> default_schedule() {
  std::vector<ScheduleRow> rows;
  rows.reserve(reference::kRowCount + 1);
  for (const auto& r : reference::kRows)
    rows.push_back({RangeSpec{LogHeight{r.t0_log}, LogHeight{r.t1_log}, r.alpha0},
                    ParamVector{r.u, r.v, r.w, r.x}});
  rows.push_back({RangeSpec{LogHeight{reference::kUniformT0Log},
                            LogHeight{reference::kUniformT1Log}, reference::kUniformAlpha0},
                  ParamVector{reference::kUniformU, reference::kUniformV,
                              reference::kUniformW, reference::kUniformX}});
  return rows;
}

// log of C T^{B(1-sigma)}; finite even when the bound itself overflows.
inline double evaluate_bound_log(const DensityEstimate& est, double sigma, LogHeight t) {
  return std::log(est.big_c) + est.big_b * (1.0 - sigma) * t.value;
}

inline double evaluate_bound(const DensityEstimate& est, const RangeSpec& spec, double sigma,
                             LogHeight t) {
  if (!(spec.alpha0 <= sigma && sigma <= 1.0))
    throw domain_error("evaluate_bound: sigma outside [alpha0, 1]");
  if (!(spec.t0.value < t.value && t.value <= spec.t1.value))
    throw domain_error("evaluate_bound: T outside (T0, T1]");
  return exp_saturating(evaluate_bound_log(est, sigma, t));
}

}  // namespace zdc
