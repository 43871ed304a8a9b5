#pragma once

// Arithmetic-sum constants d1..d5 for one (range, parameter) choice. All of
// these are uniform-in-T bounds, taken as sups over the range on a log grid
// (the factors are monotone, so the sup sits at an endpoint; the grid guards
// the assumption).

#include <algorithm>
#include <cmath>
#include <optional>

#include "zdc/numeric.hpp"
#include "zdc/params.hpp"
#include "zdc/reference_tables.hpp"

namespace zdc {

// sum_{n<=x} d^2(n) <= d1 * x log^3 x, from the four-term expansion with
// exact leading constant 1/pi^2. Valid for x >= 433; every term decreases in
// x, so the sup over x >= x_lo is the value at x_lo.
inline double d1_coefficient(double log_x_lo) {
  if (!(log_x_lo >= std::log(433.0)))
    throw domain_error("d1_coefficient: need x_lo >= 433");
  constexpr double kD1 = 0.10132118364233778;  // 1/pi^2
  double l = log_x_lo;
  double v = kD1 + 0.745 / l + 0.824 / (l * l) + 0.461 / (l * l * l);
  if (log_x_lo < 700.0) {
    double x = std::exp(log_x_lo);
    v += 9.73 * std::pow(x, -0.25) / (l * l) + 0.73 / (std::sqrt(x) * l * l * l);
  }
  return inflate_upper(v);
}

// sum_{n<=x} d^2(n)/n <= d2 log^4 x with d2 = d1 (1/4 + 1/log x_lo).
inline double d2_coefficient(double d1, double log_x_lo) {
  if (!(d1 > 0.0) || !(log_x_lo > 0.0)) throw domain_error("d2_coefficient: bad inputs");
  return inflate_upper(d1 * (0.25 + 1.0 / log_x_lo));
}

enum class D3Mode { Literal, Table };

// Smallest constant making the Psi^2 partial-sum bound uniform in N > UV at
// a single height: log T * (4 / log^2(V/U)) * 1.0061 * (log U + 2.333 + tail).
inline double d3_literal_at(double log_t, double u, double v) {
  double log_u = u * log_t;
  double tail = 0.0;
  if (log_u < 700.0) tail = 11.0 / std::sqrt(std::exp(log_u) * log_u);
  double lvu = (v - u) * log_t;
  return log_t * (4.0 / (lvu * lvu)) * 1.0061 * (log_u + 1.333 + tail + 1.0);
}

namespace detail {
inline std::optional<reference::Row> find_reference_row(const RangeSpec& spec) {
  for (const auto& r : reference::kRows)
    if (std::fabs(r.t0_log - spec.t0.value) < 1e-9 * std::max(1.0, r.t0_log) &&
        std::fabs(r.t1_log - spec.t1.value) < 1e-9 * std::max(1.0, r.t1_log))
      return r;
  return std::nullopt;
}
}  // namespace detail

// Literal mode: the uniform constant implied by the Psi^2 lemma (default).
// Table mode: the tabulated reference column, which carries an extra
// 1/log^2 T0 relative to the literal constant; ranges without a tabulated
// value fall back to literal/log^2 T0.
inline double d3_coefficient(const RangeSpec& spec, const ParamVector& p,
                             D3Mode mode = D3Mode::Literal, int grid = 1024) {
  spec.validate();
  p.validate();
  if (mode == D3Mode::Table) {
    if (auto row = detail::find_reference_row(spec)) return row->d3;
    return d3_literal_at(spec.t0.value, p.u, p.v) / (spec.t0.value * spec.t0.value);
  }
  return inflate_upper(sup_on_grid(
      [&](double lt) { return d3_literal_at(lt, p.u, p.v); }, spec.t0.value,
      spec.t1.value, grid));
}

// sum Psi^2(n)/n weighted by the smoothing difference: the T-free part from
// the L^2 bound at t = v/u plus the d3-driven remainder.
inline double d4_coefficient(const RangeSpec& spec, const ParamVector& p, double d3,
                             int grid = 1024) {
  if (!(p.v > p.u)) throw domain_error("d4_coefficient: need v > u");
  double t = p.v / p.u;
  double main = 3.09 * ((p.u + p.v) / (p.v - p.u)) *
                (1.301 * (t * t + 1.0) + 1.084 * (t + 1.0) - 0.116) / (t - 1.0);
  double rest = sup_on_grid(
      [&](double lt) {
        double e = (p.u + p.v - p.x) * lt;  // log(UV/X), negative for valid params
        double euvx = e < 5.0 ? std::exp(std::exp(e)) : std::numeric_limits<double>::infinity();
        return d3 / (euvx * lt) + (d3 / lt) * (2.0 + (p.x - (p.u + p.v)) * lt);
      },
      spec.t0.value, spec.t1.value, grid);
  return inflate_upper(main + rest);
}

// |G(1)| log W <= d5: 1.0061 (1 + (1.333 + 3.95/sqrt(W)) / log W).
inline double d5_coefficient(const RangeSpec& spec, const ParamVector& p, int grid = 1024) {
  if (!(p.w * spec.t0.value > 0.0)) throw domain_error("d5_coefficient: need W > 1");
  return inflate_upper(sup_on_grid(
      [&](double lt) {
        double log_w = p.w * lt;
        double rs = log_w < 1400.0 ? std::exp(-0.5 * log_w) : 0.0;
        return 1.0061 * (1.0 + (1.333 + 3.95 * rs) / log_w);
      },
      spec.t0.value, spec.t1.value, grid));
}

struct DivisorSumConstants {
  double d11 = 0.0, d12 = 0.0;
  double d21 = 0.0, d22 = 0.0;
  double d3 = 0.0, d4 = 0.0, d5 = 0.0;
};

inline DivisorSumConstants divisor_sum_constants(const RangeSpec& spec, const ParamVector& p,
                                                 D3Mode mode = D3Mode::Literal,
                                                 int grid = 1024) {
  DivisorSumConstants d;
  double log_vw = (p.v + p.w) * spec.t0.value;
  double log_w2 = 2.0 * p.w * spec.t0.value;
  d.d11 = d1_coefficient(log_vw);
  d.d12 = d1_coefficient(log_w2);
  d.d21 = d2_coefficient(d.d11, log_vw);
  d.d22 = d2_coefficient(d.d12, log_w2);
  d.d3 = d3_coefficient(spec, p, mode, grid);
  d.d4 = d4_coefficient(spec, p, d.d3, grid);
  d.d5 = d5_coefficient(spec, p, grid);
  return d;
}

}  // namespace zdc
