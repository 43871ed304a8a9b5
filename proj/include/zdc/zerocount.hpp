#pragma once

// Zero counts near the 1-line: the circle bound n(r, 1+it) and the linear
// rectangle fit b1 (1-alpha) log T + b2 covering it over a whole range.

#include <cmath>

#include "zdc/numeric.hpp"
#include "zdc/params.hpp"

namespace zdc {

// The corollary constant appears as 4.7098 in the proposition and 4.7908 in
// the corollary; the corollary's value is what the tabulated fits need.
inline constexpr double kZeroCountShift = 4.7908;
inline constexpr double kZeroCountShiftVariant = 4.7098;

// Count of zeros in the circle |1 + it - rho| <= r, for 3e12 <= |t| <= T.
inline double local_zero_count_bound(double r, LogHeight t, double shift = kZeroCountShift) {
  if (!(0.0 < r && r < 0.5)) throw domain_error("local_zero_count_bound: r outside (0, 1/2)");
  if (!(t.value >= kLogRiemannHeight - 1e-12))
    throw domain_error("local_zero_count_bound: T below 3e12");
  double lt = t.value;
  return 2.0 * r *
         ((lt + shift) / (4.0 + 8.0 * r) +
          (4.0 / M_PI - 1.0) * std::log(1.0 + 1.0 / r) / (1.0 + 2.0 * r) + 2.6908 +
          8.0 * r / ((1.0 + 2.0 * r) * (1.0 + 2.0 * r)) * (r * (2.0 * lt - 1.0) + 4.0) +
          1.0 / r);
}

// Same bound reduced along r <= 1/b; used only as a cross-check.
inline double local_zero_count_bound_reduced(double r, LogHeight t) {
  double b = 1.0 / r;
  double lt = t.value;
  return lt / b * (0.5 + 32.0 / (b * b)) + 0.573803 / b * std::log(b) +
         (2.4 + 5.3816) / b + 64.0 / (b * b) + 2.0 - 272.0 / (b * b * b);
}

namespace detail {
// Split of the circle bound at r = sqrt(2)(1-alpha) into a log T coefficient
// and a T-free part.
inline double rect_count_slope(double r) {
  double q = 1.0 + 2.0 * r;
  return 2.0 * r / (4.0 + 8.0 * r) + 32.0 * r * r * r / (q * q);
}
inline double rect_count_offset(double r, double shift) {
  if (r == 0.0) return 2.0;
  double q = 1.0 + 2.0 * r;
  return 2.0 * r * shift / (4.0 + 8.0 * r) +
         2.0 * r * (4.0 / M_PI - 1.0) * std::log(1.0 + 1.0 / r) / q + 2.0 * r * 2.6908 +
         16.0 * r * r * (4.0 - r) / (q * q) + 2.0;
}
}  // namespace detail

struct ZeroCountCoefficients {
  double b1 = 0.0;
  double b2 = 0.0;
};

// Deterministic sup-fit: b2 is the sup of the T-free part over alpha in
// [alpha0, 1]; b1 is the sup of the residual slope, clamped from below by
// the alpha -> 1 limit sqrt(2)/2 (the grid ratio stays under the limit once
// b2 dominates the offset, so the clamp is what survives). The fit is then
// verified to dominate the circle bound on a 512 x 512 grid.
inline ZeroCountCoefficients fit_rectangle_count(const RangeSpec& spec,
                                                 double shift = kZeroCountShift,
                                                 int grid = 512) {
  spec.validate();
  const double a0 = spec.alpha0;
  double b2 = 2.0;
  for (int i = 0; i <= grid; ++i) {
    double a = a0 + (1.0 - a0) * static_cast<double>(i) / grid;
    b2 = std::max(b2, detail::rect_count_offset(std::sqrt(2.0) * (1.0 - a), shift));
  }
  b2 = inflate_upper(b2);
  double b1 = std::sqrt(2.0) / 2.0;
  for (int i = 0; i < grid; ++i) {
    double a = a0 + (1.0 - a0) * static_cast<double>(i) / grid;
    double r = std::sqrt(2.0) * (1.0 - a);
    for (double lt : {spec.t0.value, spec.t1.value}) {
      double ratio = (local_zero_count_bound(r, LogHeight{lt}, shift) - b2) / ((1.0 - a) * lt);
      b1 = std::max(b1, ratio);
    }
  }
  b1 = inflate_upper(b1);
  for (int i = 0; i <= grid; ++i) {
    double a = a0 + (1.0 - a0) * static_cast<double>(i) / grid;
    if (a >= 1.0) continue;
    double r = std::sqrt(2.0) * (1.0 - a);
    for (int j = 0; j <= grid; ++j) {
      double lt = spec.t0.value +
                  (spec.t1.value - spec.t0.value) * static_cast<double>(j) / grid;
      double lhs = local_zero_count_bound(r, LogHeight{lt}, shift);
      if (lhs > b1 * (1.0 - a) * lt + b2 + 1e-9)
        throw invalid_row_error("fit_rectangle_count: fit fails to dominate");
    }
  }
  return ZeroCountCoefficients{b1, b2};
}

}  // namespace zdc
