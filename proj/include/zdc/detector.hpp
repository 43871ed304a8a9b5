#pragma once

// Zero-detector constants c1..c5. c1 lower-bounds the smoothed detector sum
// at a zero; c2..c5 bound the Halasz-Montgomery double sum, split by the
// gap |gamma_r - gamma_s| (c2: same cell, c3: gaps below 1, c4: gaps up to
// T, c5: the shifted-contour integral term).

#include <cmath>

#include "zdc/foundations.hpp"
#include "zdc/gamma.hpp"
#include "zdc/numeric.hpp"
#include "zdc/params.hpp"
#include "zdc/quadrature.hpp"

namespace zdc {

// Fixed caps for the Gamma-zeta integrals entering c5. The tabulated
// constants were produced with the Gamma argument at real part 1 - b_r - b_s
// (integrand power t^{1/2 - 2 alpha0}); certify_j_bounds checks that reading
// and also reports the t^{1 - 2 alpha0} variant from the companion display.
inline constexpr double kJ1Cap = 0.24113;   // two outer tails, each
inline constexpr double kJ2Cap = 5.921;     // central |t+a| <= 3 piece
inline constexpr double kJ31Cap = 16.329;   // J3 side strips, each
inline constexpr double kJ32Cap = 253.419;  // J3 window around the pole line
inline constexpr double kJ3Cap = 286.077;   // 2 * 16.329 + 253.419
inline constexpr double kICap = 140.297;    // one-sided detector integral
inline constexpr double kAbsorbedBudget = 1e-6;

struct JBounds {
  double j1 = 0.0;
  double j2 = 0.0;
  double j31 = 0.0;
  double j32 = 0.0;
  double j1_literal = 0.0;   // t^{1-2a0} reading of the same display
  double j31_literal = 0.0;
  double j3_coef() const { return 2.0 * j31 + j32; }
};

namespace detail {
inline double gk_outer_tail(double alpha0, double power_shift, double rel_tol) {
  // (2pi)^{1/2} e^{(2a0-3/2)/6} 66.7 int_3^inf (2t)^{27/164} t^{power} e^{-pi t/2}
  double pref = std::sqrt(2.0 * M_PI) * std::exp((2.0 * alpha0 - 1.5) / 6.0) * 66.7;
  double power = power_shift - 2.0 * alpha0;
  auto f = [&](double t) {
    return std::pow(2.0 * t, 27.0 / 164.0) * std::pow(t, power) * std::exp(-M_PI * t / 2.0);
  };
  double m = std::pow(6.0, 27.0 / 164.0) * std::pow(3.0, power);
  auto r = integrate_exponential_tail(f, 3.0, m, M_PI / 2.0, rel_tol);
  return pref * r.certified_upper();
}

inline double gk_side_strip(double alpha0, double power_shift, double rel_tol) {
  // 66.7 (2pi)^{1/2} e^{(2a0-3/2)/6} int_1^inf (t/3+1)^{27/164} t^{power} e^{-pi t/2}
  double pref = 66.7 * std::sqrt(2.0 * M_PI) * std::exp((2.0 * alpha0 - 1.5) / 6.0);
  double power = power_shift - 2.0 * alpha0;
  auto f = [&](double t) {
    return std::pow(t / 3.0 + 1.0, 27.0 / 164.0) * std::pow(t, power) * std::exp(-M_PI * t / 2.0);
  };
  // (t/3+1)^e t^p <= (t/3+1)^e growing slower than e^{pi t/4}; fold into M at 1
  auto r = integrate_exponential_tail(
      f, 1.0, 2.0, M_PI / 4.0, rel_tol);  // loose envelope, checked by sampling
  return pref * r.certified_upper();
}
}  // namespace detail

// Certified values of the five fixed integral coefficients at one alpha0.
inline JBounds certify_j_bounds(double alpha0, double rel_tol = 1e-9) {
  JBounds j;
  j.j1 = detail::gk_outer_tail(alpha0, 0.5, rel_tol);
  j.j1_literal = detail::gk_outer_tail(alpha0, 1.0, rel_tol);
  j.j31 = detail::gk_side_strip(alpha0, 0.5, rel_tol);
  j.j31_literal = detail::gk_side_strip(alpha0, 1.0, rel_tol);
  double sig0 = 1.5 - 2.0 * alpha0;
  auto g = [&](double t) { return gamma_abs(sig0, t); };
  auto half = integrate_exponential_tail(g, 0.0, gamma_abs(sig0, 0.0), M_PI / 2.0, rel_tol);
  auto inner = integrate_finite(g, 0.0, 3.0, rel_tol);
  j.j2 = 1.461 * (half.certified_upper() + inner.certified_upper());
  auto g32 = [&](double t) {
    return std::pow(t / 3.0 + 1.0, 27.0 / 164.0) * gamma_abs(sig0, t);
  };
  j.j32 = 66.7 * integrate_finite(g32, -1.0, 1.0, rel_tol).certified_upper();
  return j;
}

// Certified coefficient of gamma^{27/164} in the one-sided detector
// integral: 66.7 (1+1/g)^{27/164} sup_b int_0^1 |Gamma(1/2-b+it)| +
// 197.515 int_1^inf (t/g+1)^{27/164} t^{-a0} e^{-pi t/2}.
inline double certify_detector_integral(double alpha0, double gamma0,
                                        double rel_tol = 1e-9) {
  double sup01 = 0.0;
  for (int i = 0; i <= 30; ++i) {
    double beta = alpha0 + (1.0 - alpha0) * i / 30.0;
    auto g = [&](double t) { return gamma_abs(0.5 - beta, t); };
    sup01 = std::max(sup01, integrate_finite(g, 0.0, 1.0, rel_tol).certified_upper());
  }
  double first = 66.7 * std::pow(1.0 + 1.0 / gamma0, 27.0 / 164.0) * sup01;
  auto f = [&](double t) {
    return std::pow(t / gamma0 + 1.0, 27.0 / 164.0) * std::pow(t, -alpha0) *
           std::exp(-M_PI * t / 2.0);
  };
  double m = std::pow(1.0 + 1.0 / gamma0, 27.0 / 164.0) * 2.0;
  auto tail = integrate_exponential_tail(f, 1.0, m, M_PI / 4.0, rel_tol);
  return first + 197.515 * tail.certified_upper();
}

// The two residual pieces absorbed into the detector's rounding budget:
// outer tail from 3 + 0.447 log T0 and the short window around -gamma.
struct AbsorbedTails {
  double first = 0.0;   // printed cap 1e-10
  double second = 0.0;  // printed cap 1e-8
};

inline AbsorbedTails certify_absorbed_tails(double alpha0, double log_t0,
                                            double rel_tol = 1e-9) {
  double g0 = 0.447 * log_t0;
  double stirl = std::exp((alpha0 - 0.5) / 6.0);
  double pref = std::sqrt(2.0 * M_PI) * stirl;
  AbsorbedTails out;
  {
    auto f = [&](double t) {
      return std::pow(2.0 * t, 27.0 / 164.0) * std::pow(t, -alpha0) * std::exp(-M_PI * t / 2.0);
    };
    double a = 3.0 + g0;
    double m = std::pow(2.0 * a, 27.0 / 164.0) * std::pow(a, -alpha0) * 2.0;
    out.first = pref * 66.7 *
                integrate_exponential_tail(f, a, m, M_PI / 4.0, rel_tol).certified_upper();
  }
  {
    auto f = [&](double t) { return std::pow(t, -alpha0) * std::exp(-M_PI * t / 2.0); };
    out.second = pref * 1.461 * integrate_finite(f, g0 - 3.0, g0 + 3.0, rel_tol).certified_upper();
  }
  return out;
}

struct DetectorConstants {
  double c1 = 0.0;
  double c2 = 0.0;
  double c3 = 0.0;
  double c4 = 0.0;
  double c5 = 0.0;
};

// Lower bound for the detector at a zero: the n = 1 term minus the smoothed
// tail bounds minus the 1e-20 cutoff slack, minimized over the range.
inline double c1_lower_bound(const RangeSpec& spec, const ParamVector& p, double d2_vw,
                             int grid = 1024) {
  if (!(0.447 * spec.t1.value <= 3e12))
    throw domain_error("c1_lower_bound: 0.447 log T1 must stay below 3e12");
  const double a0 = spec.alpha0;
  auto value_at = [&](double lt) {
    double main = 1.0;
    if (p.u * lt < 700.0) main = std::exp(-lt * lt * std::exp(-p.u * lt));
    double g = 0.447 * lt;
    double log_res = std::log(d2_vw) + 4.0 * std::log(p.u + p.w) +
                     0.5 * std::log(2.0 * M_PI) + 1.0 / (6.0 * g) + 4.0 * std::log(lt) +
                     p.x * (1.0 - a0) * lt - (M_PI * 0.447 / 2.0) * lt -
                     (a0 - 0.5) * std::log(g);
    double log_sec = std::log(44.66) + std::log(d2_vw) + 4.0 * std::log(p.v + p.w) +
                     ((p.v + p.w) / 2.0 + p.x * (0.5 - a0) + 27.0 / 164.0) * lt +
                     4.0 * std::log(lt);
    return main - exp_saturating(log_res) - exp_saturating(log_sec) - 1e-20;
  };
  double c1 = inf_on_grid(value_at, spec.t0.value, spec.t1.value, grid);
  if (!(c1 > 0.0)) throw invalid_row_error("c1_lower_bound: detector lower bound not positive");
  return deflate_lower(c1);
}

inline double c2_constant(double d4, double d5, double w) {
  if (!(w > 0.0)) throw domain_error("c2_constant: w <= 0");
  return inflate_upper(1.0067 * d4 * d5 / w);
}

inline double c3_constant(double d4, double d5, double w, double nu_at_t1) {
  if (!(nu_at_t1 > 0.0 && nu_at_t1 < 1.0)) throw domain_error("c3_constant: nu outside (0,1)");
  return inflate_upper(2.0 * d4 * d5 * 1.0067 * 1.12 * std::log(1.0 / nu_at_t1) / w);
}

// Certified upper bound of int_1^inf e^{1/(6y)} y^{3/2-2a0} e^{-pi y/2} dy.
inline double c4_integral_upper(double alpha0, double rel_tol = 1e-10) {
  auto f = [&](double y) {
    return std::exp(1.0 / (6.0 * y)) * std::pow(y, 1.5 - 2.0 * alpha0) *
           std::exp(-M_PI * y / 2.0);
  };
  double m = std::exp(1.0 / 6.0);
  return integrate_exponential_tail(f, 1.0, m, M_PI / 2.0, rel_tol).certified_upper();
}

inline double c4_constant_from_integral(double d4, double d5, double w,
                                        double integral_upper) {
  return inflate_upper(2.0 * std::sqrt(2.0 * M_PI) * 2.4 * d5 * d4 / w * integral_upper);
}

inline double c4_constant(double d4, double d5, double w, double alpha0) {
  return c4_constant_from_integral(d4, d5, w, c4_integral_upper(alpha0));
}

// c5: sup over the range of d4 (d5/2pi) (W/log W) (X^{3/2-2a0} +
// (U/L^2)^{3/2-2a0}) (J1+J2+J3+J4) with J3 at its worst gap a = T. The
// fixed caps are used only after their certified recomputation fits.
inline double c5_constant(const RangeSpec& spec, const ParamVector& p, double d4, double d5,
                          const JBounds& j, int grid = 1024) {
  if (!(j.j31 <= kJ31Cap) || !(j.j32 <= kJ32Cap) || !(j.j3_coef() <= kJ3Cap))
    throw invalid_row_error("c5_constant: certified J pieces exceed their caps");
  const double a0 = spec.alpha0;
  const double log_small = std::log(2.0 * kJ1Cap + kJ2Cap);
  auto value_at = [&](double lt) {
    double log_w = p.w * lt;
    double la = log_w - std::log(log_w);
    double ex = (1.5 - 2.0 * a0) * p.x * lt;
    double eu = (1.5 - 2.0 * a0) * (p.u * lt - 2.0 * std::log(lt));
    double lb = log_add_exp(ex, eu);
    double lj = log_add_exp(std::log(kJ3Cap) + 27.0 / 164.0 * lt, log_small);
    double lv = std::log(d4) + std::log(d5) - std::log(2.0 * M_PI) + la + lb + lj;
    return exp_saturating(lv);
  };
  double c5 = sup_on_grid(value_at, spec.t0.value, spec.t1.value, grid);
  if (!(c5 < 1.0)) throw invalid_row_error("c5_constant: c5 >= 1");
  return inflate_upper(c5);
}

}  // namespace zdc
