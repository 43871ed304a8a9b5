#pragma once

// Explicit special-function bounds: zero-free region widths by height range,
// the Stirling modulus bound for Gamma, and half-line zeta bounds.

#include <cmath>

#include "zdc/numeric.hpp"

namespace zdc {

enum class ZeroFreeRegionKind { Classical, Ford, Littlewood, KorobovVinogradov };

inline const char* to_string(ZeroFreeRegionKind k) {
  switch (k) {
    case ZeroFreeRegionKind::Classical: return "classical";
    case ZeroFreeRegionKind::Ford: return "ford";
    case ZeroFreeRegionKind::Littlewood: return "littlewood";
    case ZeroFreeRegionKind::KorobovVinogradov: return "korobov-vinogradov";
  }
  return "?";
}

// Region handoff points in log T. Each formula is the widest on its range;
// at the handoff the incoming and outgoing widths agree to ~3e-5 relative.
inline constexpr double kFordFrom = 46.2;
inline constexpr double kLittlewoodFrom = 170.2;
inline constexpr double kKorobovVinogradovFrom = 481958.0;

// Intervals are half-open on the left: (a, b]. select_region(T) is the kind
// whose range contains T, for 3e12 <= T <= exp(6.7e12).
inline ZeroFreeRegionKind select_region(LogHeight t) {
  if (t.value < kLogRiemannHeight || t.value > kLogHeightCap)
    throw domain_error("select_region: log T outside [log 3e12, 6.7e12]");
  if (t.value <= kFordFrom) return ZeroFreeRegionKind::Classical;
  if (t.value <= kLittlewoodFrom) return ZeroFreeRegionKind::Ford;
  if (t.value <= kKorobovVinogradovFrom) return ZeroFreeRegionKind::Littlewood;
  return ZeroFreeRegionKind::KorobovVinogradov;
}

namespace detail {
// J(T) = (1/6) log T + log log T + log 0.618, the exponent bookkeeping term
// of the Ford-type region.
inline double ford_j(double log_t) {
  return log_t / 6.0 + std::log(log_t) + std::log(0.618);
}
}  // namespace detail

// Width nu_i(T) of the zero-free strip sigma >= 1 - nu_i(T). Lower bounds on
// a zero-free width, so the result is deflated one ulp.
inline double zero_free_width(ZeroFreeRegionKind kind, LogHeight t) {
  double lt = t.value;
  if (lt <= 1.0) throw domain_error("zero_free_width: need T > e");
  double v = 0.0;
  switch (kind) {
    case ZeroFreeRegionKind::Classical:
      v = 1.0 / (5.558691 * lt);
      break;
    case ZeroFreeRegionKind::Ford: {
      double j = detail::ford_j(lt);
      v = (0.04962 - 0.0196 / (j + 1.15)) / (j + 0.685 + 0.155 * std::log(lt));
      break;
    }
    case ZeroFreeRegionKind::Littlewood:
      v = std::log(lt) / (21.233 * lt);
      break;
    case ZeroFreeRegionKind::KorobovVinogradov:
      v = 1.0 / (53.989 * std::cbrt(lt * lt) * std::cbrt(std::log(lt)));
      break;
  }
  return deflate_lower(v);
}

inline double zero_free_width(LogHeight t) {
  return zero_free_width(select_region(t), t);
}

// |Gamma(sigma+it)| <= (2pi)^{1/2} |t|^{sigma-1/2} exp(-pi|t|/2 + 1/(6|z|)).
inline double stirling_gamma_bound(double sigma, double t) {
  if (t == 0.0) throw domain_error("stirling_gamma_bound: t = 0");
  double at = std::fabs(t);
  double mod = std::hypot(sigma, t);
  double lv = 0.5 * std::log(2.0 * M_PI) + (sigma - 0.5) * std::log(at) -
              M_PI * at / 2.0 + 1.0 / (6.0 * mod);
  return inflate_upper(exp_guarded(lv));
}

// |Gamma(z)| <= 1.0067 / |z| for 0 < Re z <= exponent_cap <= 0.03 (the
// residue factors near the 1-line; sup_x int_0^inf t^x e^-t dt over that
// strip is below 1.0067, which needs the cap at 2 - 2 alpha0, alpha0 >= 0.985).
inline double gamma_near_real_bound(double z_modulus, double exponent_cap = 0.03) {
  if (!(z_modulus > 0.0)) throw domain_error("gamma_near_real_bound: |z| <= 0");
  if (!(0.0 < exponent_cap && exponent_cap <= 0.03))
    throw domain_error("gamma_near_real_bound: exponent cap outside (0, 0.03]");
  return inflate_upper(1.0067 / z_modulus);
}

enum class HalfLineBoundBranch { Small, Medium, Large };

inline HalfLineBoundBranch half_line_branch(double t) {
  double at = std::fabs(t);
  if (at <= 3.0) return HalfLineBoundBranch::Small;
  if (std::log(at) <= 105.0) return HalfLineBoundBranch::Medium;
  return HalfLineBoundBranch::Large;
}

// Piecewise bound for |zeta(1/2+it)|; the branches are independent upper
// bounds and are not continuous at the joins.
inline double zeta_halfline_bound(double t) {
  double at = std::fabs(t);
  switch (half_line_branch(t)) {
    case HalfLineBoundBranch::Small:
      return 1.461;
    case HalfLineBoundBranch::Medium:
      return inflate_upper(0.618 * std::pow(at, 1.0 / 6.0) * std::log(at));
    case HalfLineBoundBranch::Large:
      return inflate_upper(66.7 * std::pow(at, 27.0 / 164.0));
  }
  return 0.0;
}

// log-domain variant for heights beyond double range.
inline double zeta_halfline_bound_log(LogHeight t) {
  if (t.value <= std::log(3.0)) return std::log(1.461);
  if (t.value <= 105.0) return std::log(0.618) + t.value / 6.0 + std::log(t.value);
  return std::log(66.7) + 27.0 / 164.0 * t.value;
}

}  // namespace zdc
