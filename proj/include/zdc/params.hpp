#pragma once

#include <cmath>
#include <string>

#include "zdc/numeric.hpp"

namespace zdc {

// One table row's domain: heights T in (T0, T1], sigma in [alpha0, 1].
struct RangeSpec {
  LogHeight t0{0.0};
  LogHeight t1{0.0};
  double alpha0 = 0.0;

  void validate() const {
    if (!(t0.value >= kLogRiemannHeight - 1e-12))
      throw domain_error("RangeSpec: T0 below the verified height 3e12");
    if (!(t0.value < t1.value)) throw domain_error("RangeSpec: need T0 < T1");
    if (!(t1.value <= kLogHeightCap))
      throw domain_error("RangeSpec: T1 above exp(6.7e12)");
    if (!(0.447 * t1.value <= 3e12))
      throw domain_error("RangeSpec: 0.447 log T1 must stay below 3e12");
    if (!(0.985 <= alpha0 && alpha0 <= 0.9927))
      throw domain_error("RangeSpec: alpha0 outside [0.985, 0.9927]");
  }
};

// Free exponents: U = T^u, V = T^v, W = T^w, X = T^x.
struct ParamVector {
  double u = 0.0;
  double v = 0.0;
  double w = 0.0;
  double x = 0.0;

  bool feasible() const {
    return 0.0 < w && w < u && u < v && u + v < x;
  }
  void validate() const {
    if (!feasible())
      throw domain_error("ParamVector: need 0 < w < u < v and u + v < x");
  }
};

struct DensityEstimate {
  double big_b = 0.0;   // exponent B = 2x
  double big_c = 0.0;   // constant C = c1_part + c2_part
  double c1_part = 0.0;
  double c2_part = 0.0;
};

}  // namespace zdc
