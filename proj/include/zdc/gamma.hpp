#pragma once

// |Gamma(sigma + it)| for the Gamma-weighted integrands. Lanczos (g=7, n=9)
// on the right half plane, reflection for Re z < 0.5. Accurate to ~1e-13
// relative on the strip used here (sigma in [-1, 3], any t).

#include <cmath>
#include <complex>

#include "zdc/numeric.hpp"

namespace zdc {

namespace detail {

inline constexpr double kLanczosG = 7.0;
inline constexpr double kLanczosCoef[9] = {
    0.99999999999980993,  676.5203681218851,     -1259.1392167224028,
    771.32342877765313,   -176.61502916214059,   12.507343278686905,
    -0.13857109526572012, 9.9843695780195716e-6, 1.5056327351493116e-7,
};

inline std::complex<double> lanczos_gamma(std::complex<double> z) {
  // valid for Re z >= 0.5
  z -= 1.0;
  std::complex<double> a{kLanczosCoef[0], 0.0};
  for (int i = 1; i < 9; ++i) a += kLanczosCoef[i] / (z + static_cast<double>(i));
  std::complex<double> t = z + kLanczosG + 0.5;
  return std::sqrt(2.0 * M_PI) * std::pow(t, z + 0.5) * std::exp(-t) * a;
}

}  // namespace detail

inline double gamma_abs(double sigma, double t) {
  std::complex<double> z{sigma, t};
  if (sigma >= 0.5) return std::abs(detail::lanczos_gamma(z));
  // |Gamma(z)| = pi / (|sin(pi z)| |Gamma(1-z)|)
  double s = std::abs(std::sin(M_PI * z));
  if (s == 0.0) throw domain_error("gamma_abs at a pole");
  return M_PI / (s * std::abs(detail::lanczos_gamma(1.0 - z)));
}

}  // namespace zdc
