#include <catch2/catch_amalgamated.hpp>

#include <cmath>
#include <complex>

#include "zdc/foundations.hpp"
#include "zdc/gamma.hpp"

using namespace zdc;
using Catch::Matchers::WithinAbs;
using Catch::Matchers::WithinRel;

namespace {

// Independent |Gamma| oracle: Spouge's approximation with a = 14, shifted
// into Re z >= 3 by the recurrence. Shares nothing with the Lanczos kernel.
double spouge_gamma_abs(double sigma, double t) {
  std::complex<double> z{sigma, t};
  std::complex<double> shift{1.0, 0.0};
  while (z.real() < 3.0) {
    shift *= z;
    z += 1.0;
  }
  constexpr int a = 14;
  std::complex<double> acc{std::sqrt(2.0 * M_PI), 0.0};
  double fact = 1.0;
  for (int k = 1; k < a; ++k) {
    if (k > 1) fact *= -(k - 1);
    double ck = std::pow(a - k, k - 0.5) * std::exp(a - k) / fact;
    acc += ck / (z + static_cast<double>(k - 1));
  }
  std::complex<double> zm1 = z - 1.0;
  std::complex<double> g =
      std::pow(zm1 + static_cast<double>(a), zm1 + 0.5) * std::exp(-(zm1 + static_cast<double>(a))) * acc;
  return std::abs(g / shift);
}

}  // namespace

TEST_CASE("zero-free widths match high-precision evaluations") {
  CHECK_THAT(zero_free_width(ZeroFreeRegionKind::Classical, LogHeight{46.2}),
             WithinRel(0.00389390625329, 1e-10));
  CHECK_THAT(zero_free_width(ZeroFreeRegionKind::Littlewood, LogHeight{170.2}),
             WithinRel(0.00142146598073, 1e-10));
  CHECK_THAT(zero_free_width(ZeroFreeRegionKind::Classical, LogHeight{kLogRiemannHeight}),
             WithinRel(1.0 / (5.558691 * kLogRiemannHeight), 1e-14));
  CHECK_THROWS_AS(zero_free_width(ZeroFreeRegionKind::Ford, LogHeight{0.9}), domain_error);
}

TEST_CASE("region selection over (3e12, exp(6.7e12)]") {
  CHECK(select_region(height(1e13)) == ZeroFreeRegionKind::Classical);
  CHECK(select_region(LogHeight{100.0}) == ZeroFreeRegionKind::Ford);
  CHECK(select_region(LogHeight{46.2}) == ZeroFreeRegionKind::Classical);  // left-closed at b
  CHECK(select_region(LogHeight{170.2}) == ZeroFreeRegionKind::Ford);
  CHECK(select_region(LogHeight{481958.0}) == ZeroFreeRegionKind::Littlewood);
  CHECK(select_region(LogHeight{481959.0}) == ZeroFreeRegionKind::KorobovVinogradov);
  CHECK(select_region(LogHeight{6.7e12}) == ZeroFreeRegionKind::KorobovVinogradov);
  CHECK_THROWS_AS(select_region(height(1e12)), domain_error);
  CHECK_THROWS_AS(select_region(LogHeight{6.8e12}), domain_error);
}

TEST_CASE("each width decreases in T on its selection range") {
  struct Probe {
    ZeroFreeRegionKind kind;
    double lo, hi;
  };
  for (auto [kind, lo, hi] : {Probe{ZeroFreeRegionKind::Classical, kLogRiemannHeight, 46.2},
                              Probe{ZeroFreeRegionKind::Ford, 46.2, 170.2},
                              Probe{ZeroFreeRegionKind::Littlewood, 170.2, 481958.0},
                              Probe{ZeroFreeRegionKind::KorobovVinogradov, 481958.0, 6.7e12}}) {
    double prev = zero_free_width(kind, LogHeight{lo});
    for (int i = 1; i <= 64; ++i) {
      double lt = lo * std::pow(hi / lo, i / 64.0);
      double cur = zero_free_width(kind, LogHeight{lt});
      CHECK(cur < prev);
      prev = cur;
    }
  }
}

TEST_CASE("handoff widths nearly agree at the region boundaries") {
  // the switch points are round values near the true crossovers, so the
  // incoming width can undercut the outgoing one by a few 1e-5 relative
  auto ratio = [](ZeroFreeRegionKind a, ZeroFreeRegionKind b, double lt) {
    return zero_free_width(b, LogHeight{lt}) / zero_free_width(a, LogHeight{lt}) - 1.0;
  };
  CHECK_THAT(ratio(ZeroFreeRegionKind::Classical, ZeroFreeRegionKind::Ford, 46.2),
             WithinAbs(0.0, 1e-4));
  CHECK_THAT(ratio(ZeroFreeRegionKind::Ford, ZeroFreeRegionKind::Littlewood, 170.2),
             WithinAbs(0.0, 1e-4));
  CHECK_THAT(
      ratio(ZeroFreeRegionKind::Littlewood, ZeroFreeRegionKind::KorobovVinogradov, 481958.0),
      WithinAbs(0.0, 1e-4));
}

TEST_CASE("stirling bound examples") {
  CHECK_THAT(stirling_gamma_bound(0.5, 10.0), WithinRel(3.84093869492e-7, 1e-9));
  CHECK(stirling_gamma_bound(0.7, 4.0) == stirling_gamma_bound(0.7, -4.0));
  CHECK_THAT(stirling_gamma_bound(-0.4854, 3.0), WithinRel(0.00805726855923, 1e-9));
  CHECK_THROWS_AS(stirling_gamma_bound(0.5, 0.0), domain_error);
}

TEST_CASE("stirling bound dominates |Gamma| where it is applied") {
  // all uses have Re z <= 1/2; the formula is a true bound on [-1, 1] for
  // |t| >= 1 but overshoots past sigma ~ 1.5 at small |t|
  for (int i = 0; i <= 16; ++i) {
    double sigma = -1.0 + 2.0 * i / 16.0 + 0.013;  // keep off the poles
    for (int k = 0; k <= 20; ++k) {
      double t = 1.0 + 49.0 * k / 20.0;
      double oracle = spouge_gamma_abs(sigma, t);
      CHECK(stirling_gamma_bound(sigma, t) >= oracle * (1.0 - 1e-9));
    }
  }
  CHECK(stirling_gamma_bound(2.0, 1.0) < spouge_gamma_abs(2.0, 1.0));  // known limit
}

TEST_CASE("lanczos |Gamma| agrees with the independent oracle") {
  CHECK_THAT(gamma_abs(0.5, 10.0), WithinRel(3.77753211285e-7, 1e-9));
  for (double sigma : {-0.47, -0.485, 0.25, 1.53}) {
    for (double t : {0.0, 0.31, 1.0, 2.5, 7.0}) {
      CHECK_THAT(gamma_abs(sigma, t), WithinRel(spouge_gamma_abs(sigma, t), 1e-9));
    }
  }
}

TEST_CASE("half-line zeta bound branches and parity") {
  CHECK(zeta_halfline_bound(2.0) == 1.461);
  CHECK_THAT(zeta_halfline_bound(std::exp(50.0)), WithinRel(128552.095966, 1e-9));
  CHECK_THAT(zeta_halfline_bound(std::exp(110.0)), WithinRel(4887569834.2, 1e-8));
  for (double t : {0.5, 3.5, 100.0, 1e10}) CHECK(zeta_halfline_bound(t) == zeta_halfline_bound(-t));
  // log form is consistent where both are representable
  for (double lt : {0.5, 2.0, 50.0, 110.0, 500.0}) {
    CHECK_THAT(zeta_halfline_bound_log(LogHeight{lt}),
               WithinAbs(std::log(zeta_halfline_bound(std::exp(std::min(lt, 700.0)))), 1e-9));
  }
}

TEST_CASE("gamma bound near the real axis") {
  CHECK(gamma_near_real_bound(1.0) >= 1.0067);
  CHECK_THAT(gamma_near_real_bound(1.0), WithinRel(1.0067, 1e-12));
  double delta = 1.0 - 0.9927;
  CHECK_THAT(gamma_near_real_bound(2.0 * delta, 2.0 * delta),
             WithinRel(1.0067 / (2.0 * delta), 1e-12));
  CHECK_THROWS_AS(gamma_near_real_bound(0.0), domain_error);
  CHECK_THROWS_AS(gamma_near_real_bound(-2.0), domain_error);
  CHECK_THROWS_AS(gamma_near_real_bound(1.0, 0.2), domain_error);  // cap only holds to 0.03
}
