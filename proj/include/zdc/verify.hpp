#pragma once

// Recomputation of every fixed numeric cap with certified quadrature, and
// the desk-scale sieve validation of the weight lemmas. Shared between the
// verify command and the acceptance suite.

#include <algorithm>
#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "zdc/arith.hpp"
#include "zdc/detector.hpp"
#include "zdc/weights.hpp"

namespace zdc {

struct CheckResult {
  std::string name;
  bool pass = false;
  double value = 0.0;
  double cap = 0.0;
  std::string note;
};

// The seven tabulated caps, checked at the extremes they must cover:
// alpha0 = 0.985 (weakest sigma) and T0 = 3e12 (lowest range). The two
// residual-tail caps are checked as printed; their certified values land
// above the printed caps (first attainable around T0 >= e^30/e^31), so they
// report as failures, while the budget they are actually absorbed into
// downstream (1e-6) is checked separately and holds with large slack.
inline std::vector<CheckResult> verify_integral_caps(double alpha0 = 0.985,
                                                     double rel_tol = 1e-9) {
  std::vector<CheckResult> out;
  JBounds j = certify_j_bounds(alpha0, rel_tol);
  out.push_back({"outer-tail coefficient <= 0.24113", j.j1 <= kJ1Cap, j.j1, kJ1Cap, ""});
  out.push_back({"central window <= 5.921", j.j2 <= kJ2Cap, j.j2, kJ2Cap, ""});
  out.push_back({"side-strip coefficient <= 16.329", j.j31 <= kJ31Cap, j.j31, kJ31Cap, ""});
  out.push_back(
      {"pole-window coefficient <= 253.419", j.j32 <= kJ32Cap, j.j32, kJ32Cap, ""});
  out.push_back({"gap-block coefficient <= 286.077", j.j3_coef() <= kJ3Cap, j.j3_coef(),
                 kJ3Cap, ""});
  double g0 = 0.447 * kLogRiemannHeight;
  double i_low = certify_detector_integral(alpha0, g0, rel_tol);
  out.push_back({"one-sided detector integral <= 140.297 g^{27/164}", i_low <= kICap, i_low,
                 kICap, "gamma = 0.447 log 3e12"});
  double i_high = certify_detector_integral(0.9927, g0, rel_tol);
  out.push_back({"one-sided detector integral (alpha0 = 0.9927)", i_high <= kICap, i_high,
                 kICap, ""});
  double i_worst = std::max(i_low, i_high);
  out.push_back({"two-sided detector integral <= 280.594 g^{27/164}",
                 2.0 * i_worst <= 2.0 * kICap, 2.0 * i_worst, 2.0 * kICap, ""});
  AbsorbedTails t = certify_absorbed_tails(alpha0, kLogRiemannHeight, rel_tol);
  out.push_back({"residual outer tail <= 1e-10", t.first <= 1e-10, t.first, 1e-10,
                 "holds only for T0 >= e^30; see discrepancy report"});
  out.push_back({"residual central window <= 1e-8", t.second <= 1e-8, t.second, 1e-8,
                 "holds only for T0 >= e^31; see discrepancy report"});
  out.push_back({"absorbed residual budget <= 1e-6", t.first + t.second <= kAbsorbedBudget,
                 t.first + t.second, kAbsorbedBudget, ""});
  // Gamma-factor cap near the 1-line: sup over 0 < s <= 0.03 of Gamma(1+s).
  double sup = 0.0;
  for (int i = 0; i <= 30; ++i) {
    double s = 0.001 + (0.03 - 0.001) * i / 30.0;
    auto f = [&](double t_) { return std::pow(t_, s) * std::exp(-t_); };
    sup = std::max(sup,
                   integrate_exponential_tail(f, 0.0, 3.0, 0.5, rel_tol).certified_upper());
  }
  out.push_back({"near-1 gamma integral cap <= 1.0067", sup <= 1.0067, sup, 1.0067, ""});
  return out;
}

// Informational: the same J displays read with the t^{1-2 alpha0} exponent.
inline std::vector<CheckResult> integral_cap_discrepancies(double alpha0 = 0.985,
                                                           double rel_tol = 1e-9) {
  JBounds j = certify_j_bounds(alpha0, rel_tol);
  std::vector<CheckResult> out;
  out.push_back({"outer-tail, t^{1-2a} exponent reading", j.j1_literal > kJ1Cap, j.j1_literal,
                 kJ1Cap, "exceeds printed cap; tabulated value matches t^{1/2-2a}"});
  out.push_back({"side-strip, t^{1-2a} exponent reading", j.j31_literal > kJ31Cap,
                 j.j31_literal, kJ31Cap,
                 "exceeds printed cap; tabulated value matches t^{1/2-2a}"});
  return out;
}

struct OracleCase {
  std::int64_t u, v, n;
  double psi_sq, psi_sq_bound;
  double psi_sq_over_n, ramare_bound;
  double lambda_prod, graham_bound;
  double d3_bound;  // literal d3 * N / log T with T chosen so U = T^u, V = T^v
  bool pass = false;
};

inline double psi_sq_lemma_bound(std::int64_t u, std::int64_t v, std::int64_t n) {
  double lu = std::log(static_cast<double>(u));
  double lvu = std::log(static_cast<double>(v)) - lu;
  double nn = static_cast<double>(n);
  return 4.0 / (lvu * lvu) * 1.0061 *
         ((nn - 1.0) * (lu + 1.333 + 11.0 / std::sqrt(u * lu)) + nn);
}

inline double ramare_lemma_bound(std::int64_t u, std::int64_t v, std::int64_t n) {
  double t = std::log(static_cast<double>(v)) / std::log(static_cast<double>(u));
  double lvu = std::log(static_cast<double>(v)) - std::log(static_cast<double>(u));
  return 3.09 * std::log(static_cast<double>(n)) / lvu *
         (1.084 * (t + 1.0) + 1.301 * (1.0 + t * t) - 0.116) / (t - 1.0);
}

inline double graham_lemma_bound(std::int64_t z1, std::int64_t n) {
  double lz = std::log(static_cast<double>(z1));
  double nn = static_cast<double>(n);
  return 1.0061 * (nn - 1.0) * (lz + 1.333 + 11.0 / std::sqrt(z1 * lz)) + nn;
}

// Randomized (U, V, N) cases satisfying the lemma domains. Deterministic in
// the seed; every case must pass.
inline std::vector<OracleCase> verify_weight_lemmas(std::uint64_t seed = 20240901,
                                                    int samples = 50,
                                                    std::int64_t n_cap = 1'000'000) {
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<std::int64_t> u_dist(100, 800);
  std::uniform_real_distribution<double> t_dist(1.3, 2.4);
  std::vector<OracleCase> out;
  out.reserve(samples);
  for (int i = 0; i < samples; ++i) {
    OracleCase oc{};
    oc.u = u_dist(rng);
    double t = t_dist(rng);
    oc.v = static_cast<std::int64_t>(std::pow(static_cast<double>(oc.u), t));
    // keep UV well under the sample cap so the N > UV domain is nonempty
    oc.v = std::min<std::int64_t>(std::max(oc.v, oc.u + 10), (7 * n_cap / 10) / oc.u);
    std::int64_t n_min = std::max<std::int64_t>(oc.u * oc.v + 1, n_cap / 2);
    std::uniform_int_distribution<std::int64_t> n_dist(n_min, n_cap);
    oc.n = n_dist(rng);
    WeightSums s = weights_oracle(oc.u, oc.v, oc.u, oc.n);
    oc.psi_sq = s.psi_sq;
    oc.psi_sq_over_n = s.psi_sq_over_n;
    oc.lambda_prod = s.lambda_prod;
    oc.psi_sq_bound = psi_sq_lemma_bound(oc.u, oc.v, oc.n);
    oc.ramare_bound = ramare_lemma_bound(oc.u, oc.v, oc.n);
    oc.graham_bound = graham_lemma_bound(oc.u, oc.n);
    {
      double lt = 2.0 * std::log(static_cast<double>(oc.v));
      oc.d3_bound = d3_literal_at(lt, std::log(static_cast<double>(oc.u)) / lt,
                                  std::log(static_cast<double>(oc.v)) / lt) *
                    static_cast<double>(oc.n) / lt;
    }
    oc.pass = oc.psi_sq <= oc.psi_sq_bound && oc.psi_sq_over_n <= oc.ramare_bound &&
              oc.lambda_prod <= oc.graham_bound && oc.psi_sq <= oc.d3_bound;
    out.push_back(oc);
  }
  return out;
}

// Divisor-sum sieve against the d^2 expansion at the four desk scales.
inline std::vector<CheckResult> verify_divisor_sums() {
  std::vector<CheckResult> out;
  auto d = divisor_count_sieve(1'000'000);
  KahanSum acc;
  std::int64_t next = 1000;
  for (std::int64_t n = 1; n <= 1'000'000; ++n) {
    acc.add(static_cast<double>(d[n]) * static_cast<double>(d[n]));
    if (n == next) {
      double lx = std::log(static_cast<double>(n));
      double cap = d1_coefficient(lx) * static_cast<double>(n) * lx * lx * lx;
      out.push_back({"sum d^2(n) <= d1 x log^3 x at x = " + std::to_string(n),
                     acc.value() <= cap, acc.value(), cap, ""});
      next *= 10;
    }
  }
  return out;
}

}  // namespace zdc
