#pragma once

// Certified one-sided quadrature. Adaptive Gauss-Kronrod 7/15 with the rule
// difference (times a safety factor) accumulated into an explicit error
// bound, plus closed-form tails for exponentially decaying integrands. The
// caller reads certified_upper() wherever an inequality is being established.

#include <algorithm>
#include <cmath>
#include <functional>
#include <queue>
#include <vector>

#include "zdc/numeric.hpp"

namespace zdc {

struct QuadratureResult {
  double value = 0.0;
  double error_bound = 0.0;

  double certified_upper() const { return value + error_bound; }
  double certified_lower() const { return value - error_bound; }
};

using Integrand = std::function<double(double)>;

namespace detail {

// Gauss-Kronrod 7/15 nodes and weights on [-1, 1].
inline constexpr double kGkNode[8] = {
    0.991455371120813, 0.949107912342759, 0.864864423359769,
    0.741531185599394, 0.586087235467691, 0.405845151377397,
    0.207784955007898, 0.0};
inline constexpr double kGkWeightK[8] = {
    0.022935322010529, 0.063092092629979, 0.104790010322250,
    0.140653259715525, 0.169004726639267, 0.190350578064785,
    0.204432940075298, 0.209482141084728};
inline constexpr double kGkWeightG[4] = {
    0.129484966168870, 0.279705391489277, 0.381830050505119,
    0.417959183673469};

struct Panel {
  double a, b;
  double integral;  // K15 value
  double err;       // |K15 - G7| * safety
  bool operator<(const Panel& o) const { return err < o.err; }
};

inline constexpr double kErrorSafety = 10.0;

inline Panel gk15(const Integrand& f, double a, double b) {
  double c = 0.5 * (a + b), h = 0.5 * (b - a);
  double fc = f(c);
  double k = kGkWeightK[7] * fc;
  double g = kGkWeightG[3] * fc;
  for (int i = 0; i < 7; ++i) {
    double x = h * kGkNode[i];
    double s = f(c - x) + f(c + x);
    k += kGkWeightK[i] * s;
    if (i % 2 == 1) g += kGkWeightG[i / 2] * s;
  }
  k *= h;
  g *= h;
  return Panel{a, b, k, kErrorSafety * std::fabs(k - g)};
}

}  // namespace detail

struct QuadratureOptions {
  int max_panels = 4000;
};

inline QuadratureResult integrate_finite(const Integrand& f, double a, double b,
                                         double rel_tol = 1e-10,
                                         QuadratureOptions opts = {}) {
  if (!(a < b)) throw domain_error("integrate_finite: need a < b");
  std::priority_queue<detail::Panel> q;
  q.push(detail::gk15(f, a, b));
  double total = q.top().integral, err = q.top().err;
  int panels = 1;
  while (err > rel_tol * std::max(std::fabs(total), 1e-300)) {
    if (panels >= opts.max_panels)
      throw quadrature_error("integrate_finite: subdivision budget exhausted, error bound " +
                             std::to_string(err));
    detail::Panel p = q.top();
    if (p.err <= 0.0) break;  // nothing left to refine; err is drift
    q.pop();
    double m = 0.5 * (p.a + p.b);
    if (!(p.a < m && m < p.b)) {  // interval at double resolution; accept as is
      q.push(detail::Panel{p.a, p.b, p.integral, 0.0});
      err -= p.err;
      continue;
    }
    detail::Panel l = detail::gk15(f, p.a, m), r = detail::gk15(f, m, p.b);
    total += l.integral + r.integral - p.integral;
    err += l.err + r.err - p.err;
    q.push(l);
    q.push(r);
    ++panels;
  }
  // recompute sums compensated; the incremental updates above drift
  KahanSum sv, se;
  while (!q.empty()) {
    sv.add(q.top().integral);
    se.add(q.top().err);
    q.pop();
  }
  return QuadratureResult{sv.value(), inflate_upper(se.value())};
}

// Integral of f over [a, inf) given an envelope |f(t)| <= M exp(-lambda t)
// valid from the truncation point on. The closed-form tail M e^{-l tcut}/l
// lands in error_bound, so certified_upper stays one-sided.
inline QuadratureResult integrate_exponential_tail(const Integrand& f, double a,
                                                   double envelope_m, double lambda,
                                                   double rel_tol = 1e-10,
                                                   QuadratureOptions opts = {}) {
  if (!(lambda > 0.0)) throw domain_error("integrate_exponential_tail: lambda <= 0");
  if (envelope_m < 0.0) throw domain_error("integrate_exponential_tail: negative envelope");
  auto tail_at = [&](double tc) {
    double e = -lambda * tc;
    return e < -740.0 ? 0.0 : envelope_m * std::exp(e) / lambda;
  };
  double t_cut = a + 10.0 / lambda;
  QuadratureResult body = integrate_finite(f, a, t_cut, rel_tol, opts);
  double tail = tail_at(t_cut);
  int extensions = 0;
  while (tail > rel_tol * std::max(std::fabs(body.value), 1e-300) && tail > 1e-300) {
    if (++extensions > 40)
      throw quadrature_error("integrate_exponential_tail: tail does not shrink");
    double next = t_cut + 10.0 / lambda;
    QuadratureResult seg = integrate_finite(f, t_cut, next, rel_tol, opts);
    body.value += seg.value;
    body.error_bound += seg.error_bound;
    t_cut = next;
    tail = tail_at(t_cut);
  }
  // spot-check the envelope past the truncation point
  for (int i = 0; i < 8; ++i) {
    double t = t_cut + (i + 0.5) * (2.0 / lambda);
    double cap = envelope_m * std::exp(std::max(-740.0, -lambda * t));
    if (std::fabs(f(t)) > cap * (1.0 + 1e-9) + 1e-300)
      throw quadrature_error("integrate_exponential_tail: envelope violated at t = " +
                             std::to_string(t));
  }
  body.error_bound = inflate_upper(body.error_bound + tail);
  return body;
}

}  // namespace zdc
