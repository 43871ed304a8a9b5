#pragma once

#include <cmath>
#include <limits>
#include <stdexcept>
#include <string>

namespace zdc {

// Natural logarithm of a height T. Heights reach exp(6.7e12), far beyond
// binary64 range, so every interface carries log T and never T itself.
struct LogHeight {
  double value;
  constexpr explicit LogHeight(double log_t) : value(log_t) {}
};

constexpr LogHeight log_height(double log_t) { return LogHeight{log_t}; }

inline LogHeight height(double t) { return LogHeight{std::log(t)}; }

// log(3e12), the verified-zeros height. Frozen so the schedule, the region
// gates and the reference tables agree bit for bit.
inline constexpr double kLogRiemannHeight = 28.729633404596658;
inline constexpr double kLogHeightCap = 6.7e12;

struct domain_error : std::domain_error {
  using std::domain_error::domain_error;
};

struct invalid_row_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct quadrature_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// One-ulp defensive rounding for values used as upper (resp. lower) bounds.
inline double inflate_upper(double v) {
  return std::nextafter(v, std::numeric_limits<double>::infinity());
}
inline double deflate_lower(double v) {
  return std::nextafter(v, -std::numeric_limits<double>::infinity());
}

// exp that underflows to 0 and reports overflow instead of returning inf.
inline double exp_guarded(double x) {
  if (x > 709.0) throw domain_error("exp overflow; exponent " + std::to_string(x));
  return std::exp(x);
}

// exp for quantities known to be subtracted from or added to O(1) terms:
// overflow maps to +inf so callers can reject the row.
inline double exp_saturating(double x) {
  if (x > 709.0) return std::numeric_limits<double>::infinity();
  return std::exp(x);
}

// log(e^a + e^b) without leaving the log domain.
inline double log_add_exp(double a, double b) {
  if (a < b) std::swap(a, b);
  if (b == -std::numeric_limits<double>::infinity()) return a;
  return a + std::log1p(std::exp(b - a));
}

// Compensated accumulator for long sums of logs and quadrature pieces.
class KahanSum {
 public:
  void add(double x) {
    double y = x - c_;
    double t = s_ + y;
    c_ = (t - s_) - y;
    s_ = t;
  }
  double value() const { return s_; }

 private:
  double s_ = 0.0;
  double c_ = 0.0;
};

// Maximum of f over a log-spaced style linear grid on [a,b], endpoints
// included. Used where a bound must hold uniformly in log T: the integrands
// are smooth monotone products, so the sup sits at a grid end; when adjacent
// differences change sign the grid is refined x8 (one retry suffices in
// practice, the cap keeps it deterministic).
template <class F>
double sup_on_grid(F&& f, double a, double b, int n = 1024) {
  if (!(a <= b)) throw domain_error("sup_on_grid: empty interval");
  for (int pass = 0; pass < 3; ++pass) {
    double best = -std::numeric_limits<double>::infinity();
    double prev = 0.0;
    bool up = false, down = false;
    for (int i = 0; i <= n; ++i) {
      double x = a + (b - a) * static_cast<double>(i) / n;
      double v = f(x);
      if (v > best) best = v;
      if (i > 0) {
        if (v > prev) up = true;
        if (v < prev) down = true;
      }
      prev = v;
    }
    if (!(up && down) || pass == 2) return best;
    n *= 8;
  }
  return f(a);  // unreachable
}

template <class F>
double inf_on_grid(F&& f, double a, double b, int n = 1024) {
  return -sup_on_grid([&](double x) { return -f(x); }, a, b, n);
}

}  // namespace zdc
