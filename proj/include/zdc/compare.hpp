#pragma once

// Comparison against the prior explicit estimate
//   N(sigma,T) <= C1 T^{8/3(1-sigma)} log^{5-2sigma} T + C2 log^2 T.
// C1, C2 come from an external table keyed by sigma; this module only
// consumes them.

#include <cmath>
#include <fstream>
#include <map>
#include <sstream>
#include <string>

#include "zdc/numeric.hpp"
#include "zdc/params.hpp"

namespace zdc {

class KlnConstants {
 public:
  void insert(double sigma, double c1, double c2) { table_[sigma] = {c1, c2}; }

  bool has(double sigma) const { return find(sigma) != nullptr; }

  double c1_of(double sigma) const { return at(sigma).first; }
  double c2_of(double sigma) const { return at(sigma).second; }

  // check_dominance keys the whole row on its alpha0 entry, which must be
  // present verbatim rather than interpolated
  void require(double sigma) const {
    if (!has(sigma))
      throw domain_error("KLN constants missing for sigma = " + std::to_string(sigma));
  }

  size_t size() const { return table_.size(); }

  static KlnConstants load_csv(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::ios_base::failure("cannot open KLN table: " + path);
    KlnConstants k;
    std::string line;
    while (std::getline(in, line)) {
      if (line.empty() || line[0] == '#') continue;
      std::replace(line.begin(), line.end(), ',', ' ');
      std::istringstream ss(line);
      std::string a, b, c;
      if (!(ss >> a >> b >> c)) continue;
      if (a == "sigma") continue;  // header
      k.insert(std::stod(a), std::stod(b), std::stod(c));
    }
    if (k.table_.empty()) throw std::ios_base::failure("empty KLN table: " + path);
    return k;
  }

 private:
  const std::pair<double, double>* find(double sigma) const {
    auto it = table_.lower_bound(sigma - 1e-9);
    if (it != table_.end() && std::fabs(it->first - sigma) <= 1e-9) return &it->second;
    return nullptr;
  }
  // exact keys verbatim; in-between sigmas interpolated linearly; above the
  // last key the value is held flat (the table must reach sigma = alpha0,
  // improvements are queried up to sigma = 1)
  std::pair<double, double> at(double sigma) const {
    if (const auto* p = find(sigma)) return *p;
    if (table_.empty() || sigma < table_.begin()->first - 1e-9)
      throw domain_error("KLN constants missing for sigma = " + std::to_string(sigma));
    auto hi = table_.lower_bound(sigma);
    if (hi == table_.end()) return table_.rbegin()->second;
    auto lo = std::prev(hi);
    double t = (sigma - lo->first) / (hi->first - lo->first);
    return {lo->second.first + t * (hi->second.first - lo->second.first),
            lo->second.second + t * (hi->second.second - lo->second.second)};
  }

  std::map<double, std::pair<double, double>> table_;
};

inline double kln_bound_log(double sigma, LogHeight t, const KlnConstants& kln) {
  double lt = t.value;
  double main = std::log(kln.c1_of(sigma)) + (8.0 / 3.0) * (1.0 - sigma) * lt +
                (5.0 - 2.0 * sigma) * std::log(lt);
  double sec = std::log(kln.c2_of(sigma)) + 2.0 * std::log(lt);
  return log_add_exp(main, sec);
}

struct DominanceReport {
  bool pass = false;
  // T1 <= exp(500): worst over T of alpha0 minus the sigma threshold.
  // T0 > exp(500): relative margin of C1 log^3 T0 over C.
  double worst_margin = 0.0;
  bool used_sigma_condition = false;
};

// Verifies the new bound undercuts the prior one on the whole row. For
// B > 8/3 (T1 <= exp(500)) this is the sigma-threshold condition checked on
// a log T grid; past exp(500) the single inequality C1 log^3 T0 >= C does it.
inline DominanceReport check_dominance(const RangeSpec& spec, const DensityEstimate& est,
                                       const KlnConstants& kln, int grid = 4096) {
  kln.require(spec.alpha0);
  double c1 = kln.c1_of(spec.alpha0);
  DominanceReport rep;
  if (spec.t1.value <= 500.0) {
    rep.used_sigma_condition = true;
    double worst = std::numeric_limits<double>::infinity();
    double d = est.big_b - 8.0 / 3.0;
    for (int i = 0; i <= grid; ++i) {
      double lt = spec.t0.value + (spec.t1.value - spec.t0.value) * i / grid;
      double ll = std::log(lt);
      double rhs = (d - std::log(c1 / est.big_c) / lt - 5.0 * ll / lt) / (d - 2.0 * ll / lt);
      worst = std::min(worst, spec.alpha0 - rhs);
    }
    rep.worst_margin = worst;
    rep.pass = worst >= 0.0;
  } else {
    double lhs = c1 * spec.t0.value * spec.t0.value * spec.t0.value;
    rep.worst_margin = lhs / est.big_c - 1.0;
    rep.pass = lhs >= est.big_c;
  }
  return rep;
}

// 100 (1 - ours/theirs) at one point, in log domain.
inline double improvement_percent(double sigma, LogHeight t, const DensityEstimate& est,
                                  const KlnConstants& kln) {
  double ours = std::log(est.big_c) + est.big_b * (1.0 - sigma) * t.value;
  double theirs = kln_bound_log(sigma, t, kln);
  return 100.0 * (1.0 - std::exp(ours - theirs));
}

}  // namespace zdc
