#pragma once

// Exact desk-scale evaluation of the sieve weights psi_d, theta_d and their
// divisor sums Psi(n), Theta(n). Everything here is brute force on purpose:
// it is the independent oracle against which the closed-form constants are
// checked, so it shares no code with the bound side.

#include <cstdint>
#include <vector>

#include "zdc/numeric.hpp"

namespace zdc {

inline constexpr std::int64_t kSieveBudget = 10'000'000;

// Linear sieve for mu(1..n).
inline std::vector<int> mobius_sieve(std::int64_t n) {
  if (n < 1 || n > kSieveBudget) throw domain_error("mobius_sieve: size out of budget");
  std::vector<int> mu(static_cast<size_t>(n) + 1, 0);
  std::vector<std::int64_t> primes;
  std::vector<bool> comp(static_cast<size_t>(n) + 1, false);
  mu[1] = 1;
  for (std::int64_t i = 2; i <= n; ++i) {
    if (!comp[i]) {
      primes.push_back(i);
      mu[i] = -1;
    }
    for (std::int64_t p : primes) {
      if (i * p > n) break;
      comp[i * p] = true;
      if (i % p == 0) {
        mu[i * p] = 0;
        break;
      }
      mu[i * p] = -mu[i];
    }
  }
  return mu;
}

// Lambda_z(d) = mu(d) log(z/d) for d <= z, else 0.
inline std::vector<double> lambda_weights(const std::vector<int>& mu, std::int64_t z) {
  std::vector<double> w(mu.size(), 0.0);
  double lz = std::log(static_cast<double>(z));
  std::int64_t lim = std::min<std::int64_t>(z, static_cast<std::int64_t>(mu.size()) - 1);
  for (std::int64_t d = 1; d <= lim; ++d)
    if (mu[d] != 0) w[d] = mu[d] * (lz - std::log(static_cast<double>(d)));
  return w;
}

// psi_d: mu(d) on [1,U], mu(d) log(V/d)/log(V/U) on (U,V], 0 past V.
// The d <= U branch stays integer-valued so Psi(n) vanishes exactly on
// 2 <= n <= U.
inline std::vector<double> psi_weights(const std::vector<int>& mu, std::int64_t u,
                                       std::int64_t v) {
  if (!(1 <= u && u < v)) throw domain_error("psi_weights: need 1 <= U < V");
  std::vector<double> w(mu.size(), 0.0);
  double lv = std::log(static_cast<double>(v));
  double lvu = lv - std::log(static_cast<double>(u));
  std::int64_t lim = std::min<std::int64_t>(v, static_cast<std::int64_t>(mu.size()) - 1);
  for (std::int64_t d = 1; d <= lim; ++d) {
    if (mu[d] == 0) continue;
    if (d <= u)
      w[d] = mu[d];
    else
      w[d] = mu[d] * (lv - std::log(static_cast<double>(d))) / lvu;
  }
  return w;
}

// theta_d = mu(d) log(W/d)/log W on [1,W]; the U=1, V=W special case of psi.
inline std::vector<double> theta_weights(const std::vector<int>& mu, std::int64_t w_lim) {
  std::vector<double> w(mu.size(), 0.0);
  double lw = std::log(static_cast<double>(w_lim));
  std::int64_t lim = std::min<std::int64_t>(w_lim, static_cast<std::int64_t>(mu.size()) - 1);
  for (std::int64_t d = 1; d <= lim; ++d)
    if (mu[d] != 0) w[d] = mu[d] * (lw - std::log(static_cast<double>(d))) / lw;
  return w;
}

// F(n) = sum_{d | n} weight(d) for all n <= N, by one pass over multiples.
inline std::vector<double> divisor_sums(const std::vector<double>& weight, std::int64_t n_max) {
  std::vector<double> out(static_cast<size_t>(n_max) + 1, 0.0);
  std::int64_t lim = std::min<std::int64_t>(n_max, static_cast<std::int64_t>(weight.size()) - 1);
  for (std::int64_t d = 1; d <= lim; ++d) {
    if (weight[d] == 0.0) continue;
    for (std::int64_t m = d; m <= n_max; m += d) out[m] += weight[d];
  }
  return out;
}

// d(n) for n <= N.
inline std::vector<std::int64_t> divisor_count_sieve(std::int64_t n_max) {
  if (n_max < 1 || n_max > kSieveBudget) throw domain_error("divisor_count_sieve: budget");
  std::vector<std::int64_t> d(static_cast<size_t>(n_max) + 1, 0);
  for (std::int64_t i = 1; i <= n_max; ++i)
    for (std::int64_t m = i; m <= n_max; m += i) ++d[m];
  return d;
}

struct WeightSums {
  double psi_sq = 0.0;         // sum_{n<=N} Psi(n)^2
  double psi_sq_over_n = 0.0;  // sum_{n<=N} Psi(n)^2 / n
  double lambda_prod = 0.0;    // sum_{n<=N} (sum_{d|n} L_U(d)) (sum_{e|n} L_V(e))
};

// The headline oracle: exact weighted sums for one (U, V, W, N). W enters
// through the theta special-case checks; the Lambda product uses z1=U, z2=V.
inline WeightSums weights_oracle(std::int64_t u, std::int64_t v, std::int64_t w,
                                 std::int64_t n_max) {
  if (n_max < 2 || n_max > kSieveBudget) throw domain_error("weights_oracle: N out of budget");
  if (!(1 <= u && u < v)) throw domain_error("weights_oracle: need 1 <= U < V");
  if (w < 1) throw domain_error("weights_oracle: need W >= 1");
  auto mu = mobius_sieve(std::max({v, w, std::int64_t{2}}));
  auto psi = divisor_sums(psi_weights(mu, u, v), n_max);
  auto l1 = divisor_sums(lambda_weights(mu, u), n_max);
  auto l2 = divisor_sums(lambda_weights(mu, v), n_max);
  KahanSum s2, s2n, sl;
  for (std::int64_t n = 1; n <= n_max; ++n) {
    double p = psi[n];
    s2.add(p * p);
    s2n.add(p * p / static_cast<double>(n));
    sl.add(l1[n] * l2[n]);
  }
  return WeightSums{s2.value(), s2n.value(), sl.value()};
}

}  // namespace zdc
