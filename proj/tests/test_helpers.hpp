#pragma once

#include <cmath>
#include <random>
#include <vector>

#include "divbounds/distribution.hpp"

namespace testutil {

/// Random strictly positive distribution from normalized exponentials.
inline divbounds::Distribution random_distribution(std::mt19937& rng, std::size_t n) {
  std::uniform_real_distribution<double> unif(0.0, 1.0);
  std::vector<double> v(n);
  double sum = 0.0;
  for (auto& x : v) {
    x = -std::log(1.0 - unif(rng)) + 1e-6;
    sum += x;
  }
  for (auto& x : v) x /= sum;
  return divbounds::Distribution(v);
}

/// Random distribution where entries are zeroed with probability ~0.3.
inline divbounds::Distribution random_distribution_with_zeros(std::mt19937& rng, std::size_t n) {
  std::uniform_real_distribution<double> unif(0.0, 1.0);
  std::vector<double> v(n, 0.0);
  double sum = 0.0;
  for (auto& x : v) {
    if (unif(rng) > 0.3) x = -std::log(1.0 - unif(rng)) + 1e-6;
    sum += x;
  }
  if (sum == 0.0) {
    v[0] = 1.0;
    sum = 1.0;
  }
  for (auto& x : v) x /= sum;
  return divbounds::Distribution(v);
}

/// Independent brute-force oracle for L(eps): minimum KL over 2-element pairs
/// (a,1-a) vs (a-eps,1-a+eps), by grid scan plus local refinement. Direct
/// formulas only; shares nothing with the implementation under test.
inline double brute_force_min_kl_two_element(double eps, int steps = 200000, int rounds = 4) {
  const auto kl2 = [](double a, double b) {
    double s = 0.0;
    if (a > 0.0) s += a * std::log(a / b);
    if (a < 1.0) s += (1.0 - a) * std::log((1.0 - a) / (1.0 - b));
    return s;
  };
  const double lo = 0.5 * (1.0 + eps);
  const double hi = 1.0;
  double best_a = lo, best_v = 1e300;
  for (int round = 0; round < rounds; ++round) {
    double bl = lo, bh = hi;
    if (round > 0) {
      bl = std::max(lo, best_a - (hi - lo) * 0.01);
      bh = std::min(hi, best_a + (hi - lo) * 0.01);
    }
    for (int i = 0; i <= steps; ++i) {
      const double a = bl + (bh - bl) * i / steps;
      const double b = a - eps;
      if (b <= 0.0 || a >= 1.0) continue;
      const double v = kl2(a, b);
      if (v < best_v) {
        best_v = v;
        best_a = a;
      }
    }
  }
  return best_v;
}

}  // namespace testutil
