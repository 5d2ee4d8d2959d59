#pragma once

#include <algorithm>
#include <cmath>

#include "divbounds/distribution.hpp"
#include "divbounds/errors.hpp"
#include "divbounds/fdivergence.hpp"
#include "divbounds/optimize.hpp"

namespace divbounds {

enum class ExtremalKind { two_element, three_element };

/// A pair of distributions at total variation distance exactly epsilon.
/// two_element: P = ((1-e)/2, (1+e)/2), Q swapped — attains every symmetric
/// f-divergence infimum and the Bhattacharyya upper bound.
/// three_element: P = (e, 1-e, 0), Q = (0, 1-e, e) — attains the
/// Bhattacharyya lower bound.
struct ExtremalPair {
  Distribution p;
  Distribution q;
  ExtremalKind kind;
  double epsilon;
};

inline ExtremalPair make_extremal_pair(double epsilon, ExtremalKind kind) {
  if (!(epsilon >= 0.0 && epsilon <= 1.0)) throw EpsilonOutOfRangeError(epsilon, "[0,1]");
  if (kind == ExtremalKind::two_element) {
    const double lo = 0.5 * (1.0 - epsilon), hi = 0.5 * (1.0 + epsilon);
    return {Distribution({lo, hi}), Distribution({hi, lo}), kind, epsilon};
  }
  return {Distribution({epsilon, 1.0 - epsilon, 0.0}),
          Distribution({0.0, 1.0 - epsilon, epsilon}), kind, epsilon};
}

/// Infimum of a symmetric f-divergence at fixed total variation distance:
/// (1-e) f((1+e)/(1-e)) - 2 f'(1) e. Attained by the two-element pair.
inline double symmetric_fdiv_infimum(const FDivergenceSpec& spec, double epsilon) {
  if (!is_symmetric(spec)) throw NotSymmetricError(spec.name);
  if (!(epsilon >= 0.0 && epsilon < 1.0)) throw EpsilonOutOfRangeError(epsilon, "[0,1)");
  if (epsilon == 0.0) return 0.0;
  return (1.0 - epsilon) * spec.f((1.0 + epsilon) / (1.0 - epsilon)) -
         2.0 * spec.f_prime_at_1 * epsilon;
}

struct BhattacharyyaBounds {
  double lower;  // 1 - e, attained by the three-element pair
  double upper;  // sqrt(1 - e^2), attained by the two-element pair
};

inline BhattacharyyaBounds bhattacharyya_bounds(double epsilon) {
  if (!(epsilon >= 0.0 && epsilon <= 1.0)) throw EpsilonOutOfRangeError(epsilon, "[0,1]");
  return {1.0 - epsilon, std::sqrt(1.0 - epsilon * epsilon)};
}

/// Minimum Chernoff information at fixed total variation distance:
/// -(1/2) log(1 - e^2) for e < 1, +inf at e = 1.
inline double chernoff_min(double epsilon) {
  if (!(epsilon >= 0.0 && epsilon <= 1.0)) throw EpsilonOutOfRangeError(epsilon, "[0,1]");
  if (epsilon == 1.0) return kInf;
  return -0.5 * std::log1p(-epsilon * epsilon);
}

/// Relative entropy between Bernoulli(p) and Bernoulli(q), 0 log 0 = 0.
inline double bernoulli_kl(double p, double q) {
  if (!(p >= 0.0 && p <= 1.0)) throw ParameterOutOfRangeError("bernoulli_kl: p outside [0,1]");
  if (!(q > 0.0 && q < 1.0)) throw ParameterOutOfRangeError("bernoulli_kl: q outside (0,1)");
  double total = 0.0;
  if (p > 0.0) total += p * std::log(p / q);
  if (p < 1.0) total += (1.0 - p) * std::log((1.0 - p) / (1.0 - q));
  return total;
}

/// Minimum capacitory discrimination at fixed total variation distance:
/// 2 d((1-e)/2 || 1/2) = (1+e)log(1+e) + (1-e)log(1-e).
inline double capacitory_min(double epsilon) {
  if (!(epsilon >= 0.0 && epsilon <= 1.0)) throw EpsilonOutOfRangeError(epsilon, "[0,1]");
  return 2.0 * bernoulli_kl(0.5 * (1.0 - epsilon), 0.5);
}

/// Minimum Jeffreys' divergence at fixed total variation distance:
/// e log((1+e)/(1-e)). Strictly increasing on [0,1), diverging at 1. The
/// corresponding supremum is infinite, so only the minimum is exposed.
inline double jeffreys_min(double epsilon) {
  if (!(epsilon >= 0.0 && epsilon < 1.0)) throw EpsilonOutOfRangeError(epsilon, "[0,1)");
  if (epsilon == 0.0) return 0.0;
  return epsilon * std::log((1.0 + epsilon) / (1.0 - epsilon));
}

/// Infimum of Jeffreys' divergence over pairs with D(P||Q) fixed: half the
/// relative entropy. An infimum, not attained.
inline double jeffreys_min_given_kl(double kl_value) {
  if (!(kl_value > 0.0)) throw ParameterOutOfRangeError("jeffreys_min_given_kl: value must be > 0");
  return 0.5 * kl_value;
}

/// The unique e in [0,1) with e log((1+e)/(1-e)) = x, by bisection on the
/// strictly increasing map (absolute tolerance 1e-12 in e). For x near 0 this
/// behaves like sqrt(x/2).
inline double jeffreys_epsilon_solver(double x) {
  if (!(x >= 0.0) || !std::isfinite(x))
    throw ParameterOutOfRangeError("jeffreys_epsilon_solver: x must be finite and >= 0");
  if (x == 0.0) return 0.0;
  return bisect_increasing([](double e) { return jeffreys_min(e); }, 0.0, 1.0, x, 1e-12);
}

/// One point of the L(e) curve: the minimum relative entropy over all pairs
/// at total variation distance e, found by minimizing over beta.
struct LCurvePoint {
  double epsilon;
  double value;     // L(epsilon), nats
  double beta_opt;  // minimizing beta in [epsilon-1, 0]
};

namespace detail {

// The bracketed expression of the L(e) minimization, rewritten with log1p so
// that the small-epsilon regime keeps full precision. beta must lie in
// (e-1, 0); the limit term 0 log 0 = 0 applies at beta = e-1.
inline double l_curve_objective(double epsilon, double beta) {
  const double a = 0.5 * (1.0 + epsilon - beta);
  const double u = 0.5 * (1.0 + beta - epsilon);
  const double t1 = -a * std::log1p(-epsilon / a);
  const double t2 = u > 0.0 ? -u * std::log1p(epsilon / u) : 0.0;
  return t1 + t2;
}

}  // namespace detail

/// Evaluates L(e) by a coarse scan over beta followed by golden-section
/// refinement (beta tolerance 1e-10). The beta interval is clamped slightly
/// inside [e-1, 0] where the logarithms degenerate. The domain excludes 1,
/// where L is infinite.
inline LCurvePoint l_curve(double epsilon) {
  if (!(epsilon >= 0.0 && epsilon < 1.0)) throw EpsilonOutOfRangeError(epsilon, "[0,1)");
  if (epsilon == 0.0) return {0.0, 0.0, 0.0};
  const double margin = std::min(1e-12, 0.25 * (1.0 - epsilon));
  const double lo = epsilon - 1.0 + margin;
  const double hi = -margin;
  const auto objective = [epsilon](double beta) { return detail::l_curve_objective(epsilon, beta); };

  constexpr int kScan = 128;
  int best_i = 0;
  double best_v = kInf;
  for (int i = 0; i <= kScan; ++i) {
    const double x = lo + (hi - lo) * i / kScan;
    const double v = objective(x);
    if (v < best_v) {
      best_v = v;
      best_i = i;
    }
  }
  const double a = lo + (hi - lo) * std::max(0, best_i - 1) / kScan;
  const double b = lo + (hi - lo) * std::min(kScan, best_i + 1) / kScan;
  MinimumResult res = golden_section_min(objective, a, b, 1e-10);
  if (best_v < res.value) res = {lo + (hi - lo) * best_i / kScan, best_v};
  return {epsilon, res.value, res.x};
}

/// Inverse of the strictly increasing map e -> L(e), by bisection with
/// tolerance 1e-10 in e.
inline double l_curve_inverse(double target) {
  if (!(target >= 0.0)) throw ParameterOutOfRangeError("l_curve_inverse: target must be >= 0");
  if (target == 0.0) return 0.0;
  return bisect_increasing([](double e) { return l_curve(e).value; }, 0.0, 1.0, target, 1e-10);
}

/// Partial sum of the Topsoe series sum_{v=1}^{terms} e^(2v) / (v (2v-1)).
/// Nondecreasing in terms and converging to capacitory_min(e) for e < 1.
inline double topsoe_series(double epsilon, int terms) {
  if (!(epsilon >= 0.0 && epsilon <= 1.0)) throw EpsilonOutOfRangeError(epsilon, "[0,1]");
  if (terms < 1) throw ParameterOutOfRangeError("topsoe_series: terms must be >= 1");
  const double e2 = epsilon * epsilon;
  double power = 1.0;
  double sum = 0.0;
  for (int v = 1; v <= terms; ++v) {
    power *= e2;
    sum += power / (static_cast<double>(v) * (2.0 * v - 1.0));
  }
  return sum;
}

}  // namespace divbounds
