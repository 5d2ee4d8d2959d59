#pragma once

#include <cmath>
#include <functional>
#include <limits>
#include <string>
#include <vector>

#include "divbounds/distribution.hpp"
#include "divbounds/errors.hpp"
#include "divbounds/optimize.hpp"

namespace divbounds {

inline constexpr double kInf = std::numeric_limits<double>::infinity();

/// A convex generator f on (0,inf) with f(1)=0, together with the limit
/// values the divergence conventions need:
///   f_at_zero          = lim_{t->0+} f(t)            (may be +inf)
///   slope_at_infinity  = lim_{u->inf} f(u)/u         (may be +inf)
///   f_prime_at_1       = f'(1); the symmetry constant is a = 2 f'(1)
struct FDivergenceSpec {
  std::string name;
  std::function<double(double)> f;
  double f_at_zero = 0.0;
  double slope_at_infinity = 0.0;
  double f_prime_at_1 = 0.0;
};

inline FDivergenceSpec kl_spec() {
  return {"kl", [](double t) { return t * std::log(t); }, 0.0, kInf, 1.0};
}

inline FDivergenceSpec jeffreys_spec() {
  return {"jeffreys", [](double t) { return 0.5 * (t - 1.0) * std::log(t); }, kInf, kInf, 0.0};
}

inline FDivergenceSpec hellinger_sq_spec() {
  return {"hellinger_sq",
          [](double t) {
            const double s = std::sqrt(t) - 1.0;
            return s * s;
          },
          1.0, 1.0, 0.0};
}

inline FDivergenceSpec capacitory_spec() {
  constexpr double two_log2 = 2.0 * 0.6931471805599453;
  return {"capacitory",
          [](double t) { return t * std::log(t) - (t + 1.0) * std::log1p(t) + two_log2; },
          two_log2, 0.0, -0.6931471805599453};
}

inline FDivergenceSpec total_variation_spec() {
  // f is not differentiable at 1; a = 0 satisfies the symmetry equation.
  return {"total_variation", [](double t) { return 0.5 * std::abs(t - 1.0); }, 0.5, 0.5, 0.0};
}

namespace detail {

inline std::vector<double> log_grid(double lo, double hi, int points) {
  std::vector<double> grid;
  grid.reserve(points);
  const double llo = std::log10(lo), lhi = std::log10(hi);
  for (int i = 0; i < points; ++i)
    grid.push_back(std::pow(10.0, llo + (lhi - llo) * i / (points - 1)));
  return grid;
}

}  // namespace detail

/// Checks the FDivergenceSpec invariants: f(1) = 0 and midpoint convexity on
/// a log-spaced grid. Throws ParameterOutOfRangeError on failure.
inline void validate_generator(const FDivergenceSpec& spec) {
  if (std::abs(spec.f(1.0)) > 1e-12)
    throw ParameterOutOfRangeError("generator '" + spec.name + "' has f(1) != 0");
  const auto grid = detail::log_grid(1e-4, 1e4, 41);
  for (std::size_t i = 0; i < grid.size(); ++i) {
    for (std::size_t j = i + 1; j < grid.size(); ++j) {
      const double fu = spec.f(grid[i]), fv = spec.f(grid[j]);
      const double mid = spec.f(0.5 * (grid[i] + grid[j]));
      const double slack = 1e-9 * (1.0 + std::abs(fu) + std::abs(fv));
      if (mid > 0.5 * (fu + fv) + slack)
        throw ParameterOutOfRangeError("generator '" + spec.name + "' fails midpoint convexity");
    }
  }
}

/// True iff f(u) = u f(1/u) + a (u-1) within 1e-10 on a log-spaced grid over
/// [1e-4, 1e4]; this characterizes the symmetric f-divergences.
inline bool is_symmetric(const FDivergenceSpec& spec, double a) {
  for (double u : detail::log_grid(1e-4, 1e4, 81)) {
    const double lhs = spec.f(u);
    const double rhs = u * spec.f(1.0 / u) + a * (u - 1.0);
    if (!(std::abs(lhs - rhs) <= 1e-10)) return false;
  }
  return true;
}

inline bool is_symmetric(const FDivergenceSpec& spec) {
  return is_symmetric(spec, 2.0 * spec.f_prime_at_1);
}

/// Generic f-divergence sum q(x) f(p(x)/q(x)) with the standard conventions:
/// 0 f(0/0) = 0; a f(a/0) = a * slope_at_infinity for a > 0; and p(x) = 0
/// contributes q(x) * f_at_zero. Returns +inf when any contribution is
/// infinite.
inline double f_divergence(const FDivergenceSpec& spec, const Distribution& p,
                           const Distribution& q, Pad pad = Pad::zero_extend) {
  const auto [pv, qv] = aligned(p, q, pad);
  double total = 0.0;
  for (std::size_t i = 0; i < pv.size(); ++i) {
    const double pi = pv[i], qi = qv[i];
    if (qi > 0.0) {
      if (pi > 0.0) {
        total += qi * spec.f(pi / qi);
      } else {
        if (std::isinf(spec.f_at_zero)) return kInf;
        total += qi * spec.f_at_zero;
      }
    } else if (pi > 0.0) {
      if (std::isinf(spec.slope_at_infinity)) return kInf;
      total += pi * spec.slope_at_infinity;
    }
  }
  return total;
}

/// Relative entropy D(P||Q) = sum p log(p/q) in nats; +inf when Q fails to
/// dominate P.
inline double kl(const Distribution& p, const Distribution& q, Pad pad = Pad::zero_extend) {
  const auto [pv, qv] = aligned(p, q, pad);
  double total = 0.0;
  for (std::size_t i = 0; i < pv.size(); ++i) {
    if (pv[i] > 0.0) {
      if (qv[i] <= 0.0) return kInf;
      total += pv[i] * std::log(pv[i] / qv[i]);
    }
  }
  return total;
}

/// Jeffreys' divergence (D(P||Q) + D(Q||P)) / 2.
inline double jeffreys(const Distribution& p, const Distribution& q, Pad pad = Pad::zero_extend) {
  return 0.5 * (kl(p, q, pad) + kl(q, p, pad));
}

/// Squared Hellinger distance sum (sqrt p - sqrt q)^2.
inline double hellinger_sq(const Distribution& p, const Distribution& q,
                           Pad pad = Pad::zero_extend) {
  const auto [pv, qv] = aligned(p, q, pad);
  double total = 0.0;
  for (std::size_t i = 0; i < pv.size(); ++i) {
    const double s = std::sqrt(pv[i]) - std::sqrt(qv[i]);
    total += s * s;
  }
  return total;
}

/// Capacitory discrimination (Jensen-Shannon divergence):
/// D(P||(P+Q)/2) + D(Q||(P+Q)/2). Always finite.
inline double capacitory(const Distribution& p, const Distribution& q,
                         Pad pad = Pad::zero_extend) {
  const auto [pv, qv] = aligned(p, q, pad);
  double total = 0.0;
  for (std::size_t i = 0; i < pv.size(); ++i) {
    const double m = pv[i] + qv[i];
    if (pv[i] > 0.0) total += pv[i] * std::log(2.0 * pv[i] / m);
    if (qv[i] > 0.0) total += qv[i] * std::log(2.0 * qv[i] / m);
  }
  return total;
}

/// Bhattacharyya coefficient Z(P,Q) = sum sqrt(p q), in [0,1], 1 iff P = Q.
inline double bhattacharyya_coefficient(const Distribution& p, const Distribution& q,
                                        Pad pad = Pad::zero_extend) {
  const auto [pv, qv] = aligned(p, q, pad);
  double total = 0.0;
  for (std::size_t i = 0; i < pv.size(); ++i) total += std::sqrt(pv[i] * qv[i]);
  return total;
}

/// Bhattacharyya distance -log Z(P,Q); +inf when the supports are disjoint.
inline double bhattacharyya_distance(const Distribution& p, const Distribution& q,
                                     Pad pad = Pad::zero_extend) {
  return -std::log(bhattacharyya_coefficient(p, q, pad));
}

namespace detail {

// log of sum over the common support of p^lambda q^(1-lambda); -inf when the
// supports are disjoint.
inline double log_power_sum(const std::vector<double>& pv, const std::vector<double>& qv,
                            double lambda) {
  double sum = 0.0;
  for (std::size_t i = 0; i < pv.size(); ++i) {
    if (pv[i] > 0.0 && qv[i] > 0.0)
      sum += std::exp(lambda * std::log(pv[i]) + (1.0 - lambda) * std::log(qv[i]));
  }
  return std::log(sum);
}

}  // namespace detail

/// Renyi divergence of order lambda in (0,1):
/// (1/(lambda-1)) log sum p^lambda q^(1-lambda).
inline double renyi_divergence(const Distribution& p, const Distribution& q, double lambda,
                               Pad pad = Pad::zero_extend) {
  if (!(lambda > 0.0 && lambda < 1.0)) throw LambdaOutOfRangeError(lambda);
  const auto [pv, qv] = aligned(p, q, pad);
  return detail::log_power_sum(pv, qv, lambda) / (lambda - 1.0);
}

struct ChernoffResult {
  double value;       // -log sum p^lambda q^(1-lambda) at lambda_opt, >= 0, may be +inf
  double lambda_opt;  // in [0,1]; meaningless when value is +inf
};

/// Chernoff information C(P,Q) = -min_{lambda in [0,1]} log sum p^l q^(1-l).
/// The objective is convex in lambda, so a golden-section search (interval
/// tolerance 1e-12) is globally correct. Disjoint supports give +inf.
inline ChernoffResult chernoff_information(const Distribution& p, const Distribution& q,
                                           Pad pad = Pad::zero_extend) {
  const auto [pv, qv] = aligned(p, q, pad);
  std::vector<double> lp, lq;
  for (std::size_t i = 0; i < pv.size(); ++i) {
    if (pv[i] > 0.0 && qv[i] > 0.0) {
      lp.push_back(std::log(pv[i]));
      lq.push_back(std::log(qv[i]));
    }
  }
  if (lp.empty()) return {kInf, 0.5};
  const auto g = [&](double lambda) {
    double sum = 0.0;
    for (std::size_t i = 0; i < lp.size(); ++i)
      sum += std::exp(lambda * lp[i] + (1.0 - lambda) * lq[i]);
    return std::log(sum);
  };
  const MinimumResult res = golden_section_min(g, 0.0, 1.0, 1e-12);
  double value = -res.value;
  if (value < 0.0 && value > -1e-12) value = 0.0;
  return {value, res.x};
}

}  // namespace divbounds
