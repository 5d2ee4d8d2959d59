#pragma once

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "divbounds/bounds.hpp"
#include "divbounds/distribution.hpp"
#include "divbounds/errors.hpp"
#include "divbounds/fdivergence.hpp"

namespace divbounds {

/// Result of a brute-force sweep over small-support distribution pairs at a
/// fixed total variation distance. extremum is the minimum of the measure
/// over the sweep (maximum for bhattacharyya_max); violations counts grid
/// pairs that beat the closed-form bound at their own total variation
/// distance by more than 1e-12, which must never happen if the bound is
/// valid.
struct OracleReport {
  std::string measure;
  double epsilon;
  double closed_form;
  double extremum;
  Distribution witness_p;
  Distribution witness_q;
  double gap;
  long violations;
  bool maximize;
};

namespace detail {

struct OracleMeasure {
  bool maximize;
  double (*evaluate)(const Distribution&, const Distribution&);
  double (*closed_form)(double);
};

inline OracleMeasure oracle_measure(const std::string& name) {
  if (name == "chernoff")
    return {false, [](const Distribution& p, const Distribution& q) {
              return chernoff_information(p, q).value;
            },
            [](double tv) { return chernoff_min(tv); }};
  if (name == "jeffreys")
    return {false, [](const Distribution& p, const Distribution& q) { return jeffreys(p, q); },
            [](double tv) { return tv < 1.0 ? jeffreys_min(tv) : kInf; }};
  if (name == "capacitory")
    return {false, [](const Distribution& p, const Distribution& q) { return capacitory(p, q); },
            [](double tv) { return capacitory_min(tv); }};
  if (name == "kl")
    return {false, [](const Distribution& p, const Distribution& q) { return kl(p, q); },
            [](double tv) { return tv < 1.0 ? l_curve(tv).value : kInf; }};
  if (name == "bhattacharyya_min")
    return {false,
            [](const Distribution& p, const Distribution& q) {
              return bhattacharyya_coefficient(p, q);
            },
            [](double tv) { return bhattacharyya_bounds(tv).lower; }};
  if (name == "bhattacharyya_max")
    return {true,
            [](const Distribution& p, const Distribution& q) {
              return bhattacharyya_coefficient(p, q);
            },
            [](double tv) { return bhattacharyya_bounds(tv).upper; }};
  throw UnknownMeasureError(name);
}

// Integer compositions of total into `parts` nonnegative summands, in
// lexicographic order.
inline std::vector<std::vector<int>> compositions(int total, int parts) {
  std::vector<std::vector<int>> out;
  if (parts == 2) {
    for (int k = 0; k <= total; ++k) out.push_back({k, total - k});
  } else {
    for (int k1 = 0; k1 <= total; ++k1)
      for (int k2 = 0; k2 <= total - k1; ++k2) out.push_back({k1, k2, total - k1 - k2});
  }
  return out;
}

inline Distribution to_distribution(const std::vector<int>& counts, int total) {
  std::vector<double> probs;
  probs.reserve(counts.size());
  for (int k : counts) probs.push_back(static_cast<double>(k) / total);
  return Distribution(std::move(probs));
}

struct SweepState {
  const OracleMeasure& measure;
  double epsilon;
  double extremum;
  std::vector<int> witness_p, witness_q;
  int witness_scale = 0;
  long violations = 0;
  std::map<long, double> closed_cache;  // keyed by L1 numerator at fixed scale

  SweepState(const OracleMeasure& m, double eps)
      : measure(m), epsilon(eps), extremum(m.maximize ? -kInf : kInf) {}

  // closed form at tv = l1_num / (2 * scale), cached per distinct grid value
  double closed_at(long l1_num, int scale) {
    const long key = l1_num * 10000L + scale;  // scales are small, keys stay distinct
    const auto it = closed_cache.find(key);
    if (it != closed_cache.end()) return it->second;
    const double v = measure.closed_form(static_cast<double>(l1_num) / (2.0 * scale));
    closed_cache.emplace(key, v);
    return v;
  }

  void consider(const std::vector<int>& pk, const std::vector<int>& qk, int scale) {
    long l1_num = 0;
    for (std::size_t i = 0; i < pk.size(); ++i) l1_num += std::abs(pk[i] - qk[i]);
    // half a grid cell of slack around the target total variation distance
    if (std::abs(static_cast<double>(l1_num) / (2.0 * scale) - epsilon) > 0.5 / scale) return;
    const Distribution p = to_distribution(pk, scale);
    const Distribution q = to_distribution(qk, scale);
    const double v = measure.evaluate(p, q);
    const double bound = closed_at(l1_num, scale);
    if (measure.maximize ? v > bound + 1e-12 : v < bound - 1e-12) ++violations;
    const bool better = measure.maximize ? v > extremum : v < extremum;
    if (better || (v == extremum && lexicographically_smaller(pk, qk, scale))) {
      extremum = v;
      witness_p = pk;
      witness_q = qk;
      witness_scale = scale;
    }
  }

  bool lexicographically_smaller(const std::vector<int>& pk, const std::vector<int>& qk,
                                 int scale) const {
    if (witness_scale == 0) return true;
    for (std::size_t i = 0; i < pk.size(); ++i) {
      const double a = static_cast<double>(pk[i]) / scale;
      const double b = static_cast<double>(witness_p[i]) / witness_scale;
      if (a != b) return a < b;
    }
    for (std::size_t i = 0; i < qk.size(); ++i) {
      const double a = static_cast<double>(qk[i]) / scale;
      const double b = static_cast<double>(witness_q[i]) / witness_scale;
      if (a != b) return a < b;
    }
    return false;
  }
};

// one round of grid halving in a window around the coarse witness
inline void refine(SweepState& state, int grid_steps, int parts) {
  if (state.witness_scale == 0) return;
  const int scale = 2 * grid_steps;
  const std::vector<int> base_p = state.witness_p, base_q = state.witness_q;
  std::vector<std::vector<int>> p_local, q_local;
  const auto collect = [&](const std::vector<int>& base, std::vector<std::vector<int>>& out) {
    if (parts == 2) {
      for (int dk = -2; dk <= 2; ++dk) {
        const int k = 2 * base[0] + dk;
        if (k >= 0 && k <= scale) out.push_back({k, scale - k});
      }
    } else {
      for (int d1 = -2; d1 <= 2; ++d1)
        for (int d2 = -2; d2 <= 2; ++d2) {
          const int k1 = 2 * base[0] + d1, k2 = 2 * base[1] + d2;
          if (k1 >= 0 && k2 >= 0 && k1 + k2 <= scale) out.push_back({k1, k2, scale - k1 - k2});
        }
    }
  };
  collect(base_p, p_local);
  collect(base_q, q_local);
  for (const auto& pk : p_local)
    for (const auto& qk : q_local) state.consider(pk, qk, scale);
}

}  // namespace detail

/// Exhaustive sweep over pairs of distributions on a simplex grid with
/// support in {2,3}, keeping the pairs whose total variation distance lies
/// within half a grid cell of epsilon. Returns the extremal measure value,
/// its witness pair (ties broken by the lexicographically smallest witness),
/// and the count of validity violations. One round of grid halving around
/// the witness tightens the result.
inline OracleReport sweep_pairs(int support, double epsilon, int grid_steps,
                                const std::string& measure) {
  if (support != 2 && support != 3)
    throw ParameterOutOfRangeError("oracle support must be 2 or 3");
  if (!(epsilon > 0.0 && epsilon < 1.0)) throw EpsilonOutOfRangeError(epsilon, "(0,1)");
  if (grid_steps < 10) throw ParameterOutOfRangeError("grid_steps must be >= 10");
  const detail::OracleMeasure m = detail::oracle_measure(measure);

  detail::SweepState state(m, epsilon);
  const auto comps = detail::compositions(grid_steps, support);
  for (const auto& pk : comps)
    for (const auto& qk : comps) state.consider(pk, qk, grid_steps);
  detail::refine(state, grid_steps, support);

  const double closed = m.closed_form(epsilon);
  return {measure,
          epsilon,
          closed,
          state.extremum,
          detail::to_distribution(state.witness_p, state.witness_scale),
          detail::to_distribution(state.witness_q, state.witness_scale),
          std::abs(state.extremum - closed),
          state.violations,
          m.maximize};
}

}  // namespace divbounds
