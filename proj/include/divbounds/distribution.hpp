#pragma once

#include <cmath>
#include <cstdlib>
#include <istream>
#include <string>
#include <utility>
#include <vector>

#include "divbounds/errors.hpp"

namespace divbounds {

/// Absolute tolerance on |sum - 1| accepted at construction. Tight enough to
/// catch real mistakes, loose enough for benign decimal inputs like ten 0.1's.
inline constexpr double kNormalizationTol = 1e-9;

/// Padding policy for pairwise operations on distributions of unequal length.
/// zero_extend appends zero-mass symbols to the shorter vector; strict throws.
enum class Pad { zero_extend, strict };

/// A finite probability distribution over symbols 0..n-1. Entries are kept
/// exactly as given (no renormalization). Immutable after construction.
class Distribution {
public:
  explicit Distribution(std::vector<double> probs) : probs_(std::move(probs)) {
    if (probs_.empty()) throw EmptyDistributionError();
    double sum = 0.0;
    for (std::size_t i = 0; i < probs_.size(); ++i) {
      if (probs_[i] < 0.0) throw NegativeMassError(i, probs_[i]);
      sum += probs_[i];
    }
    // negated form so that NaN entries are rejected too
    if (!(std::abs(sum - 1.0) <= kNormalizationTol)) throw NotNormalizedError(sum);
  }

  static Distribution uniform(std::size_t n) {
    return Distribution(std::vector<double>(n, 1.0 / static_cast<double>(n)));
  }

  std::size_t size() const { return probs_.size(); }
  double operator[](std::size_t i) const { return probs_[i]; }
  const std::vector<double>& probs() const { return probs_; }

  auto begin() const { return probs_.begin(); }
  auto end() const { return probs_.end(); }

  friend bool operator==(const Distribution& a, const Distribution& b) {
    return a.probs_ == b.probs_;
  }

private:
  std::vector<double> probs_;
};

/// Returns copies of p and q brought to a common length.
inline std::pair<std::vector<double>, std::vector<double>> aligned(const Distribution& p,
                                                                   const Distribution& q,
                                                                   Pad pad = Pad::zero_extend) {
  std::vector<double> pv = p.probs();
  std::vector<double> qv = q.probs();
  if (pv.size() != qv.size()) {
    if (pad == Pad::strict) throw SupportMismatchError(pv.size(), qv.size());
    const std::size_t n = std::max(pv.size(), qv.size());
    pv.resize(n, 0.0);
    qv.resize(n, 0.0);
  }
  return {std::move(pv), std::move(qv)};
}

/// Total variation distance, one-half the L1 distance between the mass
/// vectors. Symmetric, in [0,1], zero iff the distributions are identical.
inline double total_variation(const Distribution& p, const Distribution& q,
                              Pad pad = Pad::zero_extend) {
  const auto [pv, qv] = aligned(p, q, pad);
  double sum = 0.0;
  for (std::size_t i = 0; i < pv.size(); ++i) sum += std::abs(pv[i] - qv[i]);
  return 0.5 * sum;
}

/// Shannon entropy in nats, with the 0 log 0 = 0 convention.
inline double entropy_nats(const Distribution& p) {
  double h = 0.0;
  for (double v : p) {
    if (v > 0.0) h -= v * std::log(v);
  }
  return h;
}

/// Shannon entropy to an arbitrary base > 1. Internally everything is natural
/// log; the base conversion happens here at the boundary.
inline double entropy(const Distribution& p, double base) {
  if (!(base > 1.0) || !std::isfinite(base))
    throw ParameterOutOfRangeError("entropy base must be a finite real > 1");
  return entropy_nats(p) / std::log(base);
}

namespace detail {

inline std::string strip(const std::string& s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string::npos) return "";
  const auto e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

inline double parse_number(const std::string& token, int line) {
  const char* begin = token.c_str();
  char* end = nullptr;
  const double v = std::strtod(begin, &end);
  if (end == begin || *end != '\0') throw ParseError(line, "cannot parse number '" + token + "'");
  if (!std::isfinite(v)) throw ParseError(line, "non-finite value '" + token + "'");
  return v;
}

}  // namespace detail

/// Reads the distribution text format: one probability per line (decimal or
/// scientific notation), '#' starts a comment line, blank lines are ignored.
inline Distribution parse_distribution(std::istream& in) {
  std::vector<double> values;
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    const std::string body = detail::strip(line);
    if (body.empty() || body.front() == '#') continue;
    values.push_back(detail::parse_number(body, lineno));
  }
  if (values.empty()) throw ParseError(lineno, "no probabilities found");
  return Distribution(std::move(values));
}

}  // namespace divbounds
