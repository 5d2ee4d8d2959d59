#pragma once

#include <cmath>
#include <istream>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "divbounds/bounds.hpp"
#include "divbounds/distribution.hpp"
#include "divbounds/errors.hpp"
#include "divbounds/fdivergence.hpp"

namespace divbounds {

/// Tolerance on the Kraft sum so that floating-point dyadic sums are admitted.
inline constexpr double kKraftTol = 1e-12;

/// A uniquely decodable code over a d-ary alphabet, described by its codeword
/// lengths only (no bound here depends on the codeword strings), paired with
/// the source distribution it encodes.
struct UdCode {
  int d;
  std::vector<int> lengths;
  Distribution source;

  UdCode(int alphabet_size, std::vector<int> codeword_lengths, Distribution source_dist)
      : d(alphabet_size), lengths(std::move(codeword_lengths)), source(std::move(source_dist)) {
    if (d < 2) throw ParameterOutOfRangeError("code alphabet size must be >= 2");
    if (lengths.size() != source.size())
      throw SupportMismatchError(lengths.size(), source.size());
    double c = 0.0;
    for (int l : lengths) {
      if (l < 1) throw ParameterOutOfRangeError("codeword lengths must be positive integers");
      c += std::pow(static_cast<double>(d), -l);
    }
    if (c > 1.0 + kKraftTol) throw KraftViolationError(c);
  }
};

/// Kraft sum c = sum d^(-l(u)), <= 1 for uniquely decodable codes.
inline double kraft_sum(const UdCode& code) {
  double c = 0.0;
  for (int l : code.lengths) c += std::pow(static_cast<double>(code.d), -l);
  return c;
}

/// The distribution induced by the codeword lengths: Q(u) = d^(-l(u)) / c.
inline Distribution induced_distribution(const UdCode& code) {
  const double c = kraft_sum(code);
  std::vector<double> q;
  q.reserve(code.lengths.size());
  for (int l : code.lengths) q.push_back(std::pow(static_cast<double>(code.d), -l) / c);
  return Distribution(std::move(q));
}

/// Average redundancy Delta = E[L] - H_d(P), in d-ary units. Nonnegative for
/// uniquely decodable codes; zero exactly for an entropy-achieving code.
inline double redundancy(const UdCode& code) {
  double avg_len = 0.0;
  for (std::size_t i = 0; i < code.lengths.size(); ++i)
    avg_len += code.source[i] * code.lengths[i];
  return avg_len - entropy(code.source, static_cast<double>(code.d));
}

/// Per-symbol length slack delta(u) = l(u) + log_d P(u). Nonnegative for all
/// u exactly when the length condition holds.
inline std::vector<double> length_slack(const UdCode& code) {
  const double log_d = std::log(static_cast<double>(code.d));
  std::vector<double> slack;
  slack.reserve(code.lengths.size());
  for (std::size_t i = 0; i < code.lengths.size(); ++i) {
    if (!(code.source[i] > 0.0)) throw ZeroMassSymbolError(i);
    slack.push_back(code.lengths[i] + std::log(code.source[i]) / log_d);
  }
  return slack;
}

/// D(P || Q_{d,l}) = Delta log d + log c, in nats.
inline double kl_to_induced(const UdCode& code) {
  return redundancy(code) * std::log(static_cast<double>(code.d)) + std::log(kraft_sum(code));
}

/// D(Q_{d,l} || P) = -log c - (log d / c) sum delta(u) d^(-l(u)), in nats.
inline double kl_from_induced(const UdCode& code) {
  const auto slack = length_slack(code);
  const double c = kraft_sum(code);
  const double log_d = std::log(static_cast<double>(code.d));
  double weighted = 0.0;
  for (std::size_t i = 0; i < slack.size(); ++i)
    weighted += slack[i] * std::pow(static_cast<double>(code.d), -code.lengths[i]);
  return -std::log(c) - (log_d / c) * weighted;
}

/// J(P, Q_{d,l}) = (Delta log d - (log d / c) sum delta(u) d^(-l(u))) / 2,
/// in nats; the log c terms of the two relative entropies cancel.
inline double jeffreys_to_induced(const UdCode& code) {
  const auto slack = length_slack(code);
  const double c = kraft_sum(code);
  const double log_d = std::log(static_cast<double>(code.d));
  double weighted = 0.0;
  for (std::size_t i = 0; i < slack.size(); ++i)
    weighted += slack[i] * std::pow(static_cast<double>(code.d), -code.lengths[i]);
  return 0.5 * (redundancy(code) * log_d - (log_d / c) * weighted);
}

/// True iff l(u) >= ceil(log_d 1/P(u)) for every symbol, equivalently
/// delta >= 0 (checked with a 1e-12 slack for floating-point dyadic cases).
/// Satisfied by Shannon codes; excludes Huffman codes in general.
inline bool length_condition_holds(const UdCode& code) {
  for (double s : length_slack(code)) {
    if (s < -1e-12) return false;
  }
  return true;
}

namespace detail {

// ceil(log_d(1/p)) with a snap window so that exactly representable powers,
// e.g. p = 0.1 with d = 10, do not round up to the next length.
inline int shannon_length(double p, int d) {
  const double x = -std::log(p) / std::log(static_cast<double>(d));
  const double nearest = std::round(x);
  const double l = std::abs(x - nearest) < 1e-9 ? nearest : std::ceil(x);
  return std::max(1, static_cast<int>(l));
}

}  // namespace detail

/// The Shannon code for P: lengths ceil(log_d 1/P(u)). Always satisfies the
/// Kraft inequality and the length condition.
inline UdCode shannon_code(const Distribution& p, int d) {
  if (d < 2) throw ParameterOutOfRangeError("code alphabet size must be >= 2");
  std::vector<int> lengths;
  lengths.reserve(p.size());
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (!(p[i] > 0.0)) throw ZeroMassSymbolError(i);
    lengths.push_back(detail::shannon_length(p[i], d));
  }
  return UdCode(d, std::move(lengths), p);
}

/// The three upper bounds on sum |P(u) - Q_{d,l}(u)| as functions of the
/// average redundancy. jeffreys_tight applies only under the length
/// condition; kl_tight is clamped at the trivial L1 maximum of 2, mirroring
/// the min{.,2} in the Csiszar bound.
struct L1Bounds {
  double csiszar;                       // min(sqrt(2 Delta log d), 2)
  double kl_tight;                      // 2 Linv(Delta log d)
  std::optional<double> jeffreys_tight; // 2 eps(Delta log d / 2)
};

inline L1Bounds l1_bounds(const UdCode& code) {
  const double x = redundancy(code) * std::log(static_cast<double>(code.d));
  L1Bounds bounds{};
  bounds.csiszar = std::min(std::sqrt(2.0 * std::max(x, 0.0)), 2.0);
  bounds.kl_tight = std::min(2.0 * l_curve_inverse(std::max(x, 0.0)), 2.0);
  if (length_condition_holds(code))
    bounds.jeffreys_tight = 2.0 * jeffreys_epsilon_solver(std::max(0.5 * x, 0.0));
  return bounds;
}

/// Everything the audit computes for one code. Unit suffixes are part of the
/// field names: redundancy is in d-ary units, the divergences in nats, and
/// the L1 quantities are unitless.
struct CodeReport {
  double kraft_sum;
  Distribution q_induced;
  double redundancy_dary;
  double kl_pq_nats;
  double kl_qp_nats;
  double jeffreys_nats;
  double l1_actual;
  double bound_csiszar;
  double bound_kl;
  std::optional<double> bound_jeffreys;
  bool condition_holds;
};

inline CodeReport analyze(const UdCode& code) {
  Distribution q = induced_distribution(code);
  double l1 = 0.0;
  for (std::size_t i = 0; i < q.size(); ++i) l1 += std::abs(code.source[i] - q[i]);
  const L1Bounds bounds = l1_bounds(code);
  return {kraft_sum(code),
          std::move(q),
          redundancy(code),
          kl_to_induced(code),
          kl_from_induced(code),
          jeffreys_to_induced(code),
          l1,
          bounds.csiszar,
          bounds.kl_tight,
          bounds.jeffreys_tight,
          length_condition_holds(code)};
}

struct ParsedCodeFile {
  int d = 0;
  std::vector<int> lengths;
  std::optional<Distribution> source;  // present when the file carries probabilities
};

/// Reads the code text format: first line `d=<int>`, then one `<length>` or
/// `<length> <probability>` per line. Comment lines (#) and blank lines are
/// ignored. Probabilities must be given for all symbols or none.
inline ParsedCodeFile parse_code_file(std::istream& in) {
  ParsedCodeFile parsed;
  std::vector<double> probs;
  std::string line;
  int lineno = 0;
  bool have_d = false;
  while (std::getline(in, line)) {
    ++lineno;
    const std::string body = detail::strip(line);
    if (body.empty() || body.front() == '#') continue;
    if (!have_d) {
      if (body.rfind("d=", 0) != 0) throw ParseError(lineno, "expected 'd=<int>' header");
      const double dval = detail::parse_number(body.substr(2), lineno);
      if (dval != std::floor(dval) || dval < 2)
        throw ParseError(lineno, "alphabet size must be an integer >= 2");
      parsed.d = static_cast<int>(dval);
      have_d = true;
      continue;
    }
    const auto space = body.find_first_of(" \t");
    const std::string len_tok = space == std::string::npos ? body : body.substr(0, space);
    const double lval = detail::parse_number(len_tok, lineno);
    if (lval != std::floor(lval) || lval < 1)
      throw ParseError(lineno, "codeword length must be a positive integer");
    parsed.lengths.push_back(static_cast<int>(lval));
    if (space != std::string::npos) {
      const std::string prob_tok = detail::strip(body.substr(space));
      if (prob_tok.empty() || probs.size() != parsed.lengths.size() - 1)
        throw ParseError(lineno, "probability column must be present on every line or none");
      probs.push_back(detail::parse_number(prob_tok, lineno));
    } else if (!probs.empty()) {
      throw ParseError(lineno, "probability column must be present on every line or none");
    }
  }
  if (!have_d) throw ParseError(lineno, "missing 'd=<int>' header");
  if (parsed.lengths.empty()) throw ParseError(lineno, "no codeword lengths found");
  if (!probs.empty()) parsed.source = Distribution(std::move(probs));
  return parsed;
}

}  // namespace divbounds
