#pragma once

#include <cmath>
#include <cstdio>
#include <fstream>
#include <iomanip>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include "divbounds/bounds.hpp"
#include "divbounds/coding.hpp"
#include "divbounds/distribution.hpp"
#include "divbounds/errors.hpp"
#include "divbounds/fdivergence.hpp"
#include "divbounds/oracle.hpp"

namespace divbounds::cli {

/// 12 significant digits; infinite values print as the literal token `inf`.
inline std::string format_value(double v) {
  if (std::isinf(v)) return v > 0.0 ? "inf" : "-inf";
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.12g", v);
  return buf;
}

inline Distribution load_distribution(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot open '" + path + "'");
  try {
    return parse_distribution(in);
  } catch (const ParseError& e) {
    throw IoError(path + ": " + e.what());
  }
}

inline ParsedCodeFile load_code_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot open '" + path + "'");
  try {
    return parse_code_file(in);
  } catch (const ParseError& e) {
    throw IoError(path + ": " + e.what());
  }
}

// ---------------------------------------------------------------- divergence

struct DivergenceOptions {
  std::string p_path;
  std::string q_path;
  std::vector<std::string> measures;  // empty = the full default set
  bool bits = false;
  bool pad = false;
};

namespace detail {

inline const std::vector<std::string>& default_measures() {
  static const std::vector<std::string> names = {
      "tv",         "kl",                  "kl_dual",            "jeffreys", "hellinger_sq",
      "capacitory", "bhattacharyya_coeff", "bhattacharyya_dist", "chernoff"};
  return names;
}

inline bool measured_in_nats(const std::string& name) {
  return name == "kl" || name == "kl_dual" || name == "jeffreys" || name == "capacitory" ||
         name == "bhattacharyya_dist" || name == "chernoff" || name.rfind("renyi@", 0) == 0;
}

inline double evaluate_measure(const std::string& name, const Distribution& p,
                               const Distribution& q, Pad pad) {
  if (name == "tv") return total_variation(p, q, pad);
  if (name == "kl") return kl(p, q, pad);
  if (name == "kl_dual") return kl(q, p, pad);
  if (name == "jeffreys") return jeffreys(p, q, pad);
  if (name == "hellinger_sq") return hellinger_sq(p, q, pad);
  if (name == "capacitory") return capacitory(p, q, pad);
  if (name == "bhattacharyya_coeff") return bhattacharyya_coefficient(p, q, pad);
  if (name == "bhattacharyya_dist") return bhattacharyya_distance(p, q, pad);
  if (name == "chernoff") return chernoff_information(p, q, pad).value;
  if (name.rfind("renyi@", 0) == 0) {
    const double lambda = divbounds::detail::parse_number(name.substr(6), 0);
    return renyi_divergence(p, q, lambda, pad);
  }
  throw UnknownMeasureError(name);
}

inline void print_row(std::ostream& out, const std::string& name, const std::string& value) {
  out << std::left << std::setw(22) << name << value << '\n';
}

}  // namespace detail

inline int run_divergence(const DivergenceOptions& opts, std::ostream& out, std::ostream& err) {
  try {
    const Distribution p = load_distribution(opts.p_path);
    const Distribution q = load_distribution(opts.q_path);
    const Pad pad = opts.pad ? Pad::zero_extend : Pad::strict;
    const auto& measures = opts.measures.empty() ? detail::default_measures() : opts.measures;
    constexpr double kLog2 = 0.6931471805599453;
    for (const auto& name : measures) {
      double v = detail::evaluate_measure(name, p, q, pad);
      if (opts.bits && detail::measured_in_nats(name)) v /= kLog2;
      detail::print_row(out, name, format_value(v));
    }
    return 0;
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return 2;
  }
}

// -------------------------------------------------------------------- curves

struct CurvesOptions {
  std::string which = "figure1";  // figure1 | bounds
  double eps_min = 0.0;
  double eps_max = 0.99;
  int steps = 200;
  std::string out_path;  // empty = stream given to run_curves
};

/// CSV with one row per grid point; `figure1` emits epsilon,C,L and `bounds`
/// emits every closed-form bound. Values in nats; byte-identical across runs.
inline std::string make_curves_csv(const CurvesOptions& opts) {
  if (!(opts.eps_min >= 0.0 && opts.eps_min < opts.eps_max && opts.eps_max < 1.0))
    throw ParameterOutOfRangeError("curves require 0 <= eps_min < eps_max < 1");
  if (opts.steps < 2) throw ParameterOutOfRangeError("curves require steps >= 2");
  std::ostringstream csv;
  const bool figure1 = opts.which == "figure1";
  if (!figure1 && opts.which != "bounds")
    throw ParameterOutOfRangeError("unknown curve set '" + opts.which + "'");
  csv << (figure1 ? "epsilon,C,L"
                  : "epsilon,chernoff_min,capacitory_min,jeffreys_min,bhattacharyya_lower,"
                    "bhattacharyya_upper")
      << '\n';
  for (int i = 0; i < opts.steps; ++i) {
    const double eps =
        opts.eps_min + (opts.eps_max - opts.eps_min) * i / (opts.steps - 1);
    csv << format_value(eps);
    if (figure1) {
      csv << ',' << format_value(chernoff_min(eps)) << ',' << format_value(l_curve(eps).value);
    } else {
      const auto z = bhattacharyya_bounds(eps);
      csv << ',' << format_value(chernoff_min(eps)) << ',' << format_value(capacitory_min(eps))
          << ',' << format_value(jeffreys_min(eps)) << ',' << format_value(z.lower) << ','
          << format_value(z.upper);
    }
    csv << '\n';
  }
  return csv.str();
}

inline int write_output(const std::string& content, const std::string& out_path,
                        std::ostream& fallback, std::ostream& err) {
  if (out_path.empty()) {
    fallback << content;
    return 0;
  }
  std::ofstream file(out_path, std::ios::binary);
  if (!file) {
    err << "error: cannot write '" << out_path << "'\n";
    return 2;
  }
  file << content;
  return 0;
}

inline int run_curves(const CurvesOptions& opts, std::ostream& out, std::ostream& err) {
  try {
    return write_output(make_curves_csv(opts), opts.out_path, out, err);
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return 2;
  }
}

// -------------------------------------------------------------------- coding

struct CodingOptions {
  std::string code_path;  // code file; empty in --shannon / --grid modes
  std::string dist_path;  // distribution file (--shannon input, or lengths-only code files)
  bool shannon = false;
  bool grid = false;
  int d = 10;
  double delta_max = 0.1;
  int steps = 200;
  std::string out_path;
};

/// CSV of the three L1 bounds over a redundancy grid for a fixed alphabet
/// size; the jeffreys_tight column assumes codes satisfying the length
/// condition.
inline std::string make_coding_grid_csv(int d, double delta_max, int steps) {
  if (d < 2) throw ParameterOutOfRangeError("alphabet size must be >= 2");
  if (!(delta_max > 0.0) || steps < 2)
    throw ParameterOutOfRangeError("coding grid requires delta_max > 0 and steps >= 2");
  const double log_d = std::log(static_cast<double>(d));
  std::ostringstream csv;
  csv << "delta,csiszar,kl_tight,jeffreys_tight\n";
  for (int i = 0; i < steps; ++i) {
    const double delta = delta_max * i / (steps - 1);
    const double x = delta * log_d;
    csv << format_value(delta) << ',' << format_value(std::min(std::sqrt(2.0 * x), 2.0)) << ','
        << format_value(std::min(2.0 * l_curve_inverse(x), 2.0)) << ','
        << format_value(2.0 * jeffreys_epsilon_solver(0.5 * x)) << '\n';
  }
  return csv.str();
}

inline void print_code_report(const CodeReport& report, std::ostream& out) {
  detail::print_row(out, "kraft_sum", format_value(report.kraft_sum));
  std::string q;
  for (std::size_t i = 0; i < report.q_induced.size(); ++i) {
    if (i) q += ' ';
    q += format_value(report.q_induced[i]);
  }
  detail::print_row(out, "q_induced", q);
  detail::print_row(out, "redundancy_dary", format_value(report.redundancy_dary));
  detail::print_row(out, "kl_pq_nats", format_value(report.kl_pq_nats));
  detail::print_row(out, "kl_qp_nats", format_value(report.kl_qp_nats));
  detail::print_row(out, "jeffreys_nats", format_value(report.jeffreys_nats));
  detail::print_row(out, "l1_actual", format_value(report.l1_actual));
  detail::print_row(out, "bound_csiszar", format_value(report.bound_csiszar));
  detail::print_row(out, "bound_kl", format_value(report.bound_kl));
  detail::print_row(out, "bound_jeffreys",
                    report.bound_jeffreys ? format_value(*report.bound_jeffreys) : "n/a");
  detail::print_row(out, "condition_holds", report.condition_holds ? "true" : "false");
}

inline int run_coding(const CodingOptions& opts, std::ostream& out, std::ostream& err) {
  try {
    if (opts.grid) {
      return write_output(make_coding_grid_csv(opts.d, opts.delta_max, opts.steps),
                          opts.out_path, out, err);
    }
    if (opts.shannon) {
      if (opts.dist_path.empty())
        throw ParameterOutOfRangeError("--shannon requires a distribution file");
      const Distribution p = load_distribution(opts.dist_path);
      print_code_report(analyze(shannon_code(p, opts.d)), out);
      return 0;
    }
    if (opts.code_path.empty())
      throw ParameterOutOfRangeError("coding requires a code file, --shannon, or --grid");
    const ParsedCodeFile parsed = load_code_file(opts.code_path);
    Distribution source = [&] {
      if (parsed.source) return *parsed.source;
      if (opts.dist_path.empty())
        throw ParameterOutOfRangeError(
            "code file has no probability column; provide one with --dist");
      return load_distribution(opts.dist_path);
    }();
    print_code_report(analyze(UdCode(parsed.d, parsed.lengths, std::move(source))), out);
    return 0;
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return 2;
  }
}

// -------------------------------------------------------------------- verify

struct VerifyOptions {
  std::string measure;
  double epsilon = 0.5;
  int support = 0;     // 0 = default for the measure
  int grid_steps = 0;  // 0 = default for the support
};

inline int run_verify(const VerifyOptions& opts, std::ostream& out, std::ostream& err) {
  try {
    const int support =
        opts.support != 0 ? opts.support : (opts.measure == "bhattacharyya_min" ? 3 : 2);
    const int grid_steps = opts.grid_steps != 0 ? opts.grid_steps : (support == 2 ? 200 : 40);
    const OracleReport report = sweep_pairs(support, opts.epsilon, grid_steps, opts.measure);
    const double tightness_tol = 2.0 / grid_steps;
    const bool valid = report.violations == 0;
    const bool tight = report.gap <= tightness_tol;

    detail::print_row(out, "measure", report.measure);
    detail::print_row(out, "epsilon", format_value(report.epsilon));
    detail::print_row(out, "support", std::to_string(support));
    detail::print_row(out, "grid_steps", std::to_string(grid_steps));
    detail::print_row(out, "closed_form", format_value(report.closed_form));
    detail::print_row(out, report.maximize ? "oracle_max" : "oracle_min",
                      format_value(report.extremum));
    detail::print_row(out, "gap", format_value(report.gap));
    std::string wp, wq;
    for (std::size_t i = 0; i < report.witness_p.size(); ++i) {
      if (i) wp += ' ', wq += ' ';
      wp += format_value(report.witness_p[i]);
      wq += format_value(report.witness_q[i]);
    }
    detail::print_row(out, "witness_p", wp);
    detail::print_row(out, "witness_q", wq);
    detail::print_row(out, "validity",
                      valid ? "ok" : "FAILED (" + std::to_string(report.violations) +
                                         " grid pairs beat the bound)");
    detail::print_row(out, "tightness",
                      tight ? "ok (gap <= " + format_value(tightness_tol) + ")"
                            : "FAILED (gap " + format_value(report.gap) + " > " +
                                  format_value(tightness_tol) + ")");
    return valid && tight ? 0 : 1;
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return 2;
  }
}

}  // namespace divbounds::cli
