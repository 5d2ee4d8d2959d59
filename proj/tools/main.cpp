#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "divbounds/cli.hpp"

int main(int argc, char** argv) {
  CLI::App app{"divbounds: divergence measures, tight total-variation bounds, and "
               "uniquely-decodable code audits"};
  app.require_subcommand(1);

  divbounds::cli::DivergenceOptions div_opts;
  auto* div = app.add_subcommand("divergence", "Divergence measures between two distributions");
  div->add_option("p_file", div_opts.p_path, "distribution file for P")->required();
  div->add_option("q_file", div_opts.q_path, "distribution file for Q")->required();
  div->add_option("--measures", div_opts.measures,
                  "comma-separated measures (tv, kl, kl_dual, jeffreys, hellinger_sq, "
                  "capacitory, bhattacharyya_coeff, bhattacharyya_dist, chernoff, renyi@L)")
      ->delimiter(',');
  div->add_flag("--bits", div_opts.bits, "report log-based measures in bits instead of nats");
  div->add_flag("--pad", div_opts.pad, "zero-pad distributions of different lengths");

  divbounds::cli::CurvesOptions curve_opts;
  auto* curves = app.add_subcommand("curves", "Emit bound curves over an epsilon grid as CSV");
  curves->add_option("which", curve_opts.which, "curve set: figure1 (C and L) or bounds")
      ->check(CLI::IsMember({"figure1", "bounds"}));
  curves->add_option("--eps-min", curve_opts.eps_min, "grid start (default 0)");
  curves->add_option("--eps-max", curve_opts.eps_max, "grid end, < 1 (default 0.99)");
  curves->add_option("--steps", curve_opts.steps, "number of rows (default 200)");
  curves->add_option("--out", curve_opts.out_path, "output CSV path (default stdout)");

  divbounds::cli::CodingOptions code_opts;
  auto* coding = app.add_subcommand("coding", "Audit a uniquely decodable code, or emit the "
                                              "redundancy-bound grid as CSV");
  coding->add_option("code_file", code_opts.code_path,
                     "code file: 'd=<int>' then '<length> [probability]' per line");
  coding->add_flag("--shannon", code_opts.shannon,
                   "build the Shannon code for the --dist distribution");
  coding->add_option("--dist", code_opts.dist_path,
                     "distribution file (source for --shannon or lengths-only code files)");
  coding->add_flag("--grid", code_opts.grid, "emit the delta-grid CSV of the three L1 bounds");
  coding->add_option("--d", code_opts.d, "code alphabet size (default 10)");
  coding->add_option("--delta-max", code_opts.delta_max, "grid end in d-ary units (default 0.1)");
  coding->add_option("--steps", code_opts.steps, "grid rows (default 200)");
  coding->add_option("--out", code_opts.out_path, "output CSV path (default stdout)");

  divbounds::cli::VerifyOptions verify_opts;
  auto* verify = app.add_subcommand("verify", "Brute-force check that a closed-form bound is "
                                              "valid and tight at a given epsilon");
  verify->add_option("measure", verify_opts.measure,
                     "chernoff, jeffreys, capacitory, kl, bhattacharyya_min, bhattacharyya_max")
      ->required();
  verify->add_option("epsilon", verify_opts.epsilon, "total variation distance in (0,1)")
      ->required();
  verify->add_option("--support", verify_opts.support, "support size (default per measure)")
      ->check(CLI::IsMember({2, 3}));
  verify->add_option("--steps", verify_opts.grid_steps,
                     "simplex grid steps (default 200 for support 2, 40 for support 3)");

  CLI11_PARSE(app, argc, argv);

  if (div->parsed()) return divbounds::cli::run_divergence(div_opts, std::cout, std::cerr);
  if (curves->parsed()) return divbounds::cli::run_curves(curve_opts, std::cout, std::cerr);
  if (coding->parsed()) return divbounds::cli::run_coding(code_opts, std::cout, std::cerr);
  if (verify->parsed()) return divbounds::cli::run_verify(verify_opts, std::cout, std::cerr);
  return 2;
}
