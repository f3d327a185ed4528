// lpsim: simulate heavy-tailed linear-process partial sums, generate
// discretized limit processes, and analyze step paths.
//
// Subcommands: constants, simulate, analyze, figure, verify.

#include <cstdio>
#include <fstream>
#include <iostream>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "lpsim/coefficients.hpp"
#include "lpsim/experiment.hpp"
#include "lpsim/innovations.hpp"
#include "lpsim/limit_processes.hpp"
#include "lpsim/oscillation.hpp"
#include "lpsim/step_path.hpp"
#include "lpsim/svg.hpp"
#include "lpsim/verify.hpp"

namespace {

void print_kv(const char* key, double value) {
  std::printf("%-12s = %.17g\n", key, value);
}

void emit_outputs(const lpsim::ExperimentResult& result,
                  const std::string& out_csv, const std::string& out_svg) {
  if (!out_csv.empty()) lpsim::write_csv(result.path, out_csv);
  if (!out_svg.empty()) {
    lpsim::emit_svg({&result.path, 1}, result.range.lo, result.range.hi, out_svg);
  }
  std::printf("rng          = %s\n", result.constants.rng);
  print_kv("a_n", result.constants.a_n);
  print_kv("d_n", result.constants.d_n);
  print_kv("normalizer", result.constants.normalizer);
  print_kv("H", result.constants.hurst);
  if (result.constants.sigma) print_kv("sigma", *result.constants.sigma);
  if (result.constants.c_h) print_kv("C_H", *result.constants.c_h);
  print_kv("a", result.constants.limits.a);
  print_kv("b", result.constants.limits.b);
  print_kv("a_prime", result.constants.limits.a_pos);
  print_kv("a_dprime", result.constants.limits.a_neg);
  if (result.constants.limits.total_sum) print_kv("A", *result.constants.limits.total_sum);
  print_kv("x_min", result.range.lo);
  print_kv("x_max", result.range.hi);
  if (!out_csv.empty()) std::printf("csv          = %s\n", out_csv.c_str());
  if (!out_svg.empty()) std::printf("svg          = %s\n", out_svg.c_str());
}

int run_constants(double alpha, long n, std::optional<double> gamma,
                  std::optional<double> k1, std::optional<double> k2) {
  const lpsim::SymmetricPareto model(alpha);
  std::printf("rng          = %s\n", lpsim::rng::kGeneratorId);
  print_kv("alpha", alpha);
  print_kv("a_n", model.norm_constant(n));
  if (alpha < 2.0) print_kv("sigma", lpsim::stable_sigma(alpha, 1.0));
  if (gamma) {
    const auto spec = lpsim::ScalingSpec::for_power(alpha, *gamma);
    print_kv("H", spec.hurst);
    print_kv("d_n", spec.d(static_cast<double>(n)));
    const auto scheme = (k1 && k2)
                            ? lpsim::CoefficientScheme::alternating_power(*k1, *k2, *gamma)
                            : lpsim::CoefficientScheme::one_sided_power(*gamma);
    const auto lim = lpsim::coefficient_limits(scheme, spec);
    print_kv("a", lim.a);
    print_kv("b", lim.b);
    print_kv("a_prime", lim.a_pos);
    print_kv("a_dprime", lim.a_neg);
    if (lim.total_sum) print_kv("A", *lim.total_sum);
    if (alpha == 2.0 && !spec.levy_mode) print_kv("C_H", lpsim::c_hurst(spec.hurst));
  }
  return 0;
}

int run_analyze(const std::string& in_csv, const std::vector<double>& etas,
                const std::vector<std::string>& band_specs,
                std::optional<double> delta) {
  const lpsim::StepPath path = lpsim::read_csv(in_csv);
  std::printf("segments     = %zu\n", path.segments());
  print_kv("sup_norm", lpsim::sup_norm(path));
  if (delta) print_kv("w(x,delta)", lpsim::oscillation(path, *delta));
  for (double eta : etas) {
    std::printf("N_eta(%g)     = %ld\n", eta, lpsim::count_oscillations(path, eta));
    try {
      const auto ob = lpsim::oscillation_bound(path, eta);
      std::printf("  bound: count=%ld <= %.17g (beta=%.17g)\n", ob.count, ob.bound, ob.beta);
    } catch (const lpsim::precondition_not_met&) {
      std::printf("  bound: not applicable (eta <= 2*beta, beta=%.17g)\n",
                  lpsim::interval_beta(path));
    }
  }
  for (const std::string& spec : band_specs) {
    const auto colon = spec.find(':');
    if (colon == std::string::npos) {
      std::fprintf(stderr, "bad band '%s', expected a:b\n", spec.c_str());
      return 2;
    }
    const double a = std::stod(spec.substr(0, colon));
    const double b = std::stod(spec.substr(colon + 1));
    std::printf("N^{%g,%g}    = %ld\n", a, b, lpsim::count_upcrossings(path, a, b));
  }
  return 0;
}

int run_verify(const std::string& suite) {
  std::vector<lpsim::Check> checks;
  const auto add = [&checks](std::vector<lpsim::Check> more) {
    checks.insert(checks.end(), more.begin(), more.end());
  };
  if (suite == "constants" || suite == "all") add(lpsim::constants_suite());
  if (suite == "lemmas" || suite == "all") add(lpsim::lemmas_suite());
  if (suite == "distributions" || suite == "all") add(lpsim::distributions_suite());
  const int failures = lpsim::print_report(std::cout, checks);
  std::printf("%zu checks, %d failures\n", checks.size(), failures);
  return failures == 0 ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"heavy-tailed linear-process partial sums and step-path analysis"};
  app.require_subcommand(1);

  // constants
  auto* cmd_const = app.add_subcommand("constants", "print normalizing and limit constants");
  double c_alpha = 1.5;
  long c_n = 1000;
  std::optional<double> c_gamma, c_k1, c_k2;
  cmd_const->add_option("--alpha", c_alpha, "stability index in (0,2]")->required();
  cmd_const->add_option("--n", c_n, "sample size for a_n/d_n");
  cmd_const->add_option("--gamma", c_gamma, "power-law coefficient exponent");
  cmd_const->add_option("--k1", c_k1, "even-lag gain (alternating scheme)");
  cmd_const->add_option("--k2", c_k2, "odd-lag gain (alternating scheme)");

  // simulate
  auto* cmd_sim = app.add_subcommand("simulate", "run one experiment from a config file");
  std::string sim_config, sim_csv, sim_svg;
  std::optional<double> sim_alpha;
  std::optional<std::uint64_t> sim_seed;
  cmd_sim->add_option("--config", sim_config, "key=value config file")->required();
  cmd_sim->add_option("--out-csv", sim_csv, "write the normalized path as CSV");
  cmd_sim->add_option("--out-svg", sim_svg, "write a step plot in the calibrated range");
  cmd_sim->add_option("--alpha", sim_alpha, "override alpha");
  cmd_sim->add_option("--seed", sim_seed, "override seed");

  // analyze
  auto* cmd_an = app.add_subcommand("analyze", "oscillation/upcrossing report for a CSV path");
  std::string an_csv;
  std::vector<double> an_etas;
  std::vector<std::string> an_bands;
  std::optional<double> an_delta;
  cmd_an->add_option("--in-csv", an_csv, "path CSV (t,value)")->required();
  cmd_an->add_option("--eta", an_etas, "oscillation sizes")->delimiter(',');
  cmd_an->add_option("--bands", an_bands, "upcrossing bands a:b")->delimiter(',');
  cmd_an->add_option("--delta", an_delta, "window for the oscillation function");

  // figure
  auto* cmd_fig = app.add_subcommand("figure", "run a preset experiment");
  std::string fig_id, fig_csv, fig_svg;
  double fig_alpha = 1.5;
  std::uint64_t fig_seed = 1;
  cmd_fig->add_option("--example", fig_id, "one of 4.3i|4.3ii|4.4|4.4zero|4.5|4.6")->required();
  cmd_fig->add_option("--alpha", fig_alpha, "stability index");
  cmd_fig->add_option("--seed", fig_seed, "PRNG seed");
  cmd_fig->add_option("--out-csv", fig_csv, "output CSV (default figure_<id>.csv)");
  cmd_fig->add_option("--out-svg", fig_svg, "output SVG (default figure_<id>.svg)");

  // verify
  auto* cmd_ver = app.add_subcommand("verify", "run a self-check suite");
  std::string ver_suite = "all";
  cmd_ver->add_option("--suite", ver_suite, "lemmas|constants|distributions|all")
      ->check(CLI::IsMember({"lemmas", "constants", "distributions", "all"}));

  CLI11_PARSE(app, argc, argv);

  try {
    if (cmd_const->parsed()) return run_constants(c_alpha, c_n, c_gamma, c_k1, c_k2);
    if (cmd_sim->parsed()) {
      std::ifstream is(sim_config);
      if (!is) {
        std::fprintf(stderr, "cannot open config %s\n", sim_config.c_str());
        return 2;
      }
      lpsim::ExperimentConfig cfg = lpsim::load_config(is);
      if (sim_alpha) cfg.alpha = *sim_alpha;
      if (sim_seed) cfg.seed = *sim_seed;
      emit_outputs(lpsim::run_example(cfg), sim_csv, sim_svg);
      return 0;
    }
    if (cmd_an->parsed()) return run_analyze(an_csv, an_etas, an_bands, an_delta);
    if (cmd_fig->parsed()) {
      const lpsim::ExperimentConfig cfg = lpsim::figure_preset(fig_id, fig_alpha, fig_seed);
      std::string tag = fig_id;
      for (char& ch : tag) {
        if (ch == '.') ch = '_';
      }
      if (fig_csv.empty()) fig_csv = "figure_" + tag + ".csv";
      if (fig_svg.empty()) fig_svg = "figure_" + tag + ".svg";
      emit_outputs(lpsim::run_example(cfg), fig_csv, fig_svg);
      return 0;
    }
    if (cmd_ver->parsed()) return run_verify(ver_suite);
  } catch (const std::exception& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return 2;
  }
  return 0;
}
