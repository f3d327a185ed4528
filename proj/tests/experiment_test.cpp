#include <catch2/catch_amalgamated.hpp>

#include <cmath>
#include <numbers>
#include <sstream>

#include "lpsim/experiment.hpp"
#include "lpsim/svg.hpp"
#include "lpsim/verify.hpp"

using lpsim::CoefficientScheme;
using lpsim::ExperimentConfig;
using lpsim::SymmetricPareto;

TEST_CASE("range calibration basics") {
  ExperimentConfig cfg;
  cfg.alpha = 1.5;
  cfg.scheme = CoefficientScheme::one_sided_power(0.75);
  cfg.n = 200;
  cfg.N_trunc = 20;
  cfg.M = 1;
  cfg.seed = 5;

  // M = 1: any quantile of a singleton is that replicate's min/max
  const auto range = lpsim::calibrate_range(cfg);
  const SymmetricPareto model(cfg.alpha);
  const auto path = lpsim::process_path(cfg.scheme, model, cfg.n, cfg.N_trunc,
                                        lpsim::normalizer_for(cfg), cfg.seed, 1);
  double lo = path.values()[1], hi = path.values()[1];
  for (std::size_t k = 2; k < path.values().size(); ++k) {
    lo = std::min(lo, path.values()[k]);
    hi = std::max(hi, path.values()[k]);
  }
  CHECK(range.lo == lo);
  CHECK(range.hi == hi);

  // zero filter: every replicate collapses to zero
  cfg.scheme = CoefficientScheme::finite_list({});
  CHECK_THROWS_AS(lpsim::calibrate_range(cfg), lpsim::degenerate_range_error);
}

TEST_CASE("range calibration is a pure function of the config") {
  ExperimentConfig cfg;
  cfg.alpha = 1.5;
  cfg.scheme = CoefficientScheme::alternating_power(3.0, 1.0, 0.75);
  cfg.n = 1000;
  cfg.N_trunc = 50;
  cfg.M = 75;
  cfg.seed = 42;
  const auto r1 = lpsim::calibrate_range(cfg);
  const auto r2 = lpsim::calibrate_range(cfg);
  CHECK(r1.lo == r2.lo);
  CHECK(r1.hi == r2.hi);
  CHECK(r1.lo < 0.0);
  CHECK(r1.hi > 0.0);
}

TEST_CASE("run_example attaches the right constants") {
  const double pi = std::numbers::pi;
  {
    auto cfg = lpsim::figure_preset("4.3i", 1.5, 7);
    cfg.n = 400;
    cfg.N_trunc = 40;
    cfg.M = 20;
    const auto res = lpsim::run_example(cfg);
    CHECK(res.constants.hurst == 11.0 / 12.0);
    CHECK(res.constants.limits.a == 4.0);
    CHECK(res.constants.a_n == Catch::Approx(std::pow(400.0, 1 / 1.5)).epsilon(1e-14));
    CHECK(res.constants.sigma.has_value());
    CHECK(!res.constants.c_h.has_value());
    CHECK(res.constants.normalizer ==
          Catch::Approx(res.constants.a_n * res.constants.d_n));
    // the plotted realization is stream 0, scaled by the calibrated range
    const SymmetricPareto model(cfg.alpha);
    const auto direct = lpsim::process_path(cfg.scheme, model, cfg.n, cfg.N_trunc,
                                            res.constants.normalizer, cfg.seed, 0);
    CHECK(res.path.values().back() == direct.values().back());
    const auto scaled = lpsim::plot_affine(res.path, res.range.lo, res.range.hi);
    CHECK(res.scaled.values().back() == scaled.values().back());
  }
  {
    auto cfg = lpsim::figure_preset("4.3ii", 1.5, 7);
    cfg.n = 300;
    cfg.N_trunc = 30;
    cfg.M = 10;
    const auto res = lpsim::run_example(cfg);
    CHECK(res.constants.limits.a == Catch::Approx(pi * pi * pi * pi / 90.0).margin(1e-10));
    CHECK(res.constants.d_n == 1.0);
  }
  {
    auto cfg = lpsim::figure_preset("4.6", 0.8, 7);
    cfg.n = 300;
    cfg.N_trunc = 30;
    cfg.M = 10;
    CHECK(cfg.normalization == ExperimentConfig::Norm::AnOnly);
    CHECK(cfg.q_lo == 0.15);
    CHECK(cfg.q_hi == 0.85);
    const auto res = lpsim::run_example(cfg);
    REQUIRE(res.constants.limits.total_sum.has_value());
    CHECK(*res.constants.limits.total_sum ==
          Catch::Approx(-7.0 * pi * pi * pi * pi / 720.0).margin(1e-10));
    CHECK(res.constants.normalizer == res.constants.a_n);
  }
  {
    // FBM regime carries the moving-average constant
    auto cfg = lpsim::figure_preset("4.3i", 2.0, 7);
    cfg.n = 300;
    cfg.N_trunc = 30;
    cfg.M = 10;
    const auto res = lpsim::run_example(cfg);
    CHECK(res.constants.hurst == 0.75);
    REQUIRE(res.constants.c_h.has_value());
    CHECK(*res.constants.c_h == Catch::Approx(0.93488993189788922).epsilon(1e-6));
    CHECK(!res.constants.sigma.has_value());
  }
  CHECK_THROWS_AS(lpsim::figure_preset("9.9", 1.5, 1), std::invalid_argument);
}

TEST_CASE("config files parse and override") {
  std::istringstream is(
      "# comment\n"
      "alpha = 2.0\n"
      "scheme = alternating_power\n"
      "gamma = 0.75\n"
      "k1 = 3\n"
      "k2 = 1\n"
      "n = 500\n"
      "N_trunc = 25\n"
      "M = 10\n"
      "q_lo = 0.15\n"
      "q_hi = 0.85\n"
      "seed = 99\n"
      "normalization = an_only\n");
  const auto cfg = lpsim::load_config(is);
  CHECK(cfg.alpha == 2.0);
  CHECK(cfg.scheme.family() == CoefficientScheme::Family::AlternatingPower);
  CHECK(cfg.scheme.k1() == 3.0);
  CHECK(cfg.n == 500);
  CHECK(cfg.N_trunc == 25);
  CHECK(cfg.M == 10);
  CHECK(cfg.q_lo == 0.15);
  CHECK(cfg.seed == 99);
  CHECK(cfg.normalization == ExperimentConfig::Norm::AnOnly);

  std::istringstream fin(
      "scheme = finite_list\n"
      "coeff_0 = 1\n"
      "coeff_1 = -1\n");
  const auto cfg2 = lpsim::load_config(fin);
  CHECK(cfg2.scheme.family() == CoefficientScheme::Family::FiniteList);
  CHECK(cfg2.scheme(0) == 1.0);
  CHECK(cfg2.scheme(1) == -1.0);

  std::istringstream bad("normalization = sideways\n");
  CHECK_THROWS_AS(lpsim::load_config(bad), std::invalid_argument);
  std::istringstream bad2("scheme = sawtooth\n");
  CHECK_THROWS_AS(lpsim::load_config(bad2), std::invalid_argument);
  std::istringstream bad3("scheme = one_sided_power\n");  // gamma missing
  CHECK_THROWS_AS(lpsim::load_config(bad3), std::invalid_argument);
}

TEST_CASE("svg emission is deterministic") {
  const lpsim::StepPath x({0.0, 0.25, 0.5}, {0.0, 1.0, -0.5});
  std::ostringstream a, b;
  lpsim::emit_svg({&x, 1}, -1.0, 2.0, a);
  lpsim::emit_svg({&x, 1}, -1.0, 2.0, b);
  CHECK(a.str() == b.str());
  CHECK(a.str().find("<polyline") != std::string::npos);
  CHECK(a.str().find("</svg>") != std::string::npos);
  std::ostringstream sink;
  CHECK_THROWS_AS(lpsim::emit_svg({&x, 1}, 2.0, 2.0, sink), std::domain_error);
}

TEST_CASE("verification suites pass") {
  const auto constants = lpsim::constants_suite();
  for (const auto& c : constants) {
    INFO(c.name << " observed=" << c.observed << " expected=" << c.expected);
    CHECK(c.pass);
  }
  const auto lemmas = lpsim::lemmas_suite(7, 2000);
  for (const auto& c : lemmas) {
    INFO(c.name);
    CHECK(c.pass);
  }
  const auto dists = lpsim::distributions_suite();
  for (const auto& c : dists) {
    INFO(c.name << " observed=" << c.observed << " expected=" << c.expected);
    CHECK(c.pass);
  }
}
