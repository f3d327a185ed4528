#pragma once
// Self-check suites behind the `verify` CLI subcommand: golden constants,
// randomized path-bound properties, and distribution-level identities.
// Each check reports observed value, expected value/bound and tolerance.

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <numbers>
#include <ostream>
#include <string>
#include <vector>

#include "lpsim/coefficients.hpp"
#include "lpsim/experiment.hpp"
#include "lpsim/innovations.hpp"
#include "lpsim/limit_processes.hpp"
#include "lpsim/oscillation.hpp"
#include "lpsim/prng.hpp"
#include "lpsim/step_path.hpp"

namespace lpsim {

struct Check {
  std::string name;
  double observed;
  double expected;
  double tolerance;  // |observed - expected| <= tolerance
  bool pass;
};

inline Check make_check(std::string name, double observed, double expected,
                        double tolerance) {
  const bool pass = std::fabs(observed - expected) <= tolerance;
  return Check{std::move(name), observed, expected, tolerance, pass};
}

inline int print_report(std::ostream& os, const std::vector<Check>& checks) {
  int failures = 0;
  for (const Check& c : checks) {
    char line[256];
    std::snprintf(line, sizeof line, "%-44s observed=%-22.15g expected=%-22.15g tol=%-10.3g %s",
                  c.name.c_str(), c.observed, c.expected, c.tolerance,
                  c.pass ? "PASS" : "FAIL");
    os << line << "\n";
    if (!c.pass) ++failures;
  }
  return failures;
}

// Random step path on [0,1]: up to max_segments breakpoints, values uniform
// in [lo, hi]. Used by the randomized property suites.
inline StepPath make_random_path(const rng::CounterStream& cs, std::int64_t& cursor,
                                 int max_segments, double lo, double hi) {
  const int m = 1 + static_cast<int>(cs.unit_at(cursor++) * max_segments);
  std::vector<double> times;
  times.reserve(static_cast<std::size_t>(m));
  times.push_back(0.0);
  for (int i = 1; i < m; ++i) {
    const double t = cs.unit_at(cursor++);
    if (t > 0.0 && t < 1.0) times.push_back(t);
  }
  std::sort(times.begin(), times.end());
  times.erase(std::unique(times.begin(), times.end()), times.end());
  std::vector<double> values(times.size());
  for (double& v : values) v = lo + (hi - lo) * cs.unit_at(cursor++);
  return StepPath(std::move(times), std::move(values));
}

inline std::vector<Check> constants_suite() {
  std::vector<Check> out;
  const double pi = std::numbers::pi;

  const SymmetricPareto gauss_tail(2.0);
  out.push_back(make_check("a_n(alpha=2, n=1000)", gauss_tail.norm_constant(1000),
                           95.4883, 5e-5));
  {
    const double a = gauss_tail.norm_constant(54321);
    const double resid = std::fabs(a * a - 2.0 * 54321.0 * std::log(a));
    out.push_back(make_check("a_n(alpha=2) root residual / a^2", resid / (a * a), 0.0, 1e-9));
  }
  const SymmetricPareto pareto15(1.5);
  out.push_back(make_check("a_n(alpha=1.5, n=1000)", pareto15.norm_constant(1000), 100.0, 0.0));

  out.push_back(make_check("zeta_series(4)", zeta_series(4.0), pi * pi * pi * pi / 90.0, 1e-10));
  out.push_back(make_check("zeta_series(4, signed)", zeta_series(4.0, true),
                           -7.0 * pi * pi * pi * pi / 720.0, 1e-10));
  out.push_back(make_check("zeta_series(2)", zeta_series(2.0), pi * pi / 6.0, 1e-10));

  out.push_back(make_check("H(alpha=1.5, gamma=0.75)",
                           ScalingSpec::lfsm(1.5, 0.75).hurst, 11.0 / 12.0, 0.0));
  {
    const auto lim = coefficient_limits(CoefficientScheme::one_sided_power(0.75),
                                        ScalingSpec::lfsm(1.5, 0.75));
    out.push_back(make_check("a (one-sided power, gamma=0.75)", lim.a, 4.0, 0.0));
  }
  {
    const auto lim = coefficient_limits(CoefficientScheme::alternating_power(3.0, 1.0, 0.75),
                                        ScalingSpec::lfsm(1.5, 0.75));
    out.push_back(make_check("a' (alternating, k1=3)", lim.a_pos, 6.0, 0.0));
    out.push_back(make_check("a'' (alternating, k2=1)", lim.a_neg, 2.0, 0.0));
    out.push_back(make_check("a (alternating, k1=3, k2=1)", lim.a, 4.0, 0.0));
  }
  {
    const auto lim = coefficient_limits(CoefficientScheme::alternating_power(1.0, 1.0, 4.0),
                                        ScalingSpec::levy(1.5));
    out.push_back(make_check("A (alternating, k1=k2=1, gamma=4)",
                             lim.total_sum.value(), -7.0 * pi * pi * pi * pi / 720.0, 1e-10));
  }

  out.push_back(make_check("C_H(0.5)", c_hurst(0.5), 1.0, 0.0));
  out.push_back(make_check("4 / C_H(0.75)", 4.0 / c_hurst(0.75), 4.28, 0.02));

  out.push_back(make_check("sigma(alpha=1.5, C=1)", stable_sigma(1.5, 1.0),
                           1.8452701486440284, 1e-12));
  out.push_back(make_check("sigma(alpha=1, C=1)", stable_sigma(1.0, 1.0), pi / 2.0, 0.0));
  return out;
}

inline std::vector<Check> lemmas_suite(std::uint64_t seed = 7, long instances = 100000) {
  const rng::CounterStream cs(seed, 0);
  std::int64_t cursor = 0;
  long a1_violations = 0;
  long a2_violations = 0;
  long a2_checked = 0;
  for (long i = 0; i < instances; ++i) {
    const StepPath x = make_random_path(cs, cursor, 40, -5.0, 5.0);

    double pts[4];
    for (double& p : pts) p = cs.unit_at(cursor++);
    std::sort(pts, pts + 4);
    if (pts[1] < pts[2]) {
      if (increment_bound_gap(x, pts[0], pts[1], pts[2], pts[3]) < 0.0) ++a1_violations;
    }

    const double beta = interval_beta(x);
    const double eta = 2.0 * beta + 0.05 + 3.0 * cs.unit_at(cursor++);
    const OscillationBound ob = oscillation_bound(x, eta);
    ++a2_checked;
    if (static_cast<double>(ob.count) > ob.bound) ++a2_violations;
  }
  std::vector<Check> out;
  out.push_back(make_check("increment-bound violations / " + std::to_string(instances),
                           static_cast<double>(a1_violations), 0.0, 0.0));
  out.push_back(make_check("count-bound violations / " + std::to_string(a2_checked),
                           static_cast<double>(a2_violations), 0.0, 0.0));
  return out;
}

inline std::vector<Check> distributions_suite(std::uint64_t seed = 11) {
  std::vector<Check> out;

  // Telescoping: the difference-pair partial sums reproduce xi_k - xi_0
  // bit for bit, every k, every stream.
  {
    const SymmetricPareto model(1.5);
    const auto scheme = CoefficientScheme::difference_pair();
    long mismatches = 0;
    for (std::uint64_t stream = 0; stream < 3; ++stream) {
      const StepPath path = process_path(scheme, model, 1000, 50, 1.0, seed, stream);
      const double xi0 = model.at(seed, stream, 0);
      for (long k = 1; k <= 1000; ++k) {
        const double expect = model.at(seed, stream, k) - xi0;
        if (path.values()[static_cast<std::size_t>(k)] != expect) ++mismatches;
      }
    }
    out.push_back(make_check("telescoping mismatches / 3000", static_cast<double>(mismatches), 0.0, 0.0));
  }

  // Tail law of the innovations: empirical P(|xi| > x) vs x^-alpha within
  // 3 binomial standard errors.
  {
    const SymmetricPareto model(1.5);
    const std::size_t n = 100000;
    const auto draws = model.sample(n, seed, 17);
    for (double x : {2.0, 4.0, 8.0}) {
      std::size_t hits = 0;
      for (double v : draws) {
        if (std::fabs(v) > x) ++hits;
      }
      const double p = std::pow(x, -1.5);
      const double se = std::sqrt(p * (1.0 - p) / static_cast<double>(n));
      out.push_back(make_check("tail P(|xi|>" + std::to_string(static_cast<int>(x)) + ")",
                               static_cast<double>(hits) / static_cast<double>(n), p, 3.0 * se));
    }
  }

  // Difference-pair partial sums at t=1 concentrate near zero while the
  // running supremum keeps a nondegenerate spread.
  {
    const SymmetricPareto model(1.5);
    const auto scheme = CoefficientScheme::difference_pair();
    const long reps = 200;
    const double a_n = model.norm_constant(1000);
    double sum_end = 0.0, sum_end2 = 0.0, sum_sup = 0.0, sum_sup2 = 0.0;
    for (long r = 0; r < reps; ++r) {
      const StepPath path = process_path(scheme, model, 1000, 50, a_n, seed,
                                         static_cast<std::uint64_t>(r));
      const double end = path.values().back();
      const double sup = sup_norm(path);
      sum_end += end;
      sum_end2 += end * end;
      sum_sup += sup;
      sum_sup2 += sup * sup;
    }
    const double mean_end = sum_end / reps;
    const double var_end = (sum_end2 - reps * mean_end * mean_end) / (reps - 1);
    const double se_end = std::sqrt(var_end / reps);
    const double mean_sup = sum_sup / reps;
    const double var_sup = (sum_sup2 - reps * mean_sup * mean_sup) / (reps - 1);
    out.push_back(make_check("difference pair: mean S_n(1)/a_n", mean_end, 0.0, 3.0 * se_end));
    out.push_back(make_check("difference pair: sd of sup > 0",
                             std::sqrt(std::max(var_sup, 0.0)) > 0.0 ? 1.0 : 0.0, 1.0, 0.0));
  }
  return out;
}

}  // namespace lpsim
