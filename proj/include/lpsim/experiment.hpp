#pragma once
// Experiment orchestration: the n/N/M protocol around one plotted realization
// (stream 0) and M range-calibration replicates (streams 1..M), with the
// theoretical constants attached.

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <istream>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "lpsim/coefficients.hpp"
#include "lpsim/innovations.hpp"
#include "lpsim/limit_processes.hpp"
#include "lpsim/oscillation.hpp"
#include "lpsim/step_path.hpp"

namespace lpsim {

struct ExperimentConfig {
  enum class Norm { AnOnly, DnAn };

  double alpha = 1.5;
  CoefficientScheme scheme = CoefficientScheme::one_sided_power(0.75);
  long n = 1000;        // path resolution
  long N_trunc = 50;    // truncation radius of the moving average
  long M = 75;          // range-calibration replicates
  double q_lo = 0.10;
  double q_hi = 0.90;
  std::uint64_t seed = 1;
  Norm normalization = Norm::DnAn;

  void validate() const {
    if (!(alpha > 0.0 && alpha <= 2.0)) throw std::domain_error("config: alpha in (0,2]");
    if (n < 1) throw std::domain_error("config: n >= 1");
    if (N_trunc < 0) throw std::domain_error("config: N_trunc >= 0");
    if (M < 1) throw std::domain_error("config: M >= 1");
    if (!(q_lo >= 0.0 && q_lo < q_hi && q_hi <= 1.0)) {
      throw std::domain_error("config: need 0 <= q_lo < q_hi <= 1");
    }
  }
};

inline ScalingSpec scaling_for(const ExperimentConfig& cfg) {
  switch (cfg.scheme.family()) {
    case CoefficientScheme::Family::OneSidedPower:
    case CoefficientScheme::Family::AlternatingPower:
      return ScalingSpec::for_power(cfg.alpha, cfg.scheme.gamma());
    default:
      return ScalingSpec::levy(cfg.alpha);  // finite filters
  }
}

inline double normalizer_for(const ExperimentConfig& cfg) {
  const SymmetricPareto model(cfg.alpha);
  const double a_n = model.norm_constant(cfg.n);
  if (cfg.normalization == ExperimentConfig::Norm::AnOnly) return a_n;
  return scaling_for(cfg).d(static_cast<double>(cfg.n)) * a_n;
}

struct Range {
  double lo;
  double hi;
};

namespace detail {

// Lower empirical quantile: the ceil(q M)-th order statistic, clamped to
// [1, M].
inline double lower_quantile(std::vector<double> v, double q) {
  std::sort(v.begin(), v.end());
  const long m = static_cast<long>(v.size());
  long idx = static_cast<long>(std::ceil(q * static_cast<double>(m)));
  idx = std::clamp(idx, 1L, m);
  return v[static_cast<std::size_t>(idx - 1)];
}

}  // namespace detail

// Runs M independent replicates (streams 1..M), records min_k and max_k of
// the normalized partial sums per replicate, and returns the q_lo-quantile of
// the minima and the q_hi-quantile of the maxima. The plotted realization
// (stream 0) is never among the replicates.
inline Range calibrate_range(const ExperimentConfig& cfg) {
  cfg.validate();
  const SymmetricPareto model(cfg.alpha);
  const double norm = normalizer_for(cfg);
  std::vector<double> mins, maxs;
  mins.reserve(static_cast<std::size_t>(cfg.M));
  maxs.reserve(static_cast<std::size_t>(cfg.M));
  for (long r = 1; r <= cfg.M; ++r) {
    const StepPath path = process_path(cfg.scheme, model, cfg.n, cfg.N_trunc, norm,
                                       cfg.seed, static_cast<std::uint64_t>(r));
    const auto vals = path.values();
    double lo = vals[1], hi = vals[1];  // T_{k,n} over k = 1..n
    for (std::size_t k = 2; k < vals.size(); ++k) {
      lo = std::min(lo, vals[k]);
      hi = std::max(hi, vals[k]);
    }
    mins.push_back(lo);
    maxs.push_back(hi);
  }
  const double x_min = detail::lower_quantile(std::move(mins), cfg.q_lo);
  const double x_max = detail::lower_quantile(std::move(maxs), cfg.q_hi);
  if (!(x_min < x_max)) {
    throw degenerate_range_error("calibrate_range: calibrated range is degenerate");
  }
  return Range{x_min, x_max};
}

struct ExperimentConstants {
  double a_n = 0.0;
  double d_n = 1.0;
  double normalizer = 0.0;
  double hurst = 0.0;
  std::optional<double> sigma;     // stable scale, alpha < 2
  std::optional<double> c_h;       // FBM constant, alpha = 2 in the lfsm regime
  CoefficientLimits limits;
  const char* rng = rng::kGeneratorId;
};

struct ExperimentResult {
  StepPath path;    // plotted realization, normalized (stream 0)
  Range range;      // calibrated plotting range
  StepPath scaled;  // plot_affine(path, range)
  ExperimentConstants constants;
};

inline ExperimentResult run_example(const ExperimentConfig& cfg) {
  cfg.validate();
  const SymmetricPareto model(cfg.alpha);
  const ScalingSpec spec = scaling_for(cfg);
  const double a_n = model.norm_constant(cfg.n);
  const double d_n = spec.d(static_cast<double>(cfg.n));
  const double norm =
      cfg.normalization == ExperimentConfig::Norm::AnOnly ? a_n : d_n * a_n;

  StepPath path = process_path(cfg.scheme, model, cfg.n, cfg.N_trunc, norm,
                               cfg.seed, 0);
  const Range range = calibrate_range(cfg);
  StepPath scaled = plot_affine(path, range.lo, range.hi);

  ExperimentConstants constants;
  constants.a_n = a_n;
  constants.d_n = d_n;
  constants.normalizer = norm;
  constants.hurst = spec.hurst;
  if (cfg.alpha < 2.0) constants.sigma = stable_sigma(cfg.alpha, 1.0);
  if (cfg.alpha == 2.0 && !spec.levy_mode) constants.c_h = c_hurst(spec.hurst);
  constants.limits = coefficient_limits(cfg.scheme, spec);
  return ExperimentResult{std::move(path), range, std::move(scaled), constants};
}

// Preset configurations behind the `figure` subcommand. The identifiers are
// part of the CLI surface.
inline ExperimentConfig figure_preset(std::string_view id, double alpha,
                                      std::uint64_t seed) {
  ExperimentConfig cfg;
  cfg.alpha = alpha;
  cfg.seed = seed;
  if (id == "4.3i") {
    cfg.scheme = CoefficientScheme::one_sided_power(0.75);
  } else if (id == "4.3ii") {
    cfg.scheme = CoefficientScheme::one_sided_power(4.0);
  } else if (id == "4.4") {
    cfg.scheme = CoefficientScheme::alternating_power(3.0, 1.0, 0.75);
  } else if (id == "4.4zero") {
    cfg.scheme = CoefficientScheme::alternating_power(1.0, 1.0, 0.75);
  } else if (id == "4.5") {
    cfg.scheme = CoefficientScheme::alternating_power(1.0, 1.0, 4.0);
  } else if (id == "4.6") {
    cfg.scheme = CoefficientScheme::alternating_power(1.0, 1.0, 4.0);
    cfg.normalization = ExperimentConfig::Norm::AnOnly;
    cfg.q_lo = 0.15;
    cfg.q_hi = 0.85;
  } else {
    throw std::invalid_argument("figure_preset: unknown preset '" + std::string(id) + "'");
  }
  return cfg;
}

// Flat key=value configuration files; '#' starts a comment. Scheme keys:
// scheme=one_sided_power|alternating_power|difference_pair|finite_list with
// gamma/k1/k2 or coeff_<j>=<value> entries.
inline ExperimentConfig load_config(std::istream& is,
                                    ExperimentConfig base = ExperimentConfig{}) {
  std::map<std::string, std::string> kv;
  std::vector<std::pair<long, double>> coeffs;
  std::string line;
  while (std::getline(is, line)) {
    const auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    const auto strip = [](std::string s) {
      const auto b = s.find_first_not_of(" \t\r");
      const auto e = s.find_last_not_of(" \t\r");
      return b == std::string::npos ? std::string() : s.substr(b, e - b + 1);
    };
    const auto eq = line.find('=');
    if (eq == std::string::npos) continue;
    const std::string key = strip(line.substr(0, eq));
    const std::string value = strip(line.substr(eq + 1));
    if (key.empty()) continue;
    if (key.rfind("coeff_", 0) == 0) {
      coeffs.emplace_back(std::stol(key.substr(6)), std::stod(value));
    } else {
      kv[key] = value;
    }
  }

  ExperimentConfig cfg = base;
  if (auto it = kv.find("alpha"); it != kv.end()) cfg.alpha = std::stod(it->second);
  if (auto it = kv.find("n"); it != kv.end()) cfg.n = std::stol(it->second);
  if (auto it = kv.find("N_trunc"); it != kv.end()) cfg.N_trunc = std::stol(it->second);
  if (auto it = kv.find("M"); it != kv.end()) cfg.M = std::stol(it->second);
  if (auto it = kv.find("q_lo"); it != kv.end()) cfg.q_lo = std::stod(it->second);
  if (auto it = kv.find("q_hi"); it != kv.end()) cfg.q_hi = std::stod(it->second);
  if (auto it = kv.find("seed"); it != kv.end()) cfg.seed = std::stoull(it->second);
  if (auto it = kv.find("normalization"); it != kv.end()) {
    if (it->second == "an_only") {
      cfg.normalization = ExperimentConfig::Norm::AnOnly;
    } else if (it->second == "dn_an") {
      cfg.normalization = ExperimentConfig::Norm::DnAn;
    } else {
      throw std::invalid_argument("config: normalization must be an_only or dn_an");
    }
  }
  if (auto it = kv.find("scheme"); it != kv.end()) {
    const std::string& s = it->second;
    const auto num = [&kv](const char* key, const char* what) {
      const auto it2 = kv.find(key);
      if (it2 == kv.end()) throw std::invalid_argument(std::string("config: missing ") + what);
      return std::stod(it2->second);
    };
    if (s == "one_sided_power") {
      cfg.scheme = CoefficientScheme::one_sided_power(num("gamma", "gamma"));
    } else if (s == "alternating_power") {
      cfg.scheme = CoefficientScheme::alternating_power(
          num("k1", "k1"), num("k2", "k2"), num("gamma", "gamma"));
    } else if (s == "difference_pair") {
      cfg.scheme = CoefficientScheme::difference_pair();
    } else if (s == "finite_list") {
      cfg.scheme = CoefficientScheme::finite_list(coeffs);
    } else {
      throw std::invalid_argument("config: unknown scheme '" + s + "'");
    }
  }
  return cfg;
}

}  // namespace lpsim
