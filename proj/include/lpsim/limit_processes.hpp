#pragma once
// Discretized reference limit processes: alpha-stable Levy motion from
// normalized partial sums, and the moving-average construction of linear
// fractional stable motion / fractional Brownian motion, with the kernel and
// normalization constant they need.

#include <cmath>
#include <cstdint>
#include <span>
#include <stdexcept>
#include <vector>

#include "lpsim/innovations.hpp"
#include "lpsim/quadrature.hpp"
#include "lpsim/step_path.hpp"

namespace lpsim {

// Default integration cut for the moving-average construction: innovations
// are drawn on u in [-T_cut, 1]. 50 mirrors the truncation scale of the
// standard n = 1000 protocol; lfsm_tail_mass reports what a given cut
// discards.
inline constexpr double kDefaultTruncationScale = 50.0;

// Moving-average normalization for fractional Brownian motion:
// C_H = { int_0^infty [(1+u)^{H-1/2} - u^{H-1/2}]^2 du + 1/(2H) }^{1/2}.
// Split at u = 1, tail mapped by u -> 1/v; relative accuracy 1e-6 or better
// across H in (0,1).
inline double c_hurst(double hurst) {
  if (!(hurst > 0.0 && hurst < 1.0)) {
    throw std::domain_error("c_hurst: H outside (0,1)");
  }
  const double p = hurst - 0.5;
  if (p == 0.0) return 1.0;  // integrand vanishes identically
  const auto head = [p](double u) {
    const double d = std::pow(1.0 + u, p) - std::pow(u, p);
    return d * d;
  };
  const auto tail = [p](double v) {
    // u = 1/v: ((1+u)^p - u^p)^2 du = v^{-2p-2} ((1+v)^p - 1)^2 dv, with the
    // bracket in expm1 form so it survives v down to the underflow floor
    const double d = std::expm1(p * std::log1p(v));
    return std::pow(v, -2.0 * p - 2.0) * d * d;
  };
  const double integral = detail::integrate01(head) + detail::integrate01(tail);
  return std::sqrt(integral + 1.0 / (2.0 * hurst));
}

// Parameters of the limit process Lambda_{alpha,H,a,b}; sigma is the stable
// scale of the driving motion (1 in the Gaussian case alpha = 2).
struct LimitSpec {
  double alpha;
  double hurst;
  double a;
  double b;
  double sigma;

  static LimitSpec make(double alpha, double hurst, double a, double b) {
    if (!(alpha > 0.0 && alpha <= 2.0)) {
      throw std::domain_error("LimitSpec: alpha must lie in (0,2]");
    }
    const double h_floor = 1.0 / alpha;
    if (!(hurst >= h_floor && hurst < 1.0)) {
      throw std::domain_error("LimitSpec: H must lie in [1/alpha, 1)");
    }
    if (std::fabs(a) + std::fabs(b) == 0.0) {
      throw std::domain_error("LimitSpec: |a| + |b| must be positive");
    }
    const double sigma = alpha < 2.0 ? stable_sigma(alpha, 1.0) : 1.0;
    return LimitSpec{alpha, hurst, a, b, sigma};
  }

  // H = 1/alpha exactly: the kernel degenerates to (a-b) 1_{(0,t]}.
  static LimitSpec levy(double alpha, double a, double b) {
    return make(alpha, 1.0 / alpha, a, b);
  }

  bool levy_mode() const { return hurst == 1.0 / alpha; }
  double exponent() const { return hurst - 1.0 / alpha; }

  // f_{alpha,H,a,b}(t,u) = a{(t-u)_+^p - (-u)_+^p} + b{(u-t)_+^p - (u)_+^p}
  // with p = H - 1/alpha; the indicator branch applies when p = 0.
  double kernel(double t, double u) const {
    if (levy_mode()) return (u > 0.0 && u <= t) ? a - b : 0.0;
    const double p = exponent();
    const auto pos_pow = [p](double x) { return x > 0.0 ? std::pow(x, p) : 0.0; };
    return a * (pos_pow(t - u) - pos_pow(-u)) + b * (pos_pow(u - t) - pos_pow(u));
  }
};

// Z_n(t) = (1/a_n) sum_{i<=[nt]} xi_i as a step path; innovation i sits at
// absolute draw index i of the stream, shared with lfsm_path.
inline StepPath levy_path(const SymmetricPareto& model, long n,
                          std::uint64_t seed, std::uint64_t stream) {
  if (n < 1) throw std::domain_error("levy_path: n >= 1 required");
  const double a_n = model.norm_constant(n);
  std::vector<double> xi(static_cast<std::size_t>(n));
  model.fill(1, xi, seed, stream);
  std::vector<double> times(static_cast<std::size_t>(n) + 1);
  std::vector<double> values(static_cast<std::size_t>(n) + 1);
  times[0] = 0.0;
  values[0] = 0.0;
  double acc = 0.0;
  for (long k = 1; k <= n; ++k) {
    acc += xi[static_cast<std::size_t>(k - 1)];
    times[static_cast<std::size_t>(k)] = static_cast<double>(k) / static_cast<double>(n);
    values[static_cast<std::size_t>(k)] = acc / a_n;
  }
  return StepPath(std::move(times), std::move(values));
}

namespace detail {

// Shared precomputation for the moving-average sums: innovations xi_j on
// j in [-J, n] and the grid powers P[m] = (m/n)^p for m >= 1.
struct LfsmWorkspace {
  long J;
  double a_n;
  std::vector<double> xi;  // xi[j + J] = xi_j
  std::vector<double> pow_grid;

  LfsmWorkspace(const LimitSpec& spec, const SymmetricPareto& model, long n,
                double t_cut, std::uint64_t seed, std::uint64_t stream) {
    if (n < 1) throw std::domain_error("lfsm: n >= 1 required");
    if (!(t_cut > 0.0)) throw std::domain_error("lfsm: T_cut must be positive");
    J = static_cast<long>(std::floor(t_cut * static_cast<double>(n)));
    a_n = model.norm_constant(n);
    xi.resize(static_cast<std::size_t>(J + n + 1));
    model.fill(-J, xi, seed, stream);
    if (!spec.levy_mode()) {
      const double p = spec.exponent();
      pow_grid.resize(static_cast<std::size_t>(n + J + 1));
      pow_grid[0] = 0.0;
      for (long m = 1; m <= n + J; ++m) {
        pow_grid[static_cast<std::size_t>(m)] =
            std::pow(static_cast<double>(m) / static_cast<double>(n), p);
      }
    }
  }

  // Lambda(t_k) for t_k = k/n: (1/a_n) sum_j f(t_k, j/n) xi_j. The two
  // t-independent pieces sum_{j<0} P[-j] xi_j and sum_{j>0} P[j] xi_j are
  // passed in so paths can reuse them across k.
  double value_at(const LimitSpec& spec, long n, long k, double base_a,
                  double base_b) const {
    double sum_a = 0.0, sum_b = 0.0;
    for (long j = -J; j < k; ++j) {
      sum_a += pow_grid[static_cast<std::size_t>(k - j)] * xi[static_cast<std::size_t>(j + J)];
    }
    for (long j = k + 1; j <= n; ++j) {
      sum_b += pow_grid[static_cast<std::size_t>(j - k)] * xi[static_cast<std::size_t>(j + J)];
    }
    return (spec.a * (sum_a - base_a) + spec.b * (sum_b - base_b)) / a_n;
  }

  double base_a() const {
    double s = 0.0;
    for (long j = -J; j <= -1; ++j) {
      s += pow_grid[static_cast<std::size_t>(-j)] * xi[static_cast<std::size_t>(j + J)];
    }
    return s;
  }

  double base_b(long n) const {
    double s = 0.0;
    for (long j = 1; j <= n; ++j) {
      s += pow_grid[static_cast<std::size_t>(j)] * xi[static_cast<std::size_t>(j + J)];
    }
    return s;
  }
};

}  // namespace detail

// Discretized moving average: Lambda(t_k) = (1/a_n) sum_{j=-[T_cut n]}^{n}
// f_{alpha,H,a,b}(t_k, j/n) xi_j at t_k = k/n, assembled as a step path.
inline StepPath lfsm_path(const LimitSpec& spec, const SymmetricPareto& model,
                          long n, double t_cut, std::uint64_t seed,
                          std::uint64_t stream) {
  detail::LfsmWorkspace ws(spec, model, n, t_cut, seed, stream);
  std::vector<double> times(static_cast<std::size_t>(n) + 1);
  std::vector<double> values(static_cast<std::size_t>(n) + 1);
  for (long k = 0; k <= n; ++k) {
    times[static_cast<std::size_t>(k)] = static_cast<double>(k) / static_cast<double>(n);
  }
  if (spec.levy_mode()) {
    const double gain = spec.a - spec.b;
    double acc = 0.0;
    values[0] = 0.0;
    for (long k = 1; k <= n; ++k) {
      acc += ws.xi[static_cast<std::size_t>(k + ws.J)];
      values[static_cast<std::size_t>(k)] = gain * (acc / ws.a_n);
    }
  } else {
    const double ba = ws.base_a();
    const double bb = ws.base_b(n);
    for (long k = 0; k <= n; ++k) {
      values[static_cast<std::size_t>(k)] = ws.value_at(spec, n, k, ba, bb);
    }
  }
  return StepPath(std::move(times), std::move(values));
}

// Marginals Lambda(t) at selected times only (t snapped down to the k/n
// grid); avoids the full-path cost when only a few values are needed.
inline std::vector<double> lfsm_values(const LimitSpec& spec,
                                       const SymmetricPareto& model, long n,
                                       double t_cut, std::span<const double> ts,
                                       std::uint64_t seed, std::uint64_t stream) {
  detail::LfsmWorkspace ws(spec, model, n, t_cut, seed, stream);
  std::vector<double> out;
  out.reserve(ts.size());
  double ba = 0.0, bb = 0.0;
  if (!spec.levy_mode()) {
    ba = ws.base_a();
    bb = ws.base_b(n);
  }
  for (double t : ts) {
    if (!(t >= 0.0 && t <= 1.0)) throw std::domain_error("lfsm_values: t outside [0,1]");
    const long k = static_cast<long>(std::floor(t * static_cast<double>(n) + 1e-9));
    if (spec.levy_mode()) {
      double acc = 0.0;
      for (long j = 1; j <= k; ++j) acc += ws.xi[static_cast<std::size_t>(j + ws.J)];
      out.push_back((spec.a - spec.b) * acc / ws.a_n);
    } else {
      out.push_back(ws.value_at(spec, n, k, ba, bb));
    }
  }
  return out;
}

// Kernel mass |f(1,u)|^alpha discarded beyond u < -T_cut, from the asymptotic
// decay f(1,u) ~ a p (-u)^{p-1}; a diagnostic for choosing the cut.
inline double lfsm_tail_mass(const LimitSpec& spec, double t_cut) {
  if (!(t_cut > 0.0)) throw std::domain_error("lfsm_tail_mass: T_cut must be positive");
  if (spec.levy_mode() || spec.a == 0.0) return 0.0;
  const double p = spec.exponent();
  const double decay = (1.0 - p) * spec.alpha - 1.0;  // > 0 since H < 1
  const double lead = std::pow(std::fabs(spec.a * p), spec.alpha);
  return lead * std::pow(t_cut, -decay) / decay;
}

}  // namespace lpsim
