#pragma once
// Symmetric Pareto innovations: P(|xi| > x) = x^{-alpha} for x >= 1, with
// equal tail weight on both sides, sampled by inverse transform over
// counter-based uniforms. Also the partial-sum normalizers a_n tied to this
// law and the scale of the limiting stable distribution.

#include <cmath>
#include <cstdint>
#include <numbers>
#include <stdexcept>
#include <vector>

#include "lpsim/prng.hpp"

namespace lpsim {

class SymmetricPareto {
 public:
  explicit SymmetricPareto(double alpha) : alpha_(alpha) {
    if (!(alpha > 0.0) || !(alpha <= 2.0)) {
      throw std::domain_error("SymmetricPareto: alpha must lie in (0,2]");
    }
  }

  double alpha() const { return alpha_; }

  // Generalized inverse of the c.d.f.; u = 1/2 belongs to the left branch
  // and maps to -1. |inv_cdf| >= 1 everywhere: the support excludes (-1,1).
  double inv_cdf(double u) const {
    if (!(u > 0.0 && u < 1.0)) {
      throw std::domain_error("SymmetricPareto::inv_cdf: u outside (0,1)");
    }
    if (u <= 0.5) return -std::pow(2.0 * u, -1.0 / alpha_);
    return std::pow(2.0 * (1.0 - u), -1.0 / alpha_);
  }

  double cdf(double x) const {
    if (x <= -1.0) return 0.5 * std::pow(-x, -alpha_);
    if (x < 1.0) return 0.5;
    return 1.0 - 0.5 * std::pow(x, -alpha_);
  }

  // xi_j for an absolute draw index j: the same (seed, stream, j) yields the
  // same innovation no matter which operation asks for it.
  double at(std::uint64_t seed, std::uint64_t stream, std::int64_t j) const {
    return inv_cdf(rng::CounterStream(seed, stream).unit_at(j));
  }

  // Draws at indices 0 .. count-1 of the stream.
  std::vector<double> sample(std::size_t count, std::uint64_t seed,
                             std::uint64_t stream) const {
    std::vector<double> out;
    out.reserve(count);
    rng::CounterStream cs(seed, stream);
    cs.for_each_unit(0, static_cast<std::int64_t>(count),
                     [&](std::int64_t, double u) { out.push_back(inv_cdf(u)); });
    return out;
  }

  // Fills xi_j for j in [first, first+out_size) into out.
  void fill(std::int64_t first, std::vector<double>& out, std::uint64_t seed,
            std::uint64_t stream) const {
    rng::CounterStream cs(seed, stream);
    cs.for_each_unit(first, static_cast<std::int64_t>(out.size()),
                     [&](std::int64_t j, double u) {
                       out[static_cast<std::size_t>(j - first)] = inv_cdf(u);
                     });
  }

  // Partial-sum normalizer a_n. alpha < 2: a_n = n^{1/alpha}. alpha = 2: the
  // larger root of x^2 = 2n ln x (the tail is log-heavy, so a_n grows a bit
  // faster than sqrt(n)). Computed in extended precision so that exactly
  // representable roots come out exact.
  double norm_constant(std::int64_t n) const {
    if (n < 1) throw std::domain_error("norm_constant: n >= 1 required");
    if (alpha_ < 2.0) {
      return static_cast<double>(
          powl(static_cast<long double>(n), 1.0L / static_cast<long double>(alpha_)));
    }
    // x^2 - 2n ln x has minimum n(1 - ln n) at x = sqrt(n): real roots exist
    // only for n >= 3.
    if (n < 3) {
      throw std::domain_error("norm_constant: alpha = 2 requires n >= 3");
    }
    const long double two_n = 2.0L * static_cast<long double>(n);
    // Start right of the larger root; the map is convex there, so Newton
    // descends monotonically onto it.
    long double x = sqrtl(two_n * logl(two_n));
    for (int it = 0; it < 64; ++it) {
      const long double g = x * x - two_n * logl(x);
      const long double dg = 2.0L * x - two_n / x;
      const long double step = g / dg;
      x -= step;
      if (fabsl(step) <= 1e-18L * x) break;
    }
    return static_cast<double>(x);
  }

 private:
  double alpha_;
};

// Scale sigma of the limiting stable law S_alpha(sigma, beta, 0) under the
// tail-normalization constant C:
//   sigma^alpha = C Gamma(2-alpha)/(1-alpha) cos(pi alpha / 2)   (alpha != 1)
//   sigma       = C pi / 2                                       (alpha  = 1)
inline double stable_sigma(double alpha, double C) {
  if (!(alpha > 0.0 && alpha < 2.0)) {
    throw std::domain_error("stable_sigma: alpha must lie in (0,2)");
  }
  if (!(C > 0.0)) throw std::domain_error("stable_sigma: C must be positive");
  if (alpha == 1.0) return C * std::numbers::pi / 2.0;
  const double s_alpha = C * std::tgamma(2.0 - alpha) / (1.0 - alpha) *
                         std::cos(std::numbers::pi * alpha / 2.0);
  return std::pow(s_alpha, 1.0 / alpha);
}

struct StableParams {
  double alpha;
  double sigma;
  double beta;
  double mu;

  // The symmetric-Pareto model has balanced tails (p = q = 1/2), hence
  // beta = 0 and, under the standing centering assumptions, mu = 0.
  static StableParams symmetric(double alpha, double C = 1.0) {
    return StableParams{alpha, stable_sigma(alpha, C), 0.0, 0.0};
  }
};

}  // namespace lpsim
