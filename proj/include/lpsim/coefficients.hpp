#pragma once
// Coefficient families of the linear process X_i = sum_j c_j xi_{i-j}, their
// positive/negative decomposition, truncated process construction, partial
// sum paths and the theoretical limit constants (a, b, a', a'', A, H, d_n).

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <optional>
#include <span>
#include <stdexcept>
#include <utility>
#include <vector>

#include "lpsim/innovations.hpp"
#include "lpsim/step_path.hpp"

namespace lpsim {

class CoefficientScheme {
 public:
  enum class Family { OneSidedPower, AlternatingPower, FiniteList, DifferencePair };

  // c_j = j^{-gamma} for j >= 1, zero otherwise.
  static CoefficientScheme one_sided_power(double gamma) {
    if (!(gamma > 0.0)) throw std::domain_error("one_sided_power: gamma must be positive");
    CoefficientScheme s(Family::OneSidedPower);
    s.gamma_ = gamma;
    return s;
  }

  // c_j = k1 j^{-gamma} for even j >= 1, -k2 j^{-gamma} for odd j >= 1.
  static CoefficientScheme alternating_power(double k1, double k2, double gamma) {
    if (!(gamma > 0.0)) throw std::domain_error("alternating_power: gamma must be positive");
    if (!(k1 > 0.0 && k2 > 0.0)) {
      throw std::domain_error("alternating_power: k1, k2 must be positive");
    }
    CoefficientScheme s(Family::AlternatingPower);
    s.gamma_ = gamma;
    s.k1_ = k1;
    s.k2_ = k2;
    return s;
  }

  static CoefficientScheme finite_list(std::vector<std::pair<long, double>> entries) {
    std::sort(entries.begin(), entries.end());
    for (std::size_t i = 1; i < entries.size(); ++i) {
      if (entries[i].first == entries[i - 1].first) {
        throw std::invalid_argument("finite_list: duplicate index");
      }
    }
    CoefficientScheme s(Family::FiniteList);
    s.entries_ = std::move(entries);
    return s;
  }

  // c_0 = 1, c_1 = -1: the telescoping counterexample filter.
  static CoefficientScheme difference_pair() {
    return CoefficientScheme(Family::DifferencePair);
  }

  Family family() const { return family_; }
  double gamma() const { return gamma_; }
  double k1() const { return k1_; }
  double k2() const { return k2_; }
  const std::vector<std::pair<long, double>>& entries() const { return entries_; }

  // True when the filter has no mass at negative lags.
  bool one_sided() const {
    if (family_ != Family::FiniteList) return true;
    for (const auto& [j, c] : entries_) {
      if (j < 0 && c != 0.0) return false;
    }
    return true;
  }

  double operator()(long j) const {
    const double c = base(j);
    switch (part_) {
      case Part::Full: return c;
      case Part::Positive: return std::max(c, 0.0);
      case Part::Negative: return std::max(-c, 0.0);
    }
    return c;
  }

  // Parts are terminal: a signed part cannot be split again.
  CoefficientScheme positive_part() const {
    if (is_part()) throw std::logic_error("CoefficientScheme: already a signed part");
    CoefficientScheme s(*this);
    s.part_ = Part::Positive;
    return s;
  }

  CoefficientScheme negative_part() const {
    if (is_part()) throw std::logic_error("CoefficientScheme: already a signed part");
    CoefficientScheme s(*this);
    s.part_ = Part::Negative;
    return s;
  }

  bool is_part() const { return part_ != Part::Full; }

 private:
  enum class Part { Full, Positive, Negative };

  explicit CoefficientScheme(Family f) : family_(f) {}

  double base(long j) const {
    switch (family_) {
      case Family::OneSidedPower:
        return j >= 1 ? std::pow(static_cast<double>(j), -gamma_) : 0.0;
      case Family::AlternatingPower: {
        if (j < 1) return 0.0;
        const double mag = std::pow(static_cast<double>(j), -gamma_);
        return (j % 2 == 0) ? k1_ * mag : -k2_ * mag;
      }
      case Family::DifferencePair:
        if (j == 0) return 1.0;
        if (j == 1) return -1.0;
        return 0.0;
      case Family::FiniteList: {
        const auto it = std::lower_bound(
            entries_.begin(), entries_.end(), j,
            [](const std::pair<long, double>& e, long key) { return e.first < key; });
        return (it != entries_.end() && it->first == j) ? it->second : 0.0;
      }
    }
    return 0.0;
  }

  Family family_;
  Part part_ = Part::Full;
  double gamma_ = 0.0;
  double k1_ = 0.0;
  double k2_ = 0.0;
  std::vector<std::pair<long, double>> entries_;
};

// Canonical split c_j = max(c_j,0) - max(-c_j,0): parts are non-negative,
// recomposition is exact, pointwise product zero.
inline std::pair<CoefficientScheme, CoefficientScheme> decompose(
    const CoefficientScheme& scheme) {
  return {scheme.positive_part(), scheme.negative_part()};
}

// Normalization regime for the partial sums: either the long-memory scaling
// d_n = n^{H - 1/alpha} with H = 1/alpha + 1 - gamma (gamma < 1), or the pure
// stable scaling d_n = 1 with H = 1/alpha.
struct ScalingSpec {
  double alpha;
  double hurst;
  bool levy_mode;

  static ScalingSpec levy(double alpha) {
    check_alpha(alpha);
    return ScalingSpec{alpha, static_cast<double>(1.0L / static_cast<long double>(alpha)),
                       true};
  }

  static ScalingSpec lfsm(double alpha, double gamma) {
    check_alpha(alpha);
    if (!(gamma > 1.0 / alpha)) {
      throw std::domain_error("ScalingSpec: gamma must exceed 1/alpha");
    }
    if (!(gamma < 1.0)) throw std::domain_error("ScalingSpec::lfsm: gamma must be below 1");
    const long double h = 1.0L / static_cast<long double>(alpha) + 1.0L -
                          static_cast<long double>(gamma);
    return ScalingSpec{alpha, static_cast<double>(h), false};
  }

  // Dispatch on gamma; gamma = 1 has no summable normalization and is
  // rejected.
  static ScalingSpec for_power(double alpha, double gamma) {
    check_alpha(alpha);
    if (!(gamma > 1.0 / alpha)) {
      throw std::domain_error("ScalingSpec: gamma must exceed 1/alpha");
    }
    if (gamma < 1.0) return lfsm(alpha, gamma);
    if (gamma > 1.0) return levy(alpha);
    throw std::domain_error("ScalingSpec: gamma = 1 is not supported");
  }

  double d(double n) const {
    if (levy_mode) return 1.0;
    const long double e = static_cast<long double>(hurst) -
                          1.0L / static_cast<long double>(alpha);
    return static_cast<double>(powl(static_cast<long double>(n), e));
  }

 private:
  static void check_alpha(double alpha) {
    if (!(alpha > 0.0 && alpha <= 2.0)) {
      throw std::domain_error("ScalingSpec: alpha must lie in (0,2]");
    }
  }
};

// sum_{j>=1} j^{-gamma} (or sum_{j>=1} (-1)^j j^{-gamma} when signed), via
// direct summation plus an integral tail estimate with Euler-Maclaurin
// endpoint corrections; the first omitted term bounds the remainder below
// 1e-12 for every gamma > 1.
inline double zeta_series(double gamma, bool signed_series = false) {
  if (!(gamma > 1.0)) throw std::domain_error("zeta_series: gamma must exceed 1");
  if (signed_series) {
    // sum (-1)^j j^-g = (2^{1-g} - 1) sum j^-g
    return (std::pow(2.0, 1.0 - gamma) - 1.0) * zeta_series(gamma);
  }
  const long double g = static_cast<long double>(gamma);
  constexpr int kCut = 64;
  long double s = 0.0L;
  for (int j = 1; j < kCut; ++j) {
    s += powl(static_cast<long double>(j), -g);
  }
  const long double J = static_cast<long double>(kCut);
  const long double fJ = powl(J, -g);
  s += fJ * J / (g - 1.0L);                                        // integral from J
  s += fJ * 0.5L;
  s += fJ / J * g / 12.0L;
  s -= fJ / (J * J * J) * g * (g + 1.0L) * (g + 2.0L) / 720.0L;
  return static_cast<double>(s);
}

struct CoefficientLimits {
  // (1/d_n) sum_{j=0..n} of c_j, c_j', c_j''  ->  a, a', a''
  // (1/d_n) sum_{j=-n..-1} of c_j             -> -b  (zero for one-sided filters)
  double a = 0.0;
  double b = 0.0;
  double a_pos = 0.0;
  double a_neg = 0.0;
  std::optional<double> total_sum;  // A = sum_j c_j, when absolutely summable

  struct Empirical {
    double ratio_a = 0.0;
    double ratio_b = 0.0;
    double ratio_pos = 0.0;
    double ratio_neg = 0.0;
    // sup over 1 <= j <= n_probe of |c_j| j / d_j; finite growth is a
    // hypothesis of the limit theorems, reported, not enforced.
    double decay_diag = 0.0;
  };
  std::optional<Empirical> empirical;
};

inline CoefficientLimits coefficient_limits(const CoefficientScheme& scheme,
                                            const ScalingSpec& spec,
                                            long n_probe = 0) {
  if (scheme.is_part()) {
    throw std::invalid_argument("coefficient_limits: pass the full scheme, not a part");
  }
  CoefficientLimits out;
  switch (scheme.family()) {
    case CoefficientScheme::Family::OneSidedPower: {
      const double g = scheme.gamma();
      if (!(g > 1.0 / spec.alpha)) {
        throw std::domain_error("coefficient_limits: gamma <= 1/alpha");
      }
      if (spec.levy_mode) {
        if (!(g > 1.0)) {
          throw std::domain_error("coefficient_limits: levy scaling needs gamma > 1");
        }
        const double z = zeta_series(g);
        out.a = out.a_pos = z;
        out.total_sum = z;
      } else {
        if (!(g < 1.0)) {
          throw std::domain_error("coefficient_limits: lfsm scaling needs gamma < 1");
        }
        out.a = out.a_pos = 1.0 / (1.0 - g);
      }
      break;
    }
    case CoefficientScheme::Family::AlternatingPower: {
      const double g = scheme.gamma();
      if (!(g > 1.0 / spec.alpha)) {
        throw std::domain_error("coefficient_limits: gamma <= 1/alpha");
      }
      if (spec.levy_mode) {
        if (!(g > 1.0)) {
          throw std::domain_error("coefficient_limits: levy scaling needs gamma > 1");
        }
        const double z = zeta_series(g);
        const double even = std::pow(2.0, -g) * z;   // sum over even j >= 2
        out.a_pos = scheme.k1() * even;
        out.a_neg = scheme.k2() * (z - even);        // odd j
        out.a = out.a_pos - out.a_neg;
        out.total_sum = out.a;
      } else {
        if (!(g < 1.0)) {
          throw std::domain_error("coefficient_limits: lfsm scaling needs gamma < 1");
        }
        out.a_pos = scheme.k1() / (2.0 * (1.0 - g));
        out.a_neg = scheme.k2() / (2.0 * (1.0 - g));
        out.a = out.a_pos - out.a_neg;
      }
      break;
    }
    case CoefficientScheme::Family::DifferencePair: {
      out.a = 0.0;
      out.a_pos = 1.0;
      out.a_neg = 1.0;
      out.total_sum = 0.0;
      break;
    }
    case CoefficientScheme::Family::FiniteList: {
      double total = 0.0;
      for (const auto& [j, c] : scheme.entries()) {
        total += c;
        if (spec.levy_mode) {
          if (j >= 0) {
            out.a += c;
            out.a_pos += std::max(c, 0.0);
            out.a_neg += std::max(-c, 0.0);
          } else {
            out.b -= c;
          }
        }
      }
      // Under the lfsm scaling d_n diverges, so every finite filter has all
      // four limits zero.
      out.total_sum = total;
      break;
    }
  }

  if (n_probe > 0) {
    CoefficientLimits::Empirical emp;
    const double dn = spec.d(static_cast<double>(n_probe));
    long double sa = 0.0L, sb = 0.0L, sp = 0.0L, sn = 0.0L;
    for (long j = 0; j <= n_probe; ++j) {
      const double c = scheme(j);
      sa += c;
      sp += std::max(c, 0.0);
      sn += std::max(-c, 0.0);
    }
    for (long j = -1; j >= -n_probe; --j) sb += scheme(j);
    emp.ratio_a = static_cast<double>(sa) / dn;
    emp.ratio_b = -static_cast<double>(sb) / dn;
    emp.ratio_pos = static_cast<double>(sp) / dn;
    emp.ratio_neg = static_cast<double>(sn) / dn;
    for (long j = 1; j <= n_probe; ++j) {
      const double c = scheme(j);
      if (c != 0.0) {
        emp.decay_diag = std::max(
            emp.decay_diag, std::fabs(c) * static_cast<double>(j) /
                                spec.d(static_cast<double>(j)));
      }
    }
    out.empirical = emp;
  }
  return out;
}

// X_i^N = sum_{|j|<=N} c_j xi_{i-j}, i = 1..n, with the innovations drawn at
// their absolute indices k in [1-N, n+N] of one (seed, stream) pair.
inline std::vector<double> build_truncated_process(const CoefficientScheme& scheme,
                                                   const SymmetricPareto& model,
                                                   long n, long N,
                                                   std::uint64_t seed,
                                                   std::uint64_t stream) {
  if (n < 1) throw std::domain_error("build_truncated_process: n >= 1 required");
  if (N < 0) throw std::domain_error("build_truncated_process: N >= 0 required");
  std::vector<double> xi(static_cast<std::size_t>(n + 2 * N));
  model.fill(1 - N, xi, seed, stream);

  std::vector<double> c(static_cast<std::size_t>(2 * N + 1));
  for (long j = -N; j <= N; ++j) c[static_cast<std::size_t>(j + N)] = scheme(j);

  std::vector<double> x(static_cast<std::size_t>(n));
  for (long i = 1; i <= n; ++i) {
    double acc = 0.0;
    for (long j = -N; j <= N; ++j) {
      const double cj = c[static_cast<std::size_t>(j + N)];
      if (cj != 0.0) acc += cj * xi[static_cast<std::size_t>(i - j - (1 - N))];
    }
    x[static_cast<std::size_t>(i - 1)] = acc;
  }
  return x;
}

// Partial-sum path of a sample: breakpoints k/n, value S_k / normalizer on
// [k/n, (k+1)/n), zero on [0, 1/n).
inline StepPath partial_sum_path(std::span<const double> x, long n,
                                 double normalizer) {
  if (!(normalizer > 0.0)) {
    throw std::domain_error("partial_sum_path: normalizer must be positive");
  }
  if (n < 1 || static_cast<long>(x.size()) != n) {
    throw std::invalid_argument("partial_sum_path: need exactly n samples");
  }
  std::vector<double> times(static_cast<std::size_t>(n) + 1);
  std::vector<double> values(static_cast<std::size_t>(n) + 1);
  times[0] = 0.0;
  values[0] = 0.0;
  double acc = 0.0;
  for (long k = 1; k <= n; ++k) {
    acc += x[static_cast<std::size_t>(k - 1)];
    times[static_cast<std::size_t>(k)] = static_cast<double>(k) / static_cast<double>(n);
    values[static_cast<std::size_t>(k)] = acc / normalizer;
  }
  return StepPath(std::move(times), std::move(values));
}

namespace detail {

// Cumulative coefficients over the truncation window: cum[r - (-N) + 1] =
// sum_{j=-N..r} c_j, cum[0] = 0.
inline std::vector<double> cumulative_coeffs(const CoefficientScheme& scheme, long N) {
  std::vector<double> cum(static_cast<std::size_t>(2 * N + 2));
  cum[0] = 0.0;
  for (long j = -N; j <= N; ++j) {
    cum[static_cast<std::size_t>(j + N + 1)] =
        cum[static_cast<std::size_t>(j + N)] + scheme(j);
  }
  return cum;
}

inline double window_weight(const std::vector<double>& cum, long N, long k, long m) {
  const long j_lo = std::max(1 - m, -N);
  const long j_hi = std::min(k - m, N);
  if (j_hi < j_lo) return 0.0;
  return cum[static_cast<std::size_t>(j_hi + N + 1)] - cum[static_cast<std::size_t>(j_lo + N)];
}

}  // namespace detail

// Normalized partial-sum path of the truncated linear process, assembled per
// innovation: S_k = sum_m W_k(m) xi_m where W_k(m) collapses the (i,j) double
// sum into one cumulative-coefficient window. Filters whose coefficient sums
// cancel exactly (the difference pair) telescope exactly here, which plain
// prefix summation of X_i^N cannot guarantee in floating point.
inline StepPath process_path(const CoefficientScheme& scheme,
                             const SymmetricPareto& model, long n, long N,
                             double normalizer, std::uint64_t seed,
                             std::uint64_t stream) {
  if (n < 1) throw std::domain_error("process_path: n >= 1 required");
  if (N < 0) throw std::domain_error("process_path: N >= 0 required");
  if (!(normalizer > 0.0)) {
    throw std::domain_error("process_path: normalizer must be positive");
  }
  std::vector<double> xi(static_cast<std::size_t>(n + 2 * N));
  model.fill(1 - N, xi, seed, stream);
  const std::vector<double> cum = detail::cumulative_coeffs(scheme, N);

  std::vector<double> times(static_cast<std::size_t>(n) + 1);
  std::vector<double> values(static_cast<std::size_t>(n) + 1);
  times[0] = 0.0;
  values[0] = 0.0;
  for (long k = 1; k <= n; ++k) {
    double acc = 0.0;
    const long m_hi = std::min(k + N, n + N);
    for (long m = 1 - N; m <= m_hi; ++m) {
      const double w = detail::window_weight(cum, N, k, m);
      if (w != 0.0) acc += w * xi[static_cast<std::size_t>(m - (1 - N))];
    }
    times[static_cast<std::size_t>(k)] = static_cast<double>(k) / static_cast<double>(n);
    values[static_cast<std::size_t>(k)] = acc / normalizer;
  }
  return StepPath(std::move(times), std::move(values));
}

// S_n of the truncated process only (same innovations and weights as
// process_path at k = n).
inline double process_sum(const CoefficientScheme& scheme,
                          const SymmetricPareto& model, long n, long N,
                          std::uint64_t seed, std::uint64_t stream) {
  if (n < 1) throw std::domain_error("process_sum: n >= 1 required");
  if (N < 0) throw std::domain_error("process_sum: N >= 0 required");
  const std::vector<double> cum = detail::cumulative_coeffs(scheme, N);
  rng::CounterStream cs(seed, stream);
  const SymmetricPareto& mod = model;
  double acc = 0.0;
  cs.for_each_unit(1 - N, n + 2 * N, [&](std::int64_t m, double u) {
    const double w = detail::window_weight(cum, N, n, m);
    if (w != 0.0) acc += w * mod.inv_cdf(u);
  });
  return acc;
}

}  // namespace lpsim
