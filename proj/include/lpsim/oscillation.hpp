#pragma once
// Oscillation and crossing analysis for step paths: the interval distance
// H(a,b,c), the M1 oscillation function w(x,delta), eta-oscillation and
// upcrossing counts, the sharp bounds relating them, and family-wise
// compactness diagnostics.

#include <cmath>
#include <cstdint>
#include <map>
#include <span>
#include <stdexcept>
#include <utility>
#include <vector>

#include "lpsim/step_path.hpp"

namespace lpsim {

// Signalled when a bound's hypothesis fails (eta <= 2*beta); distinct from a
// domain error because the inputs themselves are legal.
class precondition_not_met : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Distance from b to the closed interval with endpoints a and c:
// (a^c - a^c^b) v (avcvb - avc). Zero iff b lies between a and c.
inline double h_dist(double a, double b, double c) {
  const double lo = std::min(a, c);
  const double hi = std::max(a, c);
  const double below = lo - std::min(lo, b);
  const double above = std::max(hi, b) - hi;
  return std::max(below, above);
}

namespace detail {

inline void check_interval(double s, double t) {
  if (!(s >= 0.0 && s < t && t <= 1.0)) {
    throw std::domain_error("need 0 <= s < t <= 1");
  }
}

}  // namespace detail

// w(x,delta) = sup H(x(t1),x(t2),x(t3)) over 0 v (t2-delta) <= t1 < t2 < t3
// <= 1 ^ (t2+delta). For a step path the supremum runs over segment triples
// i < j < k; triple feasibility reduces to a window test on the breakpoints.
// The delta-window inequalities are closed, the segment right ends open, so
// (i,j,k) admits witnesses iff max(t_j, t_k - delta) < min(t_{j+1},
// t_{i+1} + delta).
inline double oscillation(const StepPath& x, double delta) {
  if (!(delta > 0.0)) throw std::domain_error("oscillation: delta must be positive");
  const auto t = x.times();
  const auto v = x.values();
  const std::size_t m = t.size();
  double w = 0.0;
  for (std::size_t j = 1; j + 1 < m; ++j) {
    for (std::size_t i = j; i-- > 0;) {
      const double open_until = t[i + 1] + delta;  // t2 must stay below this
      if (!(open_until > t[j])) break;
      const double hi = std::min(t[j + 1], open_until);
      for (std::size_t k = j + 1; k < m; ++k) {
        if (t[k] - delta >= hi) break;
        w = std::max(w, h_dist(v[i], v[j], v[k]));
      }
    }
  }
  return w;
}

// Largest N admitting points s <= t1 < t2 <= t3 < t4 <= ... <= t_{2N} <= t
// with |x(t_{2k}) - x(t_{2k-1})| > eta. Greedy earliest-completion scan over
// the segment values: the first swing beyond eta always belongs to some
// maximal point system, and a swing's endpoint may start the next one.
inline long count_oscillations(const StepPath& x, double eta, double s = 0.0,
                               double t = 1.0) {
  if (!(eta > 0.0)) throw std::domain_error("count_oscillations: eta must be positive");
  detail::check_interval(s, t);
  const std::size_t first = x.segment_at(s);
  const std::size_t last = x.segment_at(t);
  const auto v = x.values();
  long count = 0;
  double lo = v[first], hi = v[first];
  for (std::size_t g = first + 1; g <= last; ++g) {
    const double w = v[g];
    lo = std::min(lo, w);
    hi = std::max(hi, w);
    if (w - lo > eta || hi - w > eta) {
      ++count;
      lo = hi = w;
    }
  }
  return count;
}

// Largest N of alternating passages below a then above b (strict on both
// sides), scanned left to right.
inline long count_upcrossings(const StepPath& x, double a, double b) {
  if (!(a < b)) throw std::domain_error("count_upcrossings: need a < b");
  long count = 0;
  bool below = false;
  for (double w : x.values()) {
    if (!below) {
      if (w < a) below = true;
    } else if (w > b) {
      ++count;
      below = false;
    }
  }
  return count;
}

// sup H(x(u),x(v),x(w)) over s <= u < v < w <= t, i.e. the oscillation
// function with an unbounded window, restricted to [s,t]. For the middle
// segment j the best outer pair comes from prefix/suffix extremes.
inline double interval_beta(const StepPath& x, double s = 0.0, double t = 1.0) {
  detail::check_interval(s, t);
  const std::size_t first = x.segment_at(s);
  const std::size_t last = x.segment_at(t);
  if (last - first < 2) return 0.0;
  const auto v = x.values();
  const std::size_t len = last - first + 1;
  std::vector<double> suf_max(len), suf_min(len);
  suf_max[len - 1] = suf_min[len - 1] = v[last];
  for (std::size_t r = len - 1; r-- > 0;) {
    suf_max[r] = std::max(v[first + r], suf_max[r + 1]);
    suf_min[r] = std::min(v[first + r], suf_min[r + 1]);
  }
  double beta = 0.0;
  double pre_max = v[first], pre_min = v[first];
  for (std::size_t r = 1; r + 1 < len; ++r) {
    const double mid = v[first + r];
    beta = std::max(beta, std::min(pre_max, suf_max[r + 1]) - mid);
    beta = std::max(beta, mid - std::max(pre_min, suf_min[r + 1]));
    pre_max = std::max(pre_max, mid);
    pre_min = std::min(pre_min, mid);
  }
  return beta;
}

// RHS - LHS of |x(u)-x(v)| <= 2|x(s)-x(t)| + H(x(s),x(u),x(t)) +
// H(x(s),x(v),x(t)) for 0 <= s <= u < v <= t <= 1; non-negative always.
inline double increment_bound_gap(const StepPath& x, double s, double u, double v,
                           double t) {
  if (!(0.0 <= s && s <= u && u < v && v <= t && t <= 1.0)) {
    throw std::domain_error("increment_bound_gap: need 0 <= s <= u < v <= t <= 1");
  }
  const double xs = x(s), xu = x(u), xv = x(v), xt = x(t);
  const double rhs = 2.0 * std::fabs(xs - xt) + h_dist(xs, xu, xt) + h_dist(xs, xv, xt);
  return rhs - std::fabs(xu - xv);
}

struct OscillationBound {
  long count;    // N_eta(x; [s,t])
  double bound;  // (2|x(t)-x(s)| + beta) / (eta - beta)
  double beta;   // sup H over ordered triples in [s,t]
};

// Valid only under eta > 2*beta; then count <= bound holds for every path.
inline OscillationBound oscillation_bound(const StepPath& x, double eta,
                                       double s = 0.0, double t = 1.0) {
  if (!(eta > 0.0)) throw std::domain_error("oscillation_bound: eta must be positive");
  detail::check_interval(s, t);
  const double beta = interval_beta(x, s, t);
  if (!(eta > 2.0 * beta)) {
    throw precondition_not_met("oscillation_bound: requires eta > 2*beta");
  }
  const long count = count_oscillations(x, eta, s, t);
  const double bound = (2.0 * std::fabs(x(t) - x(s)) + beta) / (eta - beta);
  return {count, bound, beta};
}

// Family-wise maxima of the relative-compactness diagnostics: sup norm plus
// bounded oscillation/upcrossing counts. The report is over the finite family
// it is given; no extrapolation.
struct CompactnessReport {
  double sup_norm_max = 0.0;
  std::map<double, long> osc_counts;                          // eta -> max N_eta
  std::map<std::pair<double, double>, long> upcross_counts;   // (a,b) -> max N^{a,b}
};

inline CompactnessReport compactness_report(
    std::span<const StepPath> family, std::span<const double> etas,
    std::span<const std::pair<double, double>> bands) {
  if (family.empty()) throw std::domain_error("compactness_report: empty family");
  CompactnessReport rep;
  for (double eta : etas) rep.osc_counts[eta] = 0;
  for (const auto& band : bands) rep.upcross_counts[band] = 0;
  for (const StepPath& x : family) {
    rep.sup_norm_max = std::max(rep.sup_norm_max, sup_norm(x));
    for (double eta : etas) {
      rep.osc_counts[eta] = std::max(rep.osc_counts[eta], count_oscillations(x, eta));
    }
    for (const auto& band : bands) {
      rep.upcross_counts[band] =
          std::max(rep.upcross_counts[band], count_upcrossings(x, band.first, band.second));
    }
  }
  return rep;
}

}  // namespace lpsim
