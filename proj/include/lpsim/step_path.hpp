#pragma once
// Cadlag step functions on [0,1]: the value v_i holds on [t_i, t_{i+1}) and
// the last value holds through t = 1. Evaluation is right-continuous with
// left limits by construction.

#include <algorithm>
#include <charconv>
#include <cmath>
#include <fstream>
#include <istream>
#include <ostream>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace lpsim {

// Raised when an operation needs a non-degenerate value range (plot_auto on a
// constant path, range calibration collapsing to a point).
class degenerate_range_error : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

class StepPath {
 public:
  StepPath(std::vector<double> times, std::vector<double> values)
      : times_(std::move(times)), values_(std::move(values)) {
    if (times_.empty() || times_.size() != values_.size()) {
      throw std::invalid_argument("StepPath: need one value per breakpoint");
    }
    if (times_.front() != 0.0) {
      throw std::invalid_argument("StepPath: first breakpoint must be 0");
    }
    for (std::size_t i = 0; i < times_.size(); ++i) {
      if (!std::isfinite(times_[i]) || times_[i] < 0.0 || times_[i] > 1.0 ||
          !std::isfinite(values_[i])) {
        throw std::invalid_argument("StepPath: entries must be finite, t in [0,1]");
      }
      if (i > 0 && !(times_[i] > times_[i - 1])) {
        throw std::invalid_argument("StepPath: breakpoints must be strictly increasing");
      }
    }
  }

  static StepPath constant(double value) { return StepPath({0.0}, {value}); }

  std::size_t segments() const { return times_.size(); }
  std::span<const double> times() const { return times_; }
  std::span<const double> values() const { return values_; }

  std::size_t segment_at(double t) const {
    if (!(t >= 0.0 && t <= 1.0)) {
      throw std::domain_error("StepPath: t outside [0,1]");
    }
    const auto it = std::upper_bound(times_.begin(), times_.end(), t);
    return static_cast<std::size_t>(it - times_.begin()) - 1;
  }

  double operator()(double t) const { return values_[segment_at(t)]; }

 private:
  std::vector<double> times_;
  std::vector<double> values_;
};

inline double sup_norm(const StepPath& x) {
  double m = 0.0;
  for (double v : x.values()) m = std::max(m, std::fabs(v));
  return m;
}

// plot_{a,b}(x) = (x - a)/(b - a), the fixed-range rescaling that commutes
// with the path topology (unlike the automatic variant below).
inline StepPath plot_affine(const StepPath& x, double a, double b) {
  if (!(a < b)) throw std::domain_error("plot_affine: need a < b");
  std::vector<double> vals(x.values().begin(), x.values().end());
  for (double& v : vals) v = (v - a) / (b - a);
  return StepPath(std::vector<double>(x.times().begin(), x.times().end()),
                  std::move(vals));
}

// Automatic shift-and-scale onto [0,1]. Provided to exhibit its failure mode
// on a degenerate range; the experiment pipeline uses plot_affine instead.
inline StepPath plot_auto(const StepPath& x) {
  const auto vals = x.values();
  const auto [lo_it, hi_it] = std::minmax_element(vals.begin(), vals.end());
  if (!(*lo_it < *hi_it)) {
    throw degenerate_range_error("plot_auto: path has constant value");
  }
  return plot_affine(x, *lo_it, *hi_it);
}

// Pointwise sum on the merged breakpoint grid.
inline StepPath sum_paths(const StepPath& x, const StepPath& y) {
  std::vector<double> grid;
  grid.reserve(x.segments() + y.segments());
  std::set_union(x.times().begin(), x.times().end(),
                 y.times().begin(), y.times().end(), std::back_inserter(grid));
  std::vector<double> vals(grid.size());
  for (std::size_t i = 0; i < grid.size(); ++i) vals[i] = x(grid[i]) + y(grid[i]);
  return StepPath(std::move(grid), std::move(vals));
}

namespace detail {

inline void append_double(std::string& out, double v) {
  char buf[40];
  const auto res = std::to_chars(buf, buf + sizeof buf, v,
                                 std::chars_format::general, 17);
  out.append(buf, res.ptr);
}

}  // namespace detail

// CSV form: header "t,value", one row per breakpoint, 17 significant digits
// (lossless double round trip).
inline void write_csv(const StepPath& x, std::ostream& os) {
  std::string out = "t,value\n";
  const auto t = x.times();
  const auto v = x.values();
  for (std::size_t i = 0; i < t.size(); ++i) {
    detail::append_double(out, t[i]);
    out.push_back(',');
    detail::append_double(out, v[i]);
    out.push_back('\n');
  }
  os << out;
}

inline void write_csv(const StepPath& x, const std::string& file) {
  std::ofstream os(file, std::ios::binary);
  if (!os) throw std::runtime_error("write_csv: cannot open " + file);
  write_csv(x, os);
  if (!os) throw std::runtime_error("write_csv: write failed for " + file);
}

inline StepPath read_csv(std::istream& is) {
  std::string line;
  if (!std::getline(is, line)) throw std::runtime_error("read_csv: empty input");
  if (!line.empty() && line.back() == '\r') line.pop_back();
  if (line != "t,value") throw std::runtime_error("read_csv: expected header 't,value'");
  std::vector<double> times, values;
  while (std::getline(is, line)) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    const auto comma = line.find(',');
    if (comma == std::string::npos) throw std::runtime_error("read_csv: malformed row: " + line);
    times.push_back(std::stod(line.substr(0, comma)));
    values.push_back(std::stod(line.substr(comma + 1)));
  }
  return StepPath(std::move(times), std::move(values));
}

inline StepPath read_csv(const std::string& file) {
  std::ifstream is(file, std::ios::binary);
  if (!is) throw std::runtime_error("read_csv: cannot open " + file);
  return read_csv(is);
}

}  // namespace lpsim
