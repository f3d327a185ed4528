#pragma once
// Minimal static SVG step plots: axes, one polyline per path drawn as a
// staircase in a fixed y-range, byte-deterministic for identical inputs.

#include <charconv>
#include <fstream>
#include <ostream>
#include <span>
#include <stdexcept>
#include <string>

#include "lpsim/step_path.hpp"

namespace lpsim {

namespace detail {

// to_chars keeps the output locale-independent, so identical inputs give
// byte-identical files.
inline void append_svg_num(std::string& out, double v) {
  char buf[48];
  const auto res = std::to_chars(buf, buf + sizeof buf, v, std::chars_format::fixed, 3);
  out.append(buf, res.ptr);
}

inline std::string svg_label_num(double v) {
  char buf[48];
  const auto res = std::to_chars(buf, buf + sizeof buf, v, std::chars_format::general, 4);
  return std::string(buf, res.ptr);
}

}  // namespace detail

inline void emit_svg(std::span<const StepPath> paths, double y_lo, double y_hi,
                     std::ostream& os) {
  if (!(y_lo < y_hi)) throw std::domain_error("emit_svg: need y_lo < y_hi");
  constexpr double kW = 900.0, kH = 560.0;
  constexpr double kL = 70.0, kR = 20.0, kT = 20.0, kB = 45.0;
  const double plot_w = kW - kL - kR;
  const double plot_h = kH - kT - kB;
  const auto sx = [&](double t) { return kL + t * plot_w; };
  const auto sy = [&](double v) {
    return kT + (y_hi - v) / (y_hi - y_lo) * plot_h;
  };
  static constexpr const char* kColors[] = {"#1f77b4", "#d62728", "#2ca02c",
                                            "#9467bd", "#ff7f0e", "#8c564b"};

  std::string out;
  out += "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"900\" height=\"560\" "
         "viewBox=\"0 0 900 560\">\n";
  out += "<rect width=\"900\" height=\"560\" fill=\"white\"/>\n";

  // frame and zero line
  const auto rect_line = [&](double x1, double y1, double x2, double y2,
                             const char* style) {
    out += "<line x1=\"";
    detail::append_svg_num(out, x1);
    out += "\" y1=\"";
    detail::append_svg_num(out, y1);
    out += "\" x2=\"";
    detail::append_svg_num(out, x2);
    out += "\" y2=\"";
    detail::append_svg_num(out, y2);
    out += "\" ";
    out += style;
    out += "/>\n";
  };
  rect_line(kL, kT, kL, kT + plot_h, "stroke=\"black\" stroke-width=\"1\"");
  rect_line(kL, kT + plot_h, kL + plot_w, kT + plot_h,
            "stroke=\"black\" stroke-width=\"1\"");
  if (y_lo < 0.0 && y_hi > 0.0) {
    rect_line(kL, sy(0.0), kL + plot_w, sy(0.0),
              "stroke=\"#bbbbbb\" stroke-width=\"1\" stroke-dasharray=\"4 3\"");
  }

  const auto label = [&](double x, double y, const std::string& text,
                         const char* anchor) {
    out += "<text x=\"";
    detail::append_svg_num(out, x);
    out += "\" y=\"";
    detail::append_svg_num(out, y);
    out += "\" font-family=\"monospace\" font-size=\"13\" text-anchor=\"";
    out += anchor;
    out += "\">";
    out += text;
    out += "</text>\n";
  };
  const auto fmt = [](double v) { return detail::svg_label_num(v); };
  label(kL - 6.0, sy(y_hi) + 5.0, fmt(y_hi), "end");
  label(kL - 6.0, sy(y_lo) + 5.0, fmt(y_lo), "end");
  label(sx(0.0), kH - 18.0, "0", "middle");
  label(sx(1.0), kH - 18.0, "1", "middle");
  label(kL + plot_w / 2.0, kH - 18.0, "t", "middle");
  label(kL, kT - 6.0, "range [" + fmt(y_lo) + ", " + fmt(y_hi) + "]", "start");

  std::size_t color = 0;
  for (const StepPath& path : paths) {
    out += "<polyline fill=\"none\" stroke=\"";
    out += kColors[color % (sizeof kColors / sizeof kColors[0])];
    out += "\" stroke-width=\"1.2\" points=\"";
    const auto t = path.times();
    const auto v = path.values();
    for (std::size_t i = 0; i < t.size(); ++i) {
      detail::append_svg_num(out, sx(t[i]));
      out.push_back(',');
      detail::append_svg_num(out, sy(v[i]));
      out.push_back(' ');
      const double t_next = i + 1 < t.size() ? t[i + 1] : 1.0;
      detail::append_svg_num(out, sx(t_next));
      out.push_back(',');
      detail::append_svg_num(out, sy(v[i]));
      if (i + 1 < t.size()) out.push_back(' ');
    }
    out += "\"/>\n";
    ++color;
  }
  out += "</svg>\n";
  os << out;
}

inline void emit_svg(std::span<const StepPath> paths, double y_lo, double y_hi,
                     const std::string& file) {
  std::ofstream os(file, std::ios::binary);
  if (!os) throw std::runtime_error("emit_svg: cannot open " + file);
  emit_svg(paths, y_lo, y_hi, os);
  if (!os) throw std::runtime_error("emit_svg: write failed for " + file);
}

}  // namespace lpsim
