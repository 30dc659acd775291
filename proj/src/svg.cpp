#include "zeroscope/svg.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <limits>
#include <sstream>
#include <stdexcept>

namespace zeroscope::svg {

namespace {

constexpr double kW = 1000.0, kH = 1000.0;
constexpr double kMargin = 90.0;

std::string fmt(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.6g", v);
  return buf;
}

struct Range {
  double lo = std::numeric_limits<double>::infinity();
  double hi = -std::numeric_limits<double>::infinity();
  void add(double v) {
    if (!std::isfinite(v)) return;
    lo = std::min(lo, v);
    hi = std::max(hi, v);
  }
  void pad() {
    if (lo > hi) {
      lo = -1;
      hi = 1;
    }
    double span = hi - lo;
    if (span == 0.0) span = 1.0;
    lo -= 0.05 * span;
    hi += 0.05 * span;
  }
};

double nice_step(double span) {
  double raw = span / 6.0;
  double mag = std::pow(10.0, std::floor(std::log10(raw)));
  double r = raw / mag;
  double step = r < 1.5 ? 1.0 : r < 3.5 ? 2.0 : r < 7.5 ? 5.0 : 10.0;
  return step * mag;
}

}  // namespace

std::string Plot::render() const {
  Range rx, ry;
  for (const Series& s : series_)
    for (size_t i = 0; i < s.x.size(); ++i) {
      rx.add(s.x[i]);
      ry.add(s.y[i]);
    }
  for (const Scatter& s : scatter_)
    for (const auto& p : s.pts) {
      rx.add(p.real());
      ry.add(p.imag());
    }
  for (const Circle& c : circles_) {
    rx.add(c.cx - c.r);
    rx.add(c.cx + c.r);
    ry.add(c.cy - c.r);
    ry.add(c.cy + c.r);
  }
  rx.pad();
  ry.pad();
  if (equal_axes_) {
    double cx = 0.5 * (rx.lo + rx.hi), cy = 0.5 * (ry.lo + ry.hi);
    double half = 0.5 * std::max(rx.hi - rx.lo, ry.hi - ry.lo);
    rx.lo = cx - half;
    rx.hi = cx + half;
    ry.lo = cy - half;
    ry.hi = cy + half;
  }

  auto X = [&](double v) { return kMargin + (v - rx.lo) / (rx.hi - rx.lo) * (kW - 2 * kMargin); };
  auto Y = [&](double v) { return kH - kMargin - (v - ry.lo) / (ry.hi - ry.lo) * (kH - 2 * kMargin); };

  std::ostringstream out;
  out << "<svg xmlns=\"http://www.w3.org/2000/svg\" viewBox=\"0 0 1000 1000\">\n";
  out << "<rect width=\"1000\" height=\"1000\" fill=\"white\"/>\n";
  out << "<text x=\"500\" y=\"40\" font-size=\"26\" text-anchor=\"middle\" font-family=\"sans-serif\">"
      << title_ << "</text>\n";

  // axes box and ticks
  out << "<rect x=\"" << fmt(kMargin) << "\" y=\"" << fmt(kMargin) << "\" width=\""
      << fmt(kW - 2 * kMargin) << "\" height=\"" << fmt(kH - 2 * kMargin)
      << "\" fill=\"none\" stroke=\"#333\" stroke-width=\"1.5\"/>\n";
  double sx = nice_step(rx.hi - rx.lo);
  for (double v = std::ceil(rx.lo / sx) * sx; v <= rx.hi + 1e-12 * sx; v += sx) {
    out << "<line x1=\"" << fmt(X(v)) << "\" y1=\"" << fmt(kH - kMargin) << "\" x2=\"" << fmt(X(v))
        << "\" y2=\"" << fmt(kH - kMargin + 8) << "\" stroke=\"#333\"/>\n";
    out << "<text x=\"" << fmt(X(v)) << "\" y=\"" << fmt(kH - kMargin + 30)
        << "\" font-size=\"18\" text-anchor=\"middle\" font-family=\"sans-serif\">" << fmt(v)
        << "</text>\n";
  }
  double sy = nice_step(ry.hi - ry.lo);
  for (double v = std::ceil(ry.lo / sy) * sy; v <= ry.hi + 1e-12 * sy; v += sy) {
    out << "<line x1=\"" << fmt(kMargin - 8) << "\" y1=\"" << fmt(Y(v)) << "\" x2=\"" << fmt(kMargin)
        << "\" y2=\"" << fmt(Y(v)) << "\" stroke=\"#333\"/>\n";
    out << "<text x=\"" << fmt(kMargin - 14) << "\" y=\"" << fmt(Y(v) + 6)
        << "\" font-size=\"18\" text-anchor=\"end\" font-family=\"sans-serif\">" << fmt(v)
        << "</text>\n";
  }

  for (const Circle& c : circles_) {
    double r_px = c.r / (rx.hi - rx.lo) * (kW - 2 * kMargin);
    out << "<circle cx=\"" << fmt(X(c.cx)) << "\" cy=\"" << fmt(Y(c.cy)) << "\" r=\"" << fmt(r_px)
        << "\" fill=\"none\" stroke=\"" << c.color << "\" stroke-width=\"2\" stroke-dasharray=\"8 6\"/>\n";
  }

  for (const Series& s : series_) {
    out << "<polyline fill=\"none\" stroke=\"" << s.color << "\" stroke-width=\"2.5\"";
    if (s.dashed) out << " stroke-dasharray=\"10 7\"";
    out << " points=\"";
    for (size_t i = 0; i < s.x.size(); ++i) {
      if (!std::isfinite(s.y[i])) continue;
      out << fmt(X(s.x[i])) << "," << fmt(Y(s.y[i])) << " ";
    }
    out << "\"/>\n";
  }

  for (const Scatter& s : scatter_) {
    for (const auto& p : s.pts) {
      if (!std::isfinite(p.real()) || !std::isfinite(p.imag())) continue;
      double px = X(p.real()), py = Y(p.imag());
      if (s.cross) {
        out << "<path d=\"M" << fmt(px - 5) << " " << fmt(py - 5) << "L" << fmt(px + 5) << " "
            << fmt(py + 5) << "M" << fmt(px - 5) << " " << fmt(py + 5) << "L" << fmt(px + 5) << " "
            << fmt(py - 5) << "\" stroke=\"" << s.color << "\" stroke-width=\"2\"/>\n";
      } else {
        out << "<circle cx=\"" << fmt(px) << "\" cy=\"" << fmt(py)
            << "\" r=\"3.5\" fill=\"" << s.color << "\" fill-opacity=\"0.75\"/>\n";
      }
    }
  }

  // legend
  double ly = kMargin + 24;
  auto legend_entry = [&](const std::string& name, const std::string& color, bool cross) {
    if (name.empty()) return;
    if (cross)
      out << "<text x=\"" << fmt(kW - kMargin - 180) << "\" y=\"" << fmt(ly)
          << "\" font-size=\"18\" font-family=\"sans-serif\" fill=\"" << color << "\">x  " << name
          << "</text>\n";
    else
      out << "<text x=\"" << fmt(kW - kMargin - 180) << "\" y=\"" << fmt(ly)
          << "\" font-size=\"18\" font-family=\"sans-serif\" fill=\"" << color << "\">&#9632; "
          << name << "</text>\n";
    ly += 24;
  };
  for (const Series& s : series_) legend_entry(s.name, s.color, false);
  for (const Scatter& s : scatter_) legend_entry(s.name, s.color, s.cross);

  out << "</svg>\n";
  return out.str();
}

void Plot::write(const std::string& path) const {
  std::ofstream f(path, std::ios::binary);
  if (!f) throw std::runtime_error("svg: cannot open " + path);
  f << render();
}

}  // namespace zeroscope::svg
