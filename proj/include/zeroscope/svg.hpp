#pragma once

// Minimal deterministic SVG figures: fixed 1000x1000 viewbox, axes with
// ticks, polylines, scatter marks and overlay circles. No timestamps, no
// external dependencies, so outputs are byte-stable and diffable.

#include <complex>
#include <string>
#include <vector>

namespace zeroscope::svg {

struct Series {
  std::vector<double> x, y;
  std::string color = "#1f6fb2";
  std::string name;
  bool dashed = false;
};

struct Scatter {
  std::vector<std::complex<double>> pts;
  std::string color = "#1f6fb2";
  std::string name;
  bool cross = false;  // draw x marks instead of dots
};

struct Circle {
  double cx = 0.0, cy = 0.0, r = 0.0;
  std::string color = "#c23b22";
};

class Plot {
 public:
  explicit Plot(std::string title) : title_(std::move(title)) {}

  void add_series(Series s) { series_.push_back(std::move(s)); }
  void add_scatter(Scatter s) { scatter_.push_back(std::move(s)); }
  void add_circle(Circle c) { circles_.push_back(std::move(c)); }
  // Force equal x/y scaling (root scatters).
  void set_equal_axes(bool eq) { equal_axes_ = eq; }

  std::string render() const;
  void write(const std::string& path) const;

 private:
  std::string title_;
  std::vector<Series> series_;
  std::vector<Scatter> scatter_;
  std::vector<Circle> circles_;
  bool equal_axes_ = false;
};

}  // namespace zeroscope::svg
