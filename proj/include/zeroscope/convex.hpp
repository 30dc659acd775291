#pragma once

// Lower convex envelopes of log-coefficient point sets and the exact
// Legendre-Fenchel transform on convex piecewise-linear functions.

#include <optional>
#include <vector>

#include "zeroscope/series.hpp"

namespace zeroscope::convex {

// Points (k/V, -log|a_k|/V); zero coefficients are omitted rather than
// clamped (a clamp would corrupt envelope slopes).
struct LogPointSet {
  std::vector<double> x;  // strictly increasing
  std::vector<double> y;  // finite
};

LogPointSet log_points(const series::CoeffSeq& f);

// Convex piecewise-linear function, +infinity outside its domain unless a
// half-infinite linear extension is present on that side. Breakpoint values
// are the lower semi-continuous ones. Stored segment slopes are strictly
// increasing; the Legendre transform fills them exactly rather than by
// re-differencing, which keeps the involution closed-form.
struct PiecewiseConvex {
  std::vector<double> xs;      // breakpoints, strictly increasing
  std::vector<double> ys;      // values at breakpoints
  std::vector<double> slopes;  // per segment, size xs.size()-1
  std::optional<double> left_slope;   // linear continuation to -infinity
  std::optional<double> right_slope;  // linear continuation to +infinity

  double eval(double x) const;  // +infinity outside the domain
  double min_slope() const;     // left_slope if present, else first segment/point slope
  double max_slope() const;
};

// Derives slopes from breakpoints (used when constructing by hand).
PiecewiseConvex make_piecewise(std::vector<double> xs, std::vector<double> ys,
                               std::optional<double> left_slope = std::nullopt,
                               std::optional<double> right_slope = std::nullopt);

// Greatest convex minorant of the points. Single-pass lower-hull sweep over
// the x-sorted input; ties on x keep the smaller y; collinear interior
// points are dropped so stored vertices are strictly convex.
PiecewiseConvex lower_envelope(const LogPointSet& pts);

// Exact conjugate L(f)(t) = sup_x (t x - f(x)). Breakpoints of L(f) are the
// slopes of f and the slopes of L(f) are the breakpoints of f, so L(L(f))
// reproduces f at every breakpoint up to a couple of roundings.
PiecewiseConvex legendre(const PiecewiseConvex& f);

}  // namespace zeroscope::convex
