#include "zeroscope/convex.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

namespace zeroscope::convex {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

double cross(double ox, double oy, double ax, double ay, double bx, double by) {
  return (ax - ox) * (by - oy) - (ay - oy) * (bx - ox);
}

}  // namespace

LogPointSet log_points(const series::CoeffSeq& f) {
  series::validate(f);
  LogPointSet pts;
  for (size_t k = 0; k < f.coeffs.size(); ++k) {
    if (f.coeffs[k].is_zero()) continue;  // y = +inf convention
    pts.x.push_back(static_cast<double>(k) / f.V);
    pts.y.push_back(-f.coeffs[k].log_abs() / f.V);
  }
  return pts;
}

double PiecewiseConvex::eval(double x) const {
  if (xs.empty()) return kInf;
  if (x < xs.front())
    return left_slope ? ys.front() + *left_slope * (x - xs.front()) : kInf;
  if (x > xs.back())
    return right_slope ? ys.back() + *right_slope * (x - xs.back()) : kInf;
  // locate segment: largest i with xs[i] <= x
  auto it = std::upper_bound(xs.begin(), xs.end(), x);
  size_t i = static_cast<size_t>(it - xs.begin());
  if (i == 0) return ys.front();
  --i;
  if (x == xs[i]) return ys[i];
  return ys[i] + slopes[i] * (x - xs[i]);
}

double PiecewiseConvex::min_slope() const {
  if (left_slope) return *left_slope;
  if (!slopes.empty()) return slopes.front();
  return std::numeric_limits<double>::quiet_NaN();
}

double PiecewiseConvex::max_slope() const {
  if (right_slope) return *right_slope;
  if (!slopes.empty()) return slopes.back();
  return std::numeric_limits<double>::quiet_NaN();
}

PiecewiseConvex make_piecewise(std::vector<double> xs, std::vector<double> ys,
                               std::optional<double> left_slope,
                               std::optional<double> right_slope) {
  if (xs.empty() || xs.size() != ys.size())
    throw std::invalid_argument("make_piecewise: need matching nonempty breakpoints and values");
  for (size_t i = 0; i + 1 < xs.size(); ++i)
    if (!(xs[i] < xs[i + 1]))
      throw std::invalid_argument("make_piecewise: breakpoints must be strictly increasing");

  PiecewiseConvex f;
  f.xs = std::move(xs);
  f.ys = std::move(ys);
  f.slopes.resize(f.xs.size() >= 1 ? f.xs.size() - 1 : 0);
  for (size_t i = 0; i + 1 < f.xs.size(); ++i)
    f.slopes[i] = (f.ys[i + 1] - f.ys[i]) / (f.xs[i + 1] - f.xs[i]);
  for (size_t i = 0; i + 1 < f.slopes.size(); ++i)
    if (f.slopes[i] > f.slopes[i + 1])
      throw std::invalid_argument("make_piecewise: slopes must be nondecreasing (convexity)");

  // Canonical form: merge exactly collinear adjacent segments.
  if (!f.slopes.empty()) {
    std::vector<double> cx{f.xs[0]}, cy{f.ys[0]}, cs{f.slopes[0]};
    for (size_t i = 1; i < f.slopes.size(); ++i) {
      if (f.slopes[i] != cs.back()) {
        cx.push_back(f.xs[i]);
        cy.push_back(f.ys[i]);
        cs.push_back(f.slopes[i]);
      }
    }
    cx.push_back(f.xs.back());
    cy.push_back(f.ys.back());
    f.xs = std::move(cx);
    f.ys = std::move(cy);
    f.slopes = std::move(cs);
  }

  if (left_slope) {
    if (!f.slopes.empty() && !(*left_slope <= f.slopes.front()))
      throw std::invalid_argument("make_piecewise: left extension breaks convexity");
    if (!f.slopes.empty() && *left_slope == f.slopes.front()) {
      f.xs.erase(f.xs.begin());
      f.ys.erase(f.ys.begin());
      f.slopes.erase(f.slopes.begin());
    }
  }
  if (right_slope) {
    if (!f.slopes.empty() && !(*right_slope >= f.slopes.back()))
      throw std::invalid_argument("make_piecewise: right extension breaks convexity");
    if (!f.slopes.empty() && *right_slope == f.slopes.back()) {
      f.xs.pop_back();
      f.ys.pop_back();
      f.slopes.pop_back();
    }
  }
  if (left_slope && right_slope && f.xs.size() == 1 && *left_slope == *right_slope) {
    // full line; keep single breakpoint representation
  }
  f.left_slope = left_slope;
  f.right_slope = right_slope;
  return f;
}

PiecewiseConvex lower_envelope(const LogPointSet& pts) {
  if (pts.x.empty()) throw std::invalid_argument("lower_envelope: empty point set");
  if (pts.x.size() != pts.y.size())
    throw std::invalid_argument("lower_envelope: mismatched arrays");

  std::vector<size_t> order(pts.x.size());
  for (size_t i = 0; i < order.size(); ++i) order[i] = i;
  std::stable_sort(order.begin(), order.end(), [&](size_t a, size_t b) {
    if (pts.x[a] != pts.x[b]) return pts.x[a] < pts.x[b];
    return pts.y[a] < pts.y[b];  // ties on x keep the smaller y
  });

  std::vector<double> hx, hy;
  hx.reserve(order.size());
  hy.reserve(order.size());
  for (size_t idx : order) {
    double px = pts.x[idx], py = pts.y[idx];
    if (!hx.empty() && px == hx.back()) continue;  // duplicate x, larger y
    while (hx.size() >= 2 &&
           cross(hx[hx.size() - 2], hy[hy.size() - 2], hx.back(), hy.back(), px, py) <= 0.0) {
      hx.pop_back();
      hy.pop_back();
    }
    hx.push_back(px);
    hy.push_back(py);
  }

  PiecewiseConvex f;
  f.xs = std::move(hx);
  f.ys = std::move(hy);
  f.slopes.resize(f.xs.size() - 1);
  for (size_t i = 0; i + 1 < f.xs.size(); ++i)
    f.slopes[i] = (f.ys[i + 1] - f.ys[i]) / (f.xs[i + 1] - f.xs[i]);
  return f;
}

PiecewiseConvex legendre(const PiecewiseConvex& f) {
  if (f.xs.empty()) throw std::invalid_argument("legendre: empty function");
  const size_t m = f.xs.size();

  PiecewiseConvex g;
  if (m == 1 && !f.left_slope && !f.right_slope) {
    // f finite at a single point: conjugate is the full line t*x0 - y0.
    g.xs = {0.0};
    g.ys = {-f.ys[0]};
    g.left_slope = f.xs[0];
    g.right_slope = f.xs[0];
    return g;
  }
  if (f.left_slope && f.right_slope && *f.left_slope == *f.right_slope) {
    // f is a full line of slope c: conjugate finite only at t = c.
    double c = *f.left_slope;
    g.xs = {c};
    g.ys = {c * f.xs[0] - f.ys[0]};
    return g;
  }

  // Conjugate breakpoints are the slopes of f (plus the extension slopes when
  // the domain is unbounded); the conjugate slope between consecutive
  // breakpoints is the breakpoint of f attaining the sup there.
  if (f.left_slope) {
    g.xs.push_back(*f.left_slope);
    g.ys.push_back(*f.left_slope * f.xs.front() - f.ys.front());
  } else {
    g.left_slope = f.xs.front();
  }
  for (size_t i = 0; i + 1 < m; ++i) {
    if (!g.xs.empty()) g.slopes.push_back(f.xs[i]);
    g.xs.push_back(f.slopes[i]);
    g.ys.push_back(f.slopes[i] * f.xs[i] - f.ys[i]);
  }
  if (f.right_slope) {
    if (!g.xs.empty()) g.slopes.push_back(f.xs.back());
    g.xs.push_back(*f.right_slope);
    g.ys.push_back(*f.right_slope * f.xs.back() - f.ys.back());
  } else {
    g.right_slope = f.xs.back();
  }
  for (size_t i = 0; i + 1 < g.xs.size(); ++i)
    if (!(g.xs[i] < g.xs[i + 1]))
      throw std::logic_error("legendre: input was not in canonical strictly-convex form");
  return g;
}

}  // namespace zeroscope::convex
