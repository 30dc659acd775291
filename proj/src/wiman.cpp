#include "zeroscope/wiman.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

namespace zeroscope::wiman {

namespace {

MaxTerm maximal_term_logs(std::span<const double> logs, double t) {
  double best = -std::numeric_limits<double>::infinity();
  int nu = -1;
  for (size_t k = 0; k < logs.size(); ++k) {
    if (std::isinf(logs[k])) continue;  // zero coefficient
    double term = logs[k] + static_cast<double>(k) * t;
    if (term >= best) {  // ties resolved upward: largest k attaining the max
      best = term;
      nu = static_cast<int>(k);
    }
  }
  if (nu < 0) throw std::invalid_argument("maximal_term: no nonzero coefficient");
  return {best, nu};
}

double valiron_upper_logs(std::span<const double> logs, double t, double t1) {
  if (!(t < t1)) throw std::invalid_argument("valiron_upper: requires t < t1");
  MaxTerm at_t = maximal_term_logs(logs, t);
  MaxTerm at_t1 = maximal_term_logs(logs, t1);
  // r1/(r1 - r) = 1/(1 - e^{t - t1})
  double ratio = 1.0 / (-std::expm1(t - t1));
  return at_t1.log_m + std::log(static_cast<double>(at_t.nu) + ratio);
}

}  // namespace

MaxTerm maximal_term(const series::CoeffSeq& f, double t) {
  return maximal_term_logs(series::log_magnitudes(f), t);
}

CentralIndexCheck central_index_bound(const series::CoeffSeq& f, double t, double t1) {
  if (!(t < t1)) throw std::invalid_argument("central_index_bound: requires t < t1");
  std::vector<double> logs = series::log_magnitudes(f);
  MaxTerm at_t = maximal_term_logs(logs, t);
  MaxTerm at_t1 = maximal_term_logs(logs, t1);
  CentralIndexCheck c;
  c.lhs = static_cast<double>(at_t.nu) * (t1 - t);
  c.rhs = at_t1.log_m - at_t.log_m;
  c.holds = c.lhs <= c.rhs + 1e-12 * std::max(1.0, std::fabs(c.rhs));
  return c;
}

double valiron_upper(const series::CoeffSeq& f, double t, double t1) {
  return valiron_upper_logs(series::log_magnitudes(f), t, t1);
}

double Profile::max_gap() const {
  double g = 0.0;
  for (size_t i = 0; i < t_grid.size(); ++i) g = std::max(g, upper[i] - lower[i]);
  return g;
}

Profile phi_profile(const series::CoeffSeq& f, std::span<const double> t_grid) {
  series::validate(f);
  if (t_grid.empty()) throw std::invalid_argument("phi_profile: empty grid");
  for (size_t i = 0; i + 1 < t_grid.size(); ++i)
    if (!(t_grid[i] < t_grid[i + 1]))
      throw std::invalid_argument("phi_profile: grid must be increasing");

  std::vector<double> logs = series::log_magnitudes(f);
  int n_nz = 0;
  for (double L : logs)
    if (!std::isinf(L)) ++n_nz;
  double log_count = std::log(static_cast<double>(n_nz));

  Profile p;
  p.V = f.V;
  p.t_grid.assign(t_grid.begin(), t_grid.end());
  p.lower.resize(t_grid.size());
  p.upper.resize(t_grid.size());
  double last_dt = t_grid.size() >= 2 ? t_grid[t_grid.size() - 1] - t_grid[t_grid.size() - 2] : 1.0;
  for (size_t i = 0; i < t_grid.size(); ++i) {
    double t = t_grid[i];
    double t1 = i + 1 < t_grid.size() ? t_grid[i + 1] : t + last_dt;
    MaxTerm mt = maximal_term_logs(logs, t);
    double u_valiron = valiron_upper_logs(logs, t, t1);
    double u_count = mt.log_m + log_count;
    p.lower[i] = mt.log_m / f.V;
    p.upper[i] = std::min(u_valiron, u_count) / f.V;
  }
  return p;
}

namespace {

struct Fit {
  double slope = 0.0;
  double intercept = 0.0;
};

// Least-squares affine fit over grid points [from, to] inclusive.
Fit fit_affine(const Profile& p, size_t from, size_t to, const std::vector<double>& mid) {
  double n = static_cast<double>(to - from + 1);
  double sx = 0, sy = 0, sxx = 0, sxy = 0;
  for (size_t i = from; i <= to; ++i) {
    sx += p.t_grid[i];
    sy += mid[i];
    sxx += p.t_grid[i] * p.t_grid[i];
    sxy += p.t_grid[i] * mid[i];
  }
  double den = n * sxx - sx * sx;
  Fit f;
  if (den == 0.0) {
    f.slope = 0.0;
    f.intercept = sy / n;
  } else {
    f.slope = (n * sxy - sx * sy) / den;
    f.intercept = (sy - f.slope * sx) / n;
  }
  return f;
}

}  // namespace

Segmentation detect_piecewise_harmonic(const Profile& p, double tol, const DetectOptions& opts) {
  Segmentation seg;
  if (p.t_grid.size() < 3) {
    seg.note = "profile not resolved: too few grid points";
    return seg;
  }
  if (p.max_gap() > tol) {
    seg.note = "profile not resolved: sandwich gap exceeds tolerance";
    return seg;
  }

  std::vector<double> mid(p.t_grid.size());
  for (size_t i = 0; i < mid.size(); ++i) mid[i] = 0.5 * (p.lower[i] + p.upper[i]);

  size_t n_int = p.t_grid.size() - 1;
  std::vector<double> g(n_int);
  for (size_t i = 0; i < n_int; ++i)
    g[i] = (mid[i + 1] - mid[i]) / (p.t_grid[i + 1] - p.t_grid[i]);

  // Greedy runs of intervals whose slopes agree with the run's first slope.
  struct Run {
    size_t first, last;  // interval indices, inclusive
  };
  std::vector<Run> runs;
  size_t start = 0;
  for (size_t i = 1; i <= n_int; ++i) {
    if (i == n_int || std::fabs(g[i] - g[start]) > tol) {
      runs.push_back({start, i - 1});
      start = i;
    }
  }

  // Runs of a single interval are transition filler between pieces.
  struct Piece {
    size_t from, to;  // grid point indices, inclusive
    Fit fit;
  };
  std::vector<Piece> pieces;
  for (const Run& r : runs) {
    if (r.last == r.first) continue;
    Piece pc{r.first, r.last + 1, {}};
    pc.fit = fit_affine(p, pc.from, pc.to, mid);
    pieces.push_back(pc);
  }
  if (pieces.empty()) {
    seg.note = "profile not resolved: no affine piece of at least two intervals";
    return seg;
  }

  // Merge adjacent pieces whose fitted slopes agree within tol.
  std::vector<Piece> merged;
  for (const Piece& pc : pieces) {
    if (!merged.empty() && std::fabs(pc.fit.slope - merged.back().fit.slope) <= tol) {
      merged.back().to = pc.to;
      merged.back().fit = fit_affine(p, merged.back().from, merged.back().to, mid);
    } else {
      merged.push_back(pc);
    }
  }

  for (size_t i = 0; i + 1 < merged.size(); ++i) {
    if (merged[i + 1].fit.slope < merged[i].fit.slope - tol)
      throw std::logic_error("detect_piecewise_harmonic: decreasing slopes violate convexity");
  }

  seg.detected = true;
  for (const Piece& pc : merged) {
    seg.pieces.push_back({p.t_grid[pc.from], p.t_grid[pc.to], pc.fit.slope, pc.fit.intercept});
  }
  for (size_t i = 0; i + 1 < merged.size(); ++i) {
    const Fit& a = merged[i].fit;
    const Fit& b = merged[i + 1].fit;
    double t_star = (a.intercept - b.intercept) / (b.slope - a.slope);
    seg.circles.push_back({std::exp(t_star), b.slope - a.slope});
  }

  if (opts.lowest_index_over_v <= tol) {
    seg.const_near_origin = std::fabs(seg.pieces.front().slope) <= tol;
  } else {
    seg.const_near_origin = false;  // hypothesis unmet: B(r) is not constant near 0
  }
  if (opts.v_is_degree) {
    seg.slope_range_ok = seg.pieces.front().slope >= -tol &&
                         std::fabs(seg.pieces.back().slope - 1.0) <= tol;
  }
  return seg;
}

}  // namespace zeroscope::wiman
