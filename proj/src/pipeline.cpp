#include "zeroscope/pipeline.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

namespace zeroscope::pipeline {

namespace {

constexpr double kNaN = std::numeric_limits<double>::quiet_NaN();

}  // namespace

Theorem1Report theorem1_check(const series::CoeffSeq& f, std::span<const double> t_grid) {
  series::validate(f);
  Theorem1Report rep;
  rep.psi = convex::lower_envelope(convex::log_points(f));
  rep.legendre_psi = convex::legendre(rep.psi);
  rep.profile = wiman::phi_profile(f, t_grid);
  double res = 0.0;
  for (size_t i = 0; i < rep.profile.t_grid.size(); ++i) {
    double lhs = rep.legendre_psi.eval(rep.profile.t_grid[i]);
    res = std::max(res, std::fabs(lhs - rep.profile.lower[i]));
  }
  rep.duality_residual = res;
  rep.sandwich_gap = rep.profile.max_gap();
  return rep;
}

bool jentzsch_condition(const series::CoeffSeq& f, double eps) {
  series::validate(f);
  if (!(eps > 0.0 && eps < 0.5))
    throw std::invalid_argument("jentzsch_condition: requires 0 < eps < 1/2");
  int n = f.degree();
  if (std::fabs(f.V - static_cast<double>(n)) > 1e-9 * std::max(1.0, f.V))
    throw std::invalid_argument("jentzsch_condition: requires polynomial normalization V = degree");

  std::vector<double> logs = series::log_magnitudes(f);
  double full_max = -std::numeric_limits<double>::infinity();
  double window_max = -std::numeric_limits<double>::infinity();
  double lo_cut = eps * n;         // k <= eps n
  double hi_cut = (1.0 - eps) * n; // k >= (1-eps) n
  for (int k = 0; k <= n; ++k) {
    if (std::isinf(logs[k])) continue;
    full_max = std::max(full_max, logs[k]);
    if (static_cast<double>(k) <= lo_cut || static_cast<double>(k) >= hi_cut)
      window_max = std::max(window_max, logs[k]);
  }
  if (std::isinf(window_max)) return false;  // empty boundary window fails by convention
  return full_max - window_max <= eps * static_cast<double>(n);
}

UniformityReport uniformity_report(const series::CoeffSeq& f, const UniformityOptions& opts) {
  series::validate(f);
  UniformityReport rep;
  rep.annulus_delta = opts.annulus_delta;

  std::vector<double> grid = opts.t_grid;
  if (grid.empty()) {
    std::vector<roots::NewtonEdge> edges = roots::newton_polygon_radii(f);
    double lo = 0.0, hi = 0.0;
    if (!edges.empty()) {
      lo = edges.front().radius_log;
      hi = edges.back().radius_log;
    }
    if (opts.radius_guess) {
      lo = std::log(*opts.radius_guess);
      hi = lo;
    }
    // For truncations of entire functions the far Newton slopes describe the
    // truncation tail, not the function; keep the default window on the head.
    if (f.truncated && hi > lo + 8.0) hi = lo + 8.0;
    lo -= 1.0;
    hi += 1.0;
    int npts = 301;
    grid.resize(npts);
    for (int i = 0; i < npts; ++i)
      grid[i] = lo + (hi - lo) * static_cast<double>(i) / (npts - 1);
  }
  rep.profile = wiman::phi_profile(f, grid);

  double tol = opts.detector_tol ? *opts.detector_tol
                                 : std::max(1.5 * rep.profile.max_gap(), 0.02);
  rep.detector_tol = tol;
  wiman::DetectOptions dopts;
  dopts.lowest_index_over_v = static_cast<double>(f.lowest_nonzero()) / f.V;
  dopts.v_is_degree = std::fabs(f.V - static_cast<double>(f.degree())) <= 1e-9 * std::max(1.0, f.V);
  rep.segmentation = wiman::detect_piecewise_harmonic(rep.profile, tol, dopts);

  rep.root_set = roots::aberth_roots(f, opts.aberth);

  if (!rep.root_set.roots.empty()) {
    // lower-quantile convention on the sorted modulus logs; origin zeros
    // count as -inf and shift the quantile indices
    size_t total = rep.root_set.roots.size() + rep.root_set.zeros_at_origin;
    auto log_quantile = [&](double q) {
      long idx = static_cast<long>(std::ceil(q * total)) - 1;
      idx -= rep.root_set.zeros_at_origin;
      if (idx < 0) return -std::numeric_limits<double>::infinity();
      return rep.root_set.roots[static_cast<size_t>(idx)].modulus_log;
    };
    rep.q25_modulus_log = log_quantile(0.25);
    rep.median_modulus_log = log_quantile(0.5);
    rep.q75_modulus_log = log_quantile(0.75);
  }

  std::vector<std::pair<double, double>> predicted;  // (radius, mass)
  if (opts.radius_guess) {
    predicted.emplace_back(*opts.radius_guess, kNaN);
  } else if (rep.segmentation.detected) {
    for (const wiman::JumpCircle& c : rep.segmentation.circles)
      predicted.emplace_back(c.radius, c.mass);
  }

  int deg = rep.root_set.degree;
  for (const auto& [radius, mass] : predicted) {
    CircleCheck cc;
    cc.radius = radius;
    cc.predicted_mass = mass;
    double lo_log = std::log(radius * (1.0 - rep.annulus_delta));
    double hi_log = std::log(radius * (1.0 + rep.annulus_delta));
    measures::EmpiricalMeasure in_annulus;
    for (const roots::Root& r : rep.root_set.roots) {
      if (r.modulus_log < lo_log || r.modulus_log > hi_log) continue;
      cc.atom_count += 1;
      in_annulus.atoms.push_back({r.point(), 1.0 / deg});
    }
    cc.annulus_mass = static_cast<double>(cc.atom_count) / deg;
    cc.discrepancy = in_annulus.atoms.empty()
                         ? kNaN
                         : measures::angular_discrepancy(in_annulus, {0.0, 0.0});
    rep.circles.push_back(cc);
  }
  return rep;
}

DerivativeReport derivative_comparison(const series::CoeffSeq& f, const DerivativeOptions& opts) {
  series::validate(f);
  if (f.degree() < 2)
    throw std::invalid_argument("derivative_comparison: degree must be >= 2");

  DerivativeReport rep;
  rep.zeros = roots::aberth_roots(f, opts.aberth);
  series::CoeffSeq df = roots::differentiate(f);
  rep.critical_points = roots::aberth_roots(df, opts.aberth);

  measures::EmpiricalMeasure mu = measures::empirical(rep.zeros);
  measures::EmpiricalMeasure mu_crit = measures::empirical(rep.critical_points);
  rep.w1_zero_vs_crit = measures::wasserstein1(mu, mu_crit);

  // Sample grid for the pointwise log-derivative gap.
  std::vector<std::complex<double>> grid = opts.sample_grid;
  std::vector<std::complex<double>> zero_pts;
  for (const roots::Root& r : rep.zeros.roots) zero_pts.push_back(r.point());
  if (rep.zeros.zeros_at_origin > 0) zero_pts.emplace_back(0.0, 0.0);
  if (grid.empty()) {
    double ext = 0.0;
    for (const auto& z : zero_pts) ext = std::max({ext, std::fabs(z.real()), std::fabs(z.imag())});
    ext = 1.2 * std::max(ext, 1e-6);
    const int nside = 41;
    for (int ix = 0; ix < nside; ++ix)
      for (int iy = 0; iy < nside; ++iy)
        grid.emplace_back(-ext + 2 * ext * ix / (nside - 1.0), -ext + 2 * ext * iy / (nside - 1.0));
  }

  double excl;
  if (opts.exclusion_radius) {
    excl = *opts.exclusion_radius;
  } else {
    measures::RadialStats st = measures::radial_stats(mu, {0.0, 0.0});
    excl = 0.05 * st.quantile(0.5);
    if (!(excl > 0.0)) excl = 0.05;
  }

  std::vector<xnum::ExtComplex> fc(f.coeffs.begin(), f.coeffs.begin() + f.degree() + 1);
  std::vector<xnum::ExtComplex> dc(df.coeffs.begin(), df.coeffs.begin() + df.degree() + 1);
  double gap = -std::numeric_limits<double>::infinity();
  int used = 0;
  for (const auto& z : grid) {
    bool near = false;
    for (const auto& zp : zero_pts)
      if (std::abs(z - zp) < excl) {
        near = true;
        break;
      }
    if (near) continue;
    xnum::ExtComplex ez(z);
    xnum::ExtComplex fv = xnum::horner(fc, ez);
    xnum::ExtComplex dv = xnum::horner(dc, ez);
    if (fv.is_zero() || dv.is_zero()) continue;
    gap = std::max(gap, (dv.log_abs() - fv.log_abs()) / f.V);
    ++used;
  }
  rep.pointwise_gap = gap;
  rep.grid_points_used = used;
  return rep;
}

}  // namespace zeroscope::pipeline
