#pragma once

// Theorem-level checks tying the modules together: coefficient/maximum-
// modulus duality, the boundary-window coefficient criterion for circle
// equidistribution, predicted-versus-actual radial zero distribution, and
// zero/critical-point measure comparison.

#include <complex>
#include <optional>
#include <vector>

#include "zeroscope/convex.hpp"
#include "zeroscope/measures.hpp"
#include "zeroscope/roots.hpp"
#include "zeroscope/wiman.hpp"

namespace zeroscope::pipeline {

struct Theorem1Report {
  convex::PiecewiseConvex psi;           // envelope of the log-coefficient points
  convex::PiecewiseConvex legendre_psi;  // its conjugate
  wiman::Profile profile;
  // max over the grid of |L(psi)(t) - (1/V) log m(e^t)|: a finite-n exact
  // identity, so this must sit at rounding level.
  double duality_residual = 0.0;
  double sandwich_gap = 0.0;  // max over the grid of upper - lower
};

Theorem1Report theorem1_check(const series::CoeffSeq& f, std::span<const double> t_grid);

// The boundary-window coefficient condition at a single (n, eps):
//   max_{k in [0,n]} log|a_k| - max_{k in [0,eps n] u [(1-eps)n, n]} log|a_k| <= eps n.
// Requires 0 < eps < 1/2 and V = degree. All-zero boundary windows fail by
// convention.
bool jentzsch_condition(const series::CoeffSeq& f, double eps);

struct CircleCheck {
  double radius = 0.0;
  double predicted_mass = 0.0;  // NaN when the circle came from radius_guess
  double annulus_mass = 0.0;    // measured mass in radius * (1 +- delta)
  double discrepancy = 0.0;     // angular discrepancy of atoms inside the annulus
  int atom_count = 0;
};

struct UniformityReport {
  wiman::Profile profile;
  wiman::Segmentation segmentation;
  roots::RootSet root_set;
  std::vector<CircleCheck> circles;
  double annulus_delta = 0.1;
  double detector_tol = 0.0;
  // radial quantiles of the zero moduli in log scale (finite even when the
  // far zeros overflow double range)
  double q25_modulus_log = 0.0;
  double median_modulus_log = 0.0;
  double q75_modulus_log = 0.0;
};

struct UniformityOptions {
  std::optional<double> radius_guess;   // overrides detected circles for the pairing
  std::vector<double> t_grid;           // empty: auto around the Newton slope range
  std::optional<double> detector_tol;   // default max(1.5 * gap, 0.02)
  double annulus_delta = 0.1;
  roots::AberthOptions aberth;
};

// Profile -> piecewise-harmonic detector -> root solve -> per-circle
// comparison of predicted and measured radial mass plus in-annulus angular
// discrepancy. Annulus statistics are taken on the root set directly, so
// families whose far roots overflow double range still report correctly.
UniformityReport uniformity_report(const series::CoeffSeq& f, const UniformityOptions& opts = {});

struct DerivativeReport {
  double w1_zero_vs_crit = 0.0;
  // max over admissible grid points of (log|f'| - log|f|)/V; descriptive,
  // not sign-asserted: near the exceptional sets small positive excursions
  // are expected at finite n.
  double pointwise_gap = 0.0;
  int grid_points_used = 0;
  roots::RootSet zeros;
  roots::RootSet critical_points;
};

struct DerivativeOptions {
  std::vector<std::complex<double>> sample_grid;  // empty: auto over the root bounding box
  std::optional<double> exclusion_radius;         // default 0.05 * median root modulus
  roots::AberthOptions aberth;
};

DerivativeReport derivative_comparison(const series::CoeffSeq& f, const DerivativeOptions& opts = {});

}  // namespace zeroscope::pipeline
