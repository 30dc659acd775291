#pragma once

// Maximal term, central index, and certified two-sided profiles of
// (1/V) log M(e^t, f), plus the piecewise-harmonic detector that turns a
// resolved profile into a predicted radial zero distribution.

#include <span>
#include <string>
#include <vector>

#include "zeroscope/series.hpp"

namespace zeroscope::wiman {

struct MaxTerm {
  double log_m = 0.0;  // log m(e^t) = max_k (log|a_k| + k t)
  int nu = 0;          // central index: the largest k attaining the max
};

MaxTerm maximal_term(const series::CoeffSeq& f, double t);

// Self-check of nu(r) log(r1/r) <= log m(r1) - log m(r); `holds` must always
// come back true, it is exposed for auditing.
struct CentralIndexCheck {
  double lhs = 0.0;  // nu(e^t) * (t1 - t)
  double rhs = 0.0;  // log m(e^{t1}) - log m(e^t)
  bool holds = false;
};

CentralIndexCheck central_index_bound(const series::CoeffSeq& f, double t, double t1);

// Upper bound for log M(e^t, f): log m(e^{t1}) + log(nu(e^t) + 1/(1 - e^{t-t1})),
// valid for any t < t1.
double valiron_upper(const series::CoeffSeq& f, double t, double t1);

struct Profile {
  std::vector<double> t_grid;
  std::vector<double> lower;  // (1/V) log m(e^t), a lower bound for (1/V) log M
  std::vector<double> upper;  // certified upper bound for (1/V) log M
  double V = 1.0;

  double max_gap() const;
};

// lower[i] = log m(e^{t_i}) / V. upper[i] is the smaller of the two rigorous
// upper bounds available for a finite coefficient sequence: the Valiron bound
// paired with the right grid neighbour (the last point reuses the final
// spacing), and the term-count bound log(m(e^{t_i}) * N_nz) with N_nz the
// number of nonzero coefficients. Either alone dominates log M; the count
// bound is what makes polynomial profiles tight to O(log n / n).
Profile phi_profile(const series::CoeffSeq& f, std::span<const double> t_grid);

struct AffinePiece {
  double t_from = 0.0;
  double t_to = 0.0;
  double slope = 0.0;
  double intercept = 0.0;
};

struct JumpCircle {
  double radius = 0.0;  // e^{t*} at the crossing of adjacent affine pieces
  double mass = 0.0;    // slope increment across the jump
};

struct Segmentation {
  bool detected = false;
  std::string note;
  std::vector<AffinePiece> pieces;
  std::vector<JumpCircle> circles;
  bool const_near_origin = false;   // first detected slope ~ 0 (hypothesis B = const near 0)
  bool slope_range_ok = false;      // for V = degree families: slopes start >= 0 and end at 1
};

struct DetectOptions {
  // lowest nonzero coefficient index divided by V; used for the
  // const-near-origin hypothesis check.
  double lowest_index_over_v = 0.0;
  // true when the family is a polynomial normalized with V = degree.
  bool v_is_degree = false;
};

// Greedy segmentation of the midpoint of [lower, upper] into maximal affine
// pieces: grid intervals are grouped while their slopes stay within tol of
// the group's first slope, groups shorter than two intervals are treated as
// transition filler, and adjacent groups whose fitted slopes agree within tol
// are merged. Fails with "profile not resolved" when max(upper - lower) > tol.
Segmentation detect_piecewise_harmonic(const Profile& p, double tol, const DetectOptions& opts = {});

}  // namespace zeroscope::wiman
