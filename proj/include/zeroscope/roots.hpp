#pragma once

// Zero finding for coefficient sequences: Newton-polygon modulus estimates
// and a simultaneous Aberth-Ehrlich iteration run in per-cluster scaled
// coordinates, with extended-exponent Horner evaluation so coefficient
// log-ranges of +-1e5 and root moduli far outside double range are fine.

#include <complex>
#include <vector>

#include "zeroscope/series.hpp"

namespace zeroscope::roots {

// d/dz: coeffs[k] <- (k+1) coeffs[k+1]; V unchanged.
series::CoeffSeq differentiate(const series::CoeffSeq& f);

struct NewtonEdge {
  double radius_log = 0.0;  // envelope edge slope: log of the estimated modulus
  int count = 0;            // number of roots attached to this edge
};

// Envelope edges of (k, -log|a_k|); counts sum to degree minus the roots
// deflated at the origin. A monomial has no edges.
std::vector<NewtonEdge> newton_polygon_radii(const series::CoeffSeq& f);

struct AberthOptions {
  int max_iter = 200;
  double residual_tol_log = std::log(1e-10);
};

struct Root {
  // The located zero is w * e^{scale_log}; w stays O(1) so the point is
  // usable in double precision after undoing the cluster scale.
  std::complex<double> w;
  double scale_log = 0.0;
  double modulus_log = 0.0;   // scale_log + log|w|
  double residual_log = 0.0;  // log|f(z)| - log max_k |a_k z^k|; -inf when f(z) = 0
  int multiplicity_hint = 1;
  bool converged = false;

  // Materialized location; overflows to inf when |modulus_log| is beyond
  // double range.
  std::complex<double> point() const;
};

struct RootSet {
  std::vector<Root> roots;   // sorted by (modulus_log, arg)
  int zeros_at_origin = 0;   // multiplicity deflated from trailing zero coefficients
  int degree = 0;            // degree of the input polynomial
  bool converged = false;    // every root passed the residual certificate

  int degree_accounted() const { return static_cast<int>(roots.size()) + zeros_at_origin; }
};

// Finds all zeros. Initial points sit on the Newton-polygon circles with
// equispaced angles offset by 0.5 rad; the Jacobi-style sweep is evaluated
// in each root's scaled frame. Iteration runs to step stagnation (which
// resolves multiple-root clusters well past the certificate level) and the
// residual bound then certifies each root; a RootSet that fails any
// certificate comes back with converged = false and must be checked by the
// caller. Throws on a constant polynomial.
RootSet aberth_roots(const series::CoeffSeq& f, const AberthOptions& opts = {});

}  // namespace zeroscope::roots
