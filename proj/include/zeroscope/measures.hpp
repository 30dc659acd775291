#pragma once

// Empirical measures built from root sets and the metrics used to compare
// them: exact star discrepancy over circular arcs, radial order statistics,
// and exact Wasserstein-1 via min-cost flow.

#include <complex>
#include <vector>

#include "zeroscope/roots.hpp"

namespace zeroscope::measures {

struct Atom {
  std::complex<double> z;
  double w = 0.0;  // > 0
};

struct EmpiricalMeasure {
  std::vector<Atom> atoms;
  double total_mass() const;
};

// Atoms closer than `radius` are merged with summed weights. All metric
// computations run on the merged measure; merging is what stabilizes
// double-root clusters.
EmpiricalMeasure merged(const EmpiricalMeasure& m, double radius = 1e-9);

// One atom of weight 1/degree per root, origin roots included with their
// deflated multiplicity. Throws on an unconverged RootSet and on roots whose
// modulus is not representable in double precision.
EmpiricalMeasure empirical(const roots::RootSet& r);

// sup over circular arcs about `center` of |mass(arc) - arclength/(2 pi)|.
// Computed exactly from the sorted atom angles: with cumulative weights W_k
// and normalized angles l_k the supremum is max_k(W_k - l_k) - min_k(W_{k-1} - l_k),
// the sup over arcs whose endpoints approach atom angles from either side.
// Throws if an atom sits at the center.
double angular_discrepancy(const EmpiricalMeasure& m, std::complex<double> center);

struct RadialStats {
  std::vector<double> radii;    // sorted ascending
  std::vector<double> weights;  // matching weights
  double total = 0.0;

  // Lower-quantile convention: smallest radius whose cumulative weight
  // reaches q * total.
  double quantile(double q) const;
  double annulus_mass(double r1, double r2) const;  // closed annulus
};

RadialStats radial_stats(const EmpiricalMeasure& m, std::complex<double> center);

// Exact optimal-transport cost with Euclidean ground distance, solved as a
// min-cost flow on the complete bipartite graph by successive shortest
// augmenting paths with potentials. Requires equal total masses (relative
// tolerance 1e-12) and atom-count product <= 1e6.
double wasserstein1(const EmpiricalMeasure& a, const EmpiricalMeasure& b);

}  // namespace zeroscope::measures
