#include "zeroscope/roots.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <limits>
#include <numbers>
#include <stdexcept>

#include "zeroscope/convex.hpp"

namespace zeroscope::roots {

using xnum::ExtComplex;
using xnum::ExtScalar;

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

}  // namespace

series::CoeffSeq differentiate(const series::CoeffSeq& f) {
  series::validate(f);
  int deg = f.degree();
  if (deg < 1) throw std::invalid_argument("differentiate: derivative is the zero polynomial");
  series::CoeffSeq g;
  g.label = f.label + "-derivative";
  g.n = f.n;
  g.V = f.V;
  g.truncated = f.truncated;
  g.coeffs.resize(deg);
  for (int k = 0; k < deg; ++k) {
    if (f.coeffs[k + 1].is_zero()) continue;
    g.coeffs[k] = f.coeffs[k + 1] * ExtScalar::from_double(static_cast<double>(k + 1));
  }
  return g;
}

std::vector<NewtonEdge> newton_polygon_radii(const series::CoeffSeq& f) {
  series::validate(f);
  std::vector<double> logs = series::log_magnitudes(f);
  convex::LogPointSet pts;
  for (size_t k = 0; k < logs.size(); ++k) {
    if (std::isinf(logs[k])) continue;
    pts.x.push_back(static_cast<double>(k));
    pts.y.push_back(-logs[k]);
  }
  if (pts.x.size() < 2) return {};  // monomial: no roots off the origin
  convex::PiecewiseConvex env = convex::lower_envelope(pts);
  std::vector<NewtonEdge> edges(env.slopes.size());
  for (size_t i = 0; i < env.slopes.size(); ++i) {
    edges[i].radius_log = env.slopes[i];
    edges[i].count = static_cast<int>(std::llround(env.xs[i + 1] - env.xs[i]));
  }
  return edges;
}

std::complex<double> Root::point() const {
  return w * std::exp(scale_log);
}

namespace {

struct WorkRoot {
  std::complex<double> w;
  double sigma = 0.0;       // log scale
  double best_step = kInf;  // smallest relative step seen
  int tiny_count = 0;
  int stall_count = 0;
  bool frozen = false;
};

// max_k |b_k z^k| in extended arithmetic: the exponent subtraction against
// the evaluated |f(z)| is then exact, so residuals stay meaningful even when
// log|z| is ~1e14 and the term logs dwarf double resolution.
ExtScalar max_term_extended(const std::vector<ExtComplex>& b, const ExtComplex& z) {
  ExtScalar za = z.abs();
  ExtScalar pw = ExtScalar::from_double(1.0);
  ExtScalar best;
  for (size_t k = 0; k < b.size(); ++k) {
    if (k > 0) pw = pw * za;
    if (b[k].is_zero()) continue;
    ExtScalar term = b[k].abs() * pw;
    if (best.is_zero() || xnum::abs_less(best, term)) best = term;
  }
  return best;
}

}  // namespace

RootSet aberth_roots(const series::CoeffSeq& f, const AberthOptions& opts) {
  series::validate(f);
  const int deg = f.degree();
  const int low = f.lowest_nonzero();
  if (deg == 0) throw std::invalid_argument("aberth_roots: constant polynomial has no roots");

  RootSet rs;
  rs.degree = deg;
  rs.zeros_at_origin = low;
  const int d = deg - low;
  if (d == 0) {  // monomial a_low z^low: only the deflated origin roots
    rs.converged = true;
    return rs;
  }

  std::vector<ExtComplex> b(f.coeffs.begin() + low, f.coeffs.begin() + deg + 1);
  std::vector<double> lb(d + 1, kInf);
  for (int j = 0; j <= d; ++j)
    if (!b[j].is_zero()) lb[j] = b[j].log_abs();

  // Initial points: per Newton edge, its root count spread on the edge circle.
  std::vector<WorkRoot> work;
  work.reserve(d);
  {
    convex::LogPointSet pts;
    for (int j = 0; j <= d; ++j) {
      if (std::isinf(lb[j])) continue;
      pts.x.push_back(static_cast<double>(j));
      pts.y.push_back(-lb[j]);
    }
    convex::PiecewiseConvex env = convex::lower_envelope(pts);
    for (size_t i = 0; i < env.slopes.size(); ++i) {
      int count = static_cast<int>(std::llround(env.xs[i + 1] - env.xs[i]));
      for (int q = 0; q < count; ++q) {
        WorkRoot r;
        r.sigma = env.slopes[i];
        // base offset 0.5 rad plus a per-edge stagger: adjacent edges with
        // nearly equal slopes must not start with coincident points
        double theta = 0.5 + 0.83 * static_cast<double>(i) +
                       2.0 * std::numbers::pi * static_cast<double>(q) / count;
        r.w = std::polar(1.0, theta);
        work.push_back(r);
      }
    }
  }
  if (static_cast<int>(work.size()) != d)
    throw std::logic_error("aberth_roots: Newton edge counts do not sum to the deflated degree");

  std::vector<std::complex<double>> new_w(d);
  std::vector<double> new_sigma(d), step_rel(d, 0.0);

  for (int iter = 0; iter < opts.max_iter; ++iter) {
    bool all_frozen = true;
    for (int i = 0; i < d; ++i) {
      WorkRoot& ri = work[i];
      if (ri.frozen) {
        new_w[i] = ri.w;
        new_sigma[i] = ri.sigma;
        continue;
      }
      all_frozen = false;

      // The scale factor E is applied and removed through exact extended
      // arithmetic: z = w * E and step_w = (f/f')(z) / E. Going through
      // doubles for log(ratio) - sigma instead would lose everything below
      // the ulp of sigma, which is ~8 e-folds at sigma ~ 5e16.
      ExtScalar scale_e = ExtScalar::from_ln(ri.sigma);
      ExtComplex z = ExtComplex(ri.w) * scale_e;
      xnum::HornerPair hp = xnum::horner_with_derivative(b, z);
      if (hp.value.is_zero()) {  // sits exactly on a root
        new_w[i] = ri.w;
        new_sigma[i] = ri.sigma;
        step_rel[i] = 0.0;
        continue;
      }
      if (hp.derivative.is_zero()) {
        // at a critical point: deterministic nudge
        new_w[i] = ri.w * 1.0009765625;
        new_sigma[i] = ri.sigma;
        step_rel[i] = 1.0;
        continue;
      }

      ExtComplex ratio = hp.value / hp.derivative;  // Newton correction in z units
      ExtComplex wstep = ratio / ExtComplex(scale_e);
      double cap = 0.5 * (1.0 + std::abs(ri.w));
      std::complex<double> nstep = wstep.to_std();
      if (!std::isfinite(nstep.real()) || !std::isfinite(nstep.imag()) ||
          std::abs(nstep) > cap)
        nstep = std::polar(cap, wstep.arg());

      // Aberth repulsion sum in the w frame: e^{sigma_i} * sum 1/(z_i - z_j).
      std::complex<double> asum(0.0, 0.0);
      for (int j = 0; j < d; ++j) {
        if (j == i) continue;
        double delta = work[j].sigma - ri.sigma;
        if (delta > 700.0) continue;  // |z_j| >> |z_i|: term vanishes
        std::complex<double> den =
            delta < -700.0 ? ri.w : ri.w - std::exp(delta) * work[j].w;
        if (!std::isfinite(den.real()) || !std::isfinite(den.imag())) continue;
        if (den == std::complex<double>(0.0, 0.0)) continue;  // coincident iterate
        asum += 1.0 / den;
      }

      std::complex<double> denom = 1.0 - nstep * asum;
      std::complex<double> step = denom == std::complex<double>(0.0, 0.0) ? nstep : nstep / denom;
      double sa = std::abs(step);
      if (sa > cap) step *= cap / sa;

      std::complex<double> nw = ri.w - step;
      if (nw == std::complex<double>(0.0, 0.0)) nw = std::complex<double>(1e-3, 0.0);
      double na = std::abs(nw);
      // Rebalance w into sigma only when w has drifted far: sigma has double
      // resolution, so the rounding remainder of the fold must go back into
      // w or the iterate teleports (for sigma ~ 1e17 the ulp is ~30 e-folds).
      if (na < 1e-60 || na > 1e60) {
        double target = ri.sigma + std::log(na);
        double delta = (ri.sigma - target) + std::log(na);
        if (std::fabs(delta) < 600.0) {
          new_sigma[i] = target;
          new_w[i] = nw / na * std::exp(delta);
        } else {  // sigma ulp beyond double exp range; leave w as carrier
          new_sigma[i] = ri.sigma;
          new_w[i] = nw;
        }
      } else {
        new_sigma[i] = ri.sigma;
        new_w[i] = nw;
      }
      step_rel[i] = std::abs(step) / std::max(1.0, std::abs(ri.w));
    }
    if (all_frozen) break;

    for (int i = 0; i < d; ++i) {
      WorkRoot& ri = work[i];
      if (ri.frozen) continue;
      ri.w = new_w[i];
      ri.sigma = new_sigma[i];
      double s = step_rel[i];
      if (s <= 1e-13) {
        ri.tiny_count += 1;
      } else {
        ri.tiny_count = 0;
      }
      // A root whose step has plateaued well above the tiny threshold is at
      // its evaluation-noise floor (multiple-root clusters); give such roots
      // a long leash rather than a short one, transients can hover too.
      if (s > 1e-13 && s >= 0.25 * ri.best_step) {
        ri.stall_count += 1;
      } else {
        ri.stall_count = 0;
      }
      ri.best_step = std::min(ri.best_step, s);
      if (ri.tiny_count >= 2 || (ri.stall_count >= 40 && ri.best_step < 1e-6)) {
        // Freezing requires the certificate: a stalled step can also mean a
        // root in transit after being repelled from an occupied basin.
        ExtComplex z = ExtComplex(ri.w) * ExtScalar::from_ln(ri.sigma);
        ExtComplex val = xnum::horner(b, z);
        ExtScalar scale = max_term_extended(b, z);
        double resid = val.is_zero() ? -kInf : (val.abs() / scale).log_abs();
        if (resid <= opts.residual_tol_log) {
          ri.frozen = true;
        } else {
          ri.tiny_count = 0;
          ri.stall_count = 0;
          ri.best_step = kInf;
        }
      }
    }
  }

  // Pull w back toward O(1) for reporting where sigma can absorb it; the
  // rounding remainder stays in w so the located point is unchanged.
  for (int i = 0; i < d; ++i) {
    double na = std::abs(work[i].w);
    if (na == 0.0 || std::fabs(std::log(na)) < 1.0) continue;
    double l = std::log(na);
    double target = work[i].sigma + l;
    double delta = (work[i].sigma - target) + l;
    if (std::fabs(delta) < 600.0) {
      work[i].sigma = target;
      work[i].w = work[i].w / na * std::exp(delta);
    }
  }

  // Residual certificates.
  rs.roots.resize(d);
  bool all_ok = true;
  for (int i = 0; i < d; ++i) {
    Root r;
    r.w = work[i].w;
    r.scale_log = work[i].sigma;
    r.modulus_log = work[i].sigma + std::log(std::abs(work[i].w));
    ExtComplex z = ExtComplex::from_scaled(r.w, r.scale_log);
    ExtComplex val = xnum::horner(b, z);
    ExtScalar scale = max_term_extended(b, z);
    r.residual_log = val.is_zero() ? -kInf : (val.abs() / scale).log_abs();
    r.converged = r.residual_log <= opts.residual_tol_log;
    all_ok = all_ok && r.converged;
    rs.roots[i] = r;
  }
  rs.converged = all_ok;

  std::sort(rs.roots.begin(), rs.roots.end(), [](const Root& a, const Root& b2) {
    if (a.modulus_log != b2.modulus_log) return a.modulus_log < b2.modulus_log;
    return std::arg(a.w) < std::arg(b2.w);
  });

  // Multiplicity hints by cluster merging at relative radius 1e-6.
  {
    std::vector<int> parent(d);
    for (int i = 0; i < d; ++i) parent[i] = i;
    std::function<int(int)> find = [&](int x) {
      while (parent[x] != x) x = parent[x] = parent[parent[x]];
      return x;
    };
    for (int i = 0; i < d; ++i) {
      for (int j = i + 1; j < d; ++j) {
        const Root& a = rs.roots[i];
        const Root& c = rs.roots[j];
        if (std::fabs(a.scale_log - c.scale_log) > 50.0) continue;
        double ref = std::max(a.scale_log, c.scale_log);
        std::complex<double> za = a.w * std::exp(a.scale_log - ref);
        std::complex<double> zc = c.w * std::exp(c.scale_log - ref);
        double thr = 1e-6 * std::exp(std::max(a.modulus_log, c.modulus_log) - ref);
        if (std::abs(za - zc) <= thr) parent[find(i)] = find(j);
      }
    }
    std::vector<int> size(d, 0);
    for (int i = 0; i < d; ++i) size[find(i)] += 1;
    for (int i = 0; i < d; ++i) rs.roots[i].multiplicity_hint = size[find(i)];
  }

  return rs;
}

}  // namespace zeroscope::roots
