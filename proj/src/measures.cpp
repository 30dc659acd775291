#include "zeroscope/measures.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <limits>
#include <numbers>
#include <stdexcept>

namespace zeroscope::measures {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

}  // namespace

double EmpiricalMeasure::total_mass() const {
  double s = 0.0;
  for (const Atom& a : atoms) s += a.w;
  return s;
}

EmpiricalMeasure merged(const EmpiricalMeasure& m, double radius) {
  EmpiricalMeasure out;
  std::vector<bool> used(m.atoms.size(), false);
  for (size_t i = 0; i < m.atoms.size(); ++i) {
    if (used[i]) continue;
    Atom acc = m.atoms[i];
    for (size_t j = i + 1; j < m.atoms.size(); ++j) {
      if (used[j]) continue;
      if (std::abs(m.atoms[j].z - acc.z) <= radius) {
        acc.w += m.atoms[j].w;
        used[j] = true;
      }
    }
    out.atoms.push_back(acc);
  }
  return out;
}

EmpiricalMeasure empirical(const roots::RootSet& r) {
  if (!r.converged)
    throw std::invalid_argument("empirical: refusing to build a measure from an unconverged RootSet");
  int deg = r.degree;
  if (deg <= 0) throw std::invalid_argument("empirical: degree must be positive");
  EmpiricalMeasure m;
  double w = 1.0 / static_cast<double>(deg);
  if (r.zeros_at_origin > 0)
    m.atoms.push_back({std::complex<double>(0.0, 0.0), w * r.zeros_at_origin});
  for (const roots::Root& rt : r.roots) {
    if (rt.modulus_log > 700.0)
      throw std::domain_error("empirical: root modulus exceeds double range");
    m.atoms.push_back({rt.point(), w});
  }
  return merged(m);
}

double angular_discrepancy(const EmpiricalMeasure& m_in, std::complex<double> center) {
  EmpiricalMeasure m = merged(m_in);
  if (m.atoms.empty()) throw std::invalid_argument("angular_discrepancy: empty measure");
  double total = m.total_mass();

  struct AW {
    double theta, w;
  };
  std::vector<AW> a;
  a.reserve(m.atoms.size());
  for (const Atom& at : m.atoms) {
    std::complex<double> v = at.z - center;
    if (v == std::complex<double>(0.0, 0.0))
      throw std::invalid_argument("angular_discrepancy: atom at the center has no angle");
    a.push_back({std::atan2(v.imag(), v.real()), at.w / total});
  }
  std::stable_sort(a.begin(), a.end(), [](const AW& x, const AW& y) { return x.theta < y.theta; });

  double two_pi = 2.0 * std::numbers::pi;
  double w_cum = 0.0;
  double max_high = -kInf, min_low = kInf;
  for (const AW& x : a) {
    double ell = (x.theta - a.front().theta) / two_pi;
    min_low = std::min(min_low, w_cum - ell);  // arc boundary just before the atom
    w_cum += x.w;
    max_high = std::max(max_high, w_cum - ell);  // boundary just past the atom
  }
  return max_high - min_low;
}

double RadialStats::quantile(double q) const {
  if (radii.empty()) throw std::invalid_argument("RadialStats::quantile: empty");
  double target = q * total;
  double cum = 0.0;
  for (size_t i = 0; i < radii.size(); ++i) {
    cum += weights[i];
    if (cum >= target - 1e-15 * total) return radii[i];
  }
  return radii.back();
}

double RadialStats::annulus_mass(double r1, double r2) const {
  double s = 0.0;
  for (size_t i = 0; i < radii.size(); ++i)
    if (radii[i] >= r1 && radii[i] <= r2) s += weights[i];
  return s;
}

RadialStats radial_stats(const EmpiricalMeasure& m, std::complex<double> center) {
  RadialStats rs;
  std::vector<std::pair<double, double>> rw;
  rw.reserve(m.atoms.size());
  for (const Atom& a : m.atoms) rw.emplace_back(std::abs(a.z - center), a.w);
  std::stable_sort(rw.begin(), rw.end(),
                   [](const auto& x, const auto& y) { return x.first < y.first; });
  for (const auto& [r, w] : rw) {
    rs.radii.push_back(r);
    rs.weights.push_back(w);
    rs.total += w;
  }
  return rs;
}

namespace {

// Successive shortest augmenting paths with node potentials on the dense
// bipartite transportation graph. Weights are scaled to 2^48 integer units
// (the residue goes to the heaviest atom), so saturation tests are exact and
// the number of augmentations is bounded by the atom count.
class TransportSolver {
 public:
  TransportSolver(const std::vector<Atom>& s, const std::vector<Atom>& t)
      : n_(s.size()), m_(t.size()), supply_(n_), demand_(m_), flow_(n_ * m_, 0),
        used_supply_(n_, 0), used_demand_(m_, 0),
        dist_(n_ + m_ + 2), parent_(n_ + m_ + 2), visited_(n_ + m_ + 2),
        pot_(n_ + m_ + 2, 0.0), cost_(n_ * m_) {
    scale_units(s, supply_);
    scale_units(t, demand_);
    for (size_t i = 0; i < n_; ++i)
      for (size_t j = 0; j < m_; ++j) cost_[i * m_ + j] = std::abs(s[i].z - t[j].z);
  }

  double solve() {
    std::int64_t remaining = 0;
    for (std::int64_t u : supply_) remaining += u;
    while (remaining > 0) {
      std::int64_t pushed = augment();
      if (pushed <= 0) throw std::runtime_error("wasserstein1: flow did not saturate");
      remaining -= pushed;
    }
    double cost = 0.0;
    for (size_t i = 0; i < n_; ++i)
      for (size_t j = 0; j < m_; ++j)
        if (flow_[i * m_ + j] > 0)
          cost += static_cast<double>(flow_[i * m_ + j]) * cost_[i * m_ + j];
    return cost / static_cast<double>(kScale);
  }

 private:
  static constexpr std::int64_t kScale = INT64_C(1) << 48;

  static void scale_units(const std::vector<Atom>& atoms, std::vector<std::int64_t>& units) {
    double total = 0.0;
    for (const Atom& a : atoms) total += a.w;
    std::int64_t sum = 0;
    size_t heaviest = 0;
    for (size_t i = 0; i < atoms.size(); ++i) {
      units[i] = std::llround(atoms[i].w / total * static_cast<double>(kScale));
      sum += units[i];
      if (atoms[i].w > atoms[heaviest].w) heaviest = i;
    }
    units[heaviest] += kScale - sum;
    for (std::int64_t u : units)
      if (u <= 0) throw std::runtime_error("wasserstein1: weight too small to scale");
  }

  // Node ids: 0 = source, 1..n = supply, n+1..n+m = demand, n+m+1 = sink.
  std::int64_t augment() {
    const size_t src = 0, snk = n_ + m_ + 1, nv = n_ + m_ + 2;
    std::fill(dist_.begin(), dist_.end(), kInf);
    std::fill(visited_.begin(), visited_.end(), false);
    std::fill(parent_.begin(), parent_.end(), -1);
    dist_[src] = 0.0;

    for (size_t round = 0; round < nv; ++round) {
      size_t u = nv;
      double best = kInf;
      for (size_t v = 0; v < nv; ++v)
        if (!visited_[v] && dist_[v] < best) {
          best = dist_[v];
          u = v;
        }
      if (u == nv) break;
      visited_[u] = true;
      if (u == src) {
        for (size_t i = 0; i < n_; ++i) {
          if (supply_left(i) <= 0) continue;
          relax(src, 1 + i, 0.0);
        }
      } else if (u <= n_) {
        size_t i = u - 1;
        for (size_t j = 0; j < m_; ++j) relax(u, 1 + n_ + j, cost_[i * m_ + j]);
      } else if (u < snk) {
        size_t j = u - 1 - n_;
        if (demand_left(j) > 0) relax(u, snk, 0.0);
        for (size_t i = 0; i < n_; ++i)
          if (flow_[i * m_ + j] > 0) relax(u, 1 + i, -cost_[i * m_ + j]);
      }
    }
    if (dist_[snk] == kInf) return 0;
    for (size_t v = 0; v < nv; ++v)
      if (dist_[v] < kInf) pot_[v] += dist_[v];

    // bottleneck along the path
    std::int64_t push = std::numeric_limits<std::int64_t>::max();
    for (size_t v = snk; v != src;) {
      size_t u = static_cast<size_t>(parent_[v]);
      if (u == src) {
        push = std::min(push, supply_left(v - 1));
      } else if (v == snk) {
        push = std::min(push, demand_left(u - 1 - n_));
      } else if (u <= n_ && v > n_) {
        // forward arc, unbounded
      } else {
        push = std::min(push, flow_[(v - 1) * m_ + (u - 1 - n_)]);
      }
      v = u;
    }
    for (size_t v = snk; v != src;) {
      size_t u = static_cast<size_t>(parent_[v]);
      if (u == src) {
        used_supply_[v - 1] += push;
      } else if (v == snk) {
        used_demand_[u - 1 - n_] += push;
      } else if (u <= n_ && v > n_) {
        flow_[(u - 1) * m_ + (v - 1 - n_)] += push;
      } else {
        flow_[(v - 1) * m_ + (u - 1 - n_)] -= push;
      }
      v = u;
    }
    return push;
  }

  void relax(size_t u, size_t v, double cost) {
    // Never relax into a finalized node: potential roundoff can leave
    // reduced costs a few ulps negative, and re-relaxing a visited node can
    // close a cycle in the parent chain.
    if (visited_[v]) return;
    double nd = dist_[u] + cost + pot_[u] - pot_[v];
    if (nd < dist_[v]) {
      dist_[v] = nd;
      parent_[v] = static_cast<int>(u);
    }
  }

  std::int64_t supply_left(size_t i) const { return supply_[i] - used_supply_[i]; }
  std::int64_t demand_left(size_t j) const { return demand_[j] - used_demand_[j]; }

  size_t n_, m_;
  std::vector<std::int64_t> supply_, demand_, flow_;
  std::vector<std::int64_t> used_supply_, used_demand_;
  std::vector<double> dist_;
  std::vector<int> parent_;
  std::vector<bool> visited_;
  std::vector<double> pot_;
  std::vector<double> cost_;
};

}  // namespace

double wasserstein1(const EmpiricalMeasure& a_in, const EmpiricalMeasure& b_in) {
  EmpiricalMeasure a = merged(a_in);
  EmpiricalMeasure b = merged(b_in);
  if (a.atoms.empty() || b.atoms.empty())
    throw std::invalid_argument("wasserstein1: empty measure");
  double ta = a.total_mass(), tb = b.total_mass();
  if (std::fabs(ta - tb) > 1e-12 * std::max({ta, tb, 1.0}))
    throw std::invalid_argument("wasserstein1: unequal total masses");
  if (static_cast<double>(a.atoms.size()) * static_cast<double>(b.atoms.size()) > 1e6)
    throw std::invalid_argument("wasserstein1: atom-count product exceeds 1e6");
  TransportSolver solver(a.atoms, b.atoms);
  return solver.solve();
}

}  // namespace zeroscope::measures
