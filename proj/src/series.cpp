#include "zeroscope/series.hpp"

#include <cmath>
#include <limits>
#include <random>
#include <stdexcept>

namespace zeroscope::series {

int CoeffSeq::degree() const {
  for (int k = static_cast<int>(coeffs.size()) - 1; k >= 0; --k)
    if (!coeffs[k].is_zero()) return k;
  return -1;
}

int CoeffSeq::lowest_nonzero() const {
  for (int k = 0; k < static_cast<int>(coeffs.size()); ++k)
    if (!coeffs[k].is_zero()) return k;
  return -1;
}

void validate(const CoeffSeq& f) {
  if (!(f.V > 0.0)) throw std::invalid_argument("CoeffSeq: V must be positive");
  if (f.degree() < 0) throw std::invalid_argument("CoeffSeq: all coefficients are zero");
}

std::vector<double> log_magnitudes(const CoeffSeq& f) {
  std::vector<double> out(f.coeffs.size(), std::numeric_limits<double>::infinity());
  for (size_t k = 0; k < f.coeffs.size(); ++k)
    if (!f.coeffs[k].is_zero()) out[k] = f.coeffs[k].log_abs();
  return out;
}

CoeffSeq partial_sums(const std::function<ExtComplex(int)>& coeff_rule, int n) {
  if (n < 1) throw std::invalid_argument("partial_sums: n must be >= 1");
  CoeffSeq f;
  f.label = "partial-sum";
  f.n = n;
  f.V = static_cast<double>(n);
  f.coeffs.reserve(n + 1);
  for (int k = 0; k <= n; ++k) f.coeffs.push_back(coeff_rule(k));
  if (f.degree() < 0) throw std::invalid_argument("partial_sums: empty series");
  return f;
}

namespace {

// p * y^shift accumulated into acc with integer weight -w.
void sub_shifted_scaled(std::vector<mpz_class>& acc, const std::vector<mpz_class>& p,
                        long shift, const mpz_class& w) {
  if (acc.size() < p.size() + shift) acc.resize(p.size() + shift);
  for (size_t i = 0; i < p.size(); ++i) acc[i + shift] -= w * p[i];
}

long triangle(long m) { return m * (m - 1) / 2; }

}  // namespace

BigIntPoly tutte_connected(int n) {
  if (n < 1) throw std::invalid_argument("tutte_connected: n must be >= 1");
  if (n > 16) throw std::invalid_argument("tutte_connected: n > 16 unsupported (degree grows as n(n-1)/2)");
  std::vector<BigIntPoly> c(n + 1);
  c[1].coeffs = {mpz_class(1)};
  for (int m = 2; m <= n; ++m) {
    std::vector<mpz_class> acc(triangle(m) + 1);
    acc[triangle(m)] = 1;  // F_m = y^{m(m-1)/2}
    for (int k = 1; k <= m - 1; ++k) {
      mpz_class b;
      mpz_bin_uiui(b.get_mpz_t(), m - 1, k - 1);
      sub_shifted_scaled(acc, c[k].coeffs, triangle(m - k), b);
    }
    while (acc.size() > 1 && acc.back() == 0) acc.pop_back();
    c[m].coeffs = std::move(acc);
  }
  return c[n];
}

CoeffSeq tutte_coeffseq(const BigIntPoly& p, int n) {
  if (n < 2) throw std::invalid_argument("tutte_coeffseq: n must be >= 2 (V = n(n-1)/2 must be positive)");
  if (p.degree() != triangle(n))
    throw std::invalid_argument("tutte_coeffseq: polynomial degree does not match n(n-1)/2");
  mpz_class fact;
  mpz_fac_ui(fact.get_mpz_t(), n);
  signed long fact_exp2 = 0;
  double fact_d = mpz_get_d_2exp(&fact_exp2, fact.get_mpz_t());
  ExtScalar den(fact_d, fact_exp2);
  CoeffSeq f;
  f.label = "tutte-connected";
  f.n = n;
  f.V = static_cast<double>(triangle(n));
  f.coeffs.resize(p.coeffs.size());
  for (size_t k = 0; k < p.coeffs.size(); ++k) {
    const mpz_class& ck = p.coeffs[k];
    if (ck == 0) continue;
    signed long exp2 = 0;
    double d = mpz_get_d_2exp(&exp2, ck.get_mpz_t());  // ck = d * 2^exp2, |d| in [0.5,1)
    ExtScalar num(d, exp2);
    f.coeffs[k] = ExtComplex(num / den);
  }
  return f;
}

namespace {

// Orbit of 0 under z -> z^2 + c in extended arithmetic: u_1 = c, u_{k+1} = u_k^2 + c.
std::vector<ExtScalar> ruelle_orbit(double c, int count) {
  std::vector<ExtScalar> u;
  u.reserve(count);
  ExtScalar cur = ExtScalar::from_double(c);
  ExtScalar cs = cur;
  u.push_back(cur);
  for (int k = 1; k < count; ++k) {
    cur = cur * cur + cs;
    u.push_back(cur);
  }
  return u;
}

}  // namespace

int v_of_c(double c) {
  if (!(c < -2.0)) throw std::invalid_argument("v_of_c: requires c < -2");
  // The orbit escapes doubly exponentially for c < -2, so the ratio passes 36
  // after a modest number of steps; 400 is far beyond any representable case.
  std::vector<ExtScalar> u = ruelle_orbit(c, 400);
  for (int k = 0; k + 1 < static_cast<int>(u.size()); ++k) {
    ExtScalar ratio = u[k + 1] / u[k];
    if (ratio.sign() > 0 && ratio.log_abs() >= std::log(36.0)) return k + 1;
  }
  throw std::runtime_error("v_of_c: ratio never reached 36 (unexpected for c < -2)");
}

CoeffSeq ruelle_zeta(double c, int K) {
  if (!(c < -2.0)) throw std::invalid_argument("ruelle_zeta: requires c < -2");
  if (K < 1) throw std::invalid_argument("ruelle_zeta: K must be >= 1");
  std::vector<ExtScalar> u = ruelle_orbit(c, K);
  CoeffSeq f;
  f.label = "ruelle-zeta";
  f.n = K;
  f.V = static_cast<double>(v_of_c(c));
  f.truncated = true;
  f.coeffs.resize(K + 1);
  ExtScalar prod = ExtScalar::from_double(1.0);
  f.coeffs[0] = ExtComplex(ExtScalar::from_double(1.0));
  for (int k = 1; k <= K; ++k) {
    prod = prod * u[k - 1];
    f.coeffs[k] = ExtComplex(ExtScalar::from_double(1.0) / prod);
  }
  return f;
}

int ruelle_suggest_truncation(double c, double target_radius, double log_margin) {
  if (!(c < -2.0)) throw std::invalid_argument("ruelle_suggest_truncation: requires c < -2");
  if (!(target_radius > 0.0)) throw std::invalid_argument("ruelle_suggest_truncation: bad radius");
  double log_r = std::log(target_radius);
  ExtScalar cur = ExtScalar::from_double(c);
  ExtScalar cs = cur;
  double log_prod = 0.0;  // log |u_1 ... u_k|
  for (int k = 1; k <= 400; ++k) {
    if (k > 1) cur = cur * cur + cs;
    log_prod += cur.log_abs();
    // a_K = 1/(u_1...u_K), a_0 = 1
    if (-log_prod + k * log_r < -log_margin) return k;
  }
  throw std::runtime_error("ruelle_suggest_truncation: no admissible K below 400");
}

CoeffSeq hardy(double a, int K) {
  if (!(a > 0.0 && a < 1.0)) throw std::invalid_argument("hardy: requires 0 < a < 1");
  if (K < 1) throw std::invalid_argument("hardy: K must be >= 1");
  if (K > 125) throw std::invalid_argument("hardy: K > 125 exceeds the 128-bit exponent range");
  CoeffSeq f;
  f.label = "hardy";
  f.n = K;
  f.V = 1.0;  // no normalization is defined for this family
  f.truncated = true;
  double ln_a = std::log(a);
  f.coeffs.resize(K + 1);
  for (int k = 0; k <= K; ++k) {
    double pw = std::ldexp(1.0, k) - 1.0;  // 2^k - 1
    f.coeffs[k] = ExtComplex(ExtScalar::from_ln(pw * ln_a));
  }
  return f;
}

CoeffSeq rescale(const CoeffSeq& f, double r, double V) {
  if (!(r > 0.0)) throw std::invalid_argument("rescale: r must be positive");
  if (!(V > 0.0)) throw std::invalid_argument("rescale: V must be positive");
  CoeffSeq g = f;
  g.V = V;
  ExtScalar rk = ExtScalar::from_double(1.0);
  ExtScalar rs = ExtScalar::from_double(r);
  for (size_t k = 0; k < g.coeffs.size(); ++k) {
    if (k > 0) rk = rk * rs;
    if (!g.coeffs[k].is_zero()) g.coeffs[k] = g.coeffs[k] * rk;
  }
  return g;
}

CoeffSeq from_roots(std::span<const std::complex<double>> roots, std::string label, double V) {
  CoeffSeq f;
  f.label = std::move(label);
  f.n = static_cast<int>(roots.size());
  f.V = V;
  f.coeffs.assign(1, ExtComplex(std::complex<double>(1.0, 0.0)));
  for (const auto& r : roots) {
    // multiply by (z - r)
    std::vector<ExtComplex> next(f.coeffs.size() + 1);
    ExtComplex mr = -ExtComplex(r);
    for (size_t k = 0; k < f.coeffs.size(); ++k) {
      next[k + 1] = next[k + 1] + f.coeffs[k];
      next[k] = next[k] + f.coeffs[k] * mr;
    }
    f.coeffs = std::move(next);
  }
  return f;
}

std::vector<std::complex<double>> random_disk_roots(int n, std::uint64_t seed) {
  if (n < 0) throw std::invalid_argument("random_disk_roots: n must be >= 0");
  std::mt19937_64 rng(seed);
  auto unit = [&rng]() { return static_cast<double>(rng() >> 11) * 0x1.0p-53; };
  std::vector<std::complex<double>> pts;
  pts.reserve(n);
  while (static_cast<int>(pts.size()) < n) {
    double x = 2.0 * unit() - 1.0;
    double y = 2.0 * unit() - 1.0;
    if (x * x + y * y <= 1.0) pts.emplace_back(x, y);
  }
  return pts;
}

}  // namespace zeroscope::series
