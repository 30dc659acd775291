#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <numeric>
#include <vector>

#include <gmpxx.h>

#include "zeroscope/series.hpp"
#include "zeroscope/wiman.hpp"

using namespace zeroscope;
using series::CoeffSeq;
using xnum::ExtComplex;
using xnum::ExtScalar;

namespace {

ExtComplex ones_rule(int) { return ExtComplex(std::complex<double>(1.0, 0.0)); }

// c_{n,k}: number of connected simple graphs on n labeled vertices with k
// edges, by direct enumeration of all edge subsets.
std::vector<long> count_connected_by_edges(int n) {
  int m = n * (n - 1) / 2;
  std::vector<std::pair<int, int>> edges;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) edges.push_back({i, j});
  std::vector<long> counts(m + 1, 0);
  for (long mask = 0; mask < (1L << m); ++mask) {
    std::vector<int> parent(n);
    std::iota(parent.begin(), parent.end(), 0);
    std::function<int(int)> find = [&](int x) {
      while (parent[x] != x) x = parent[x] = parent[parent[x]];
      return x;
    };
    int k = 0;
    for (int e = 0; e < m; ++e) {
      if (!(mask >> e & 1)) continue;
      ++k;
      parent[find(edges[e].first)] = find(edges[e].second);
    }
    int comps = 0;
    for (int v = 0; v < n; ++v)
      if (find(v) == v) ++comps;
    if (comps == 1) counts[k] += 1;
  }
  return counts;
}

// expands sum_k c_k (y-1)^k into the monomial basis, exact integers
std::vector<mpz_class> expand_shifted(const std::vector<long>& c) {
  std::vector<mpz_class> acc(1, 0);
  std::vector<mpz_class> pw(1, 1);  // (y-1)^k
  for (size_t k = 0; k < c.size(); ++k) {
    if (acc.size() < pw.size()) acc.resize(pw.size());
    for (size_t i = 0; i < pw.size(); ++i) acc[i] += c[k] * pw[i];
    // pw *= (y - 1)
    std::vector<mpz_class> nx(pw.size() + 1);
    for (size_t i = 0; i < pw.size(); ++i) {
      nx[i + 1] += pw[i];
      nx[i] -= pw[i];
    }
    pw = std::move(nx);
  }
  while (acc.size() > 1 && acc.back() == 0) acc.pop_back();
  return acc;
}

}  // namespace

TEST_CASE("partial_sums basics") {
  CoeffSeq s5 = series::partial_sums(ones_rule, 5);
  CHECK(s5.V == 5.0);
  CHECK(s5.degree() == 5);
  for (int k = 0; k <= 5; ++k) CHECK(s5.coeffs[k].to_std().real() == 1.0);

  CoeffSeq h = series::partial_sums(
      [](int k) { return ExtComplex(std::complex<double>(1.0 / (k + 1), 0.0)); }, 3);
  CHECK(h.coeffs[0].to_std().real() == 1.0);
  CHECK(h.coeffs[1].to_std().real() == 0.5);
  CHECK(h.coeffs[2].to_std().real() == doctest::Approx(1.0 / 3));
  CHECK(h.coeffs[3].to_std().real() == 0.25);

  CHECK_THROWS_AS(series::partial_sums([](int) { return ExtComplex(); }, 4),
                  std::invalid_argument);
}

TEST_CASE("tutte_connected small cases") {
  series::BigIntPoly c2 = series::tutte_connected(2);
  REQUIRE(c2.degree() == 1);
  CHECK(c2.coeffs[0] == -1);
  CHECK(c2.coeffs[1] == 1);

  series::BigIntPoly c3 = series::tutte_connected(3);
  REQUIRE(c3.degree() == 3);  // y^3 - 3y + 2
  CHECK(c3.coeffs[0] == 2);
  CHECK(c3.coeffs[1] == -3);
  CHECK(c3.coeffs[2] == 0);
  CHECK(c3.coeffs[3] == 1);

  CHECK_THROWS_AS(series::tutte_connected(0), std::invalid_argument);
}

TEST_CASE("tutte_connected anchors: monic, degree, constant term") {
  for (int n = 2; n <= 12; ++n) {
    series::BigIntPoly p = series::tutte_connected(n);
    CHECK(p.degree() == n * (n - 1) / 2);
    CHECK(p.coeffs.back() == 1);
    mpz_class want;
    mpz_fac_ui(want.get_mpz_t(), n - 1);
    if (n % 2 == 0) want = -want;
    CHECK(p.coeffs[0] == want);
  }
  // n = 12 constant term is -11!
  series::BigIntPoly p12 = series::tutte_connected(12);
  CHECK(p12.coeffs[0] == mpz_class(-39916800));
}

TEST_CASE("tutte_connected matches brute-force enumeration for n <= 5") {
  for (int n = 2; n <= 5; ++n) {
    std::vector<long> counts = count_connected_by_edges(n);
    std::vector<mpz_class> want = expand_shifted(counts);
    series::BigIntPoly got = series::tutte_connected(n);
    REQUIRE(got.coeffs.size() == want.size());
    for (size_t i = 0; i < want.size(); ++i) CHECK(got.coeffs[i] == want[i]);
  }
}

TEST_CASE("generating-function identity: exp of the partial sum matches term by term") {
  // exp(sum_{n<=N} C_n(y) x^n / n!) agrees with sum_n y^{n(n-1)/2} x^n / n!
  // through order x^N, exactly over the rationals, for y in {0, 1/2, 1}.
  const int N = 8;
  std::vector<series::BigIntPoly> cs(N + 1);
  for (int n = 1; n <= N; ++n) cs[n] = series::tutte_connected(n);
  for (mpq_class y : {mpq_class(0), mpq_class(1, 2), mpq_class(1)}) {
    std::vector<mpq_class> l(N + 1, 0);  // l_n = C_n(y)/n!
    mpz_class fact = 1;
    for (int n = 1; n <= N; ++n) {
      fact *= n;
      mpq_class val = 0;
      for (int k = cs[n].degree(); k >= 0; --k) val = val * y + mpq_class(cs[n].coeffs[k]);
      l[n] = val / mpq_class(fact);
      l[n].canonicalize();
    }
    // e = exp(l) as a formal series: e_0 = 1, k e_k = sum_{j=1}^k j l_j e_{k-j}
    std::vector<mpq_class> e(N + 1, 0);
    e[0] = 1;
    for (int k = 1; k <= N; ++k) {
      mpq_class s = 0;
      for (int j = 1; j <= k; ++j) s += mpq_class(j) * l[j] * e[k - j];
      e[k] = s / k;
      e[k].canonicalize();
    }
    fact = 1;
    for (int k = 1; k <= N; ++k) {
      fact *= k;
      mpq_class yp = 1;  // y^{k(k-1)/2}
      for (int i = 0; i < k * (k - 1) / 2; ++i) yp *= y;
      mpq_class want = yp / mpq_class(fact);
      want.canonicalize();
      CHECK(e[k] == want);
    }
  }
}

TEST_CASE("tutte_coeffseq normalization") {
  series::BigIntPoly p3 = series::tutte_connected(3);
  CoeffSeq f = series::tutte_coeffseq(p3, 3);
  CHECK(f.V == 3.0);
  CHECK(f.coeffs[0].to_std().real() == doctest::Approx(2.0 / 6.0).epsilon(1e-15));
  CHECK(f.coeffs[1].to_std().real() == doctest::Approx(-0.5).epsilon(1e-15));
  CHECK(f.coeffs[2].is_zero());
  CHECK(f.coeffs[3].to_std().real() == doctest::Approx(1.0 / 6.0).epsilon(1e-15));

  // u_n(0) = -ln(n)/d_n
  double u3 = f.coeffs[0].log_abs() / f.V;
  CHECK(u3 == doctest::Approx(-std::log(3.0) / 3.0).epsilon(1e-14));

  CoeffSeq f12 = series::tutte_coeffseq(series::tutte_connected(12), 12);
  double u12 = f12.coeffs[0].log_abs() / f12.V;
  CHECK(u12 == doctest::Approx(-std::log(12.0) / 66.0).epsilon(1e-12));
  CHECK(std::fabs(u12) < std::fabs(u3));  // trend toward zero

  CHECK_THROWS_AS(series::tutte_coeffseq(series::tutte_connected(3), 4), std::invalid_argument);
}

TEST_CASE("ruelle orbit, v_of_c and coefficients at c = -3") {
  CHECK(series::v_of_c(-3.0) == 4);
  CHECK_THROWS_AS(series::v_of_c(-2.0), std::invalid_argument);

  CoeffSeq f = series::ruelle_zeta(-3.0, 6);
  CHECK(f.V == 4.0);
  CHECK(f.truncated);
  CHECK(f.coeffs[0].to_std().real() == 1.0);
  CHECK(f.coeffs[1].to_std().real() == doctest::Approx(-1.0 / 3.0).epsilon(1e-15));
  CHECK(f.coeffs[2].to_std().real() == doctest::Approx(-1.0 / 18.0).epsilon(1e-15));
  // iterates: -3, 6, 33, 1086, 1179393
  CHECK(f.coeffs[3].to_std().real() == doctest::Approx(-1.0 / (3.0 * 6 * 33)).epsilon(1e-14));
  CHECK(f.coeffs[4].to_std().real() ==
        doctest::Approx(-1.0 / (3.0 * 6 * 33 * 1086)).epsilon(1e-14));
}

TEST_CASE("ruelle iterates satisfy the quadratic recurrence exactly below 2^53") {
  // integer orbit at c = -3: every iterate below 2^53 is exact
  ExtScalar cur = ExtScalar::from_double(-3.0);
  ExtScalar cs = cur;
  mpz_class ref = -3;
  for (int k = 1; k < 7; ++k) {
    cur = cur * cur + cs;
    ref = ref * ref - 3;
    if (mpz_sizeinbase(ref.get_mpz_t(), 2) <= 53)
      CHECK(cur.to_double() == ref.get_d());
  }
}

TEST_CASE("ruelle truncation suggestion controls the tail") {
  int K = series::ruelle_suggest_truncation(-2.05, 4.0, 700.0);
  CHECK(K >= series::v_of_c(-2.05));
  CHECK(K < 60);
  CoeffSeq f = series::ruelle_zeta(-2.05, K);
  double la_K = f.coeffs[K].log_abs();
  double la_0 = f.coeffs[0].log_abs();
  CHECK(la_K + K * std::log(4.0) < la_0 - 700.0);
}

TEST_CASE("hardy coefficients") {
  CoeffSeq f = series::hardy(0.5, 6);
  CHECK(f.coeffs[0].to_std().real() == 1.0);
  CHECK(f.coeffs[1].to_std().real() == doctest::Approx(0.5).epsilon(1e-15));
  CHECK(f.coeffs[2].to_std().real() == doctest::Approx(1.0 / 8).epsilon(1e-14));
  CHECK(f.coeffs[3].to_std().real() == doctest::Approx(1.0 / 128).epsilon(1e-14));

  CoeffSeq g = series::hardy(0.99, 25);
  CHECK(g.coeffs[20].log_abs() ==
        doctest::Approx((std::ldexp(1.0, 20) - 1.0) * std::log(0.99)).epsilon(1e-12));
  CHECK(g.coeffs[20].log_abs() == doctest::Approx(-10537.8).epsilon(1e-4));

  // far tail representable thanks to the wide exponent
  CoeffSeq far = series::hardy(0.9, 110);
  CHECK(std::isfinite(far.coeffs[110].log_abs()));
  CHECK(far.coeffs[110].log_abs() < -1e30);

  CHECK_THROWS_AS(series::hardy(1.0, 5), std::invalid_argument);
  CHECK_THROWS_AS(series::hardy(-0.1, 5), std::invalid_argument);
}

TEST_CASE("rescale") {
  CoeffSeq g = series::partial_sums(ones_rule, 2);
  CoeffSeq id = series::rescale(g, 1.0, g.V);
  for (int k = 0; k <= 2; ++k) CHECK(id.coeffs[k].to_std() == g.coeffs[k].to_std());

  CoeffSeq r2 = series::rescale(g, 2.0, 5.0);
  CHECK(r2.V == 5.0);
  CHECK(r2.coeffs[0].to_std().real() == 1.0);
  CHECK(r2.coeffs[1].to_std().real() == 2.0);
  CHECK(r2.coeffs[2].to_std().real() == 4.0);
}

TEST_CASE("rescale shifts the central index: nu(1) of rescaled = nu(r) of original") {
  CoeffSeq expf = series::partial_sums(
      [](int k) {
        double lg = -std::lgamma(k + 1.0);
        return ExtComplex(ExtScalar::from_ln(lg));
      },
      30);
  for (double r : {0.5, 1.0, std::exp(1.0), 4.0}) {
    CoeffSeq sc = series::rescale(expf, r, expf.V);
    wiman::MaxTerm a = wiman::maximal_term(sc, 0.0);
    wiman::MaxTerm b = wiman::maximal_term(expf, std::log(r));
    CHECK(a.nu == b.nu);
  }
}

TEST_CASE("generators are deterministic") {
  CoeffSeq a = series::ruelle_zeta(-2.1, 12);
  CoeffSeq b = series::ruelle_zeta(-2.1, 12);
  REQUIRE(a.coeffs.size() == b.coeffs.size());
  for (size_t k = 0; k < a.coeffs.size(); ++k) {
    CHECK(a.coeffs[k].re_m == b.coeffs[k].re_m);
    CHECK(a.coeffs[k].e == b.coeffs[k].e);
  }
  auto r1 = series::random_disk_roots(50, 42);
  auto r2 = series::random_disk_roots(50, 42);
  CHECK(r1 == r2);
  for (const auto& z : r1) CHECK(std::abs(z) <= 1.0);
}

TEST_CASE("from_roots expands monic polynomials") {
  std::vector<std::complex<double>> rts = {{1.0, 0.0}, {-2.0, 0.0}};
  CoeffSeq f = series::from_roots(rts, "quad", 2.0);
  // (z-1)(z+2) = z^2 + z - 2
  CHECK(f.coeffs[2].to_std().real() == 1.0);
  CHECK(f.coeffs[1].to_std().real() == 1.0);
  CHECK(f.coeffs[0].to_std().real() == -2.0);
}
