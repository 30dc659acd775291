#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <complex>
#include <numbers>
#include <random>

#include "zeroscope/measures.hpp"

using namespace zeroscope;
using measures::Atom;
using measures::EmpiricalMeasure;

namespace {

EmpiricalMeasure unit_roots(int n, double rot = 0.0) {
  EmpiricalMeasure m;
  for (int k = 0; k < n; ++k) {
    double th = rot + 2.0 * std::numbers::pi * k / n;
    m.atoms.push_back({std::polar(1.0, th), 1.0 / n});
  }
  return m;
}

EmpiricalMeasure delta(std::complex<double> z) {
  EmpiricalMeasure m;
  m.atoms.push_back({z, 1.0});
  return m;
}

}  // namespace

TEST_CASE("empirical from root sets") {
  // roots of z^3 - 1
  series::CoeffSeq f;
  f.V = 3;
  f.coeffs = {xnum::ExtComplex(std::complex<double>(-1, 0)), xnum::ExtComplex(),
              xnum::ExtComplex(), xnum::ExtComplex(std::complex<double>(1, 0))};
  roots::RootSet rs = roots::aberth_roots(f);
  EmpiricalMeasure m = measures::empirical(rs);
  REQUIRE(m.atoms.size() == 3);
  for (const Atom& a : m.atoms) {
    CHECK(a.w == doctest::Approx(1.0 / 3));
    CHECK(std::abs(a.z) == doctest::Approx(1.0).epsilon(1e-12));
  }

  // z^2 (z - 1): origin atom carries weight 2/3
  series::CoeffSeq g;
  g.V = 3;
  g.coeffs = {xnum::ExtComplex(), xnum::ExtComplex(),
              xnum::ExtComplex(std::complex<double>(-1, 0)),
              xnum::ExtComplex(std::complex<double>(1, 0))};
  EmpiricalMeasure m2 = measures::empirical(roots::aberth_roots(g));
  REQUIRE(m2.atoms.size() == 2);
  CHECK(m2.atoms[0].z == std::complex<double>(0, 0));
  CHECK(m2.atoms[0].w == doctest::Approx(2.0 / 3));
  CHECK(m2.atoms[1].w == doctest::Approx(1.0 / 3));

  roots::RootSet bad;
  bad.converged = false;
  bad.degree = 2;
  CHECK_THROWS_AS(measures::empirical(bad), std::invalid_argument);
}

TEST_CASE("angular discrepancy of equidistributed atoms is exactly 1/n") {
  for (int n : {2, 3, 8, 17, 100}) {
    double d = measures::angular_discrepancy(unit_roots(n), {0, 0});
    CHECK(d == doctest::Approx(1.0 / n).epsilon(1e-12));
  }
}

TEST_CASE("angular discrepancy degenerate and error cases") {
  // single atom: the sup over arcs is 1 (all mass in an arbitrarily short arc)
  CHECK(measures::angular_discrepancy(delta({1.0, 0.0}), {0, 0}) == doctest::Approx(1.0));

  // atom at the center has no angle
  CHECK_THROWS_AS(measures::angular_discrepancy(delta({0.0, 0.0}), {0, 0}),
                  std::invalid_argument);
}

TEST_CASE("angular discrepancy is rotation invariant") {
  std::mt19937_64 rng(5);
  std::uniform_real_distribution<double> th(0.0, 2 * std::numbers::pi);
  std::uniform_real_distribution<double> rr(0.3, 2.0);
  EmpiricalMeasure m;
  for (int i = 0; i < 40; ++i) m.atoms.push_back({std::polar(rr(rng), th(rng)), 1.0 / 40});
  double base = measures::angular_discrepancy(m, {0, 0});
  for (double rot : {0.3, 1.7, 3.0, 5.9}) {
    EmpiricalMeasure r;
    std::complex<double> u = std::polar(1.0, rot);
    for (const Atom& a : m.atoms) r.atoms.push_back({a.z * u, a.w});
    CHECK(measures::angular_discrepancy(r, {0, 0}) == doctest::Approx(base).epsilon(1e-12));
  }
}

TEST_CASE("radial stats conventions") {
  EmpiricalMeasure u = unit_roots(8);
  measures::RadialStats st = measures::radial_stats(u, {0, 0});
  CHECK(st.quantile(0.1) == doctest::Approx(1.0));
  CHECK(st.quantile(0.5) == doctest::Approx(1.0));
  CHECK(st.quantile(0.9) == doctest::Approx(1.0));

  // two atoms at 0 and 2: lower-quantile convention puts the median at 0
  EmpiricalMeasure two;
  two.atoms = {{{0.0, 0.0}, 0.5}, {{2.0, 0.0}, 0.5}};
  measures::RadialStats st2 = measures::radial_stats(two, {0, 0});
  CHECK(st2.quantile(0.5) == 0.0);
  CHECK(st2.quantile(0.51) == 2.0);
  CHECK(st2.annulus_mass(1.0, 3.0) == doctest::Approx(0.5));
  CHECK(st2.annulus_mass(0.0, 3.0) == doctest::Approx(1.0));
}

TEST_CASE("wasserstein1 basics") {
  CHECK(measures::wasserstein1(delta({0, 0}), delta({1, 0})) == doctest::Approx(1.0).epsilon(1e-12));
  EmpiricalMeasure u = unit_roots(16);
  CHECK(measures::wasserstein1(u, u) == doctest::Approx(0.0));
  // uniform on roots of unity vs delta at 0: every atom travels distance 1
  CHECK(measures::wasserstein1(u, delta({0, 0})) == doctest::Approx(1.0).epsilon(1e-12));
}

TEST_CASE("wasserstein1 error cases") {
  EmpiricalMeasure a = delta({0, 0});
  EmpiricalMeasure b;
  b.atoms = {{{1.0, 0.0}, 0.25}};
  CHECK_THROWS_AS(measures::wasserstein1(a, b), std::invalid_argument);
}

TEST_CASE("wasserstein1 is a metric on sample triples") {
  std::mt19937_64 rng(9);
  std::uniform_real_distribution<double> cd(-1.5, 1.5);
  auto random_measure = [&](int n) {
    EmpiricalMeasure m;
    for (int i = 0; i < n; ++i) m.atoms.push_back({{cd(rng), cd(rng)}, 1.0 / n});
    return m;
  };
  for (int rep = 0; rep < 8; ++rep) {
    EmpiricalMeasure a = random_measure(12), b = random_measure(17), c = random_measure(9);
    double ab = measures::wasserstein1(a, b);
    double ba = measures::wasserstein1(b, a);
    double ac = measures::wasserstein1(a, c);
    double cb = measures::wasserstein1(c, b);
    CHECK(ab == doctest::Approx(ba).epsilon(1e-9));
    CHECK(ab <= ac + cb + 1e-9);
    CHECK(measures::wasserstein1(a, a) <= 1e-12);
    CHECK(ab >= 0.0);
  }
}

TEST_CASE("wasserstein1 between n and n+1 roots of unity decays like 1/n") {
  double prev = 1e9;
  for (int n : {4, 8, 16, 32}) {
    double w = measures::wasserstein1(unit_roots(n), unit_roots(n + 1));
    CHECK(w < prev);
    CHECK(w <= 3.5 / n);
    prev = w;
  }
}

TEST_CASE("merging stabilizes coincident atoms") {
  EmpiricalMeasure m;
  m.atoms = {{{1.0, 0.0}, 0.5}, {{1.0 + 3e-10, 0.0}, 0.5}};
  EmpiricalMeasure g = measures::merged(m);
  REQUIRE(g.atoms.size() == 1);
  CHECK(g.atoms[0].w == doctest::Approx(1.0));
}

TEST_CASE("end-to-end: discrepancy of aberth roots of z^n - 1 is exactly 1/n") {
  for (int n : {5, 12, 40}) {
    series::CoeffSeq f;
    f.V = n;
    f.coeffs.assign(n + 1, xnum::ExtComplex());
    f.coeffs[0] = xnum::ExtComplex(std::complex<double>(-1, 0));
    f.coeffs[n] = xnum::ExtComplex(std::complex<double>(1, 0));
    roots::RootSet rs = roots::aberth_roots(f);
    REQUIRE(rs.converged);
    double d = measures::angular_discrepancy(measures::empirical(rs), {0, 0});
    CHECK(d == doctest::Approx(1.0 / n).epsilon(1e-9));
  }
}
