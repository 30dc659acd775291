#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <sstream>

#include "zeroscope/json_io.hpp"

using namespace zeroscope;
using nlohmann::json;

TEST_CASE("ExtScalar JSON: exact round trip, including huge exponents") {
  xnum::ExtScalar a = xnum::ExtScalar::from_double(-3.75);
  json j = a;
  xnum::ExtScalar b = j.get<xnum::ExtScalar>();
  CHECK(b.m == a.m);
  CHECK(b.e == a.e);
  CHECK(j.at("e").is_number());

  // beyond int64: exponent becomes a decimal string
  xnum::ExtScalar big = xnum::ExtScalar::from_ln(-6.2e30);
  json jb = big;
  CHECK(jb.at("e").is_string());
  xnum::ExtScalar back = jb.get<xnum::ExtScalar>();
  CHECK(back.m == big.m);
  CHECK(back.e == big.e);
}

TEST_CASE("CoeffSeq JSON round trip is bit exact") {
  series::CoeffSeq f = series::ruelle_zeta(-2.1, 10);
  json j = f;
  CHECK(j.at("degree").get<int>() == 10);
  series::CoeffSeq g = j.get<series::CoeffSeq>();
  CHECK(g.label == f.label);
  CHECK(g.V == f.V);
  CHECK(g.truncated == f.truncated);
  REQUIRE(g.coeffs.size() == f.coeffs.size());
  for (size_t k = 0; k < f.coeffs.size(); ++k) {
    CHECK(g.coeffs[k].re_m == f.coeffs[k].re_m);
    CHECK(g.coeffs[k].im_m == f.coeffs[k].im_m);
    CHECK(g.coeffs[k].e == f.coeffs[k].e);
  }
}

TEST_CASE("BigIntPoly JSON uses decimal strings") {
  series::BigIntPoly p = series::tutte_connected(8);
  json j = p;
  CHECK(j.at("coeffs")[0].is_string());
  series::BigIntPoly q = j.get<series::BigIntPoly>();
  REQUIRE(q.coeffs.size() == p.coeffs.size());
  for (size_t i = 0; i < p.coeffs.size(); ++i) CHECK(q.coeffs[i] == p.coeffs[i]);
}

TEST_CASE("PiecewiseConvex JSON keeps extensions") {
  convex::PiecewiseConvex f = convex::make_piecewise({0.0}, {0.0}, 0.0, 1.0);
  json j = f;
  CHECK(j.contains("left_slope_to_minus_inf"));
  CHECK(j.contains("right_slope_to_plus_inf"));
  convex::PiecewiseConvex g = j.get<convex::PiecewiseConvex>();
  CHECK(g.eval(-5.0) == 0.0);
  CHECK(g.eval(3.0) == 3.0);

  convex::PiecewiseConvex bounded = convex::make_piecewise({0.0, 1.0}, {0.0, 0.0});
  json jb = bounded;
  CHECK_FALSE(jb.contains("left_slope_to_minus_inf"));
}

TEST_CASE("Profile and measure JSON") {
  series::CoeffSeq f = series::partial_sums(
      [](int) { return xnum::ExtComplex(std::complex<double>(1.0, 0.0)); }, 10);
  std::vector<double> grid{-1.0, 0.0, 1.0};
  wiman::Profile p = wiman::phi_profile(f, grid);
  json j = p;
  wiman::Profile q = j.get<wiman::Profile>();
  CHECK(q.t_grid == p.t_grid);
  CHECK(q.lower == p.lower);
  CHECK(q.upper == p.upper);
  CHECK(q.V == p.V);

  measures::EmpiricalMeasure m;
  m.atoms = {{{1.0, -2.0}, 0.5}, {{0.0, 0.0}, 0.5}};
  json jm = m;
  measures::EmpiricalMeasure mm = jm.get<measures::EmpiricalMeasure>();
  REQUIRE(mm.atoms.size() == 2);
  CHECK(mm.atoms[0].z == m.atoms[0].z);
  CHECK(mm.atoms[1].w == 0.5);
}

TEST_CASE("roots CSV has the pinned columns and one row per root") {
  series::CoeffSeq f;
  f.V = 3;
  f.coeffs = {xnum::ExtComplex(), xnum::ExtComplex(),
              xnum::ExtComplex(std::complex<double>(-1, 0)),
              xnum::ExtComplex(std::complex<double>(1, 0))};  // z^2 (z - 1)
  roots::RootSet rs = roots::aberth_roots(f);
  std::ostringstream out;
  roots::write_roots_csv(rs, out);
  std::istringstream in(out.str());
  std::string line;
  std::getline(in, line);
  CHECK(line == "re,im,modulus,residual_log,multiplicity_hint");
  int rows = 0;
  while (std::getline(in, line)) ++rows;
  CHECK(rows == 3);  // two origin rows + one root row
}
