#include "zeroscope/json_io.hpp"

#include <cinttypes>
#include <cstdio>
#include <ostream>

namespace zeroscope::xnum {

void to_json(nlohmann::json& j, const ExtScalar& x) {
  j = nlohmann::json::object();
  j["m"] = x.m;
  if (xexp_fits_int64(x.e))
    j["e"] = static_cast<std::int64_t>(x.e);
  else
    j["e"] = xexp_to_string(x.e);
}

void from_json(const nlohmann::json& j, ExtScalar& x) {
  double m = j.at("m").get<double>();
  xexp e = j.at("e").is_string() ? xexp_from_string(j.at("e").get<std::string>())
                                 : static_cast<xexp>(j.at("e").get<std::int64_t>());
  x = ExtScalar(m, e);
}

void to_json(nlohmann::json& j, const ExtComplex& z) {
  j = nlohmann::json::object();
  j["re"] = z.re();
  j["im"] = z.im();
}

void from_json(const nlohmann::json& j, ExtComplex& z) {
  ExtScalar re = j.at("re").get<ExtScalar>();
  ExtScalar im = j.at("im").get<ExtScalar>();
  z = ExtComplex(re, im);
}

}  // namespace zeroscope::xnum

namespace zeroscope::series {

void to_json(nlohmann::json& j, const CoeffSeq& f) {
  j = nlohmann::json::object();
  j["label"] = f.label;
  j["n"] = f.n;
  j["V"] = f.V;
  j["degree"] = f.degree();
  j["truncated"] = f.truncated;
  j["coeffs"] = f.coeffs;
}

void from_json(const nlohmann::json& j, CoeffSeq& f) {
  f.label = j.at("label").get<std::string>();
  f.n = j.at("n").get<int>();
  f.V = j.at("V").get<double>();
  f.truncated = j.value("truncated", false);
  f.coeffs = j.at("coeffs").get<std::vector<xnum::ExtComplex>>();
}

void to_json(nlohmann::json& j, const BigIntPoly& p) {
  nlohmann::json arr = nlohmann::json::array();
  for (const mpz_class& c : p.coeffs) arr.push_back(c.get_str());
  j = nlohmann::json::object();
  j["coeffs"] = std::move(arr);
}

void from_json(const nlohmann::json& j, BigIntPoly& p) {
  p.coeffs.clear();
  for (const auto& s : j.at("coeffs")) p.coeffs.emplace_back(s.get<std::string>());
}

}  // namespace zeroscope::series

namespace zeroscope::convex {

void to_json(nlohmann::json& j, const PiecewiseConvex& f) {
  j = nlohmann::json::object();
  j["breakpoints"] = f.xs;
  j["values"] = f.ys;
  if (f.left_slope) j["left_slope_to_minus_inf"] = *f.left_slope;
  if (f.right_slope) j["right_slope_to_plus_inf"] = *f.right_slope;
}

void from_json(const nlohmann::json& j, PiecewiseConvex& f) {
  std::optional<double> ls, rs;
  if (j.contains("left_slope_to_minus_inf")) ls = j["left_slope_to_minus_inf"].get<double>();
  if (j.contains("right_slope_to_plus_inf")) rs = j["right_slope_to_plus_inf"].get<double>();
  f = make_piecewise(j.at("breakpoints").get<std::vector<double>>(),
                     j.at("values").get<std::vector<double>>(), ls, rs);
}

}  // namespace zeroscope::convex

namespace zeroscope::wiman {

void to_json(nlohmann::json& j, const Profile& p) {
  j = nlohmann::json::object();
  j["t_grid"] = p.t_grid;
  j["lower"] = p.lower;
  j["upper"] = p.upper;
  j["V"] = p.V;
}

void from_json(const nlohmann::json& j, Profile& p) {
  p.t_grid = j.at("t_grid").get<std::vector<double>>();
  p.lower = j.at("lower").get<std::vector<double>>();
  p.upper = j.at("upper").get<std::vector<double>>();
  p.V = j.at("V").get<double>();
}

void to_json(nlohmann::json& j, const Segmentation& s) {
  j = nlohmann::json::object();
  j["detected"] = s.detected;
  j["note"] = s.note;
  nlohmann::json pieces = nlohmann::json::array();
  for (const AffinePiece& p : s.pieces)
    pieces.push_back({{"t_from", p.t_from}, {"t_to", p.t_to}, {"slope", p.slope}, {"intercept", p.intercept}});
  j["pieces"] = std::move(pieces);
  nlohmann::json circles = nlohmann::json::array();
  for (const JumpCircle& c : s.circles)
    circles.push_back({{"radius", c.radius}, {"mass", c.mass}});
  j["circles"] = std::move(circles);
  j["const_near_origin"] = s.const_near_origin;
  j["slope_range_ok"] = s.slope_range_ok;
}

}  // namespace zeroscope::wiman

namespace zeroscope::measures {

void to_json(nlohmann::json& j, const EmpiricalMeasure& m) {
  nlohmann::json atoms = nlohmann::json::array();
  for (const Atom& a : m.atoms)
    atoms.push_back({{"re", a.z.real()}, {"im", a.z.imag()}, {"w", a.w}});
  j = nlohmann::json::object();
  j["atoms"] = std::move(atoms);
}

void from_json(const nlohmann::json& j, EmpiricalMeasure& m) {
  m.atoms.clear();
  for (const auto& a : j.at("atoms"))
    m.atoms.push_back({{a.at("re").get<double>(), a.at("im").get<double>()}, a.at("w").get<double>()});
}

}  // namespace zeroscope::measures

namespace zeroscope::pipeline {

void to_json(nlohmann::json& j, const Theorem1Report& r) {
  j = nlohmann::json::object();
  j["schema_version"] = 1;
  j["psi"] = r.psi;
  j["legendre_psi"] = r.legendre_psi;
  j["profile"] = r.profile;
  j["duality_residual"] = r.duality_residual;
  j["sandwich_gap"] = r.sandwich_gap;
}

void to_json(nlohmann::json& j, const UniformityReport& r) {
  j = nlohmann::json::object();
  j["schema_version"] = 1;
  j["profile"] = r.profile;
  j["segmentation"] = r.segmentation;
  nlohmann::json circles = nlohmann::json::array();
  for (const CircleCheck& c : r.circles)
    circles.push_back({{"radius", c.radius},
                       {"predicted_mass", c.predicted_mass},
                       {"annulus_mass", c.annulus_mass},
                       {"discrepancy", c.discrepancy},
                       {"atom_count", c.atom_count}});
  j["circles"] = std::move(circles);
  j["annulus_delta"] = r.annulus_delta;
  j["detector_tol"] = r.detector_tol;
  j["radial"] = {{"q25_modulus_log", r.q25_modulus_log},
                 {"median_modulus_log", r.median_modulus_log},
                 {"q75_modulus_log", r.q75_modulus_log}};
  j["roots"] = {{"degree", r.root_set.degree},
                {"zeros_at_origin", r.root_set.zeros_at_origin},
                {"count", r.root_set.roots.size()},
                {"converged", r.root_set.converged}};
}

void to_json(nlohmann::json& j, const DerivativeReport& r) {
  j = nlohmann::json::object();
  j["schema_version"] = 1;
  j["w1_zero_vs_crit"] = r.w1_zero_vs_crit;
  j["pointwise_gap"] = r.pointwise_gap;
  j["grid_points_used"] = r.grid_points_used;
  j["zeros"] = {{"degree", r.zeros.degree},
                {"zeros_at_origin", r.zeros.zeros_at_origin},
                {"converged", r.zeros.converged}};
  j["critical_points"] = {{"degree", r.critical_points.degree},
                          {"zeros_at_origin", r.critical_points.zeros_at_origin},
                          {"converged", r.critical_points.converged}};
}

}  // namespace zeroscope::pipeline

namespace zeroscope::roots {

void write_roots_csv(const RootSet& rs, std::ostream& out) {
  out << "re,im,modulus,residual_log,multiplicity_hint\n";
  char buf[160];
  for (int i = 0; i < rs.zeros_at_origin; ++i) {
    std::snprintf(buf, sizeof buf, "0,0,0,-inf,%d\n", rs.zeros_at_origin);
    out << buf;
  }
  for (const Root& r : rs.roots) {
    std::complex<double> z = r.point();
    std::snprintf(buf, sizeof buf, "%.17g,%.17g,%.17g,%.17g,%d\n", z.real(), z.imag(),
                  std::exp(r.modulus_log), r.residual_log, r.multiplicity_hint);
    out << buf;
  }
}

}  // namespace zeroscope::roots
