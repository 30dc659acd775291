// zeroscope: generate coefficient families, analyze their profiles,
// envelopes and zero distributions, and emit JSON/CSV reports with SVG
// figures. Every run writes a manifest of its resolved configuration;
// `verify` re-runs a manifest and byte-compares the outputs.

#include <CLI11.hpp>
#include <cmath>
#include <complex>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "zeroscope/json_io.hpp"
#include "zeroscope/pipeline.hpp"
#include "zeroscope/svg.hpp"

namespace fs = std::filesystem;
using nlohmann::json;
using namespace zeroscope;

namespace {

constexpr const char* kToolVersion = "0.1.0";

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

void write_text(const fs::path& path, const std::string& text) {
  std::ofstream f(path, std::ios::binary);
  if (!f) throw std::runtime_error("cannot open " + path.string() + " for writing");
  f << text;
}

void write_json(const fs::path& path, const json& j) { write_text(path, j.dump(2) + "\n"); }

json read_json(const fs::path& path) {
  std::ifstream f(path, std::ios::binary);
  if (!f) throw UsageError("cannot open input file: " + path.string());
  json j;
  try {
    f >> j;
  } catch (const json::exception& e) {
    throw UsageError("malformed JSON in " + path.string() + ": " + e.what());
  }
  return j;
}

void write_manifest(const fs::path& out_dir, const std::string& command, const json& params,
                    const std::vector<std::string>& outputs) {
  json m;
  m["schema_version"] = 1;
  m["tool"] = "zeroscope";
  m["version"] = kToolVersion;
  m["command"] = command;
  m["params"] = params;
  m["outputs"] = outputs;
  write_json(out_dir / "manifest.json", m);
}

std::vector<double> parse_grid(const std::string& spec) {
  double lo = 0.0, hi = 0.0;
  int n = 0;
  char c1 = 0, c2 = 0;
  std::istringstream in(spec);
  if (!(in >> lo >> c1 >> hi >> c2 >> n) || c1 != ':' || c2 != ':' || n < 2 || !(lo < hi))
    throw UsageError("bad --grid, expected t_min:t_max:n with t_min < t_max and n >= 2");
  std::vector<double> g(n);
  for (int i = 0; i < n; ++i) g[i] = lo + (hi - lo) * i / (n - 1.0);
  return g;
}

series::CoeffSeq load_coeffseq(const fs::path& path) {
  json j = read_json(path);
  series::CoeffSeq f;
  try {
    f = j.get<series::CoeffSeq>();
  } catch (const json::exception& e) {
    throw UsageError("bad CoeffSeq in " + path.string() + ": " + e.what());
  }
  series::validate(f);
  return f;
}

// ---------------------------------------------------------------- generate

std::vector<std::string> run_generate(const json& params, const fs::path& out_dir) {
  std::string family = params.at("family").get<std::string>();
  series::CoeffSeq f;
  std::vector<std::string> outputs;

  if (family == "geometric-partial-sum") {
    int n = params.at("n").get<int>();
    f = series::partial_sums(
        [](int) { return xnum::ExtComplex(std::complex<double>(1.0, 0.0)); }, n);
    f.label = "geometric-partial-sum";
  } else if (family == "custom-rule") {
    int n = params.at("n").get<int>();
    std::string rule = params.value("rule", "");
    if (rule == "ones") {
      f = series::partial_sums(
          [](int) { return xnum::ExtComplex(std::complex<double>(1.0, 0.0)); }, n);
    } else if (rule == "harmonic") {
      f = series::partial_sums(
          [](int k) { return xnum::ExtComplex(std::complex<double>(1.0 / (k + 1), 0.0)); }, n);
    } else if (rule == "inv-factorial") {
      f = series::partial_sums(
          [](int k) { return xnum::ExtComplex(xnum::ExtScalar::from_ln(-std::lgamma(k + 1.0))); },
          n);
    } else if (!rule.empty()) {
      throw UsageError("unknown --rule '" + rule + "' (ones | harmonic | inv-factorial)");
    } else if (params.contains("coeffs_file")) {
      f = load_coeffseq(params.at("coeffs_file").get<std::string>());
    } else {
      throw UsageError("custom-rule needs --rule or --coeffs-file");
    }
    f.label = "custom-rule";
    if (params.contains("V")) f.V = params.at("V").get<double>();
  } else if (family == "tutte") {
    int n = params.at("n").get<int>();
    series::BigIntPoly p = series::tutte_connected(n);
    write_json(out_dir / "tutte_poly.json", json(p));
    outputs.push_back("tutte_poly.json");
    f = series::tutte_coeffseq(p, n);
  } else if (family == "ruelle") {
    double c = params.at("c").get<double>();
    int K = params.contains("K") ? params.at("K").get<int>()
                                 : series::ruelle_suggest_truncation(
                                       c, params.value("target_radius", 4.0));
    f = series::ruelle_zeta(c, K);
  } else if (family == "hardy") {
    f = series::hardy(params.at("a").get<double>(), params.at("K").get<int>());
  } else if (family == "random-roots-disk") {
    int n = params.at("n").get<int>();
    std::uint64_t seed = params.at("seed").get<std::uint64_t>();
    f = series::from_roots(series::random_disk_roots(n, seed), "random-roots-disk",
                           static_cast<double>(n));
  } else {
    throw UsageError("unknown family '" + family + "'");
  }

  write_json(out_dir / "coeffseq.json", json(f));
  outputs.push_back("coeffseq.json");
  return outputs;
}

// ----------------------------------------------------------------- analyze

void plot_profile(const wiman::Profile& p, const wiman::Segmentation& seg, const fs::path& path) {
  svg::Plot plot("profile: (1/V) log M(e^t) bounds");
  svg::Series lo{p.t_grid, p.lower, "#1f6fb2", "lower (max term)", false};
  svg::Series hi{p.t_grid, p.upper, "#c23b22", "upper (certified)", false};
  plot.add_series(lo);
  plot.add_series(hi);
  if (seg.detected) {
    for (const wiman::AffinePiece& pc : seg.pieces) {
      svg::Series s;
      s.x = {pc.t_from, pc.t_to};
      s.y = {pc.slope * pc.t_from + pc.intercept, pc.slope * pc.t_to + pc.intercept};
      s.color = "#2e8b57";
      s.dashed = true;
      plot.add_series(s);
    }
  }
  plot.write(path.string());
}

void plot_envelope(const convex::PiecewiseConvex& psi, const convex::PiecewiseConvex& lpsi,
                   const wiman::Profile& p, const fs::path& path) {
  svg::Plot plot("envelope psi and its conjugate");
  svg::Series s1{psi.xs, psi.ys, "#1f6fb2", "psi (envelope)", false};
  plot.add_series(s1);
  svg::Series s2;
  s2.x = p.t_grid;
  for (double t : p.t_grid) s2.y.push_back(lpsi.eval(t));
  s2.color = "#c23b22";
  s2.name = "L(psi)";
  plot.add_series(s2);
  plot.write(path.string());
}

void plot_roots(const roots::RootSet& rs, const std::vector<pipeline::CircleCheck>& circles,
                const fs::path& path) {
  svg::Plot plot("zeros and detected circles");
  plot.set_equal_axes(true);
  svg::Scatter sc;
  for (const roots::Root& r : rs.roots)
    if (std::fabs(r.modulus_log) < 20.0) sc.pts.push_back(r.point());
  if (rs.zeros_at_origin > 0) sc.pts.emplace_back(0.0, 0.0);
  sc.name = "zeros";
  plot.add_scatter(sc);
  for (const pipeline::CircleCheck& c : circles)
    plot.add_circle({0.0, 0.0, c.radius, "#c23b22"});
  plot.write(path.string());
}

std::vector<std::string> run_analyze(const json& params, const fs::path& out_dir) {
  series::CoeffSeq f = load_coeffseq(params.at("input").get<std::string>());

  pipeline::UniformityOptions uopts;
  if (params.contains("grid")) uopts.t_grid = parse_grid(params.at("grid").get<std::string>());
  if (params.contains("radius_guess"))
    uopts.radius_guess = params.at("radius_guess").get<double>();
  if (params.contains("tol_residual"))
    uopts.aberth.residual_tol_log = params.at("tol_residual").get<double>();
  pipeline::UniformityReport urep = pipeline::uniformity_report(f, uopts);

  std::vector<double> grid = urep.profile.t_grid;
  pipeline::Theorem1Report trep = pipeline::theorem1_check(f, grid);

  write_json(out_dir / "theorem1.json", json(trep));
  write_json(out_dir / "uniformity.json", json(urep));
  {
    std::ofstream csv(out_dir / "roots.csv", std::ios::binary);
    roots::write_roots_csv(urep.root_set, csv);
  }
  plot_profile(urep.profile, urep.segmentation, out_dir / "profile.svg");
  plot_envelope(trep.psi, trep.legendre_psi, trep.profile, out_dir / "envelope.svg");
  plot_roots(urep.root_set, urep.circles, out_dir / "roots.svg");

  if (!urep.root_set.converged)
    throw std::runtime_error("root solve did not converge; outputs written for inspection");
  return {"theorem1.json", "uniformity.json", "roots.csv",
          "profile.svg",   "envelope.svg",    "roots.svg"};
}

// ---------------------------------------------------- compare-derivative

std::vector<std::string> run_compare_derivative(const json& params, const fs::path& out_dir) {
  series::CoeffSeq f = load_coeffseq(params.at("input").get<std::string>());
  pipeline::DerivativeOptions opts;
  if (params.contains("tol_residual"))
    opts.aberth.residual_tol_log = params.at("tol_residual").get<double>();
  pipeline::DerivativeReport rep = pipeline::derivative_comparison(f, opts);

  write_json(out_dir / "derivative.json", json(rep));
  svg::Plot plot("zeros (dots) and critical points (crosses)");
  plot.set_equal_axes(true);
  svg::Scatter zs;
  for (const roots::Root& r : rep.zeros.roots)
    if (std::fabs(r.modulus_log) < 20.0) zs.pts.push_back(r.point());
  if (rep.zeros.zeros_at_origin > 0) zs.pts.emplace_back(0.0, 0.0);
  zs.name = "zeros";
  plot.add_scatter(zs);
  svg::Scatter cs;
  for (const roots::Root& r : rep.critical_points.roots)
    if (std::fabs(r.modulus_log) < 20.0) cs.pts.push_back(r.point());
  if (rep.critical_points.zeros_at_origin > 0) cs.pts.emplace_back(0.0, 0.0);
  cs.color = "#c23b22";
  cs.cross = true;
  cs.name = "critical points";
  plot.add_scatter(cs);
  plot.write((out_dir / "overlay.svg").string());
  return {"derivative.json", "overlay.svg"};
}

// ------------------------------------------------------------ jentzsch

std::vector<std::string> run_jentzsch(const json& params, const fs::path& out_dir) {
  series::CoeffSeq f = load_coeffseq(params.at("input").get<std::string>());
  json evals = json::array();
  for (const auto& e : params.at("eps")) {
    double eps = e.get<double>();
    bool holds = pipeline::jentzsch_condition(f, eps);
    evals.push_back({{"eps", eps}, {"holds", holds}});
    std::printf("eps = %g: %s\n", eps, holds ? "holds" : "fails");
  }
  json out;
  out["schema_version"] = 1;
  out["label"] = f.label;
  out["degree"] = f.degree();
  out["evaluations"] = evals;
  write_json(out_dir / "jentzsch.json", out);
  return {"jentzsch.json"};
}

// -------------------------------------------------------------- dispatch

std::vector<std::string> dispatch(const std::string& command, const json& params,
                                  const fs::path& out_dir) {
  fs::create_directories(out_dir);
  std::vector<std::string> outputs;
  if (command == "generate") {
    outputs = run_generate(params, out_dir);
  } else if (command == "analyze") {
    outputs = run_analyze(params, out_dir);
  } else if (command == "compare-derivative") {
    outputs = run_compare_derivative(params, out_dir);
  } else if (command == "jentzsch-check") {
    outputs = run_jentzsch(params, out_dir);
  } else {
    throw UsageError("unknown command in manifest: " + command);
  }
  write_manifest(out_dir, command, params, outputs);
  return outputs;
}

int run_verify(const fs::path& manifest_path, fs::path scratch) {
  json m = read_json(manifest_path);
  fs::path base = manifest_path.parent_path();
  if (scratch.empty()) scratch = base / "verify-scratch";
  fs::remove_all(scratch);

  std::string command = m.at("command").get<std::string>();
  dispatch(command, m.at("params"), scratch);

  std::vector<std::string> files = m.at("outputs").get<std::vector<std::string>>();
  files.push_back("manifest.json");
  bool all_ok = true;
  for (const std::string& name : files) {
    std::ifstream a(base / name, std::ios::binary);
    std::ifstream b(scratch / name, std::ios::binary);
    bool ok = a.good() && b.good();
    if (ok) {
      std::stringstream sa, sb;
      sa << a.rdbuf();
      sb << b.rdbuf();
      ok = sa.str() == sb.str();
    }
    std::printf("%s: %s\n", name.c_str(), ok ? "identical" : "MISMATCH");
    all_ok = all_ok && ok;
  }
  fs::remove_all(scratch);
  return all_ok ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"zeroscope: coefficients, maximum modulus and zero distributions"};
  app.require_subcommand(1);

  // generate
  auto* gen = app.add_subcommand("generate", "generate a coefficient family");
  std::string g_family, g_rule, g_coeffs_file, g_out = "out";
  int g_n = 0, g_K = 0;
  double g_c = 0.0, g_a = 0.0, g_V = 0.0, g_target_radius = 4.0;
  std::uint64_t g_seed = 1;
  bool g_auto_k = false;
  gen->add_option("--family", g_family,
                  "geometric-partial-sum | custom-rule | tutte | ruelle | hardy | random-roots-disk")
      ->required();
  gen->add_option("--n", g_n, "family index / degree");
  gen->add_option("--rule", g_rule, "built-in rule for custom-rule: ones | harmonic | inv-factorial");
  gen->add_option("--coeffs-file", g_coeffs_file, "CoeffSeq JSON to rewrap (custom-rule)");
  gen->add_option("--V", g_V, "override the normalization V (custom-rule)");
  gen->add_option("--c", g_c, "parameter c < -2 (ruelle)");
  gen->add_option("--K", g_K, "truncation order (ruelle, hardy)");
  gen->add_flag("--auto-K", g_auto_k, "pick K from the tail rule (ruelle)");
  gen->add_option("--target-radius", g_target_radius, "radius the tail rule protects (ruelle)");
  gen->add_option("--a", g_a, "parameter 0 < a < 1 (hardy)");
  gen->add_option("--seed", g_seed, "PRNG seed (random-roots-disk; mt19937_64)");
  gen->add_option("--out", g_out, "output directory");

  // analyze
  auto* ana = app.add_subcommand("analyze", "profile, envelope, detector and zeros");
  std::string a_input, a_grid, a_out = "out";
  double a_tol_residual = 0.0, a_radius_guess = 0.0;
  bool a_has_tol = false, a_has_guess = false;
  ana->add_option("--input", a_input, "CoeffSeq JSON file")->required();
  ana->add_option("--grid", a_grid, "t_min:t_max:n profile grid");
  ana->add_option("--tol-residual", a_tol_residual, "log residual tolerance for the solver")
      ->each([&](const std::string&) { a_has_tol = true; });
  ana->add_option("--radius-guess", a_radius_guess, "override detected circles with this radius")
      ->each([&](const std::string&) { a_has_guess = true; });
  ana->add_option("--out", a_out, "output directory");

  // compare-derivative
  auto* cmp = app.add_subcommand("compare-derivative", "zeros of f against zeros of f'");
  std::string c_input, c_out = "out";
  double c_tol_residual = 0.0;
  bool c_has_tol = false;
  cmp->add_option("--input", c_input, "CoeffSeq JSON file")->required();
  cmp->add_option("--tol-residual", c_tol_residual, "log residual tolerance for the solver")
      ->each([&](const std::string&) { c_has_tol = true; });
  cmp->add_option("--out", c_out, "output directory");

  // jentzsch-check
  auto* jen = app.add_subcommand("jentzsch-check", "boundary-window coefficient condition");
  std::string j_input, j_out = "out";
  std::vector<double> j_eps{0.05, 0.1, 0.2};
  jen->add_option("--input", j_input, "CoeffSeq JSON file")->required();
  jen->add_option("--eps", j_eps, "epsilon values to evaluate");
  jen->add_option("--out", j_out, "output directory");

  // verify
  auto* ver = app.add_subcommand("verify", "re-run a manifest and diff the outputs");
  std::string v_manifest, v_scratch;
  ver->add_option("--manifest", v_manifest, "manifest.json of a previous run")->required();
  ver->add_option("--scratch", v_scratch, "scratch directory for the re-run");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) return app.exit(e);  // --help
    app.exit(e);
    return 2;
  }

  try {
    if (gen->parsed()) {
      json params;
      params["family"] = g_family;
      if (gen->count("--n")) params["n"] = g_n;
      if (!g_rule.empty()) params["rule"] = g_rule;
      if (!g_coeffs_file.empty()) params["coeffs_file"] = g_coeffs_file;
      if (gen->count("--V")) params["V"] = g_V;
      if (gen->count("--c")) params["c"] = g_c;
      if (gen->count("--K")) params["K"] = g_K;
      if (gen->count("--a")) params["a"] = g_a;
      if (g_family == "random-roots-disk") params["seed"] = g_seed;
      if (g_auto_k) params["target_radius"] = g_target_radius;
      dispatch("generate", params, g_out);
    } else if (ana->parsed()) {
      json params;
      params["input"] = a_input;
      if (!a_grid.empty()) params["grid"] = a_grid;
      if (a_has_tol) params["tol_residual"] = a_tol_residual;
      if (a_has_guess) params["radius_guess"] = a_radius_guess;
      dispatch("analyze", params, a_out);
    } else if (cmp->parsed()) {
      json params;
      params["input"] = c_input;
      if (c_has_tol) params["tol_residual"] = c_tol_residual;
      dispatch("compare-derivative", params, c_out);
    } else if (jen->parsed()) {
      json params;
      params["input"] = j_input;
      params["eps"] = j_eps;
      dispatch("jentzsch-check", params, j_out);
    } else if (ver->parsed()) {
      return run_verify(v_manifest, v_scratch);
    }
  } catch (const UsageError& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return 2;
  } catch (const std::invalid_argument& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return 2;
  } catch (const std::exception& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return 1;
  }
  return 0;
}
