// diracwg: command-line front end for the waveguide spectral library.
//
// Subcommands: transverse, dispersion, edge, spectrum, thin-sweep,
// mass-sweep, certify. Configuration comes from an optional JSON file
// (--config) with per-flag overrides; results go to stdout plus CSV/JSON/SVG
// artifacts in the output directory. Exit codes: 0 success, 2 invalid
// configuration, 3 solver non-convergence.

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <numbers>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include <Eigen/Core>

#include "CLI11.hpp"
#include "diracwg/certification.hpp"
#include "diracwg/curve_geometry.hpp"
#include "diracwg/effective_models.hpp"
#include "diracwg/eigensolve.hpp"
#include "diracwg/errors.hpp"
#include "diracwg/strip_operator.hpp"
#include "diracwg/transverse_spectrum.hpp"
#include "json.hpp"

#ifndef DIRACWG_VERSION
#define DIRACWG_VERSION "unknown"
#endif

namespace {

using json = nlohmann::ordered_json;
using namespace diracwg;
constexpr double kPi = std::numbers::pi;

struct SolverFailure : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::string fmt17(double v) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

std::string fmt6(double v) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.6g", v);
  return buf;
}

// ---------------------------------------------------------------------------
// configuration

struct RunConfig {
  std::string curve_kind = "zero";
  double kappa0 = 1.0;
  double scale = 1.0;  // L for the compact families, sigma for the Gaussian
  double epsilon = 0.1;
  double mass = 1.0;
  std::optional<double> S_override;
  int n_s = 241;
  int n_t = 81;
  int count = 2;
  double tol = 1e-8;
  int max_iter = 500;
  std::uint64_t seed = 0;
  std::optional<double> shift;
  std::string sweep_variable;
  std::vector<double> sweep_values;
  std::string out_dir = "out";
  std::set<std::string> formats = {"csv", "json"};
};

void apply_json(RunConfig& cfg, const json& j) {
  if (j.contains("curve")) {
    const json& c = j.at("curve");
    if (c.contains("kind")) cfg.curve_kind = c.at("kind").get<std::string>();
    if (c.contains("kappa0")) cfg.kappa0 = c.at("kappa0").get<double>();
    if (c.contains("L")) cfg.scale = c.at("L").get<double>();
    if (c.contains("sigma")) cfg.scale = c.at("sigma").get<double>();
  }
  if (j.contains("epsilon")) cfg.epsilon = j.at("epsilon").get<double>();
  if (j.contains("mass")) cfg.mass = j.at("mass").get<double>();
  if (j.contains("grid")) {
    const json& g = j.at("grid");
    if (g.contains("S_override")) cfg.S_override = g.at("S_override").get<double>();
    if (g.contains("n_s")) cfg.n_s = g.at("n_s").get<int>();
    if (g.contains("n_t")) cfg.n_t = g.at("n_t").get<int>();
  }
  if (j.contains("solver")) {
    const json& s = j.at("solver");
    if (s.contains("count")) cfg.count = s.at("count").get<int>();
    if (s.contains("tol")) cfg.tol = s.at("tol").get<double>();
    if (s.contains("max_iter")) cfg.max_iter = s.at("max_iter").get<int>();
    if (s.contains("seed")) cfg.seed = s.at("seed").get<std::uint64_t>();
    if (s.contains("shift")) cfg.shift = s.at("shift").get<double>();
  }
  if (j.contains("sweep")) {
    const json& s = j.at("sweep");
    if (s.contains("variable"))
      cfg.sweep_variable = s.at("variable").get<std::string>();
    if (s.contains("values"))
      cfg.sweep_values = s.at("values").get<std::vector<double>>();
  }
  if (j.contains("output")) {
    const json& o = j.at("output");
    if (o.contains("dir")) cfg.out_dir = o.at("dir").get<std::string>();
    if (o.contains("formats")) {
      cfg.formats.clear();
      for (const auto& f : o.at("formats"))
        cfg.formats.insert(f.get<std::string>());
    }
  }
}

void validate_config(const RunConfig& cfg) {
  const std::set<std::string> kinds = {"zero", "gaussian_bump",
                                       "polynomial_bump", "circular_arc"};
  if (!kinds.count(cfg.curve_kind))
    throw std::invalid_argument("unknown curve kind: " + cfg.curve_kind);
  if (cfg.epsilon <= 0) throw std::invalid_argument("epsilon must be > 0");
  if (cfg.mass < 0) throw std::invalid_argument("mass must be >= 0");
  if (cfg.count < 1) throw std::invalid_argument("solver.count must be >= 1");
  if (cfg.tol <= 0) throw std::invalid_argument("solver.tol must be > 0");
  if (cfg.max_iter < 1) throw std::invalid_argument("solver.max_iter >= 1");
  if (!std::is_sorted(cfg.sweep_values.begin(), cfg.sweep_values.end()))
    throw std::invalid_argument("sweep.values must be sorted ascending");
  for (const std::string& f : cfg.formats)
    if (f != "csv" && f != "json" && f != "svg")
      throw std::invalid_argument("unknown output format: " + f);
  if (!cfg.sweep_variable.empty() && cfg.sweep_variable != "epsilon" &&
      cfg.sweep_variable != "mass" && cfg.sweep_variable != "k")
    throw std::invalid_argument("sweep.variable must be epsilon, mass or k");
}

CurvatureProfile make_profile(const RunConfig& cfg) {
  if (cfg.curve_kind == "zero") return CurvatureProfile::zero();
  if (cfg.curve_kind == "gaussian_bump")
    return CurvatureProfile::gaussian_bump(cfg.kappa0, cfg.scale);
  if (cfg.curve_kind == "polynomial_bump")
    return CurvatureProfile::polynomial_bump(cfg.kappa0, cfg.scale);
  return CurvatureProfile::circular_arc(cfg.kappa0, cfg.scale);
}

TubeGeometry make_geometry(const RunConfig& cfg) {
  TubeGeometry geom = validate_tube(make_profile(cfg), cfg.epsilon);
  geom.truncation_S = cfg.S_override.value_or(
      std::max(8.0, 6.0 * geom.profile.support_radius()));
  return geom;
}

json resolved_config(const RunConfig& cfg) {
  json j;
  j["curve"]["kind"] = cfg.curve_kind;
  j["curve"]["kappa0"] = cfg.kappa0;
  if (cfg.curve_kind == "gaussian_bump")
    j["curve"]["sigma"] = cfg.scale;
  else
    j["curve"]["L"] = cfg.scale;
  j["epsilon"] = cfg.epsilon;
  j["mass"] = cfg.mass;
  if (cfg.S_override) j["grid"]["S_override"] = *cfg.S_override;
  j["grid"]["n_s"] = cfg.n_s;
  j["grid"]["n_t"] = cfg.n_t;
  j["solver"]["count"] = cfg.count;
  j["solver"]["tol"] = cfg.tol;
  j["solver"]["max_iter"] = cfg.max_iter;
  j["solver"]["seed"] = cfg.seed;
  if (cfg.shift) j["solver"]["shift"] = *cfg.shift;
  if (!cfg.sweep_variable.empty()) {
    j["sweep"]["variable"] = cfg.sweep_variable;
    j["sweep"]["values"] = cfg.sweep_values;
  }
  j["output"]["dir"] = cfg.out_dir;
  j["output"]["formats"] = cfg.formats;
  return j;
}

// ---------------------------------------------------------------------------
// artifact emission

void write_text(const std::filesystem::path& path, const std::string& body) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot open " + path.string());
  out << body;
  if (!out) throw std::runtime_error("write failed: " + path.string());
}

void emit_csv(const RunConfig& cfg, const std::string& name,
              const std::vector<std::string>& header,
              const std::vector<std::vector<std::string>>& rows) {
  if (!cfg.formats.count("csv")) return;
  std::string body;
  for (std::size_t i = 0; i < header.size(); ++i)
    body += (i ? "," : "") + header[i];
  body += "\n";
  for (const auto& row : rows) {
    for (std::size_t i = 0; i < row.size(); ++i)
      body += (i ? "," : "") + row[i];
    body += "\n";
  }
  write_text(std::filesystem::path(cfg.out_dir) / (name + ".csv"), body);
}

void emit_json(const RunConfig& cfg, const std::string& name, json results) {
  if (!cfg.formats.count("json")) return;
  json j;
  j["version"] = DIRACWG_VERSION;
  j["subcommand"] = name;
  j["config"] = resolved_config(cfg);
  j["results"] = std::move(results);
  write_text(std::filesystem::path(cfg.out_dir) / (name + ".json"),
             j.dump(2) + "\n");
}

struct Series {
  std::string label;
  std::vector<double> y;
};

// minimal static line plot; deterministic output, parses as XML
void emit_svg(const RunConfig& cfg, const std::string& name,
              const std::string& title, const std::string& xlabel,
              const std::string& ylabel, const std::vector<double>& x,
              const std::vector<Series>& series) {
  if (!cfg.formats.count("svg") || x.size() < 2) return;
  const double W = 640, H = 480, ml = 70, mr = 20, mt = 40, mb = 50;
  double xmin = x.front(), xmax = x.back();
  double ymin = 1e300, ymax = -1e300;
  for (const Series& s : series)
    for (double v : s.y) {
      ymin = std::min(ymin, v);
      ymax = std::max(ymax, v);
    }
  if (ymax <= ymin) ymax = ymin + 1.0;
  if (xmax <= xmin) xmax = xmin + 1.0;
  auto px = [&](double v) {
    return ml + (v - xmin) / (xmax - xmin) * (W - ml - mr);
  };
  auto py = [&](double v) {
    return H - mb - (v - ymin) / (ymax - ymin) * (H - mt - mb);
  };
  const char* colors[] = {"#1f77b4", "#d62728", "#2ca02c", "#9467bd"};
  std::string s;
  s += "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
  s += "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"640\" "
       "height=\"480\" viewBox=\"0 0 640 480\">\n";
  s += "<rect width=\"640\" height=\"480\" fill=\"white\"/>\n";
  s += "<text x=\"320\" y=\"24\" text-anchor=\"middle\" font-size=\"16\">" +
       title + "</text>\n";
  s += "<line x1=\"" + fmt6(ml) + "\" y1=\"" + fmt6(H - mb) + "\" x2=\"" +
       fmt6(W - mr) + "\" y2=\"" + fmt6(H - mb) +
       "\" stroke=\"black\"/>\n";
  s += "<line x1=\"" + fmt6(ml) + "\" y1=\"" + fmt6(mt) + "\" x2=\"" +
       fmt6(ml) + "\" y2=\"" + fmt6(H - mb) + "\" stroke=\"black\"/>\n";
  s += "<text x=\"320\" y=\"470\" text-anchor=\"middle\" font-size=\"13\">" +
       xlabel + "</text>\n";
  s += "<text x=\"16\" y=\"240\" text-anchor=\"middle\" font-size=\"13\" "
       "transform=\"rotate(-90 16 240)\">" +
       ylabel + "</text>\n";
  s += "<text x=\"" + fmt6(ml) + "\" y=\"" + fmt6(H - mb + 18) +
       "\" font-size=\"11\">" + fmt6(xmin) + "</text>\n";
  s += "<text x=\"" + fmt6(W - mr) + "\" y=\"" + fmt6(H - mb + 18) +
       "\" text-anchor=\"end\" font-size=\"11\">" + fmt6(xmax) + "</text>\n";
  s += "<text x=\"" + fmt6(ml - 6) + "\" y=\"" + fmt6(H - mb) +
       "\" text-anchor=\"end\" font-size=\"11\">" + fmt6(ymin) + "</text>\n";
  s += "<text x=\"" + fmt6(ml - 6) + "\" y=\"" + fmt6(mt + 4) +
       "\" text-anchor=\"end\" font-size=\"11\">" + fmt6(ymax) + "</text>\n";
  for (std::size_t k = 0; k < series.size(); ++k) {
    s += "<polyline fill=\"none\" stroke=\"";
    s += colors[k % 4];
    s += "\" stroke-width=\"1.5\" points=\"";
    for (std::size_t i = 0; i < x.size() && i < series[k].y.size(); ++i)
      s += fmt6(px(x[i])) + "," + fmt6(py(series[k].y[i])) + " ";
    s += "\"/>\n";
    s += "<text x=\"" + fmt6(W - mr - 4) + "\" y=\"" +
         fmt6(mt + 16 + 14 * static_cast<double>(k)) +
         "\" text-anchor=\"end\" font-size=\"12\" fill=\"";
    s += colors[k % 4];
    s += "\">" + series[k].label + "</text>\n";
  }
  s += "</svg>\n";
  write_text(std::filesystem::path(cfg.out_dir) / (name + ".svg"), s);
}

// ---------------------------------------------------------------------------
// solving with an automatic shift-invert target

SpectralResult solve_below_edge(const AssembledForms& forms,
                                const RunConfig& cfg, double edge2) {
  SolveOptions opt;
  opt.count = cfg.count;
  opt.tol = cfg.tol;
  opt.max_iter = cfg.max_iter;
  opt.seed = cfg.seed;
  opt.precond = Preconditioner::ShiftInvert;
  std::vector<double> shifts;
  if (cfg.shift) {
    shifts = {*cfg.shift};
  } else {
    shifts = {edge2 - 0.05, edge2 - 0.5, 0.75 * edge2, 0.25 * edge2};
  }
  for (double sigma : shifts) {
    opt.shift = sigma;
    SpectralResult r;
    try {
      r = lowest_pairs(forms, opt);
    } catch (const IndefiniteMass&) {
      continue;  // shift landed above the lowest eigenvalue; retreat
    }
    if (r.all_converged() && r.eigenvalues.front() > sigma) return r;
  }
  throw SolverFailure("eigensolver did not converge for any shift");
}

// ---------------------------------------------------------------------------
// subcommands

int run_transverse(const RunConfig& cfg, int p_lo, int p_hi) {
  if (p_lo < 1 || p_hi < p_lo)
    throw std::invalid_argument("transverse: need 1 <= p_lo <= p_hi");
  const double mu = cfg.mass * cfg.epsilon;
  std::vector<std::vector<std::string>> rows;
  json jr = json::array();
  std::printf("# transverse roots, mass*epsilon = %s\n", fmt17(mu).c_str());
  std::printf("%4s %24s %12s\n", "p", "E_p", "residual");
  for (int p = p_lo; p <= p_hi; ++p) {
    const TransverseRoot r = solve_root(mu, p);
    rows.push_back({std::to_string(p), fmt17(r.E), fmt17(r.residual),
                    fmt17(r.bracket_lo), fmt17(r.bracket_hi)});
    jr.push_back({{"p", p},
                  {"E", r.E},
                  {"residual", r.residual},
                  {"bracket_lo", r.bracket_lo},
                  {"bracket_hi", r.bracket_hi}});
    std::printf("%4d %24.16g %12.3g\n", p, r.E, r.residual);
  }
  json res;
  res["roots"] = jr;
  res["asymptotics"]["small_mass_check_1e-3"] = small_mass_check(1e-3);
  res["asymptotics"]["large_mass_check_1e3"] = large_mass_check(1e3);
  emit_csv(cfg, "transverse", {"p", "E_p", "residual", "bracket_lo", "bracket_hi"},
           rows);
  emit_json(cfg, "transverse", res);
  return 0;
}

int run_dispersion(const RunConfig& cfg, double kmin, double kmax, int knum,
                   int p_hi) {
  if (knum < 2 || kmax <= kmin || p_hi < 1)
    throw std::invalid_argument("dispersion: bad k grid or band count");
  const double mu = cfg.mass * cfg.epsilon;
  std::vector<double> ks;
  if (cfg.sweep_variable == "k" && !cfg.sweep_values.empty()) {
    ks = cfg.sweep_values;
  } else {
    for (int i = 0; i < knum; ++i)
      ks.push_back(kmin + (kmax - kmin) * i / (knum - 1.0));
  }
  std::vector<std::vector<std::string>> rows;
  std::vector<Series> series;
  for (int p = 1; p <= p_hi; ++p) {
    Series plus{"+sqrt(m^2+k^2+E_" + std::to_string(p) + ")", {}};
    Series minus{"-sqrt(m^2+k^2+E_" + std::to_string(p) + ")", {}};
    for (double k : ks) {
      const DispersionPoint d = dispersion(k, mu, p);
      rows.push_back({fmt17(k), std::to_string(p), fmt17(d.lambda_minus),
                      fmt17(d.lambda_plus), fmt17(d.E)});
      plus.y.push_back(d.lambda_plus);
      minus.y.push_back(d.lambda_minus);
    }
    series.push_back(plus);
    series.push_back(minus);
  }
  std::printf("# dispersion: %zu k-points, %d band pair(s)\n", ks.size(),
              p_hi);
  emit_csv(cfg, "dispersion", {"k", "p", "lambda_minus", "lambda_plus", "E_p"},
           rows);
  json res;
  res["k_count"] = ks.size();
  res["p_max"] = p_hi;
  emit_json(cfg, "dispersion", res);
  emit_svg(cfg, "dispersion", "fiber dispersion", "k", "lambda", ks, series);
  return 0;
}

int run_edge(const RunConfig& cfg) {
  const double edge = essential_edge(cfg.epsilon, cfg.mass);
  const double edge2 =
      solve_root(cfg.mass * cfg.epsilon, 1).E / (cfg.epsilon * cfg.epsilon);
  const double renorm = edge - kPi / (4 * cfg.epsilon);
  std::printf("essential edge            = %.16g\n", edge);
  std::printf("shifted square-form edge  = %.16g\n", edge2);
  std::printf("edge - pi/(4 eps)         = %.16g\n", renorm);
  std::printf("thin-width limit 2m/pi    = %.16g\n", effective_mass(cfg.mass));
  emit_csv(cfg, "edge", {"epsilon", "mass", "edge", "edge_squared_shifted",
                         "renormalized", "limit_2m_over_pi"},
           {{fmt17(cfg.epsilon), fmt17(cfg.mass), fmt17(edge), fmt17(edge2),
             fmt17(renorm), fmt17(effective_mass(cfg.mass))}});
  json res;
  res["edge"] = edge;
  res["edge_squared_shifted"] = edge2;
  res["renormalized"] = renorm;
  res["limit_2m_over_pi"] = effective_mass(cfg.mass);
  emit_json(cfg, "edge", res);
  return 0;
}

int run_spectrum(const RunConfig& cfg) {
  const TubeGeometry geom = make_geometry(cfg);
  const StripGrid grid = make_strip_grid(geom.truncation_S, cfg.n_s, cfg.n_t);
  const double eps = cfg.epsilon;
  const double edge2 = solve_root(cfg.mass * eps, 1).E / (eps * eps);
  const AssembledForms forms = assemble_square_form(geom, cfg.mass, grid);
  std::fprintf(stderr, "spectrum: %d free dofs, edge^2 shift %.10g\n",
               forms.free_dim(), edge2);
  const SpectralResult r = solve_below_edge(forms, cfg, edge2);

  // multiplicity by clustering within a scale-aware tolerance
  const double cluster = std::max(1e-8, 100 * cfg.tol) * std::max(1.0, edge2);
  std::vector<int> multiplicity(r.eigenvalues.size(), 1);
  for (std::size_t i = 0; i < r.eigenvalues.size();) {
    std::size_t j = i + 1;
    while (j < r.eigenvalues.size() &&
           r.eigenvalues[j] - r.eigenvalues[i] < cluster)
      ++j;
    for (std::size_t k = i; k < j; ++k)
      multiplicity[k] = static_cast<int>(j - i);
    i = j;
  }

  std::vector<std::vector<std::string>> rows;
  json jev = json::array();
  int below = 0;
  for (std::size_t i = 0; i < r.eigenvalues.size(); ++i) {
    const bool is_below = r.eigenvalues[i] < edge2;
    below += is_below;
    rows.push_back({std::to_string(i + 1), fmt17(r.eigenvalues[i]),
                    fmt17(r.residuals[i]), is_below ? "1" : "0",
                    std::to_string(multiplicity[i])});
    jev.push_back({{"index", i + 1},
                   {"eigenvalue", r.eigenvalues[i]},
                   {"residual", r.residuals[i]},
                   {"below_edge", is_below},
                   {"multiplicity", multiplicity[i]}});
    std::printf("mu_%zu = %.16g  residual %.3g  %s\n", i + 1,
                r.eigenvalues[i], r.residuals[i],
                is_below ? "below edge" : "essential-edge cluster");
  }
  if (below == 0)
    std::printf("no discrete eigenvalues below the essential edge\n");
  else
    std::printf("%d eigenvalue(s) below the essential edge\n", below);

  emit_csv(cfg, "spectrum",
           {"index", "eigenvalue", "residual", "below_edge", "multiplicity"},
           rows);
  json res;
  res["edge_squared_shifted"] = edge2;
  res["below_edge_count"] = below;
  res["iterations"] = r.iterations;
  res["eigenvalues"] = jev;
  emit_json(cfg, "spectrum", res);
  return 0;
}

int run_thin_sweep(const RunConfig& cfg) {
  std::vector<double> eps_list = cfg.sweep_values;
  if (cfg.sweep_variable != "epsilon" || eps_list.empty())
    eps_list = {1e-4, 1e-3, 1e-2};
  const double limit = effective_mass(cfg.mass);
  std::vector<std::vector<std::string>> rows;
  std::vector<double> errs;
  json jr = json::array();
  std::printf("# edge renormalization vs 2m/pi = %.16g\n", limit);
  for (double e : eps_list) {
    const double renorm = essential_edge(e, cfg.mass) - kPi / (4 * e);
    const double err = std::abs(renorm - limit);
    errs.push_back(err);
    rows.push_back({fmt17(e), fmt17(essential_edge(e, cfg.mass)),
                    fmt17(renorm), fmt17(limit), fmt17(err)});
    jr.push_back({{"epsilon", e}, {"renormalized", renorm}, {"error", err}});
    std::printf("eps = %-10.3g renorm = %.12g error = %.3g\n", e, renorm, err);
  }
  json res;
  res["rows"] = jr;
  if (errs.size() >= 2) {
    json slopes = json::array();
    for (std::size_t i = 0; i + 1 < errs.size(); ++i) {
      const double slope = std::log(errs[i + 1] / errs[i]) /
                           std::log(eps_list[i + 1] / eps_list[i]);
      slopes.push_back(slope);
      std::printf("Richardson slope %zu -> %zu: %.4g\n", i, i + 1, slope);
    }
    res["richardson_slopes"] = slopes;
  }
  emit_csv(cfg, "thin_sweep", {"epsilon", "edge", "renormalized", "limit",
                               "error"},
           rows);
  emit_json(cfg, "thin_sweep", res);
  emit_svg(cfg, "thin_sweep", "edge renormalization error", "epsilon",
           "|edge - pi/(4 eps) - 2m/pi|", eps_list, {{"error", errs}});
  return 0;
}

int run_mass_sweep(const RunConfig& cfg) {
  const TubeGeometry geom = make_geometry(cfg);
  const StripGrid grid = make_strip_grid(geom.truncation_S, cfg.n_s, cfg.n_t);
  std::vector<double> masses = cfg.sweep_values;
  if (cfg.sweep_variable != "mass" || masses.empty())
    for (double mu : {1.0, 2.0, 5.0, 10.0, 20.0, 50.0})
      masses.push_back(mu / cfg.epsilon);
  SolveOptions opt;
  opt.count = 1;
  opt.tol = cfg.tol;
  opt.max_iter = cfg.max_iter;
  opt.seed = cfg.seed;
  opt.precond = Preconditioner::ShiftInvert;
  const auto table = large_mass_gap(geom, grid, masses, opt);
  std::vector<std::vector<std::string>> rows;
  std::vector<double> gaps;
  json jr = json::array();
  std::printf("%12s %18s %18s %14s\n", "m", "mu1(q_m)", "mu1(q_inf)", "gap");
  for (const LargeMassRow& row : table) {
    rows.push_back({fmt17(row.m), fmt17(row.mu1_qm), fmt17(row.mu1_qinf),
                    fmt17(row.gap)});
    gaps.push_back(row.gap);
    jr.push_back({{"m", row.m},
                  {"mu1_qm", row.mu1_qm},
                  {"mu1_qinf", row.mu1_qinf},
                  {"gap", row.gap}});
    std::printf("%12.5g %18.10g %18.10g %14.6g\n", row.m, row.mu1_qm,
                row.mu1_qinf, row.gap);
  }
  emit_csv(cfg, "mass_sweep", {"m", "mu1_qm", "mu1_qinf", "gap"}, rows);
  json res;
  res["rows"] = jr;
  emit_json(cfg, "mass_sweep", res);
  emit_svg(cfg, "mass_sweep", "large-mass convergence", "m",
           "mu1(q_inf) - mu1(q_m)", masses, {{"gap", gaps}});
  return 0;
}

int run_certify(const RunConfig& cfg) {
  const TubeGeometry geom = make_geometry(cfg);
  const Certificate cert = certify(geom, cfg.mass);
  std::printf("I_epsilon       = %.16g\n", cert.I_epsilon);
  std::printf("condition holds = %s\n", cert.condition_holds ? "yes" : "no");
  if (std::isfinite(cert.m0_bound))
    std::printf("m0 bound        = %.16g\n", cert.m0_bound);
  else
    std::printf("m0 bound        = infinite\n");
  std::printf("predicted count >= %d at m = %.6g\n",
              cert.predicted_discrete_count_at_least, cfg.mass);
  json res;
  res["I_epsilon"] = cert.I_epsilon;
  res["condition_holds"] = cert.condition_holds;
  if (std::isfinite(cert.m0_bound)) res["m0_bound"] = cert.m0_bound;
  res["predicted_discrete_count_at_least"] =
      cert.predicted_discrete_count_at_least;
  emit_json(cfg, "certify", res);
  emit_csv(cfg, "certify",
           {"I_epsilon", "condition_holds", "m0_bound", "predicted_count"},
           {{fmt17(cert.I_epsilon), cert.condition_holds ? "1" : "0",
             std::isfinite(cert.m0_bound) ? fmt17(cert.m0_bound) : "inf",
             std::to_string(cert.predicted_discrete_count_at_least)}});
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"spectral computations for Dirac waveguides with infinite-mass "
               "walls (version " DIRACWG_VERSION ")"};
  app.require_subcommand(1);
  app.fallthrough();  // global options may follow the subcommand name

  std::string config_path;
  int threads = 1;
  RunConfig cfg;
  app.add_option("--config", config_path, "JSON configuration file");
  app.add_option("--threads", threads, "worker thread budget");

  // flags beat the config file; remember which ones were actually given
  std::string opt_outdir;
  double opt_eps = 0, opt_mass = 0;
  auto* outdir_opt =
      app.add_option("--output-dir", opt_outdir, "artifact directory");
  auto* eps_opt = app.add_option("--epsilon", opt_eps, "tube half-width");
  auto* mass_opt = app.add_option("--mass", opt_mass, "mass parameter m");

  auto* c_trans = app.add_subcommand("transverse", "transverse root table");
  std::string p_range = "1..6";
  c_trans->add_option("--p", p_range, "index range, e.g. 1..4 or 3");

  auto* c_disp = app.add_subcommand("dispersion", "fiber band structure");
  double kmin = 0.0, kmax = 3.0;
  int knum = 61, p_hi = 2;
  c_disp->add_option("--kmin", kmin);
  c_disp->add_option("--kmax", kmax);
  c_disp->add_option("--knum", knum);
  c_disp->add_option("--bands", p_hi, "number of band pairs");

  auto* c_edge = app.add_subcommand("edge", "essential spectrum edge");
  auto* c_spec = app.add_subcommand("spectrum", "discrete spectrum of the "
                                                "curved strip");
  auto* c_thin = app.add_subcommand("thin-sweep", "thin-width edge "
                                                  "renormalization");
  auto* c_mass = app.add_subcommand("mass-sweep", "large-mass Dirichlet "
                                                  "comparison");
  auto* c_cert = app.add_subcommand("certify", "bound-state certificate");

  CLI11_PARSE(app, argc, argv);

  try {
    if (!config_path.empty()) {
      std::ifstream in(config_path);
      if (!in) throw std::invalid_argument("cannot read " + config_path);
      json j;
      in >> j;
      apply_json(cfg, j);
    }
    if (eps_opt->count()) cfg.epsilon = opt_eps;
    if (mass_opt->count()) cfg.mass = opt_mass;
    if (outdir_opt->count()) cfg.out_dir = opt_outdir;
    validate_config(cfg);
    Eigen::setNbThreads(std::max(1, threads));
    std::filesystem::create_directories(cfg.out_dir);

    if (*c_trans) {
      int lo = 1, hi = 1;
      const auto dots = p_range.find("..");
      if (dots == std::string::npos) {
        lo = hi = std::stoi(p_range);
      } else {
        lo = std::stoi(p_range.substr(0, dots));
        hi = std::stoi(p_range.substr(dots + 2));
      }
      return run_transverse(cfg, lo, hi);
    }
    if (*c_disp) return run_dispersion(cfg, kmin, kmax, knum, p_hi);
    if (*c_edge) return run_edge(cfg);
    if (*c_spec) return run_spectrum(cfg);
    if (*c_thin) return run_thin_sweep(cfg);
    if (*c_mass) return run_mass_sweep(cfg);
    if (*c_cert) return run_certify(cfg);
    return 2;
  } catch (const SolverFailure& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return 3;
  } catch (const std::exception& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return 2;
  }
}
