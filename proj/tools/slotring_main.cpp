// Copyright (c) the slotring developers.
// SPDX-License-Identifier: Apache-2.0
//
// Command-line front-end: wires config files to the library modules, runs
// sweeps on a worker pool, and emits deterministic CSV/JSON artifacts.
// Exit codes: 0 success, 2 config/validation, 3 I/O, 4 numerical.

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cstdio>
#include <ctime>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <thread>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "slotring/chirality.hpp"
#include "slotring/config.hpp"
#include "slotring/dynamics.hpp"
#include "slotring/field_analysis.hpp"
#include "slotring/field_map.hpp"
#include "slotring/resonator.hpp"
#include "slotring/synth.hpp"

namespace fs = std::filesystem;
using nlohmann::json;
using namespace slotring;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitConfig = 2;
constexpr int kExitIo = 3;
constexpr int kExitNumeric = 4;

std::string fmt17(double v) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

struct RunContext {
  fs::path config_path;
  fs::path config_dir;
  fs::path out_dir;
  unsigned threads = 0;  // 0 = hardware default
  json cfg;
};

// relative input paths: current directory first, then beside the config
fs::path resolve(const RunContext& ctx, const std::string& rel) {
  fs::path p(rel);
  if (p.is_absolute()) return p;
  if (fs::exists(p)) return p;
  return ctx.config_dir / p;
}

std::ofstream open_out(const RunContext& ctx, const std::string& name) {
  std::error_code ec;
  fs::create_directories(ctx.out_dir, ec);
  std::ofstream os(ctx.out_dir / name);
  if (!os) throw io_error("cannot write " + (ctx.out_dir / name).string());
  return os;
}

// Metadata (including the wall-clock stamp) lives in this sidecar only;
// data files stay byte-identical across runs.
void write_sidecar(const RunContext& ctx, const std::string& subcommand) {
  json meta;
  meta["tool"] = "slotring";
  meta["subcommand"] = subcommand;
  meta["config"] = ctx.config_path.string();
  const auto now = std::chrono::system_clock::now();
  const std::time_t tt = std::chrono::system_clock::to_time_t(now);
  char stamp[32];
  std::strftime(stamp, sizeof(stamp), "%Y-%m-%dT%H:%M:%SZ", std::gmtime(&tt));
  meta["generated_utc"] = stamp;
  auto os = open_out(ctx, "run_meta.json");
  os << meta.dump(2) << "\n";
}

ProjectConfig resolve_project(const RunContext& ctx) {
  if (ctx.cfg.contains("project"))
    return project_config_from_json(ctx.cfg.at("project"));
  return preset(ctx.cfg.value("preset", std::string("gap")));
}

template <typename Fn>
void parallel_for(std::size_t n, unsigned threads, Fn&& fn) {
  unsigned nt = threads ? threads : std::thread::hardware_concurrency();
  nt = std::max(1u, std::min<unsigned>(nt, static_cast<unsigned>(n ? n : 1)));
  if (nt == 1 || n < 2) {
    for (std::size_t i = 0; i < n; ++i) fn(i);
    return;
  }
  std::vector<std::thread> pool;
  std::atomic<std::size_t> next{0};
  for (unsigned t = 0; t < nt; ++t) {
    pool.emplace_back([&]() {
      for (std::size_t i = next.fetch_add(1); i < n; i = next.fetch_add(1)) fn(i);
    });
  }
  for (auto& th : pool) th.join();
}

// --- dynamics / sweep-q -----------------------------------------------------

struct QPoint {
  double q = 0.0;
  CouplingParams params{};
  RegimeReport regime{};
};

QPoint eval_q_point(const ProjectConfig& base, double q) {
  QPoint pt;
  pt.q = q;
  // losses scale gamma_cav = omega/Q while V_eff stays fixed, so chi scales
  // proportionally to Q from the config anchor
  const double chi = base.chi * q / base.mode.q();
  CavityMode mode = make_cavity_mode(base.mode.omega_cav, base.mode.omega_cav / q,
                                     base.mode.m, std::nullopt, base.mode.v_eff,
                                     base.mode.n_eff);
  EmitterSpec emitter = base.emitter;
  emitter.omega_e = base.mode.omega_cav;  // resonant sweep
  pt.params = coupling_params(emitter, mode, chi);
  pt.regime = classify_regime(pt.params);
  return pt;
}

double auto_t_max(const QPoint& pt) {
  if (pt.regime.regime == Regime::STRONG) {
    return 8.0 / pt.params.gamma.real();
  }
  const double rate = pt.regime.decay_rate.value_or(0.0);
  if (rate > 0.0) return 5.0 / rate;
  return 10.0 / pt.params.gamma.real();
}

std::string q_label(double q) {
  char buf[32];
  if (q == std::floor(q) && std::abs(q) < 1e9)
    std::snprintf(buf, sizeof(buf), "%.0f", q);
  else
    std::snprintf(buf, sizeof(buf), "%g", q);
  return buf;
}

int cmd_dynamics(const RunContext& ctx) {
  const auto project = resolve_project(ctx);
  const json block = ctx.cfg.value("dynamics", json::object());
  std::vector<double> q_values;
  if (block.contains("q_values"))
    q_values = block.at("q_values").get<std::vector<double>>();
  const std::size_t samples = block.value("samples", 2000);

  std::vector<QPoint> pts(q_values.size());
  std::vector<DecayCurve> curves(q_values.size());
  parallel_for(q_values.size(), ctx.threads, [&](std::size_t i) {
    pts[i] = eval_q_point(project, q_values[i]);
    double t_max = block.value("t_max_s", 0.0);
    if (!(t_max > 0.0)) t_max = auto_t_max(pts[i]);
    curves[i] = decay_analytic(pts[i].params, uniform_times(t_max, samples));
  });

  // single collector writes all files in input order
  for (std::size_t i = 0; i < q_values.size(); ++i) {
    auto os = open_out(ctx, "decay_q" + q_label(q_values[i]) + ".csv");
    os << "t_s,re_Ce,im_Ce,prob\n";
    const auto& c = curves[i];
    for (std::size_t j = 0; j < c.times.size(); ++j)
      os << fmt17(c.times[j]) << "," << fmt17(c.amplitudes[j].real()) << ","
         << fmt17(c.amplitudes[j].imag()) << "," << fmt17(c.probabilities[j])
         << "\n";
  }
  auto os = open_out(ctx, "dynamics_summary.csv");
  os << "q,regime,rabi_visible,decay_rate_rad_s,rabi_omega_rad_s\n";
  for (const auto& pt : pts) {
    os << q_label(pt.q) << ","
       << (pt.regime.regime == Regime::STRONG ? "STRONG" : "WEAK") << ","
       << (pt.regime.rabi_visible ? "true" : "false") << ","
       << (pt.regime.decay_rate ? fmt17(*pt.regime.decay_rate) : "") << ","
       << (pt.regime.rabi_omega ? fmt17(*pt.regime.rabi_omega) : "") << "\n";
  }
  write_sidecar(ctx, "dynamics");
  return kExitOk;
}

int cmd_sweep_q(const RunContext& ctx) {
  const auto project = resolve_project(ctx);
  const json block = ctx.cfg.value("sweep_q", json::object());
  const double q_min = block.value("q_min", 49.0);
  const double q_max = block.value("q_max", 27900.0);
  const std::size_t points = block.value("points", 200);
  if (!(q_max > q_min) || points < 2)
    throw validation_error("sweep_q: need q_max > q_min and points >= 2");

  std::vector<double> qs(points);
  for (std::size_t i = 0; i < points; ++i) {
    // logarithmic grid; regime boundaries span decades of Q
    const double t = static_cast<double>(i) / static_cast<double>(points - 1);
    qs[i] = q_min * std::pow(q_max / q_min, t);
  }
  std::vector<QPoint> pts(points);
  parallel_for(points, ctx.threads, [&](std::size_t i) {
    pts[i] = eval_q_point(project, qs[i]);
  });

  auto os = open_out(ctx, "qsweep.csv");
  os << "q,chi,k0_rad2_s2,re_gamma_sq_rad2_s2,regime,rabi_visible\n";
  for (const auto& pt : pts) {
    const double g2 = pt.params.gamma.real() * pt.params.gamma.real();
    os << fmt17(pt.q) << "," << fmt17(pt.params.chi) << "," << fmt17(pt.params.k0)
       << "," << fmt17(g2) << ","
       << (pt.regime.regime == Regime::STRONG ? "STRONG" : "WEAK") << ","
       << (pt.regime.rabi_visible ? "true" : "false") << "\n";
  }

  // bisection for the K0 = Gamma^2 crossing
  auto excess = [&](double q) {
    const auto pt = eval_q_point(project, q);
    return pt.params.k0 - pt.params.gamma.real() * pt.params.gamma.real();
  };
  json report;
  double lo = q_min, hi = q_max;
  if (excess(lo) * excess(hi) < 0.0) {
    for (int it = 0; it < 200; ++it) {
      const double mid = std::sqrt(lo * hi);
      if (excess(lo) * excess(mid) <= 0.0)
        hi = mid;
      else
        lo = mid;
      if (hi / lo - 1.0 < 1e-12) break;
    }
    report["q_crossing"] = std::sqrt(lo * hi);
  } else {
    report["q_crossing"] = nullptr;
  }
  auto ros = open_out(ctx, "qsweep_report.json");
  ros << report.dump(2) << "\n";
  write_sidecar(ctx, "sweep-q");
  return kExitOk;
}

// --- spectrum / qbudget ------------------------------------------------------

int cmd_spectrum(const RunContext& ctx) {
  const auto project = resolve_project(ctx);
  const json block = ctx.cfg.value("spectrum", json::object());
  const double center = block.value("center_hz", rad_to_hz(project.mode.omega_cav));
  const double span = block.value("span_hz", 40.0 * rad_to_hz(project.mode.gamma_cav));
  const std::size_t points = block.value("points", 4001);
  const int n_modes = block.value("n_modes", 1);
  const double fsr = block.value("fsr_hz", 1e13);
  if (points < 2 || n_modes < 1 || !(span > 0.0))
    throw validation_error("spectrum: invalid grid");

  std::vector<CavityMode> modes;
  for (int k = 0; k < n_modes; ++k) {
    const double off = (static_cast<double>(k) - (n_modes - 1) / 2.0) * fsr;
    modes.push_back(make_cavity_mode(hz_to_rad(center + off),
                                     project.mode.gamma_cav,
                                     project.mode.m + k));
  }
  std::vector<double> freqs(points);
  for (std::size_t i = 0; i < points; ++i)
    freqs[i] = center - span / 2.0 +
               span * static_cast<double>(i) / static_cast<double>(points - 1);
  const auto spectrum = transmission_comb(modes, freqs);

  auto os = open_out(ctx, "spectrum.csv");
  os << "frequency_hz,transmission\n";
  for (std::size_t i = 0; i < points; ++i)
    os << fmt17(freqs[i]) << "," << fmt17(spectrum[i]) << "\n";
  write_sidecar(ctx, "spectrum");
  return kExitOk;
}

int cmd_qbudget(const RunContext& ctx) {
  const json block = ctx.cfg.value("qbudget", json::object());
  std::optional<double> q_rad, q_scat, q_abs;
  if (block.contains("q_rad")) q_rad = block.at("q_rad").get<double>();
  if (block.contains("q_scat")) q_scat = block.at("q_scat").get<double>();
  if (block.contains("roughness")) {
    const auto& r = block.at("roughness");
    RoughnessSpec spec{r.at("sigma_rms_m").get<double>(),
                       r.at("l_corr_m").get<double>(),
                       r.value("wavelength_m", 760e-9)};
    const auto res = q_scat_rayleigh(spec);
    if (res.wavelength_flagged)
      std::cerr << "qbudget: Q_scat calibration holds at 760 nm; result flagged\n";
    q_scat = res.q_scat;
  }
  if (block.contains("q_abs")) q_abs = block.at("q_abs").get<double>();
  if (block.contains("kappa") && block.contains("n_group")) {
    const double wavelength = block.value("wavelength_m", 760e-9);
    const double l_prop =
        kappa_to_propagation_length(block.at("kappa").get<double>(), wavelength);
    q_abs = q_abs_from_propagation(l_prop, block.at("n_group").get<double>(),
                                   wavelength);
  }
  const auto budget = q_total(q_rad, q_scat, q_abs);

  auto os = open_out(ctx, "qbudget.csv");
  os << "channel,q\n";
  if (budget.q_rad) os << "rad," << fmt17(*budget.q_rad) << "\n";
  if (budget.q_scat) os << "scat," << fmt17(*budget.q_scat) << "\n";
  if (budget.q_abs) os << "abs," << fmt17(*budget.q_abs) << "\n";
  os << "total," << fmt17(budget.q_total) << "\n";
  write_sidecar(ctx, "qbudget");
  return kExitOk;
}

// --- field analysis ----------------------------------------------------------

int component_index(const std::string& name) {
  if (name == "r") return 0;
  if (name == "phi") return 1;
  if (name == "z") return 2;
  throw validation_error("component must be one of r, phi, z");
}

json beta_to_json(const BetaExtraction& b) {
  json j;
  j["value"] = b.beta;
  j["method"] = b.method == BetaMethod::PLATEAU ? "PLATEAU" : "ENVELOPE";
  j["source_im"] = b.source_value.imag();
  j["far_im"] = b.far_value.imag();
  j["residual"] = b.residual;
  j["decay_rate_per_rad"] = b.decay_rate_per_rad;
  j["unreliable"] = b.unreliable;
  j["detected_order"] = b.detected_order;
  return j;
}

int cmd_analyze_field(const RunContext& ctx) {
  const auto project = resolve_project(ctx);
  const json block = ctx.cfg.at("analyze_field");
  const FieldMap map = read_field_map(resolve(ctx, block.at("map").get<std::string>()));
  if (!map.source)
    throw validation_error("analyze_field: map carries no source specification");

  const double omega_e = block.contains("frequency_hz")
                             ? hz_to_rad(block.at("frequency_hz").get<double>())
                             : project.emitter.omega_e;
  const double r_trace = block.value("r_trace_m", map.source->position.r);
  const double z_trace = block.value("z_trace_m", map.source->position.z);
  const int comp = component_index(block.value("component", std::string("r")));

  const Vec3c e_src = field_at(map, map.source->position);
  const double p_dis = dissipated_power(map.source->dipole, e_src, omega_e);

  double bulk_im = 0.0;
  if (block.contains("bulk_im_e")) {
    bulk_im = block.at("bulk_im_e").get<double>();
  } else if (block.contains("bulk_map")) {
    const FieldMap bulk =
        read_field_map(resolve(ctx, block.at("bulk_map").get<std::string>()));
    if (!bulk.source)
      throw validation_error("analyze_field: bulk map carries no source");
    bulk_im = field_at(bulk, bulk.source->position)[0].imag();
  } else if (block.contains("bulk")) {
    bulk_im = bulk_im_field(block.at("bulk").at("n").get<double>(), omega_e);
  } else {
    throw validation_error(
        "analyze_field: supply bulk_im_e, bulk_map, or bulk:{n}");
  }
  const double chi = chi_from_fields(e_src[comp].imag(), bulk_im);

  const LineTrace trace = extract_line_trace(map, r_trace, z_trace, comp);
  const auto flatness = trace_flatness(trace);
  const BetaExtraction beta =
      flatness.flat ? beta_plateau(trace) : beta_envelope(trace);

  json report;
  report["p_dissipated"] = p_dis;
  report["im_e_at_source"] = e_src[comp].imag();
  report["bulk_im_e"] = bulk_im;
  report["chi"] = chi;
  report["beta"] = beta_to_json(beta);
  if (block.contains("v_eff")) {
    const auto& vb = block.at("v_eff");
    PermittivityProfile eps;
    if (vb.value("use_geometry", false)) {
      eps = permittivity_profile(project.geometry);
    } else {
      const double e0 = vb.value("eps_uniform", 1.0);
      eps = [e0](double, double) { return e0; };
    }
    report["v_eff_m3"] = effective_mode_volume(map, eps, map.source->position);
  }
  auto os = open_out(ctx, "analyze_report.json");
  os << report.dump(2) << "\n";
  write_sidecar(ctx, "analyze-field");
  if (beta.unreliable) {
    std::cerr << "analyze-field: beta extraction UNRELIABLE (residual "
              << beta.residual << ")\n";
    return kExitNumeric;
  }
  return kExitOk;
}

int cmd_ellipticity_map(const RunContext& ctx) {
  const json block = ctx.cfg.at("ellipticity_map");
  const FieldMap map = read_field_map(resolve(ctx, block.at("map").get<std::string>()));
  const auto emap = ellipticity_map(map, block.value("phi_rad", 0.0));
  auto os = open_out(ctx, "ellipticity.csv");
  os << "r_m,z_m,epsilon,ez_ok\n";
  for (std::size_t ir = 0; ir < emap.r.size(); ++ir)
    for (std::size_t iz = 0; iz < emap.z.size(); ++iz)
      os << fmt17(emap.r[ir]) << "," << fmt17(emap.z[iz]) << ","
         << fmt17(emap.at(ir, iz)) << ","
         << (emap.ez_ok[ir * emap.z.size() + iz] ? 1 : 0) << "\n";
  write_sidecar(ctx, "ellipticity-map");
  return kExitOk;
}

int cmd_directionality(const RunContext& ctx) {
  const json block = ctx.cfg.at("directionality");
  const FieldMap map = read_field_map(resolve(ctx, block.at("map").get<std::string>()));
  // default trace radius 1.463 um (where the m = 24 reference peaks sit at
  // +-16.4 rad/um), falling back to the source radius
  double r_trace = block.value("r_trace_m", 1.463e-6);
  double z_trace = block.value("z_trace_m", 0.0);
  if (!(r_trace >= map.r.front() && r_trace <= map.r.back()) && map.source)
    r_trace = map.source->position.r;
  const int comp = component_index(block.value("component", std::string("r")));
  const int m_expected = block.at("m_expected").get<int>();
  std::optional<double> beta_total;
  if (block.contains("beta_total"))
    beta_total = block.at("beta_total").get<double>();

  const LineTrace trace = extract_line_trace(map, r_trace, z_trace, comp);
  const auto spec = wavenumber_spectrum(trace);
  const auto rep = directionality(trace, m_expected, beta_total);

  auto os = open_out(ctx, "wavenumber_spectrum.csv");
  os << "wavenumber_rad_per_m,amplitude\n";
  for (std::size_t i = 0; i < spec.wavenumber.size(); ++i)
    os << fmt17(spec.wavenumber[i]) << "," << fmt17(spec.amplitude[i]) << "\n";

  json report;
  report["a_plus"] = rep.a_plus;
  report["a_minus"] = rep.a_minus;
  report["directionality"] = rep.directionality;
  report["directionality_power"] = rep.directionality_power;
  report["k_plus_rad_per_m"] = rep.k_plus;
  report["k_minus_rad_per_m"] = rep.k_minus;
  if (rep.beta_plus) {
    report["beta_plus"] = *rep.beta_plus;
    report["beta_minus"] = *rep.beta_minus;
  }
  auto ros = open_out(ctx, "directionality_report.json");
  ros << report.dump(2) << "\n";
  write_sidecar(ctx, "directionality");
  return kExitOk;
}

// --- synth -------------------------------------------------------------------

CylGrid grid_from_json(const json& g) {
  return make_grid(g.at("r_min_m").get<double>(), g.at("r_max_m").get<double>(),
                   g.at("nr").get<std::size_t>(), g.at("nphi").get<std::size_t>(),
                   g.at("z_min_m").get<double>(), g.at("z_max_m").get<double>(),
                   g.at("nz").get<std::size_t>());
}

SyntheticModeSpec mode_from_json(const json& m) {
  SyntheticModeSpec s;
  s.m = m.value("m", 24);
  s.r0 = m.at("r0_m").get<double>();
  s.z0 = m.value("z0_m", 0.0);
  s.sigma_r = m.at("sigma_r_m").get<double>();
  s.sigma_z = m.at("sigma_z_m").get<double>();
  if (m.contains("component_ratios")) {
    const auto& cr = m.at("component_ratios");
    for (int i = 0; i < 3; ++i)
      s.component_ratios[i] = cplx(cr.at(i).at(0).get<double>(),
                                   cr.at(i).at(1).get<double>());
  }
  s.asymmetry = m.value("asymmetry", 0.0);
  if (m.contains("l_prop_m") && !m.at("l_prop_m").is_null())
    s.l_prop = m.at("l_prop_m").get<double>();
  return s;
}

DipoleVector dipole_from_json(const json& d) {
  Vec3c comps{};
  const auto& c = d.at("components");
  for (int i = 0; i < 3; ++i)
    comps[i] = cplx(c.at(i).at(0).get<double>(), c.at(i).at(1).get<double>());
  return make_dipole(comps);
}

CylindricalPoint point_from_json(const json& p) {
  return {p.at("r_m").get<double>(), p.value("phi_rad", 0.0), p.value("z_m", 0.0)};
}

int cmd_synth(const RunContext& ctx) {
  const json block = ctx.cfg.at("synth");
  const std::string kind = block.at("kind").get<std::string>();
  const CylGrid grid = grid_from_json(block.at("grid"));
  FieldMap map;
  if (kind == "mode") {
    map = generate_mode_map(mode_from_json(block.at("mode")), grid);
  } else if (kind == "driven") {
    DrivenFieldSpec spec;
    spec.mode = mode_from_json(block.at("mode"));
    spec.dipole = dipole_from_json(block.at("dipole"));
    spec.position = point_from_json(block.at("position"));
    spec.beta_true = block.at("beta_true").get<double>();
    spec.chi_true = block.at("chi_true").get<double>();
    spec.bulk_n = block.value("bulk_n", 1.5);
    if (block.contains("frequency_hz"))
      spec.omega = hz_to_rad(block.at("frequency_hz").get<double>());
    map = generate_driven_map(spec, grid);
  } else if (kind == "bulk") {
    map = bulk_reference_map(block.at("n").get<double>(),
                             hz_to_rad(block.value("frequency_hz", 3.947e14)),
                             grid, point_from_json(block.at("position")));
  } else {
    throw validation_error("synth: kind must be mode, driven, or bulk");
  }
  std::error_code ec;
  fs::create_directories(ctx.out_dir, ec);
  write_field_map(map, ctx.out_dir / block.value("output", kind + ".fieldmap"));
  write_sidecar(ctx, "synth");
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"slot-waveguide ring emitter-coupling toolkit"};
  app.require_subcommand(1);

  std::string config_path;
  std::string out_dir = ".";
  unsigned threads = 0;
  app.add_option("--config", config_path, "run configuration (JSON)")->required();
  app.add_option("--out", out_dir, "output directory");
  app.add_option("--threads", threads, "worker threads for sweeps (0 = auto)");

  auto* sub_dynamics = app.add_subcommand("dynamics", "decay curves per Q plus a regime summary");
  auto* sub_sweep = app.add_subcommand("sweep-q", "fine Q sweep with the strong/weak crossing");
  auto* sub_spectrum = app.add_subcommand("spectrum", "Lorentzian transmission comb");
  auto* sub_qbudget = app.add_subcommand("qbudget", "quality-factor budget");
  auto* sub_analyze = app.add_subcommand("analyze-field", "chi/beta/V_eff from a field map");
  auto* sub_ellip = app.add_subcommand("ellipticity-map", "polarization ellipticity cross-section");
  auto* sub_dir = app.add_subcommand("directionality", "wavenumber spectrum and peak asymmetry");
  auto* sub_synth = app.add_subcommand("synth", "generate a synthetic field map");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kExitConfig;
  }

  RunContext ctx;
  ctx.config_path = config_path;
  ctx.config_dir = ctx.config_path.has_parent_path() ? ctx.config_path.parent_path()
                                                     : fs::path(".");
  ctx.out_dir = out_dir;
  ctx.threads = threads;

  try {
    {
      std::ifstream is(ctx.config_path);
      if (!is) throw io_error("cannot open config " + ctx.config_path.string());
      try {
        is >> ctx.cfg;
      } catch (const json::exception& e) {
        throw validation_error(std::string("config parse error: ") + e.what());
      }
    }
    if (sub_dynamics->parsed()) return cmd_dynamics(ctx);
    if (sub_sweep->parsed()) return cmd_sweep_q(ctx);
    if (sub_spectrum->parsed()) return cmd_spectrum(ctx);
    if (sub_qbudget->parsed()) return cmd_qbudget(ctx);
    if (sub_analyze->parsed()) return cmd_analyze_field(ctx);
    if (sub_ellip->parsed()) return cmd_ellipticity_map(ctx);
    if (sub_dir->parsed()) return cmd_directionality(ctx);
    if (sub_synth->parsed()) return cmd_synth(ctx);
    return kExitConfig;
  } catch (const io_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitIo;
  } catch (const validation_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitConfig;
  } catch (const numeric_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitNumeric;
  } catch (const json::exception& e) {
    std::cerr << "error: config: " << e.what() << "\n";
    return kExitConfig;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitNumeric;
  }
}
