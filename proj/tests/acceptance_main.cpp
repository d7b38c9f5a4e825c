// Copyright (c) the slotring developers.
// SPDX-License-Identifier: Apache-2.0
//
// Acceptance suite: one pass/fail line per criterion, nonzero exit on any
// failure. Usage: acceptance <cli-binary> <presets-dir>

#include <sys/wait.h>

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <random>
#include <sstream>
#include <vector>

#include <json.hpp>

#include "slotring/chirality.hpp"
#include "slotring/config.hpp"
#include "slotring/dynamics.hpp"
#include "slotring/field_analysis.hpp"
#include "slotring/resonator.hpp"
#include "slotring/synth.hpp"

namespace fs = std::filesystem;
using namespace slotring;

namespace {

int g_failures = 0;

void criterion(int num, const char* name, bool pass, const std::string& detail) {
  std::printf("[%s] criterion %d: %s — %s\n", pass ? "PASS" : "FAIL", num, name,
              detail.c_str());
  if (!pass) ++g_failures;
}

std::string fmt(double v) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.6g", v);
  return buf;
}

constexpr double kOmega = two_pi * 3.947e14;
constexpr double kGammaHom = two_pi * 30e6;
const double kQAnchor = kOmega / hz_to_rad(1.4164e10);

EmitterSpec resonant_emitter() {
  return make_emitter(kOmega, kGammaHom,
                      make_dipole({cplx(1, 0), cplx(0, 0), cplx(0, 0)}),
                      {1.44e-6, 0, 0});
}

CouplingParams params_at_q(double q) {
  const auto mode = make_cavity_mode(kOmega, kOmega / q, 24);
  return coupling_params(resonant_emitter(), mode, 1330.0 * q / kQAnchor);
}

double fitted_fwhm(const std::vector<double>& f, const std::vector<double>& t) {
  const double half = *std::max_element(t.begin(), t.end()) / 2.0;
  double left = 0.0, right = 0.0;
  for (std::size_t i = 1; i < t.size(); ++i) {
    if (t[i - 1] < half && t[i] >= half)
      left = f[i - 1] + (f[i] - f[i - 1]) * (half - t[i - 1]) / (t[i] - t[i - 1]);
    if (t[i - 1] >= half && t[i] < half)
      right = f[i - 1] + (f[i] - f[i - 1]) * (half - t[i - 1]) / (t[i] - t[i - 1]);
  }
  return right - left;
}

// --- criteria ----------------------------------------------------------------

void criterion_1_eigenfrequency() {
  const auto mode = make_cavity_mode(kOmega, hz_to_rad(2.0 * 7.082e9), 24);
  const double q = mode.q();
  bool pass = std::abs(q - 27866.0) < 1.0;
  pass = pass && std::abs(q - 27900.0) / 27900.0 < 0.002;

  std::vector<double> freqs(20001), trans;
  for (std::size_t i = 0; i < freqs.size(); ++i)
    freqs[i] = 3.947e14 - 1e11 + 2e11 * static_cast<double>(i) / (freqs.size() - 1);
  trans = transmission_comb({mode}, freqs);
  const double fwhm = fitted_fwhm(freqs, trans);
  pass = pass && std::abs(fwhm - 14.16e9) / 14.16e9 < 0.003;
  pass = pass && std::abs(fwhm - 14.2e9) / 14.2e9 < 0.003;
  criterion(1, "eigenfrequency consistency", pass,
            "Q = " + fmt(q) + ", FWHM = " + fmt(fwhm / 1e9) + " GHz");
}

void criterion_2_chi_ratio() {
  const double chi = chi_from_fields(-1.11e18, -4.55e15);
  criterion(2, "chi ratio reproduction", std::abs(chi - 244.0) <= 1.0,
            "chi = " + fmt(chi));
}

void criterion_3_threshold() {
  auto excess = [](double q) {
    const auto p = params_at_q(q);
    return p.k0 - p.gamma.real() * p.gamma.real();
  };
  double lo = 49.0, hi = 27900.0;
  for (int i = 0; i < 200; ++i) {
    const double mid = std::sqrt(lo * hi);
    (excess(mid) >= 0.0 ? hi : lo) = mid;
  }
  const double crossing = std::sqrt(lo * hi);
  criterion(3, "strong/weak threshold",
            std::abs(crossing - 8300.0) / 8300.0 < 0.03,
            "crossing at Q = " + fmt(crossing));
}

void criterion_4_dual_route() {
  double worst = 0.0;
  bool pass = true;
  for (int i = 0; i < 12; ++i) {
    const double q = 49.0 * std::pow(27900.0 / 49.0, i / 11.0);
    const auto p = params_at_q(q);
    const auto rep = classify_regime(p);
    const double t_max = rep.regime == Regime::STRONG
                             ? 8.0 / p.gamma.real()
                             : 5.0 / *rep.decay_rate;
    const auto times = uniform_times(t_max, 400);
    const auto a = decay_analytic(p, times);
    const auto o = decay_oracle(p, times);
    for (std::size_t j = 0; j < times.size(); ++j)
      worst = std::max(worst, std::abs(a.amplitudes[j] - o.amplitudes[j]));
  }
  pass = worst < 1e-6;

  // Rabi minima spacing at the reference Q
  const auto p = params_at_q(27900.0);
  const auto curve = decay_analytic(p, uniform_times(8.0 / p.gamma.real(), 8000));
  std::vector<double> minima;
  for (std::size_t i = 1; i + 1 < curve.probabilities.size(); ++i)
    if (curve.probabilities[i] < curve.probabilities[i - 1] &&
        curve.probabilities[i] < curve.probabilities[i + 1] && minima.size() < 4)
      minima.push_back(curve.times[i]);
  const double period = two_pi / p.d.imag();
  double spacing_err = 1.0;
  if (minima.size() >= 2) {
    spacing_err = 0.0;
    for (std::size_t i = 1; i < minima.size(); ++i)
      spacing_err = std::max(
          spacing_err, std::abs((minima[i] - minima[i - 1]) - period) / period);
  }
  pass = pass && spacing_err < 0.02;

  // weak-limit single-exponential rate
  const auto pw = params_at_q(49.0);
  const double expected = pw.chi * pw.gamma_hom;
  const auto times = uniform_times(2.0 / expected, 600);
  const auto weak = decay_analytic(pw, times);
  double sx = 0, sxx = 0, sy = 0, sxy = 0;
  std::size_t n = 0;
  for (std::size_t i = times.size() / 10; i < times.size(); ++i) {
    sx += times[i];
    sxx += times[i] * times[i];
    sy += std::log(weak.probabilities[i]);
    sxy += times[i] * std::log(weak.probabilities[i]);
    ++n;
  }
  const double rate = -(n * sxy - sx * sy) / (n * sxx - sx * sx);
  const double rate_err = std::abs(rate - expected) / expected;
  pass = pass && rate_err < 0.05;

  criterion(4, "dynamics dual-route", pass,
            "max |dC| = " + fmt(worst) + ", spacing err = " + fmt(spacing_err) +
                ", weak-rate err = " + fmt(rate_err));
}

void criterion_5_closed_loop() {
  struct Case {
    double beta, chi, l_prop;
  };
  const double inf = std::numeric_limits<double>::infinity();
  const std::vector<Case> cases = {{0.995, 1330.0, inf},
                                   {0.95, 243.0, 15e-6},
                                   {1.0, 3.25, inf}};
  bool pass = true;
  std::string detail;
  for (const auto& c : cases) {
    DrivenFieldSpec d;
    d.mode.m = 24;
    d.mode.r0 = 1.44e-6;
    d.mode.sigma_r = 0.2e-6;
    d.mode.sigma_z = 0.1e-6;
    d.mode.l_prop = c.l_prop;
    d.dipole = make_dipole({cplx(1, 0), cplx(0, 0), cplx(0, 0)});
    d.position = {d.mode.r0, 0.0, 0.0};
    d.beta_true = c.beta;
    d.chi_true = c.chi;
    const auto grid = make_grid(d.mode.r0 - 0.6e-6, d.mode.r0 + 0.6e-6, 27, 480,
                                -0.15e-6, 0.15e-6, 15);
    const auto map = generate_driven_map(d, grid);
    const auto trace = extract_line_trace(map, d.position.r, d.position.z, 0);
    const double chi =
        chi_from_fields(field_at(map, d.position)[0].imag(),
                        bulk_im_field(d.bulk_n, d.omega));
    const auto beta = trace_flatness(trace).flat ? beta_plateau(trace)
                                                 : beta_envelope(trace);
    const bool lossless = std::isinf(c.l_prop);
    const double beta_tol = lossless ? 0.002 : 0.01;
    const double chi_tol = lossless ? 0.005 : 0.02;
    const bool ok = !beta.unreliable &&
                    std::abs(beta.beta - c.beta) < beta_tol &&
                    std::abs(chi - c.chi) / c.chi < chi_tol;
    pass = pass && ok;
    detail += "(beta " + fmt(beta.beta) + "/" + fmt(c.beta) + ", chi " +
              fmt(chi) + "/" + fmt(c.chi) + ") ";
  }
  criterion(5, "closed-loop extraction", pass, detail);
}

void criterion_6_ellipticity() {
  bool pass = ellipticity({cplx(1, 0), cplx(0, 1), cplx(0, 0)}) == 1.0;
  pass = pass && ellipticity({cplx(1, 0), cplx(0, -1), cplx(0, 0)}) == -1.0;
  pass = pass && ellipticity({cplx(1, 0), cplx(0, 0), cplx(0, 0)}) == 0.0;
  double worst = 0.0;
  for (double t = 0.0; t <= 1.0 + 1e-12; t += 0.01) {
    const double eps = ellipticity({cplx(1, 0), cplx(0, t), cplx(0, 0)});
    worst = std::max(worst, std::abs(eps - t));
  }
  pass = pass && worst < 1e-9;
  criterion(6, "ellipticity identities", pass,
            "max |eps(1, t i, 0) - t| = " + fmt(worst));
}

void criterion_7_directionality() {
  auto run = [&](double t, int handed, const DipoleVector& dipole) {
    DrivenFieldSpec d;
    d.mode.m = 24;
    d.mode.r0 = 1.44e-6;
    d.mode.sigma_r = 0.2e-6;
    d.mode.sigma_z = 0.1e-6;
    d.mode.component_ratios[1] = cplx(0.0, t);
    d.dipole = dipole;
    d.position = {d.mode.r0, 0.0, 0.0};
    d.beta_true = 0.99;
    d.chi_true = 56.0;
    (void)handed;
    const auto grid = make_grid(d.mode.r0 - 0.6e-6, d.mode.r0 + 0.6e-6, 27, 480,
                                -0.15e-6, 0.15e-6, 15);
    const auto map = generate_driven_map(d, grid);
    const auto trace = extract_line_trace(map, d.mode.r0, 0.0, 0);
    return directionality(trace, 24);
  };
  const double a = 1.0 / std::sqrt(2.0);
  const auto plus = make_dipole({cplx(a, 0), cplx(0, a), cplx(0, 0)});
  const auto minus = make_dipole({cplx(a, 0), cplx(0, -a), cplx(0, 0)});
  const auto linear = make_dipole({cplx(1, 0), cplx(0, 0), cplx(0, 0)});

  const auto rep_plus = run(0.87, +1, plus);
  const auto rep_minus = run(0.87, -1, minus);
  const auto rep_linear = run(0.87, 0, linear);
  const auto rep_075 = run(0.75, +1, plus);

  bool pass = std::abs(rep_plus.directionality - 0.87) < 0.02;
  pass = pass && std::abs(rep_minus.directionality + 0.87) < 0.02;
  pass = pass &&
         std::abs(rep_plus.directionality + rep_minus.directionality) < 1e-9;
  pass = pass && std::abs(rep_linear.directionality) < 0.02;
  pass = pass && std::abs(rep_075.directionality - 0.75) < 0.02;

  // spectrum peaks at +-16.4 rad/um for m = +-24 at r_trace = 1.463 um
  const std::size_t n = 480;
  std::vector<double> phi(n);
  std::vector<cplx> vals(n);
  for (std::size_t j = 0; j < n; ++j) {
    phi[j] = two_pi * j / n;
    vals[j] = std::exp(cplx(0.0, 24.0 * phi[j])) +
              0.5 * std::exp(cplx(0.0, -24.0 * phi[j]));
  }
  const auto trace = make_line_trace(phi, vals, 1.463e-6, 0.0, 0.0);
  const auto rep = directionality(trace, 24);
  pass = pass && std::abs(rep.k_plus / 1e6 - 16.4) < 0.1;
  pass = pass && std::abs(rep.k_minus / 1e6 + 16.4) < 0.1;

  criterion(7, "directionality", pass,
            "circular: " + fmt(rep_plus.directionality) + ", swap: " +
                fmt(rep_minus.directionality) + ", linear: " +
                fmt(rep_linear.directionality) + ", eps=0.75: " +
                fmt(rep_075.directionality) + ", k = " + fmt(rep.k_plus / 1e6) +
                " rad/um");
}

void criterion_8_resonator_models() {
  const double q_cal = q_scat_rayleigh({2e-9, 10e-9, 760e-9}).q_scat;
  bool pass = std::abs(q_cal - 2.1e6) <= 2.1e6 * 1e-15;  // exact calibration point
  const double q_rough = q_scat_rayleigh({10e-9, 100e-9, 760e-9}).q_scat;
  pass = pass && q_rough < 20000.0;
  const double l_prop = kappa_to_propagation_length(0.004, 760e-9);
  pass = pass && std::abs(l_prop - 15.1e-6) < 0.2e-6;

  std::mt19937 rng(61);
  std::uniform_real_distribution<double> u(1.0, 8.0);
  bool budgets_ok = true;
  for (int i = 0; i < 1000; ++i) {
    const double qr = std::pow(10.0, u(rng));
    const double qs = std::pow(10.0, u(rng));
    const double qa = std::pow(10.0, u(rng));
    const auto two = q_total(qr, qs, std::nullopt);
    const auto three = q_total(qr, qs, qa);
    budgets_ok = budgets_ok && two.q_total <= std::min(qr, qs) * (1 + 1e-12);
    budgets_ok = budgets_ok && three.q_total < two.q_total;
    const double inv = 1.0 / qr + 1.0 / qs + 1.0 / qa;
    budgets_ok = budgets_ok && std::abs(1.0 / three.q_total - inv) <= 1e-12 * inv;
  }
  pass = pass && budgets_ok;
  criterion(8, "resonator models", pass,
            "Q_scat = " + fmt(q_cal) + ", rough = " + fmt(q_rough) +
                ", L = " + fmt(l_prop * 1e6) + " um, budgets " +
                (budgets_ok ? "ok" : "violated"));
}

int run_cli(const std::string& cli, const std::string& args, const fs::path& dir) {
  const std::string cmd =
      "cd " + dir.string() + " && " + cli + " " + args + " > /dev/null 2>&1";
  return WEXITSTATUS(std::system(cmd.c_str()));
}

std::string slurp(const fs::path& p) {
  std::ifstream is(p);
  return std::string((std::istreambuf_iterator<char>(is)), {});
}

void criterion_9_determinism(const std::string& cli) {
  const fs::path tmp =
      fs::temp_directory_path() /
      ("slotring_accept_" + std::to_string(std::random_device{}()));
  fs::create_directories(tmp);

  nlohmann::json cfg;
  cfg["preset"] = "gap";
  cfg["dynamics"] = {{"q_values", {600.0, 27900.0}}, {"samples", 500}};
  cfg["synth"] = {{"kind", "driven"},
                  {"output", "driven.fieldmap"},
                  {"grid", {{"r_min_m", 1.2e-6}, {"r_max_m", 1.68e-6}, {"nr", 11},
                            {"nphi", 96}, {"z_min_m", -0.12e-6},
                            {"z_max_m", 0.12e-6}, {"nz", 9}}},
                  {"mode", {{"m", 4}, {"r0_m", 1.44e-6}, {"sigma_r_m", 0.2e-6},
                            {"sigma_z_m", 0.125e-6}}},
                  {"dipole", {{"components", {{1.0, 0.0}, {0.0, 0.0}, {0.0, 0.0}}}}},
                  {"position", {{"r_m", 1.44e-6}, {"phi_rad", 0.0}, {"z_m", 0.0}}},
                  {"beta_true", 0.95},
                  {"chi_true", 56.0}};
  {
    std::ofstream os(tmp / "cfg.json");
    os << cfg.dump(2) << "\n";
  }
  bool pass = run_cli(cli, "--config cfg.json --out a dynamics", tmp) == 0;
  pass = pass && run_cli(cli, "--config cfg.json --out b dynamics", tmp) == 0;
  pass = pass && run_cli(cli, "--config cfg.json --out a synth", tmp) == 0;
  pass = pass && run_cli(cli, "--config cfg.json --out b synth", tmp) == 0;
  int identical = 0, compared = 0;
  for (const auto* name : {"decay_q600.csv", "decay_q27900.csv",
                           "dynamics_summary.csv", "driven.fieldmap"}) {
    ++compared;
    if (!slurp(tmp / "a" / name).empty() &&
        slurp(tmp / "a" / name) == slurp(tmp / "b" / name))
      ++identical;
  }
  pass = pass && identical == compared;
  std::error_code ec;
  fs::remove_all(tmp, ec);
  criterion(9, "CLI determinism", pass,
            std::to_string(identical) + "/" + std::to_string(compared) +
                " data files byte-identical");
}

}  // namespace

int main(int argc, char** argv) {
  if (argc < 2) {
    std::fprintf(stderr, "usage: acceptance <cli-binary> [presets-dir]\n");
    return 2;
  }
  const std::string cli = fs::absolute(argv[1]).string();

  criterion_1_eigenfrequency();
  criterion_2_chi_ratio();
  criterion_3_threshold();
  criterion_4_dual_route();
  criterion_5_closed_loop();
  criterion_6_ellipticity();
  criterion_7_directionality();
  criterion_8_resonator_models();
  criterion_9_determinism(cli);

  if (g_failures == 0) {
    std::printf("RESULT: all 9 acceptance criteria passed\n");
    return 0;
  }
  std::printf("RESULT: %d criterion(s) FAILED\n", g_failures);
  return 1;
}
