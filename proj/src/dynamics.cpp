// Copyright (c) the slotring developers.
// SPDX-License-Identifier: Apache-2.0

#include "slotring/dynamics.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace slotring {

namespace {

constexpr double kMaxPhasePerStep = 0.05;

// sinh(w)/w, series for small |w|
cplx sinch(const cplx& w) {
  if (std::abs(w) < 1e-4) {
    const cplx w2 = w * w;
    return 1.0 + w2 / 6.0 + w2 * w2 / 120.0;
  }
  return std::sinh(w) / w;
}

void check_uniform_grid(const std::vector<double>& times) {
  if (times.size() < 2) throw validation_error("time grid needs >= 2 samples");
  if (times.front() != 0.0) throw validation_error("time grid must start at 0");
  const double dt = times[1] - times[0];
  if (!(dt > 0.0)) throw validation_error("time grid must be increasing");
  for (std::size_t i = 1; i < times.size(); ++i) {
    const double step = times[i] - times[i - 1];
    if (std::abs(step - dt) > 1e-9 * dt)
      throw validation_error("time grid must be uniform");
  }
}

DecayCurve finish_curve(std::vector<double> times, std::vector<cplx> amps) {
  DecayCurve curve;
  curve.times = std::move(times);
  curve.amplitudes = std::move(amps);
  curve.probabilities.resize(curve.amplitudes.size());
  for (std::size_t i = 0; i < curve.amplitudes.size(); ++i) {
    const double p = std::norm(curve.amplitudes[i]);
    if (!(p <= 1.0 + 1e-9) || !std::isfinite(p))
      throw numeric_error("decay curve violates |C_e|^2 <= 1");
    curve.probabilities[i] = p;
  }
  if (std::abs(curve.amplitudes.front() - 1.0) > 1e-12)
    throw numeric_error("decay curve must start at C_e(0) = 1");
  return curve;
}

double stiff_rate(const CouplingParams& p) {
  return std::max(std::abs(p.gamma), std::sqrt(std::max(p.k0, 0.0)));
}

std::size_t auto_substeps(const CouplingParams& p, double dt_out) {
  const double rate = stiff_rate(p);
  if (rate <= 0.0) return 1;
  return std::max<std::size_t>(
      1, static_cast<std::size_t>(std::ceil(rate * dt_out / kMaxPhasePerStep)));
}

std::size_t resolve_substeps(const CouplingParams& p, double dt_out,
                             std::optional<std::size_t> requested) {
  if (!requested) return auto_substeps(p, dt_out);
  if (*requested == 0) throw validation_error("substeps_per_interval must be >= 1");
  const double dt = dt_out / static_cast<double>(*requested);
  if (stiff_rate(p) * dt >= kMaxPhasePerStep)
    throw validation_error(
        "step-size violation: max(|Gamma|, sqrt(K0)) * dt must stay below 0.05");
  return *requested;
}

}  // namespace

CouplingParams coupling_params(const EmitterSpec& e, const CavityMode& c,
                               double chi) {
  if (!(chi > 0.0)) throw validation_error("coupling_params: chi > 0 required");
  auto erep = validate(e);
  auto crep = validate(c);
  if (!erep.ok) throw validation_error("coupling_params emitter: " + erep.joined());
  if (!crep.ok) throw validation_error("coupling_params mode: " + crep.joined());

  CouplingParams p;
  p.detuning = c.omega_cav - e.omega_e;
  p.gamma = cplx(c.gamma_cav / 2.0, p.detuning);
  const double wr = c.omega_cav / e.omega_e;
  p.k0 = wr * wr * chi * c.gamma_cav * e.gamma_hom;
  p.d = std::sqrt(p.gamma * p.gamma - p.k0);  // principal branch, Re >= 0
  if (p.d.real() < 0.0) p.d = -p.d;
  p.chi = chi;
  p.omega_e = e.omega_e;
  p.omega_cav = c.omega_cav;
  p.gamma_cav = c.gamma_cav;
  p.gamma_hom = e.gamma_hom;
  return p;
}

std::vector<double> uniform_times(double t_max, std::size_t samples) {
  if (!(t_max > 0.0) || samples < 2)
    throw validation_error("uniform_times: t_max > 0 and samples >= 2");
  std::vector<double> t(samples);
  for (std::size_t i = 0; i < samples; ++i)
    t[i] = t_max * static_cast<double>(i) / static_cast<double>(samples - 1);
  return t;
}

DecayCurve decay_analytic(const CouplingParams& p,
                          const std::vector<double>& times) {
  check_uniform_grid(times);
  const cplx G = p.gamma;
  const cplx D = p.d;
  const double t_scale = std::abs(G);
  const bool degenerate = std::abs(D) < 1e-6 * t_scale;

  std::vector<cplx> amps(times.size());
  for (std::size_t i = 0; i < times.size(); ++i) {
    const double t = times[i];
    if (degenerate) {
      amps[i] = std::exp(-G * t / 2.0) * (1.0 + G * t / 2.0);
      continue;
    }
    const cplx w = D * t / 2.0;
    if (std::abs(w.real()) > 20.0) {
      // split-exponential form; both exponents have non-positive real part
      const cplx a = (D + G) / (2.0 * D);
      const cplx b = (D - G) / (2.0 * D);
      amps[i] = a * std::exp((D - G) * t / 2.0) + b * std::exp(-(D + G) * t / 2.0);
    } else {
      amps[i] = std::exp(-G * t / 2.0) * (std::cosh(w) + (G * t / 2.0) * sinch(w));
    }
  }
  return finish_curve(times, std::move(amps));
}

DecayCurve decay_oracle(const CouplingParams& p, const std::vector<double>& times,
                        std::optional<std::size_t> substeps_per_interval) {
  check_uniform_grid(times);
  const double dt_out = times[1] - times[0];
  const std::size_t nsub = resolve_substeps(p, dt_out, substeps_per_interval);
  const double h = dt_out / static_cast<double>(nsub);

  const cplx G = p.gamma;
  const double k4 = p.k0 / 4.0;

  // y = (C, V); C' = V, V' = -Gamma V - (K0/4) C
  cplx C = 1.0, V = 0.0;
  std::vector<cplx> amps(times.size());
  amps[0] = C;
  auto fC = [](const cplx&, const cplx& v) { return v; };
  auto fV = [&](const cplx& c, const cplx& v) { return -G * v - k4 * c; };
  for (std::size_t i = 1; i < times.size(); ++i) {
    for (std::size_t s = 0; s < nsub; ++s) {
      const cplx k1c = fC(C, V), k1v = fV(C, V);
      const cplx k2c = fC(C + 0.5 * h * k1c, V + 0.5 * h * k1v);
      const cplx k2v = fV(C + 0.5 * h * k1c, V + 0.5 * h * k1v);
      const cplx k3c = fC(C + 0.5 * h * k2c, V + 0.5 * h * k2v);
      const cplx k3v = fV(C + 0.5 * h * k2c, V + 0.5 * h * k2v);
      const cplx k4c = fC(C + h * k3c, V + h * k3v);
      const cplx k4v = fV(C + h * k3c, V + h * k3v);
      C += h / 6.0 * (k1c + 2.0 * k2c + 2.0 * k3c + k4c);
      V += h / 6.0 * (k1v + 2.0 * k2v + 2.0 * k3v + k4v);
    }
    amps[i] = C;
  }
  return finish_curve(times, std::move(amps));
}

DecayCurve decay_volterra(const CouplingParams& p, const std::vector<double>& times,
                          std::optional<std::size_t> substeps_per_interval) {
  check_uniform_grid(times);
  const double dt_out = times[1] - times[0];
  const std::size_t nsub = resolve_substeps(p, dt_out, substeps_per_interval);
  const double h = dt_out / static_cast<double>(nsub);

  const cplx G = p.gamma;
  const cplx k0t = cplx(-p.k0 / 4.0, 0.0);  // K(0)
  const cplx E = std::exp(-G * h);          // kernel decay over one step
  const cplx Kh = k0t * E;                  // K(h)

  // Trapezoid value of the history integral I_n = int_0^{t_n} K(t_n-s)C(s)ds
  // advanced by I_{n+1} = E I_n + (h/2)(K(h) C_n + K(0) C_{n+1}); identical to
  // the full trapezoid sum because the kernel is a single exponential.
  // C is advanced by the trapezoid rbeneath C' = I, solving the implicit last
  // term in closed form.
  cplx C = 1.0, I = 0.0;
  std::vector<cplx> amps(times.size());
  amps[0] = C;
  const cplx denom = 1.0 - (h * h / 4.0) * k0t;
  for (std::size_t i = 1; i < times.size(); ++i) {
    for (std::size_t s = 0; s < nsub; ++s) {
      const cplx rhs = C + (h / 2.0) * I + (h / 2.0) * (E * I + (h / 2.0) * Kh * C);
      const cplx Cn = rhs / denom;
      I = E * I + (h / 2.0) * (Kh * C + k0t * Cn);
      C = Cn;
    }
    amps[i] = C;
  }
  return finish_curve(times, std::move(amps));
}

RegimeReport classify_regime(const CouplingParams& p) {
  const double w_scale = std::max(p.omega_e, p.omega_cav);
  if (std::abs(p.detuning) > 1e-12 * w_scale)
    throw validation_error(
        "classify_regime is defined at zero detuning only (omega_cav == omega_e)");

  RegimeReport rep;
  const double g2 = p.gamma.real() * p.gamma.real();
  if (p.k0 > g2) {
    rep.regime = Regime::STRONG;
    rep.rabi_omega = p.d.imag();
    rep.rabi_visible = p.d.imag() >= 2.0 * p.gamma.real();
  } else {
    // Gamma^2 = K0 exactly ties to WEAK
    rep.regime = Regime::WEAK;
    rep.decay_rate = (p.gamma - p.d).real();  // probability decay rate
    rep.rabi_visible = false;
  }
  return rep;
}

cplx LorentzianComb::operator()(double omega) const {
  cplx w = 0.0;
  for (std::size_t k = 0; k < centers.size(); ++k) {
    const cplx half(0.0, widths[k] / 2.0);
    w += amplitudes[k] * (-half) / (centers[k] - omega - half);
  }
  return w;
}

LorentzianComb lorentzian_green_comb(const std::vector<CavityMode>& modes,
                                     const std::vector<cplx>& amplitudes) {
  if (modes.empty()) throw validation_error("lorentzian_green_comb: no modes");
  if (modes.size() != amplitudes.size())
    throw validation_error("lorentzian_green_comb: one amplitude per mode");

  LorentzianComb comb;
  for (const auto& m : modes) {
    auto rep = validate(m);
    if (!rep.ok) throw validation_error("lorentzian_green_comb: " + rep.joined());
    comb.centers.push_back(m.omega_cav);
    comb.widths.push_back(m.gamma_cav);
  }
  comb.amplitudes = amplitudes;

  if (modes.size() > 1) {
    double min_spacing = std::numeric_limits<double>::infinity();
    for (std::size_t i = 0; i < comb.centers.size(); ++i)
      for (std::size_t j = i + 1; j < comb.centers.size(); ++j)
        min_spacing = std::min(min_spacing,
                               std::abs(comb.centers[i] - comb.centers[j]));
    const double max_fwhm = *std::max_element(comb.widths.begin(), comb.widths.end());
    if (max_fwhm >= 0.1 * min_spacing)
      throw validation_error(
          "lorentzian_green_comb: overlapping modes (FWHM >= 0.1 x spacing)");
  }
  return comb;
}

}  // namespace slotring
