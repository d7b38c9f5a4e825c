// Copyright (c) the slotring developers.
// SPDX-License-Identifier: Apache-2.0

#include "slotring/resonator.hpp"

#include <cmath>
#include <limits>

namespace slotring {

namespace {

// Calibrated so that sigma = 2 nm, l_corr = 10 nm gives Q_scat = 2.1e6.
constexpr double kRayleighA = 2.1e6 * (2e-9 * 2e-9) * 10e-9;  // m^3
constexpr double kRayleighWavelength = 760e-9;

}  // namespace

QBudget q_total(std::optional<double> q_rad, std::optional<double> q_scat,
                std::optional<double> q_abs) {
  QBudget b{q_rad, q_scat, q_abs, 0.0};
  double inv = 0.0;
  int present = 0;
  for (const auto& q : {b.q_rad, b.q_scat, b.q_abs}) {
    if (!q) continue;
    if (!(*q > 0.0)) throw validation_error("q_total: channel q must be > 0");
    inv += 1.0 / *q;
    ++present;
  }
  if (present == 0) throw validation_error("q_total: at least one channel required");
  b.q_total = 1.0 / inv;
  return b;
}

QScatResult q_scat_rayleigh(const RoughnessSpec& r) {
  if (!(r.sigma_rms > 0.0 && r.l_corr > 0.0 && r.wavelength > 0.0))
    throw validation_error("q_scat_rayleigh: all roughness parameters must be > 0");
  QScatResult res;
  res.q_scat = kRayleighA / (r.sigma_rms * r.sigma_rms * r.l_corr);
  res.wavelength_flagged =
      std::abs(r.wavelength - kRayleighWavelength) > 1e-12 * kRayleighWavelength;
  return res;
}

double kappa_to_propagation_length(double kappa, double wavelength) {
  if (kappa < 0.0) throw validation_error("kappa_to_propagation_length: kappa >= 0");
  if (!(wavelength > 0.0))
    throw validation_error("kappa_to_propagation_length: wavelength > 0");
  if (kappa == 0.0) return std::numeric_limits<double>::infinity();
  return wavelength / (4.0 * pi * kappa);
}

double q_abs_from_propagation(double l_prop, double n_group, double wavelength) {
  if (!(l_prop > 0.0) || !(n_group > 0.0) || !(wavelength > 0.0))
    throw validation_error("q_abs_from_propagation: all inputs must be > 0");
  if (std::isinf(l_prop)) return std::numeric_limits<double>::infinity();
  return two_pi * n_group * l_prop / wavelength;
}

std::vector<double> transmission_comb(const std::vector<CavityMode>& modes,
                                      const std::vector<double>& freq_hz) {
  if (modes.empty()) throw validation_error("transmission_comb: no modes");
  for (const auto& m : modes) {
    auto rep = validate(m);
    if (!rep.ok) throw validation_error("transmission_comb: " + rep.joined());
  }
  std::vector<double> out(freq_hz.size(), 0.0);
  for (const auto& m : modes) {
    const double f0 = rad_to_hz(m.omega_cav);
    const double half = rad_to_hz(m.gamma_cav) / 2.0;  // FWHM/2 in Hz
    for (std::size_t i = 0; i < freq_hz.size(); ++i) {
      const double x = (freq_hz[i] - f0) / half;
      out[i] += 1.0 / (1.0 + x * x);
    }
  }
  return out;
}

double chi_trend(double q, double v_eff, const ChiTrendAnchor& anchor) {
  if (!(q > 0.0) || !(v_eff > 0.0))
    throw validation_error("chi_trend: q and v_eff must be > 0");
  if (!(anchor.q0 > 0.0) || !(anchor.v0 > 0.0) || !(anchor.chi0 > 0.0))
    throw validation_error("chi_trend: anchor values must be > 0");
  return anchor.chi0 * (q / anchor.q0) * (anchor.v0 / v_eff);
}

}  // namespace slotring
