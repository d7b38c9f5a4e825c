// Copyright (c) the slotring developers.
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <optional>
#include <vector>

#include "slotring/types.hpp"

namespace slotring {

/// Partial quality factors per loss channel; absent channels do not
/// contribute. 1/q_total = sum over present channels of 1/q_i.
struct QBudget {
  std::optional<double> q_rad;
  std::optional<double> q_scat;
  std::optional<double> q_abs;
  double q_total = 0.0;
};

struct RoughnessSpec {
  double sigma_rms = 0.0;   // m
  double l_corr = 0.0;      // m
  double wavelength = 0.0;  // m
};

QBudget q_total(std::optional<double> q_rad, std::optional<double> q_scat,
                std::optional<double> q_abs);

/// Rayleigh surface-scattering model Q_scat = A / (sigma_rms^2 l_corr), with
/// A calibrated from the 2 nm / 10 nm / 2.1e6 datum at 760 nm. Wavelengths
/// other than 760 nm are outside the calibration; the result then carries
/// wavelength_flagged = true.
struct QScatResult {
  double q_scat = 0.0;
  bool wavelength_flagged = false;
};
QScatResult q_scat_rayleigh(const RoughnessSpec& r);

/// Bulk-absorption propagation length L = lambda / (4 pi kappa).
/// kappa = 0 maps to an explicit infinite-length sentinel.
double kappa_to_propagation_length(double kappa, double wavelength);

/// Q_abs = 2 pi n_group L / lambda. The group index is a required user
/// parameter; no default is claimed.
double q_abs_from_propagation(double l_prop, double n_group, double wavelength);

/// Sum of unit-peak Lorentzian line shapes on a frequency grid (Hz). The
/// FWHM of each resonance on the output axis equals gamma_cav / 2pi.
std::vector<double> transmission_comb(const std::vector<CavityMode>& modes,
                                      const std::vector<double>& freq_hz);

/// chi = chi0 (q/q0) (v0/v_eff): proportional Q/V scaling anchored at a
/// reference point. A trend model, not an electromagnetic calculation.
struct ChiTrendAnchor {
  double q0 = 0.0;
  double v0 = 0.0;
  double chi0 = 0.0;
};
double chi_trend(double q, double v_eff, const ChiTrendAnchor& anchor);

}  // namespace slotring
