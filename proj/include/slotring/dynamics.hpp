// Copyright (c) the slotring developers.
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <functional>
#include <optional>
#include <vector>

#include "slotring/types.hpp"

namespace slotring {

/// Parameters of the single-emitter / single-mode decay problem.
///   Gamma = i (omega_cav - omega_e) + gamma_cav / 2
///   K0    = (omega_cav^2 / omega_e^2) chi gamma_cav gamma_hom
///   D     = sqrt(Gamma^2 - K0), principal branch (Re D >= 0)
struct CouplingParams {
  cplx gamma{};     // Gamma, rad/s
  double k0 = 0.0;  // rad^2/s^2
  cplx d{};         // D, rad/s
  double detuning = 0.0;  // omega_cav - omega_e, rad/s
  double chi = 0.0;

  // carried along for reporting and regime classification
  double omega_e = 0.0;
  double omega_cav = 0.0;
  double gamma_cav = 0.0;
  double gamma_hom = 0.0;
};

struct DecayCurve {
  std::vector<double> times;       // s, uniform, starting at 0
  std::vector<cplx> amplitudes;    // C_e(t)
  std::vector<double> probabilities;  // |C_e|^2
};

enum class Regime { WEAK, STRONG };

struct RegimeReport {
  Regime regime = Regime::WEAK;
  bool rabi_visible = false;
  std::optional<double> decay_rate;   // rad/s, probability rate, weak only
  std::optional<double> rabi_omega;   // Im D, rad/s, strong only
};

CouplingParams coupling_params(const EmitterSpec& e, const CavityMode& c,
                               double chi);

std::vector<double> uniform_times(double t_max, std::size_t samples);

/// Closed-form excited-state amplitude
///   C_e(t) = e^{-Gamma t/2} [cosh(D t/2) + (Gamma/D) sinh(D t/2)],
/// with the analytic limit e^{-Gamma t/2}(1 + Gamma t/2) at the degenerate
/// root D -> 0.
DecayCurve decay_analytic(const CouplingParams& p,
                          const std::vector<double>& times);

/// Independent oracle: fixed-step RK4 integration of the equivalent ODE
///   C'' + Gamma C' + (K0/4) C = 0,  C(0) = 1, C'(0) = 0.
/// The internal step is chosen so max(|Gamma|, sqrt(K0)) * dt < 0.05; pass
/// substeps_per_interval to override (a violating override is an error).
DecayCurve decay_oracle(const CouplingParams& p, const std::vector<double>& times,
                        std::optional<std::size_t> substeps_per_interval = std::nullopt);

/// Second oracle route: trapezoid integration of the memory-kernel form
///   C'(t) = int_0^t K(t-t') C(t') dt',  K(t) = -(K0/4) e^{-Gamma t}.
/// The history integral is advanced by the exact exponential recursion, which
/// is algebraically identical to the full O(N^2) trapezoid sum.
DecayCurve decay_volterra(const CouplingParams& p, const std::vector<double>& times,
                          std::optional<std::size_t> substeps_per_interval = std::nullopt);

/// Zero detuning only; rejects detuned parameters. Gamma^2 = K0 exactly is
/// classified WEAK.
RegimeReport classify_regime(const CouplingParams& p);

/// Spectral weight built from a sum of Lorentzian resonances,
///   w(omega) = sum_k a_k (-i gamma_k/2) / (Omega_k - omega - i gamma_k/2).
/// Modes with FWHM >= 0.1 x (minimum spacing) are rejected as overlapping.
struct LorentzianComb {
  std::vector<double> centers;     // rad/s
  std::vector<double> widths;      // FWHM, rad/s
  std::vector<cplx> amplitudes;

  cplx operator()(double omega) const;
};

LorentzianComb lorentzian_green_comb(const std::vector<CavityMode>& modes,
                                     const std::vector<cplx>& amplitudes);

}  // namespace slotring
