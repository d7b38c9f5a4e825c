// Copyright (c) the slotring developers.
// SPDX-License-Identifier: Apache-2.0

#pragma once

namespace slotring::reference {

// Published FEM design points for the GaP reference ring (r = 1.44 um,
// lambda = 760 nm). These are stored data, used as test anchors and sweep
// defaults; this library does not recompute them from geometry.

// straight slot waveguide (no feedback)
inline constexpr double kWaveguideBeta = 0.75;
inline constexpr double kWaveguideChi = 3.25;

// emitter at the mode maximum inside the slot
inline constexpr double kSlotEmitterBeta = 0.995;
inline constexpr double kSlotEmitterChi = 1330.0;

// emitter inside a high-index bar
inline constexpr double kBarEmitterBeta = 0.99;
inline constexpr double kBarEmitterChi = 56.0;
// reported split of that beta over the counter-propagating modes. The split
// rule shipped here (squared peak areas) is not claimed to reproduce this
// pair; the values are reference data only.
inline constexpr double kBarEmitterBetaPlus = 0.86;
inline constexpr double kBarEmitterBetaMinus = 0.13;

// local polarization
inline constexpr double kBarEllipticityPeak = 0.87;
inline constexpr double kOutsideSlotDirectionality = 0.75;

// lossy working point: kappa = 0.004 absorption in the bars
inline constexpr double kLossyKappa = 0.004;
inline constexpr double kLossyRingBeta = 0.949;
inline constexpr double kLossyRingChi = 243.0;
inline constexpr double kLossyImENano = -1.11e18;  // Im E_r / |d| at the dipole
inline constexpr double kLossyImEHom = -4.55e15;   // bulk host reference

}  // namespace slotring::reference
