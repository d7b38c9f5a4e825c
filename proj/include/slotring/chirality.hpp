// Copyright (c) the slotring developers.
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "slotring/field_map.hpp"

namespace slotring {

/// Signed polarization ellipticity of an in-plane field,
///   eps = tan( asin(sin(2 psi) sin(delta)) / 2 ),
/// psi = atan(|E_phi|/|E_r|), delta = arg E_phi - arg E_r. +-1 is circular,
/// 0 linear. Computed from the in-plane components; E_z is checked by
/// ellipticity_ez_ok.
double ellipticity(const Vec3c& e);

/// Two-component assumption: |E_z| < 0.05 max(|E_r|, |E_phi|).
bool ellipticity_ez_ok(const Vec3c& e);

struct EllipticityMap {
  std::vector<double> r;  // m
  std::vector<double> z;  // m
  std::vector<double> epsilon;  // index ir * Nz + iz
  std::vector<bool> ez_ok;      // false where the E_z precondition fails
  double phi_slice = 0.0;       // rad, grid angle actually used

  double at(std::size_t ir, std::size_t iz) const {
    return epsilon[ir * z.size() + iz];
  }
};

/// Pointwise ellipticity over the (r, z) cross-section at the grid angle
/// nearest to phi_slice.
EllipticityMap ellipticity_map(const FieldMap& f, double phi_slice);

struct WavenumberSpectrum {
  std::vector<double> wavenumber;  // rad/m, k = order / r_trace, ascending
  std::vector<double> amplitude;   // |DFT coefficient|
  std::vector<int> order;          // azimuthal order per bin
};

/// DFT of the complex trace; requires uniform phi sampling.
WavenumberSpectrum wavenumber_spectrum(const LineTrace& t);

struct DirectionalityReport {
  double a_plus = 0.0;   // amplitude area of the +m peak
  double a_minus = 0.0;  // amplitude area of the -m peak
  double directionality = 0.0;        // (a+ - a-)/(a+ + a-), amplitude-based
  double directionality_power = 0.0;  // (p+ - p-)/(p+ + p-), p = area^2
  double k_plus = 0.0;   // rad/m, wavenumber of the +m peak maximum
  double k_minus = 0.0;  // rad/m
  std::optional<double> beta_plus;
  std::optional<double> beta_minus;
};

/// Peak areas are amplitude sums over +-2 bins around +-m_expected. At least
/// one peak must stand out (> 5x median background). When beta_total is
/// given, the split beta_± = beta_total p_± / (p_+ + p_-) uses squared peak
/// areas.
DirectionalityReport directionality(const LineTrace& t, int m_expected,
                                    std::optional<double> beta_total = std::nullopt);

/// Emission amplitudes into a conjugate mode pair: c_± = d . conj(e_±(r_e)),
/// conjugate-linear in the mode field.
std::pair<cplx, cplx> dipole_mode_coupling(const DipoleVector& d,
                                           const Vec3c& e_plus,
                                           const Vec3c& e_minus);

}  // namespace slotring
