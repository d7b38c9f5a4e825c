// Copyright (c) the slotring developers.
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cmath>
#include <random>

#include "slotring/synth.hpp"

namespace testutil {

using namespace slotring;

// Standard closed-loop grid: phi sample count 20 m (a multiple of 4 m, so the
// antipodal demodulation windows cover whole beat periods), (r, z) resolved
// at sigma/4.
inline CylGrid standard_grid(const SyntheticModeSpec& s) {
  const std::size_t nphi = 20 * static_cast<std::size_t>(std::abs(s.m));
  return make_grid(s.r0 - 3.0 * s.sigma_r, s.r0 + 3.0 * s.sigma_r, 27, nphi,
                   s.z0 - 1.5 * s.sigma_z, s.z0 + 1.5 * s.sigma_z, 15);
}

inline SyntheticModeSpec radial_mode(int m = 24, double l_prop =
                                         std::numeric_limits<double>::infinity()) {
  SyntheticModeSpec s;
  s.m = m;
  s.r0 = 1.44e-6;
  s.z0 = 0.0;
  s.sigma_r = 0.2e-6;
  s.sigma_z = 0.1e-6;
  s.component_ratios = {cplx(1.0, 0.0), cplx(0.0, 0.0), cplx(0.0, 0.0)};
  s.l_prop = l_prop;
  return s;
}

inline DrivenFieldSpec driven_spec(double beta_true, double chi_true,
                                   double l_prop, const DipoleVector& dipole,
                                   int m = 24) {
  DrivenFieldSpec d;
  d.mode = radial_mode(m, l_prop);
  if (classify_dipole(dipole) != DipoleClass::LINEAR)
    d.mode.component_ratios[1] = cplx(0.0, 0.87);  // elliptical point
  d.dipole = dipole;
  d.position = {d.mode.r0, 0.0, d.mode.z0};
  d.beta_true = beta_true;
  d.chi_true = chi_true;
  return d;
}

inline DipoleVector radial_dipole() {
  return make_dipole({cplx(1.0, 0.0), cplx(0.0, 0.0), cplx(0.0, 0.0)});
}

inline DipoleVector circular_dipole(int handedness) {
  const double a = 1.0 / std::sqrt(2.0);
  return make_dipole({cplx(a, 0.0), cplx(0.0, handedness >= 0 ? a : -a),
                      cplx(0.0, 0.0)});
}

}  // namespace testutil
