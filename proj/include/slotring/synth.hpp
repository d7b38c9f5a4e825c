// Copyright (c) the slotring developers.
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <limits>

#include "slotring/field_map.hpp"

namespace slotring {

struct CylGrid {
  std::vector<double> r;    // m
  std::vector<double> phi;  // rad, uniform over [0, 2pi)
  std::vector<double> z;    // m
};

CylGrid make_grid(double r_min, double r_max, std::size_t nr, std::size_t nphi,
                  double z_min, double z_max, std::size_t nz);

/// Parametric traveling ring mode: Gaussian cross-section profile, constant
/// complex component ratios, e^{i m phi} azimuthal dependence and a folded
/// arc-length amplitude decay exp(-s/(2 L_prop)). Not a Maxwell solution; a
/// test family with analytically known extraction targets.
struct SyntheticModeSpec {
  int m = 24;
  double r0 = 1.44e-6;      // m
  double z0 = 0.0;          // m
  double sigma_r = 0.2e-6;  // m
  double sigma_z = 0.1e-6;  // m
  Vec3c component_ratios{cplx(1.0, 0.0), cplx(0.0, 0.0), cplx(0.0, 0.0)};
  double asymmetry = 0.0;   // outward skew of the radial profile
  double l_prop = std::numeric_limits<double>::infinity();  // m
};

ValidationReport validate(const SyntheticModeSpec& s);

/// Driven-map ground truth: the mode pair (+m and its conjugate), the driving
/// dipole, and the configured extraction targets. The non-guided background
/// is a Gaussian lobe in phi (width 0.3 rad) at the source realizing
/// 1 - beta_true; the overall scale makes chi_from_fields against
/// bulk_im_field(bulk_n, omega) return chi_true.
struct DrivenFieldSpec {
  SyntheticModeSpec mode{};
  DipoleVector dipole{};
  CylindricalPoint position{};
  double beta_true = 1.0;   // (0, 1]
  double chi_true = 1.0;    // > 0
  double bulk_n = 1.5;
  double omega = two_pi * 3.947e14;  // rad/s
};

ValidationReport validate(const DrivenFieldSpec& d);

/// Requires the grid to resolve sigma_r, sigma_z with at least 8 points
/// (spacing <= sigma/4). max|E| over the grid is normalized to 1.
FieldMap generate_mode_map(const SyntheticModeSpec& s, const CylGrid& grid);

/// Superposition of the mode pair weighted by dipole_mode_coupling, launched
/// at the source angle, plus the background lobe. The source angle must lie
/// on the phi grid.
FieldMap generate_driven_map(const DrivenFieldSpec& d, const CylGrid& grid);

/// Classical dipole field in a homogeneous medium of index n (radial unit
/// dipole at `source`), in the library's negative out-of-phase convention.
/// Only ratios against driven maps are contractually meaningful. The source
/// must not coincide with a grid point.
FieldMap bulk_reference_map(double n, double omega, const CylGrid& grid,
                            const CylindricalPoint& source);

}  // namespace slotring
