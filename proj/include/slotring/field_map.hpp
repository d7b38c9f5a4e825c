// Copyright (c) the slotring developers.
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <filesystem>
#include <functional>
#include <optional>
#include <vector>

#include "slotring/types.hpp"

namespace slotring {

enum class Provenance { SYNTHETIC, INGESTED };

struct FieldSource {
  DipoleVector dipole{};
  CylindricalPoint position{};
};

/// Complex 3-component electric field sampled on a cylindrical grid.
/// Axes are strictly increasing; phi covers [0, 2pi) without repeating the
/// seam point. Values are V/m per unit dipole in an arbitrary normalization.
struct FieldMap {
  std::vector<double> r;    // m
  std::vector<double> phi;  // rad
  std::vector<double> z;    // m
  std::vector<Vec3c> values;  // index ((ir * Nphi) + iphi) * Nz + iz
  Provenance provenance = Provenance::SYNTHETIC;
  std::optional<FieldSource> source;

  std::size_t index(std::size_t ir, std::size_t iphi, std::size_t iz) const {
    return (ir * phi.size() + iphi) * z.size() + iz;
  }
  const Vec3c& at(std::size_t ir, std::size_t iphi, std::size_t iz) const {
    return values[index(ir, iphi, iz)];
  }
  Vec3c& at(std::size_t ir, std::size_t iphi, std::size_t iz) {
    return values[index(ir, iphi, iz)];
  }
  bool phi_uniform(double rel_tol = 1e-9) const;
};

ValidationReport validate(const FieldMap& f);
FieldMap make_field_map(std::vector<double> r, std::vector<double> phi,
                        std::vector<double> z, std::vector<Vec3c> values,
                        Provenance provenance,
                        std::optional<FieldSource> source = std::nullopt);

/// 1D complex field samples along phi at fixed (r, z). phi spacing is
/// uniform by construction.
struct LineTrace {
  std::vector<double> phi;  // rad
  std::vector<cplx> values;
  double r_trace = 0.0;  // m
  double z_trace = 0.0;  // m
  std::optional<double> source_phi;  // rad
};

ValidationReport validate(const LineTrace& t);
LineTrace make_line_trace(std::vector<double> phi, std::vector<cplx> values,
                          double r_trace, double z_trace,
                          std::optional<double> source_phi = std::nullopt);

/// Field at an arbitrary point: bilinear in (r, z); in phi the sample is
/// taken from the grid column when the angle lies on the grid, otherwise
/// trigonometric (DFT) interpolation for SYNTHETIC maps and linear for
/// INGESTED maps.
Vec3c field_at(const FieldMap& f, const CylindricalPoint& p);

// --- file format -----------------------------------------------------------
//
// Text header (comment lines) followed by CSV rows:
//   # slotring-fieldmap v1
//   # provenance: SYNTHETIC|INGESTED
//   # grid_r_m: <values...>
//   # grid_phi_rad: <values...>
//   # grid_z_m: <values...>
//   # source_dipole: re,im re,im re,im          (optional)
//   # source_position: r_m phi_rad z_m           (optional)
//   r_m,phi_rad,z_m,re_Er,im_Er,re_Ephi,im_Ephi,re_Ez,im_Ez
//   ... one row per grid point, r-major then phi then z ...
void write_field_map(const FieldMap& f, const std::filesystem::path& path);
FieldMap read_field_map(const std::filesystem::path& path);

/// Scalar relative permittivity over the (r, z) cross-section.
using PermittivityProfile = std::function<double(double r, double z)>;
PermittivityProfile permittivity_profile(const RingGeometry& g);

}  // namespace slotring
