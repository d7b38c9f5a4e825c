// Copyright (c) the slotring developers.
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <array>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "slotring/units.hpp"

namespace slotring {

struct error : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct validation_error : error {
  using error::error;
};
struct io_error : error {
  using error::error;
};
struct numeric_error : error {
  using error::error;
};

using Vec3c = std::array<cplx, 3>;

struct CylindricalPoint {
  double r = 0.0;    // m
  double phi = 0.0;  // rad
  double z = 0.0;    // m
};

/// Complex transition-dipole amplitudes on the local (r, phi, z) basis.
/// Units are arbitrary; every physical output of the library is a ratio.
struct DipoleVector {
  Vec3c components{};

  double magnitude() const;
};

enum class DipoleClass { LINEAR, CIRCULAR_PLUS, CIRCULAR_MINUS, GENERAL };

struct EmitterSpec {
  double omega_e = 0.0;     // transition angular frequency, rad/s
  double gamma_hom = 0.0;   // homogeneous linewidth, rad/s
  DipoleVector dipole{};
  CylindricalPoint position{};
};

struct CavityMode {
  double omega_cav = 0.0;  // rad/s
  double gamma_cav = 0.0;  // FWHM energy decay rate, rad/s
  int m = 0;               // azimuthal order
  std::optional<double> v_eff;  // m^3
  std::optional<double> n_eff;

  // Q is always recomputed from omega/gamma; it is never stored separately.
  double q() const { return omega_cav / gamma_cav; }
};

struct RingGeometry {
  double radius = 0.0;      // slot centerline, m
  double bar_width = 0.0;   // m
  double height = 0.0;      // m
  double gap = 0.0;         // m
  double n_high = 0.0;
  double n_slot = 0.0;
  double n_clad = 0.0;
  double kappa_high = 0.0;  // imaginary index of the high-n bars

  double outer_radius() const { return radius + gap / 2.0 + bar_width; }
  double inner_radius() const { return radius - gap / 2.0 - bar_width; }
  // V_g = pi h (r_o^2 - r_i^2); computed, never stored.
  double geometric_volume() const;
};

struct ValidationReport {
  bool ok = true;
  std::vector<std::string> violations;

  void fail(std::string what) {
    ok = false;
    violations.push_back(std::move(what));
  }
  std::string joined() const;
};

ValidationReport validate(const DipoleVector& d);
ValidationReport validate(const EmitterSpec& e);
ValidationReport validate(const CavityMode& c);
ValidationReport validate(const RingGeometry& g);

// Factories; every constructor path routes through validate() and throws
// validation_error listing the violated invariants.
DipoleVector make_dipole(const Vec3c& components);
EmitterSpec make_emitter(double omega_e, double gamma_hom, const DipoleVector& d,
                         const CylindricalPoint& position);
// supplied_q, when given, is cross-checked against omega/gamma within 0.2%
// (rounded literature values pass); the stored Q is always recomputed.
CavityMode make_cavity_mode(double omega_cav, double gamma_cav, int m,
                            std::optional<double> supplied_q = std::nullopt,
                            std::optional<double> v_eff = std::nullopt,
                            std::optional<double> n_eff = std::nullopt);
RingGeometry make_ring_geometry(double radius, double bar_width, double height,
                                double gap, double n_high, double n_slot,
                                double n_clad, double kappa_high = 0.0);

DipoleClass classify_dipole(const DipoleVector& d);
const char* to_string(DipoleClass c);

}  // namespace slotring
