// Copyright (c) the slotring developers.
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include "slotring/field_map.hpp"

namespace slotring {

enum class BetaMethod { PLATEAU, ENVELOPE };

struct BetaExtraction {
  double beta = 0.0;
  BetaMethod method = BetaMethod::PLATEAU;
  cplx source_value{};  // complex trace value at the source angle
  cplx far_value{};     // plateau level or envelope extrapolated to the source
  double residual = 0.0;            // relative RMS of the envelope fit
  double decay_rate_per_rad = 0.0;  // envelope fit only
  bool unreliable = false;
  int detected_order = 0;  // dominant azimuthal order of the trace
};

struct EmissionMetrics {
  double chi = 0.0;
  BetaExtraction beta{};
  double p_dissipated = 0.0;  // model units
};

/// Thrown by beta_plateau when the far-field level is not flat; the caller
/// should fall back to beta_envelope.
struct plateau_not_flat : numeric_error {
  using numeric_error::numeric_error;
};

/// P = (omega_e/2) Im(sum_i d_i E_i); for a real radial dipole this reduces
/// to (omega_e/2) |d| Im E_r.
double dissipated_power(const DipoleVector& d, const Vec3c& e_at_dipole,
                        double omega_e);

/// chi = Im E_nano / Im E_hom at the emitter. Both values must be nonzero
/// and of the same sign (both represent damping).
double chi_from_fields(double im_e_nano, double im_e_hom);

/// Bilinear interpolation in (r, z) at every phi sample of the map. The map
/// phi axis must be uniform. The source angle is inherited from the map.
LineTrace extract_line_trace(const FieldMap& f, double r_trace, double z_trace,
                             int component);

/// Flatness diagnostics used for plateau/envelope selection: crest level of
/// the trace near the source (outside the +-0.3 rad source region), at the
/// antipode, their ratio, and the slope across the antipodal window.
struct TraceFlatness {
  double near_crest = 0.0;
  double far_crest = 0.0;
  double ratio = 0.0;            // far/near
  double slope_per_rad = 0.0;    // relative crest slope across the window
  bool flat = false;             // ratio within [0.95, 1/0.95] and slope < 1e-3
};
TraceFlatness trace_flatness(const LineTrace& t);

/// beta from the far-field plateau: the crest level of the trace over a
/// pi/4-wide window centred on the antipode, divided by the trace value at
/// the source angle (out-of-phase components). Requires a flat plateau.
BetaExtraction beta_plateau(const LineTrace& t);

/// beta from a decaying-envelope fit A e^{-alpha s} (s = arc length from the
/// source, both propagation directions folded) over the far half of the
/// trace; beta uses the envelope extrapolated back to the source. A relative
/// fit residual >= 0.05 flags the result UNRELIABLE.
BetaExtraction beta_envelope(const LineTrace& t);

/// V_eff = int eps |E|^2 dV / (eps(r_e) |E(r_e)|^2), cylindrical trapezoid
/// quadrature r dr dphi dz.
double effective_mode_volume(const FieldMap& f, const PermittivityProfile& eps,
                             const CylindricalPoint& r_e);

/// Im E_r per unit dipole at the source of a radial dipole in a homogeneous
/// medium of index n: -(n omega^3)/(6 pi c^3) in model units (negative
/// out-of-phase convention). Only ratios of such values are meaningful.
double bulk_im_field(double n, double omega);

}  // namespace slotring
