// Copyright (c) the slotring developers.
// SPDX-License-Identifier: Apache-2.0

#include "slotring/synth.hpp"

#include <algorithm>
#include <cmath>

#include "slotring/chirality.hpp"
#include "slotring/field_analysis.hpp"

namespace slotring {

namespace {

constexpr double kBackgroundWidth = 0.3;  // rad

double wrap_2pi(double a) {
  double w = std::fmod(a, two_pi);
  if (w < 0.0) w += two_pi;
  return w;
}

double folded_arc(double theta) {
  const double w = wrap_2pi(theta);
  return std::min(w, two_pi - w);
}

double max_spacing(const std::vector<double>& axis) {
  double s = 0.0;
  for (std::size_t i = 1; i < axis.size(); ++i)
    s = std::max(s, axis[i] - axis[i - 1]);
  return s;
}

void check_resolution(const SyntheticModeSpec& s, const CylGrid& grid) {
  if (grid.r.size() < 2 || grid.z.size() < 2 || grid.phi.size() < 4)
    throw validation_error("synthetic map: grid too small");
  if (max_spacing(grid.r) > s.sigma_r / 4.0 ||
      max_spacing(grid.z) > s.sigma_z / 4.0)
    throw validation_error(
        "synthetic map: under-resolved grid (need >= 8 points per sigma)");
}

// Gaussian cross-section with optional outward skew.
double profile(const SyntheticModeSpec& s, double r, double z) {
  const double xr = (r - s.r0) / s.sigma_r;
  const double xz = (z - s.z0) / s.sigma_z;
  double p = std::exp(-0.5 * xr * xr - 0.5 * xz * xz);
  if (s.asymmetry != 0.0) p *= 1.0 + s.asymmetry * std::tanh(xr);
  return p;
}

double decay_factor(const SyntheticModeSpec& s, double theta) {
  if (std::isinf(s.l_prop)) return 1.0;
  return std::exp(-s.r0 * folded_arc(theta) / (2.0 * s.l_prop));
}

Vec3c conj_mode(const Vec3c& c) {
  return {std::conj(c[0]), std::conj(c[1]), std::conj(c[2])};
}

std::size_t grid_angle_index(const CylGrid& grid, double phi) {
  const double ph = wrap_2pi(phi);
  for (std::size_t j = 0; j < grid.phi.size(); ++j)
    if (std::abs(grid.phi[j] - ph) <= 1e-9) return j;
  throw validation_error("generate_driven_map: source angle must lie on the phi grid");
}

}  // namespace

CylGrid make_grid(double r_min, double r_max, std::size_t nr, std::size_t nphi,
                  double z_min, double z_max, std::size_t nz) {
  if (!(r_max > r_min) || !(z_max > z_min) || nr < 2 || nz < 2 || nphi < 4)
    throw validation_error("make_grid: degenerate grid");
  CylGrid g;
  g.r.resize(nr);
  for (std::size_t i = 0; i < nr; ++i)
    g.r[i] = r_min + (r_max - r_min) * static_cast<double>(i) /
                         static_cast<double>(nr - 1);
  g.phi.resize(nphi);
  for (std::size_t i = 0; i < nphi; ++i)
    g.phi[i] = two_pi * static_cast<double>(i) / static_cast<double>(nphi);
  g.z.resize(nz);
  for (std::size_t i = 0; i < nz; ++i)
    g.z[i] = z_min + (z_max - z_min) * static_cast<double>(i) /
                         static_cast<double>(nz - 1);
  return g;
}

ValidationReport validate(const SyntheticModeSpec& s) {
  ValidationReport rep;
  if (s.m == 0) rep.fail("m != 0");
  if (!(s.r0 > 0.0)) rep.fail("r0 > 0");
  if (!(s.sigma_r > 0.0)) rep.fail("sigma_r > 0");
  if (!(s.sigma_z > 0.0)) rep.fail("sigma_z > 0");
  double norm = 0.0;
  for (const auto& c : s.component_ratios) norm += std::norm(c);
  if (!(norm > 0.0)) rep.fail("component ratios nonzero");
  if (!(s.l_prop > 0.0)) rep.fail("l_prop > 0 (infinity allowed)");
  if (std::abs(s.asymmetry) >= 1.0) rep.fail("|asymmetry| < 1");
  return rep;
}

ValidationReport validate(const DrivenFieldSpec& d) {
  ValidationReport rep = validate(d.mode);
  auto drep = validate(d.dipole);
  for (auto& v : drep.violations) rep.fail(std::move(v));
  if (!(d.beta_true > 0.0 && d.beta_true <= 1.0))
    rep.fail("beta_true in (0, 1]");
  if (!(d.chi_true > 0.0)) rep.fail("chi_true > 0");
  if (!(d.bulk_n >= 1.0)) rep.fail("bulk_n >= 1");
  if (!(d.omega > 0.0)) rep.fail("omega > 0");
  return rep;
}

FieldMap generate_mode_map(const SyntheticModeSpec& s, const CylGrid& grid) {
  auto rep = validate(s);
  if (!rep.ok) throw validation_error("generate_mode_map: " + rep.joined());
  check_resolution(s, grid);

  double cnorm = 0.0;
  for (const auto& c : s.component_ratios) cnorm += std::norm(c);
  cnorm = std::sqrt(cnorm);

  double pmax = 0.0;
  for (double r : grid.r)
    for (double z : grid.z) pmax = std::max(pmax, profile(s, r, z));
  if (!(pmax > 0.0))
    throw validation_error("generate_mode_map: profile vanishes on the grid");
  const double scale = 1.0 / (pmax * cnorm);

  std::vector<Vec3c> values(grid.r.size() * grid.phi.size() * grid.z.size());
  std::size_t idx = 0;
  for (std::size_t ir = 0; ir < grid.r.size(); ++ir) {
    for (std::size_t ip = 0; ip < grid.phi.size(); ++ip) {
      const double theta = grid.phi[ip];
      const cplx az = std::exp(cplx(0.0, s.m * theta)) * decay_factor(s, theta);
      for (std::size_t iz = 0; iz < grid.z.size(); ++iz) {
        const double p = profile(s, grid.r[ir], grid.z[iz]) * scale;
        Vec3c v;
        for (int c = 0; c < 3; ++c) v[c] = p * s.component_ratios[c] * az;
        values[idx++] = v;
      }
    }
  }
  return make_field_map(grid.r, grid.phi, grid.z, std::move(values),
                        Provenance::SYNTHETIC);
}

FieldMap generate_driven_map(const DrivenFieldSpec& d, const CylGrid& grid) {
  auto rep = validate(d);
  if (!rep.ok) throw validation_error("generate_driven_map: " + rep.joined());
  check_resolution(d.mode, grid);
  grid_angle_index(grid, d.position.phi);

  // mode ratios with the radial component rotated to the positive real axis
  Vec3c cp = d.mode.component_ratios;
  if (!(std::abs(cp[0]) > 0.0))
    throw validation_error(
        "generate_driven_map: mode needs a nonzero radial component");
  const cplx rot = std::abs(cp[0]) / cp[0];
  for (auto& c : cp) c *= rot;
  const Vec3c cm = conj_mode(cp);

  const double p_d = profile(d.mode, d.position.r, d.position.z);
  if (!(p_d > 1e-12))
    throw validation_error(
        "generate_driven_map: dipole outside the mode profile");

  const Vec3c e_plus{cp[0] * p_d, cp[1] * p_d, cp[2] * p_d};
  const Vec3c e_minus{cm[0] * p_d, cm[1] * p_d, cm[2] * p_d};
  const auto [c_plus, c_minus] = dipole_mode_coupling(d.dipole, e_plus, e_minus);
  const double cmag = std::abs(c_plus) + std::abs(c_minus);
  if (!(cmag > 0.0))
    throw validation_error("generate_driven_map: dipole does not couple to the mode pair");
  const cplx csum = c_plus + c_minus;
  if (std::abs(csum) < 1e-9 * cmag)
    throw validation_error(
        "generate_driven_map: vanishing radial source field; beta target infeasible");
  const cplx w_plus = c_plus / csum;
  const cplx w_minus = c_minus / csum;

  const double im_bulk = std::abs(bulk_im_field(d.bulk_n, d.omega));
  const double g = d.beta_true * d.chi_true * im_bulk;   // guided level
  const double b = (1.0 - d.beta_true) * d.chi_true * im_bulk;  // background

  const double phi_s = d.position.phi;
  const double cr = std::abs(cp[0]);
  const cplx guided_scale = cplx(0.0, -1.0) * g / (cr * p_d);

  std::vector<Vec3c> values(grid.r.size() * grid.phi.size() * grid.z.size());
  std::size_t idx = 0;
  for (std::size_t ir = 0; ir < grid.r.size(); ++ir) {
    for (std::size_t ip = 0; ip < grid.phi.size(); ++ip) {
      const double theta = grid.phi[ip] - phi_s;
      const cplx ep = std::exp(cplx(0.0, d.mode.m * theta));
      const cplx em = std::conj(ep);
      const double dec = decay_factor(d.mode, theta);
      const double fold = folded_arc(theta);
      const double bg = b * std::exp(-fold * fold /
                                     (2.0 * kBackgroundWidth * kBackgroundWidth));
      for (std::size_t iz = 0; iz < grid.z.size(); ++iz) {
        const double p = profile(d.mode, grid.r[ir], grid.z[iz]) / p_d;
        Vec3c v;
        for (int c = 0; c < 3; ++c)
          v[c] = guided_scale * p * dec * (w_plus * cp[c] * ep + w_minus * cm[c] * em);
        v[0] += cplx(0.0, -1.0) * bg * p;
        values[idx++] = v;
      }
    }
  }
  return make_field_map(grid.r, grid.phi, grid.z, std::move(values),
                        Provenance::SYNTHETIC,
                        FieldSource{d.dipole, d.position});
}

FieldMap bulk_reference_map(double n, double omega, const CylGrid& grid,
                            const CylindricalPoint& source) {
  if (!(n >= 1.0) || !(omega > 0.0))
    throw validation_error("bulk_reference_map: n >= 1 and omega > 0");
  const double k = n * omega / speed_of_light;

  const double cs = std::cos(source.phi), sn = std::sin(source.phi);
  const double sx = source.r * cs, sy = source.r * sn, sz = source.z;
  const double px = cs, py = sn, pz = 0.0;  // radial unit dipole

  std::vector<Vec3c> values(grid.r.size() * grid.phi.size() * grid.z.size());
  std::size_t idx = 0;
  for (std::size_t ir = 0; ir < grid.r.size(); ++ir) {
    for (std::size_t ip = 0; ip < grid.phi.size(); ++ip) {
      const double cph = std::cos(grid.phi[ip]);
      const double sph = std::sin(grid.phi[ip]);
      for (std::size_t iz = 0; iz < grid.z.size(); ++iz) {
        const double ox = grid.r[ir] * cph, oy = grid.r[ir] * sph,
                     oz = grid.z[iz];
        const double rx = ox - sx, ry = oy - sy, rz = oz - sz;
        const double R = std::sqrt(rx * rx + ry * ry + rz * rz);
        if (!(R > 1e-15))
          throw validation_error(
              "bulk_reference_map: source must not coincide with a grid point");
        const double nx = rx / R, ny = ry / R, nz2 = rz / R;
        const double ndp = nx * px + ny * py + nz2 * pz;
        const cplx expikr = std::exp(cplx(0.0, k * R));
        // transverse (far) and longitudinal (near) parts of the dipole field
        const cplx far = k * k / R * expikr;
        const cplx nearf = (1.0 / (R * R * R) - cplx(0.0, k) / (R * R)) * expikr;
        const double tx = px - ndp * nx, ty = py - ndp * ny, tz = pz - ndp * nz2;
        const double lx = 3.0 * ndp * nx - px, ly = 3.0 * ndp * ny - py,
                     lz = 3.0 * ndp * nz2 - pz;
        const double pref = 1.0 / (4.0 * pi * n * n);
        cplx ex = pref * (far * tx + nearf * lx);
        cplx ey = pref * (far * ty + nearf * ly);
        cplx ez = pref * (far * tz + nearf * lz);
        // negative out-of-phase convention
        ex = std::conj(ex);
        ey = std::conj(ey);
        ez = std::conj(ez);
        values[idx++] = Vec3c{ex * cph + ey * sph, -ex * sph + ey * cph, ez};
      }
    }
  }
  CylindricalPoint pos = source;
  DipoleVector dip{Vec3c{cplx(1.0, 0.0), cplx(0.0, 0.0), cplx(0.0, 0.0)}};
  return make_field_map(grid.r, grid.phi, grid.z, std::move(values),
                        Provenance::SYNTHETIC, FieldSource{dip, pos});
}

}  // namespace slotring
