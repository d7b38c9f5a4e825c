// Copyright (c) the slotring developers.
// SPDX-License-Identifier: Apache-2.0

#include "slotring/types.hpp"

#include <cmath>
#include <sstream>

namespace slotring {

namespace {

void throw_if_invalid(const ValidationReport& rep, const char* type_name) {
  if (!rep.ok) {
    throw validation_error(std::string(type_name) + ": " + rep.joined());
  }
}

bool finite(const cplx& v) {
  return std::isfinite(v.real()) && std::isfinite(v.imag());
}

}  // namespace

std::string ValidationReport::joined() const {
  std::ostringstream os;
  for (std::size_t i = 0; i < violations.size(); ++i) {
    if (i) os << "; ";
    os << violations[i];
  }
  return os.str();
}

double DipoleVector::magnitude() const {
  double s = 0.0;
  for (const auto& c : components) s += std::norm(c);
  return std::sqrt(s);
}

double RingGeometry::geometric_volume() const {
  const double ro = outer_radius();
  const double ri = inner_radius();
  return pi * height * (ro * ro - ri * ri);
}

ValidationReport validate(const DipoleVector& d) {
  ValidationReport rep;
  for (const auto& c : d.components) {
    if (!finite(c)) {
      rep.fail("dipole components finite");
      return rep;
    }
  }
  if (!(d.magnitude() > 0.0)) rep.fail("dipole magnitude > 0");
  return rep;
}

ValidationReport validate(const EmitterSpec& e) {
  ValidationReport rep;
  if (!(e.omega_e > 0.0)) rep.fail("omega_e > 0");
  if (!(e.gamma_hom > 0.0)) rep.fail("gamma_hom > 0");
  if (e.omega_e > 0.0 && e.gamma_hom >= e.omega_e / 100.0)
    rep.fail("gamma_hom << omega_e (gamma_hom >= omega_e/100)");
  auto drep = validate(e.dipole);
  for (auto& v : drep.violations) rep.fail(std::move(v));
  if (!(e.position.r >= 0.0)) rep.fail("position.r >= 0");
  return rep;
}

ValidationReport validate(const CavityMode& c) {
  ValidationReport rep;
  if (!(c.omega_cav > 0.0)) rep.fail("omega_cav > 0");
  if (!(c.gamma_cav > 0.0)) rep.fail("gamma_cav > 0");
  if (rep.ok) {
    // q() is defined as omega/gamma, so the consistency requirement is exact
    // by construction; guard against a degenerate ratio anyway.
    const double resid = std::abs(c.q() * c.gamma_cav / c.omega_cav - 1.0);
    if (!(resid <= 1e-12)) rep.fail("q = omega_cav/gamma_cav within 1e-12");
  }
  if (c.v_eff && !(*c.v_eff > 0.0)) rep.fail("v_eff > 0");
  if (c.n_eff && !(*c.n_eff >= 1.0)) rep.fail("n_eff >= 1");
  return rep;
}

ValidationReport validate(const RingGeometry& g) {
  ValidationReport rep;
  if (!(g.radius > 0.0)) rep.fail("radius > 0");
  if (!(g.bar_width > 0.0)) rep.fail("bar_width > 0");
  if (!(g.height > 0.0)) rep.fail("height > 0");
  if (!(g.gap > 0.0)) rep.fail("gap > 0");
  if (!(g.inner_radius() > 0.0)) rep.fail("inner radius > 0");
  if (!(g.n_clad >= 1.0)) rep.fail("n_clad >= 1");
  if (!(g.n_slot >= 1.0)) rep.fail("n_slot >= 1");
  if (!(g.n_high > g.n_clad)) rep.fail("n_high > n_clad");
  if (!(g.n_high > g.n_slot)) rep.fail("n_high > n_slot");
  if (!(g.kappa_high >= 0.0)) rep.fail("kappa_high >= 0");
  return rep;
}

DipoleVector make_dipole(const Vec3c& components) {
  DipoleVector d{components};
  throw_if_invalid(validate(d), "DipoleVector");
  return d;
}

EmitterSpec make_emitter(double omega_e, double gamma_hom, const DipoleVector& d,
                         const CylindricalPoint& position) {
  EmitterSpec e{omega_e, gamma_hom, d, position};
  throw_if_invalid(validate(e), "EmitterSpec");
  return e;
}

CavityMode make_cavity_mode(double omega_cav, double gamma_cav, int m,
                            std::optional<double> supplied_q,
                            std::optional<double> v_eff,
                            std::optional<double> n_eff) {
  CavityMode c{omega_cav, gamma_cav, m, v_eff, n_eff};
  auto rep = validate(c);
  if (supplied_q && rep.ok) {
    const double rel = std::abs(*supplied_q * gamma_cav / omega_cav - 1.0);
    if (!(rel <= 2e-3))
      rep.fail("supplied q inconsistent with omega_cav/gamma_cav beyond 0.2%");
  }
  throw_if_invalid(rep, "CavityMode");
  return c;
}

RingGeometry make_ring_geometry(double radius, double bar_width, double height,
                                double gap, double n_high, double n_slot,
                                double n_clad, double kappa_high) {
  RingGeometry g{radius, bar_width, height, gap, n_high, n_slot, n_clad,
                 kappa_high};
  throw_if_invalid(validate(g), "RingGeometry");
  return g;
}

DipoleClass classify_dipole(const DipoleVector& d) {
  const double mag = d.magnitude();
  if (!(mag > 0.0)) throw validation_error("classify_dipole: |d| > 0 required");
  const double tol = 1e-9;

  // Linear <=> all components share a global phase (up to sign), which is
  // equivalent to |sum d_i^2| == sum |d_i|^2.
  cplx sym_dot = 0.0;
  for (const auto& c : d.components) sym_dot += c * c;
  if (std::abs(std::abs(sym_dot) - mag * mag) <= tol * mag * mag)
    return DipoleClass::LINEAR;

  // Circular: sqrt(d/2) (r_hat +- i phi_hat) up to a global phase.
  const cplx ar = d.components[0];
  const cplx ap = d.components[1];
  const cplx az = d.components[2];
  if (std::abs(az) <= tol * mag && std::abs(ar) > 0.0 &&
      std::abs(std::abs(ar) - std::abs(ap)) <= tol * mag) {
    const cplx ratio = ap / ar;
    if (std::abs(ratio - cplx(0.0, 1.0)) <= tol) return DipoleClass::CIRCULAR_PLUS;
    if (std::abs(ratio - cplx(0.0, -1.0)) <= tol) return DipoleClass::CIRCULAR_MINUS;
  }
  return DipoleClass::GENERAL;
}

const char* to_string(DipoleClass c) {
  switch (c) {
    case DipoleClass::LINEAR: return "LINEAR";
    case DipoleClass::CIRCULAR_PLUS: return "CIRCULAR_PLUS";
    case DipoleClass::CIRCULAR_MINUS: return "CIRCULAR_MINUS";
    case DipoleClass::GENERAL: return "GENERAL";
  }
  return "GENERAL";
}

}  // namespace slotring
