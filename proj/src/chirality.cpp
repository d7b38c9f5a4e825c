// Copyright (c) the slotring developers.
// SPDX-License-Identifier: Apache-2.0

#include "slotring/chirality.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <tuple>

#include "slotring/detail/azimuthal.hpp"

namespace slotring {

double ellipticity(const Vec3c& e) {
  const double ar = std::abs(e[0]);
  const double ap = std::abs(e[1]);
  if (!(ar > 0.0) && !(ap > 0.0))
    throw validation_error("ellipticity: both in-plane components are zero");
  if (ar == 0.0 || ap == 0.0) return 0.0;  // one component: linear
  const double psi = std::atan(ap / ar);
  const double delta = std::arg(e[1]) - std::arg(e[0]);
  double s = std::sin(2.0 * psi) * std::sin(delta);
  s = std::clamp(s, -1.0, 1.0);
  if (s == 1.0) return 1.0;  // exact circular limits of tan(asin(s)/2)
  if (s == -1.0) return -1.0;
  return std::tan(std::asin(s) / 2.0);
}

bool ellipticity_ez_ok(const Vec3c& e) {
  const double in_plane = std::max(std::abs(e[0]), std::abs(e[1]));
  return std::abs(e[2]) < 0.05 * in_plane;
}

EllipticityMap ellipticity_map(const FieldMap& f, double phi_slice) {
  double ph = std::fmod(phi_slice, two_pi);
  if (ph < 0.0) ph += two_pi;
  std::size_t jp = 0;
  double best = std::numeric_limits<double>::infinity();
  for (std::size_t j = 0; j < f.phi.size(); ++j) {
    double d = std::abs(f.phi[j] - ph);
    d = std::min(d, two_pi - d);
    if (d < best) {
      best = d;
      jp = j;
    }
  }

  EllipticityMap map;
  map.r = f.r;
  map.z = f.z;
  map.phi_slice = f.phi[jp];
  map.epsilon.resize(f.r.size() * f.z.size(), 0.0);
  map.ez_ok.resize(map.epsilon.size(), true);
  for (std::size_t ir = 0; ir < f.r.size(); ++ir) {
    for (std::size_t iz = 0; iz < f.z.size(); ++iz) {
      const Vec3c& v = f.at(ir, jp, iz);
      const std::size_t idx = ir * f.z.size() + iz;
      const double ar = std::abs(v[0]);
      const double ap = std::abs(v[1]);
      if (!(ar > 0.0) && !(ap > 0.0)) {
        map.epsilon[idx] = 0.0;
        map.ez_ok[idx] = false;
        continue;
      }
      map.epsilon[idx] = ellipticity(v);
      map.ez_ok[idx] = ellipticity_ez_ok(v);
    }
  }
  return map;
}

WavenumberSpectrum wavenumber_spectrum(const LineTrace& t) {
  auto rep = validate(t);
  if (!rep.ok) throw validation_error("wavenumber_spectrum: " + rep.joined());

  const auto orders = detail::dft_orders(t.values.size());
  const auto coeffs = detail::dft_coeffs(t);
  WavenumberSpectrum s;
  s.order = orders;
  s.wavenumber.resize(orders.size());
  s.amplitude.resize(orders.size());
  for (std::size_t i = 0; i < orders.size(); ++i) {
    s.wavenumber[i] = static_cast<double>(orders[i]) / t.r_trace;
    s.amplitude[i] = std::abs(coeffs[i]);
  }
  return s;
}

DirectionalityReport directionality(const LineTrace& t, int m_expected,
                                    std::optional<double> beta_total) {
  if (m_expected <= 0)
    throw validation_error("directionality: m_expected must be positive");
  if (t.values.size() < 16 * static_cast<std::size_t>(m_expected))
    throw validation_error(
        "directionality: trace needs >= 16 samples per azimuthal period");
  const auto spec = wavenumber_spectrum(t);
  const std::size_t n = spec.order.size();

  auto index_of = [&](int k) -> std::size_t {
    for (std::size_t i = 0; i < n; ++i)
      if (spec.order[i] == k) return i;
    throw validation_error("directionality: m_expected outside spectrum range");
  };
  const std::size_t ip = index_of(m_expected);
  const std::size_t im = index_of(-m_expected);

  auto window_area = [&](std::size_t center) {
    double area = 0.0, peak = 0.0;
    std::size_t peak_idx = center;
    const std::size_t lo = center >= 2 ? center - 2 : 0;
    const std::size_t hi = std::min(center + 2, n - 1);
    for (std::size_t i = lo; i <= hi; ++i) {
      area += spec.amplitude[i];
      if (spec.amplitude[i] > peak) {
        peak = spec.amplitude[i];
        peak_idx = i;
      }
    }
    return std::tuple{area, peak, peak_idx};
  };
  const auto [area_p, peak_p, idx_p] = window_area(ip);
  const auto [area_m, peak_m, idx_m] = window_area(im);

  // background: median amplitude outside both peak windows and away from k=0
  std::vector<double> bg;
  for (std::size_t i = 0; i < n; ++i) {
    const int k = spec.order[i];
    if (std::abs(k - m_expected) <= 2 || std::abs(k + m_expected) <= 2) continue;
    bg.push_back(spec.amplitude[i]);
  }
  double median = 0.0;
  if (!bg.empty()) {
    std::nth_element(bg.begin(), bg.begin() + bg.size() / 2, bg.end());
    median = bg[bg.size() / 2];
  }
  if (!(std::max(peak_p, peak_m) > 5.0 * median))
    throw numeric_error("directionality: no identifiable peak at +-m_expected");

  DirectionalityReport rep;
  rep.a_plus = area_p;
  rep.a_minus = area_m;
  const double denom = area_p + area_m;
  if (!(denom > 0.0))
    throw numeric_error("directionality: vanishing peak areas");
  rep.directionality = (area_p - area_m) / denom;
  const double pp = area_p * area_p;
  const double pm = area_m * area_m;
  rep.directionality_power = (pp - pm) / (pp + pm);
  rep.k_plus = spec.wavenumber[idx_p];
  rep.k_minus = spec.wavenumber[idx_m];
  if (beta_total) {
    rep.beta_plus = *beta_total * pp / (pp + pm);
    rep.beta_minus = *beta_total * pm / (pp + pm);
  }
  return rep;
}

std::pair<cplx, cplx> dipole_mode_coupling(const DipoleVector& d,
                                           const Vec3c& e_plus,
                                           const Vec3c& e_minus) {
  cplx cp = 0.0, cm = 0.0;
  for (int i = 0; i < 3; ++i) {
    cp += d.components[i] * std::conj(e_plus[i]);
    cm += d.components[i] * std::conj(e_minus[i]);
  }
  return {cp, cm};
}

}  // namespace slotring
