// Copyright (c) the slotring developers.
// SPDX-License-Identifier: Apache-2.0

#include "slotring/field_analysis.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "slotring/detail/azimuthal.hpp"

namespace slotring {

namespace detail {

std::vector<int> dft_orders(std::size_t n) {
  std::vector<int> orders(n);
  const int lo = -static_cast<int>(n / 2);
  for (std::size_t i = 0; i < n; ++i) orders[i] = lo + static_cast<int>(i);
  return orders;
}

std::vector<cplx> dft_coeffs(const LineTrace& t) {
  const std::size_t n = t.values.size();
  const auto orders = dft_orders(n);
  std::vector<cplx> coeffs(n);
  for (std::size_t i = 0; i < n; ++i) {
    cplx acc = 0.0;
    const double k = orders[i];
    for (std::size_t j = 0; j < n; ++j)
      acc += t.values[j] * std::exp(cplx(0.0, -k * t.phi[j]));
    coeffs[i] = acc / static_cast<double>(n);
  }
  return coeffs;
}

int dominant_order(const std::vector<int>& orders, const std::vector<cplx>& coeffs) {
  auto coeff_at = [&](int k) -> cplx {
    for (std::size_t i = 0; i < orders.size(); ++i)
      if (orders[i] == k) return coeffs[i];
    return 0.0;
  };
  int best = 1;
  double best_amp = -1.0;
  const int kmax = static_cast<int>(orders.size() / 2);
  for (int k = 1; k < kmax; ++k) {
    const double amp = std::abs(coeff_at(k)) + std::abs(coeff_at(-k));
    if (amp > best_amp) {
      best_amp = amp;
      best = k;
    }
  }
  return best;
}

}  // namespace detail

namespace {

double wrap_2pi(double a) {
  double w = std::fmod(a, two_pi);
  if (w < 0.0) w += two_pi;
  return w;
}

struct WindowDemod {
  cplx a0{};
  cplx a_plus{};
  cplx a_minus{};
  std::size_t samples = 0;
};

// Demodulated content of the trace over theta = wrap(phi - phi_s) in
// [lo, hi): flat level a0 and the +-m harmonic amplitudes.
WindowDemod window_demod(const LineTrace& t, double phi_s, double lo, double hi,
                         int m) {
  WindowDemod w;
  for (std::size_t j = 0; j < t.phi.size(); ++j) {
    const double theta = wrap_2pi(t.phi[j] - phi_s);
    if (theta < lo - 1e-12 || theta >= hi - 1e-12) continue;
    const cplx v = t.values[j];
    w.a0 += v;
    w.a_plus += v * std::exp(cplx(0.0, -m * theta));
    w.a_minus += v * std::exp(cplx(0.0, m * theta));
    ++w.samples;
  }
  if (w.samples == 0) throw numeric_error("trace window contains no samples");
  const double n = static_cast<double>(w.samples);
  w.a0 /= n;
  w.a_plus /= n;
  w.a_minus /= n;
  return w;
}

// Trace content classified from the full-circle DFT: the dominant azimuthal
// harmonic, and whether that harmonic outweighs the flat (k = 0) level.
struct TraceStructure {
  int order = 1;
  bool oscillatory = false;
};

TraceStructure trace_structure(const LineTrace& t) {
  const auto coeffs = detail::dft_coeffs(t);
  const auto orders = detail::dft_orders(t.values.size());
  TraceStructure s;
  s.order = detail::dominant_order(orders, coeffs);
  double c0 = 0.0, cm = 0.0;
  for (std::size_t i = 0; i < orders.size(); ++i) {
    if (orders[i] == 0) c0 = std::abs(coeffs[i]);
    if (orders[i] == s.order || orders[i] == -s.order) cm += std::abs(coeffs[i]);
  }
  s.oscillatory = cm > c0;
  return s;
}

// Crest level of the out-of-phase component over a window: the harmonic
// crest |a+ - conj(a-)| when the trace oscillates, the flat level otherwise.
double crest_magnitude(const WindowDemod& w, bool oscillatory) {
  if (oscillatory) return std::abs(w.a_plus - std::conj(w.a_minus));
  return std::abs(w.a0.imag());
}

double source_phi_of(const LineTrace& t) {
  if (!t.source_phi)
    throw validation_error("beta extraction requires the trace source angle");
  return *t.source_phi;
}

cplx value_at_source(const LineTrace& t, double phi_s) {
  // nearest grid sample to the source angle
  std::size_t best = 0;
  double best_d = std::numeric_limits<double>::infinity();
  for (std::size_t j = 0; j < t.phi.size(); ++j) {
    double d = std::abs(wrap_2pi(t.phi[j] - phi_s));
    d = std::min(d, two_pi - d);
    if (d < best_d) {
      best_d = d;
      best = j;
    }
  }
  return t.values[best];
}

}  // namespace

double dissipated_power(const DipoleVector& d, const Vec3c& e_at_dipole,
                        double omega_e) {
  if (!(omega_e > 0.0)) throw validation_error("dissipated_power: omega_e > 0");
  cplx dot = 0.0;
  for (int i = 0; i < 3; ++i) dot += d.components[i] * e_at_dipole[i];
  return omega_e / 2.0 * dot.imag();
}

double chi_from_fields(double im_e_nano, double im_e_hom) {
  if (im_e_nano == 0.0 || im_e_hom == 0.0)
    throw validation_error("chi_from_fields: field values must be nonzero");
  if ((im_e_nano > 0.0) != (im_e_hom > 0.0))
    throw validation_error(
        "chi_from_fields: sign mismatch (both values must represent damping)");
  return im_e_nano / im_e_hom;
}

LineTrace extract_line_trace(const FieldMap& f, double r_trace, double z_trace,
                             int component) {
  if (component < 0 || component > 2)
    throw validation_error("extract_line_trace: component must be r, phi or z");
  if (!f.phi_uniform())
    throw validation_error("extract_line_trace: map phi axis must be uniform");
  if (r_trace < f.r.front() || r_trace > f.r.back() || z_trace < f.z.front() ||
      z_trace > f.z.back())
    throw validation_error("extract_line_trace: trace point outside grid hull");

  std::vector<cplx> values(f.phi.size());
  for (std::size_t j = 0; j < f.phi.size(); ++j)
    values[j] = field_at(f, {r_trace, f.phi[j], z_trace})[component];

  std::optional<double> src;
  if (f.source) src = f.source->position.phi;
  return make_line_trace(f.phi, std::move(values), r_trace, z_trace, src);
}

TraceFlatness trace_flatness(const LineTrace& t) {
  const double phi_s = source_phi_of(t);
  const auto structure = trace_structure(t);
  const int m = structure.order;
  const bool osc = structure.oscillatory;

  const auto far = window_demod(t, phi_s, pi - pi / 8.0, pi + pi / 8.0, m);
  // near-source windows on both sides, clear of the +-0.3 rad source region
  const auto near_p = window_demod(t, phi_s, 0.9, 0.9 + pi / 4.0, m);
  const auto near_m = window_demod(t, phi_s, two_pi - 0.9 - pi / 4.0,
                                   two_pi - 0.9, m);
  // slope probe: two pi/4 windows flanking the antipode
  const auto half_lo = window_demod(t, phi_s, pi - pi / 4.0, pi, m);
  const auto half_hi = window_demod(t, phi_s, pi, pi + pi / 4.0, m);

  TraceFlatness res;
  res.far_crest = crest_magnitude(far, osc);
  res.near_crest =
      0.5 * (crest_magnitude(near_p, osc) + crest_magnitude(near_m, osc));
  res.ratio = res.near_crest > 0.0 ? res.far_crest / res.near_crest : 0.0;
  const double c1 = crest_magnitude(half_lo, osc);
  const double c2 = crest_magnitude(half_hi, osc);
  const double mean = 0.5 * (c1 + c2);
  res.slope_per_rad = mean > 0.0 ? std::abs(c2 - c1) / mean / (pi / 4.0) : 0.0;
  res.flat = res.ratio >= 0.95 && res.ratio <= 1.0 / 0.95 &&
             res.slope_per_rad < 1e-3;
  return res;
}

BetaExtraction beta_plateau(const LineTrace& t) {
  const double phi_s = source_phi_of(t);
  const cplx S = value_at_source(t, phi_s);
  if (std::abs(S.imag()) <= 0.0)
    throw numeric_error("beta_plateau: zero out-of-phase source value");

  const auto flatness = trace_flatness(t);
  if (!flatness.flat)
    throw plateau_not_flat(
        "beta_plateau: far-field plateau is not flat; use beta_envelope");

  const auto structure = trace_structure(t);
  const auto far = window_demod(t, phi_s, pi - pi / 8.0, pi + pi / 8.0,
                                structure.order);
  const double sign_ref = S.imag() >= 0.0 ? 1.0 : -1.0;
  const double plateau = structure.oscillatory
                             ? sign_ref * crest_magnitude(far, true)
                             : far.a0.imag();

  BetaExtraction out;
  out.method = BetaMethod::PLATEAU;
  out.source_value = S;
  out.far_value = cplx(far.a0.real(), plateau);
  out.beta = plateau / S.imag();
  out.detected_order = structure.order;
  if (out.beta < 0.0 || out.beta > 1.0 + 1e-6)
    throw numeric_error("beta_plateau: extraction error, beta outside [0, 1]");
  return out;
}

namespace {

struct EnvelopeFit {
  double alpha = 0.0;       // per meter
  double a_at_source = 0.0; // envelope extrapolated to s = 0
  double residual = 1.0;    // relative RMS misfit
  bool ok = false;
};

// Carrier-resolved fit over the far half of the trace:
//   T(theta) ~ e^{-alpha s(theta)} (P e^{i m theta} + Q e^{-i m theta}),
// s = folded arc length from the source. P, Q solve a 2x2 complex least
// squares at fixed alpha; alpha itself by golden-section on the residual.
// Exact for a two-carrier trace, so the extrapolated crest |P| + |Q| carries
// no window bias.
EnvelopeFit fit_two_carrier(const std::vector<double>& theta,
                            const std::vector<cplx>& values, double r_trace,
                            int m) {
  const std::size_t n = theta.size();
  std::vector<double> s(n);
  std::vector<cplx> e_plus(n), e_minus(n);
  for (std::size_t j = 0; j < n; ++j) {
    s[j] = r_trace * std::min(theta[j], two_pi - theta[j]);
    e_plus[j] = std::exp(cplx(0.0, m * theta[j]));
    e_minus[j] = std::conj(e_plus[j]);
  }
  double t_norm = 0.0;
  for (const auto& v : values) t_norm += std::norm(v);
  if (!(t_norm > 0.0)) return {};

  auto misfit = [&](double alpha, EnvelopeFit* out) {
    // basis b1 = w e^{i m theta}, b2 = w e^{-i m theta}, w = e^{-alpha s}
    cplx g11 = 0.0, g12 = 0.0, g22 = 0.0, r1 = 0.0, r2 = 0.0;
    for (std::size_t j = 0; j < n; ++j) {
      const double w = std::exp(-alpha * s[j]);
      const double w2 = w * w;
      g11 += w2;
      g22 += w2;
      g12 += w2 * std::conj(e_plus[j]) * e_minus[j];
      r1 += w * std::conj(e_plus[j]) * values[j];
      r2 += w * std::conj(e_minus[j]) * values[j];
    }
    const cplx det = g11 * g22 - g12 * std::conj(g12);
    if (std::abs(det) < 1e-30 * std::abs(g11 * g22)) return 1.0;
    const cplx p = (g22 * r1 - g12 * r2) / det;
    const cplx q = (g11 * r2 - std::conj(g12) * r1) / det;
    double ssr = 0.0;
    for (std::size_t j = 0; j < n; ++j) {
      const double w = std::exp(-alpha * s[j]);
      ssr += std::norm(values[j] - w * (p * e_plus[j] + q * e_minus[j]));
    }
    const double rel = std::sqrt(std::max(ssr, 0.0) / t_norm);
    if (out) {
      out->alpha = alpha;
      out->a_at_source = std::abs(p) + std::abs(q);
      out->residual = rel;
      out->ok = true;
    }
    return rel;
  };

  // golden-section over alpha in [0, alpha_max]
  const double alpha_max = 10.0 / (pi * r_trace);
  const double gr = (std::sqrt(5.0) - 1.0) / 2.0;
  double lo = 0.0, hi = alpha_max;
  double x1 = hi - gr * (hi - lo), x2 = lo + gr * (hi - lo);
  double f1 = misfit(x1, nullptr), f2 = misfit(x2, nullptr);
  for (int it = 0; it < 120; ++it) {
    if (f1 <= f2) {
      hi = x2;
      x2 = x1;
      f2 = f1;
      x1 = hi - gr * (hi - lo);
      f1 = misfit(x1, nullptr);
    } else {
      lo = x1;
      x1 = x2;
      f1 = f2;
      x2 = lo + gr * (hi - lo);
      f2 = misfit(x2, nullptr);
    }
  }
  EnvelopeFit fit;
  double best = 0.5 * (lo + hi);
  // the boundary alpha = 0 (lossless) competes with the interior minimum
  if (misfit(0.0, nullptr) <= misfit(best, nullptr)) best = 0.0;
  misfit(best, &fit);
  return fit;
}

// log-linear fit of a smooth positive envelope, for flat-quadrature traces
EnvelopeFit fit_flat_envelope(const std::vector<double>& theta,
                              const std::vector<cplx>& values, double r_trace) {
  double sum_s = 0.0, sum_s2 = 0.0, sum_y = 0.0, sum_sy = 0.0;
  std::size_t cnt = 0;
  std::vector<std::pair<double, double>> samples;
  for (std::size_t j = 0; j < theta.size(); ++j) {
    const double env = std::abs(values[j]);
    if (!(env > 0.0)) continue;
    const double s = r_trace * std::min(theta[j], two_pi - theta[j]);
    const double y = std::log(env);
    sum_s += s;
    sum_s2 += s * s;
    sum_y += y;
    sum_sy += s * y;
    samples.emplace_back(s, env);
    ++cnt;
  }
  EnvelopeFit fit;
  if (cnt < 8) return fit;
  const double fn = static_cast<double>(cnt);
  const double denom = fn * sum_s2 - sum_s * sum_s;
  const double slope = denom != 0.0 ? (fn * sum_sy - sum_s * sum_y) / denom : 0.0;
  const double intercept = (sum_y - slope * sum_s) / fn;
  double ss = 0.0;
  for (const auto& [s, e] : samples) {
    const double rel = (e - std::exp(intercept + slope * s)) /
                       std::exp(intercept + slope * s);
    ss += rel * rel;
  }
  fit.alpha = -slope;
  fit.a_at_source = std::exp(intercept);
  fit.residual = std::sqrt(ss / fn);
  fit.ok = true;
  return fit;
}

}  // namespace

BetaExtraction beta_envelope(const LineTrace& t) {
  const double phi_s = source_phi_of(t);
  const cplx S = value_at_source(t, phi_s);
  if (std::abs(S.imag()) <= 0.0)
    throw numeric_error("beta_envelope: zero out-of-phase source value");
  const auto structure = trace_structure(t);

  // far half of the trace only; the source lobe stays out of the fit
  std::vector<double> theta;
  std::vector<cplx> values;
  for (std::size_t j = 0; j < t.values.size(); ++j) {
    const double th = wrap_2pi(t.phi[j] - phi_s);
    if (th < pi / 2.0 || th >= 3.0 * pi / 2.0) continue;
    theta.push_back(th);
    values.push_back(t.values[j]);
  }

  BetaExtraction out;
  out.method = BetaMethod::ENVELOPE;
  out.source_value = S;
  out.detected_order = structure.order;
  const EnvelopeFit fit =
      structure.oscillatory
          ? fit_two_carrier(theta, values, t.r_trace, structure.order)
          : fit_flat_envelope(theta, values, t.r_trace);
  if (!fit.ok) {
    out.unreliable = true;
    out.residual = 1.0;
    return out;
  }
  out.residual = fit.residual;
  out.decay_rate_per_rad = fit.alpha * t.r_trace;
  const double sign_ref = S.imag() >= 0.0 ? 1.0 : -1.0;
  out.far_value = cplx(0.0, sign_ref * fit.a_at_source);
  out.beta = fit.a_at_source / std::abs(S.imag());
  out.unreliable = !(out.residual < 0.05);
  if (!out.unreliable && (out.beta < 0.0 || out.beta > 1.0 + 1e-6))
    throw numeric_error("beta_envelope: extraction error, beta outside [0, 1]");
  return out;
}

double effective_mode_volume(const FieldMap& f, const PermittivityProfile& eps,
                             const CylindricalPoint& r_e) {
  const Vec3c e_src = field_at(f, r_e);
  double e2_src = 0.0;
  for (const auto& c : e_src) e2_src += std::norm(c);
  if (!(e2_src > 0.0))
    throw numeric_error("effective_mode_volume: |E(r_e)| = 0");
  const double eps_src = eps(r_e.r, r_e.z);
  if (!(eps_src > 0.0))
    throw validation_error("effective_mode_volume: eps(r_e) must be > 0");

  auto trapezoid_weights = [](const std::vector<double>& axis) {
    std::vector<double> w(axis.size(), 0.0);
    if (axis.size() == 1) {
      w[0] = 1.0;
      return w;
    }
    for (std::size_t i = 0; i < axis.size(); ++i) {
      const double left = i == 0 ? 0.0 : axis[i] - axis[i - 1];
      const double right = i + 1 == axis.size() ? 0.0 : axis[i + 1] - axis[i];
      w[i] = 0.5 * (left + right);
    }
    return w;
  };
  const auto wr = trapezoid_weights(f.r);
  const auto wz = trapezoid_weights(f.z);
  // periodic phi: each sample covers its midpoint-to-midpoint arc
  std::vector<double> wphi(f.phi.size(), 0.0);
  if (f.phi.size() == 1) {
    wphi[0] = two_pi;
  } else {
    const std::size_t n = f.phi.size();
    for (std::size_t j = 0; j < n; ++j) {
      const double prev = j == 0 ? f.phi[n - 1] - two_pi : f.phi[j - 1];
      const double next = j + 1 == n ? f.phi[0] + two_pi : f.phi[j + 1];
      wphi[j] = 0.5 * (next - prev);
    }
  }

  double integral = 0.0;
  for (std::size_t ir = 0; ir < f.r.size(); ++ir) {
    for (std::size_t iz = 0; iz < f.z.size(); ++iz) {
      const double cell = f.r[ir] * wr[ir] * wz[iz] * eps(f.r[ir], f.z[iz]);
      double phi_sum = 0.0;
      for (std::size_t ip = 0; ip < f.phi.size(); ++ip) {
        const Vec3c& v = f.at(ir, ip, iz);
        const double e2 = std::norm(v[0]) + std::norm(v[1]) + std::norm(v[2]);
        phi_sum += wphi[ip] * e2;
      }
      integral += cell * phi_sum;
    }
  }
  return integral / (eps_src * e2_src);
}

double bulk_im_field(double n, double omega) {
  if (!(n >= 1.0) || !(omega > 0.0))
    throw validation_error("bulk_im_field: n >= 1 and omega > 0 required");
  const double c3 = speed_of_light * speed_of_light * speed_of_light;
  return -n * omega * omega * omega / (6.0 * pi * c3);
}

}  // namespace slotring
