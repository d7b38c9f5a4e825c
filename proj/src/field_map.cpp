// Copyright (c) the slotring developers.
// SPDX-License-Identifier: Apache-2.0

#include "slotring/field_map.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>

namespace slotring {

namespace {

bool strictly_increasing(const std::vector<double>& v) {
  for (std::size_t i = 1; i < v.size(); ++i)
    if (!(v[i] > v[i - 1])) return false;
  return true;
}

bool finite(const cplx& c) {
  return std::isfinite(c.real()) && std::isfinite(c.imag());
}

std::string fmt17(double v) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

// index of the interval such that axis[i] <= x <= axis[i+1]
std::size_t bracket(const std::vector<double>& axis, double x, const char* name) {
  if (axis.size() == 1) {
    if (std::abs(x - axis[0]) > 1e-12 * std::max(1.0, std::abs(axis[0])))
      throw validation_error(std::string("field_at: ") + name + " outside grid hull");
    return 0;
  }
  if (x < axis.front() || x > axis.back())
    throw validation_error(std::string("field_at: ") + name + " outside grid hull");
  auto it = std::upper_bound(axis.begin(), axis.end(), x);
  std::size_t hi = static_cast<std::size_t>(it - axis.begin());
  if (hi == 0) hi = 1;
  if (hi >= axis.size()) hi = axis.size() - 1;
  return hi - 1;
}

}  // namespace

bool FieldMap::phi_uniform(double rel_tol) const {
  if (phi.size() < 2) return true;
  const double d0 = phi[1] - phi[0];
  for (std::size_t i = 1; i < phi.size(); ++i)
    if (std::abs((phi[i] - phi[i - 1]) - d0) > rel_tol * d0) return false;
  return true;
}

ValidationReport validate(const FieldMap& f) {
  ValidationReport rep;
  if (f.r.empty() || f.phi.empty() || f.z.empty()) rep.fail("non-empty axes");
  if (!strictly_increasing(f.r)) rep.fail("r axis strictly increasing");
  if (!strictly_increasing(f.phi)) rep.fail("phi axis strictly increasing");
  if (!strictly_increasing(f.z)) rep.fail("z axis strictly increasing");
  if (!f.phi.empty()) {
    if (f.phi.front() < 0.0 || f.phi.back() >= two_pi)
      rep.fail("phi axis within [0, 2pi) without seam duplication");
    if (f.phi.size() > 1) {
      const double span = f.phi.back() - f.phi.front();
      const double mean_step = span / static_cast<double>(f.phi.size() - 1);
      if (span < two_pi - 2.0 * mean_step) rep.fail("phi axis covers [0, 2pi)");
    }
  }
  if (f.values.size() != f.r.size() * f.phi.size() * f.z.size())
    rep.fail("value count matches grid size");
  for (const auto& v : f.values) {
    if (!finite(v[0]) || !finite(v[1]) || !finite(v[2])) {
      rep.fail("finite values");
      break;
    }
  }
  return rep;
}

FieldMap make_field_map(std::vector<double> r, std::vector<double> phi,
                        std::vector<double> z, std::vector<Vec3c> values,
                        Provenance provenance, std::optional<FieldSource> source) {
  FieldMap f;
  f.r = std::move(r);
  f.phi = std::move(phi);
  f.z = std::move(z);
  f.values = std::move(values);
  f.provenance = provenance;
  f.source = std::move(source);
  auto rep = validate(f);
  if (!rep.ok) throw validation_error("FieldMap: " + rep.joined());
  return f;
}

ValidationReport validate(const LineTrace& t) {
  ValidationReport rep;
  if (t.phi.size() < 2) rep.fail("at least 2 samples");
  if (t.phi.size() != t.values.size()) rep.fail("one value per angle");
  if (t.phi.size() >= 2) {
    const double d0 = t.phi[1] - t.phi[0];
    if (!(d0 > 0.0)) rep.fail("phi strictly increasing");
    for (std::size_t i = 1; i < t.phi.size() && rep.ok; ++i) {
      if (std::abs((t.phi[i] - t.phi[i - 1]) - d0) > 1e-9 * d0) {
        rep.fail("uniform phi spacing within 1e-9 relative");
        break;
      }
    }
  }
  for (const auto& v : t.values) {
    if (!finite(v)) {
      rep.fail("finite values");
      break;
    }
  }
  if (!(t.r_trace > 0.0)) rep.fail("r_trace > 0");
  return rep;
}

LineTrace make_line_trace(std::vector<double> phi, std::vector<cplx> values,
                          double r_trace, double z_trace,
                          std::optional<double> source_phi) {
  LineTrace t;
  t.phi = std::move(phi);
  t.values = std::move(values);
  t.r_trace = r_trace;
  t.z_trace = z_trace;
  t.source_phi = source_phi;
  auto rep = validate(t);
  if (!rep.ok) throw validation_error("LineTrace: " + rep.joined());
  return t;
}

Vec3c field_at(const FieldMap& f, const CylindricalPoint& p) {
  const std::size_t ir = bracket(f.r, p.r, "r");
  const std::size_t iz = bracket(f.z, p.z, "z");
  const double tr = (f.r.size() == 1)
                        ? 0.0
                        : (p.r - f.r[ir]) / (f.r[ir + 1] - f.r[ir]);
  const double tz = (f.z.size() == 1)
                        ? 0.0
                        : (p.z - f.z[iz]) / (f.z[iz + 1] - f.z[iz]);

  // per-(r,z)-corner complex value at angle phi
  auto sample_phi = [&](std::size_t jr, std::size_t jz, int comp) -> cplx {
    double ph = std::fmod(p.phi, two_pi);
    if (ph < 0.0) ph += two_pi;
    const std::size_t n = f.phi.size();
    // on-grid angle: use the column directly
    for (std::size_t j = 0; j < n; ++j) {
      if (std::abs(f.phi[j] - ph) <= 1e-9) return f.at(jr, j, jz)[comp];
    }
    if (f.provenance == Provenance::SYNTHETIC && f.phi_uniform()) {
      // trigonometric interpolation via the DFT series
      std::vector<cplx> coeff(n, 0.0);
      for (std::size_t k = 0; k < n; ++k) {
        cplx acc = 0.0;
        const double kk = (k <= n / 2) ? static_cast<double>(k)
                                       : static_cast<double>(k) - static_cast<double>(n);
        for (std::size_t j = 0; j < n; ++j)
          acc += f.at(jr, j, jz)[comp] *
                 std::exp(cplx(0.0, -kk * f.phi[j]));
        coeff[k] = acc / static_cast<double>(n);
      }
      cplx val = 0.0;
      for (std::size_t k = 0; k < n; ++k) {
        const double kk = (k <= n / 2) ? static_cast<double>(k)
                                       : static_cast<double>(k) - static_cast<double>(n);
        val += coeff[k] * std::exp(cplx(0.0, kk * ph));
      }
      return val;
    }
    // linear in phi with periodic wrap
    std::size_t j1 = 0;
    while (j1 < n && f.phi[j1] <= ph) ++j1;
    const std::size_t j0 = (j1 == 0) ? n - 1 : j1 - 1;
    const std::size_t j1w = j1 % n;
    double span = f.phi[j1w] - f.phi[j0];
    double off = ph - f.phi[j0];
    if (span <= 0.0) span += two_pi;
    if (off < 0.0) off += two_pi;
    const double t = off / span;
    return (1.0 - t) * f.at(jr, j0, jz)[comp] + t * f.at(jr, j1w, jz)[comp];
  };

  Vec3c out{};
  for (int comp = 0; comp < 3; ++comp) {
    const cplx v00 = sample_phi(ir, iz, comp);
    const cplx v10 = (f.r.size() == 1) ? v00 : sample_phi(ir + 1, iz, comp);
    const cplx v01 = (f.z.size() == 1) ? v00 : sample_phi(ir, iz + 1, comp);
    const cplx v11 = (f.r.size() == 1)   ? v01
                     : (f.z.size() == 1) ? v10
                                         : sample_phi(ir + 1, iz + 1, comp);
    out[comp] = (1.0 - tr) * (1.0 - tz) * v00 + tr * (1.0 - tz) * v10 +
                (1.0 - tr) * tz * v01 + tr * tz * v11;
  }
  return out;
}

void write_field_map(const FieldMap& f, const std::filesystem::path& path) {
  auto rep = validate(f);
  if (!rep.ok) throw validation_error("write_field_map: " + rep.joined());
  std::ofstream os(path);
  if (!os) throw io_error("write_field_map: cannot open " + path.string());

  os << "# slotring-fieldmap v1\n";
  os << "# provenance: "
     << (f.provenance == Provenance::SYNTHETIC ? "SYNTHETIC" : "INGESTED") << "\n";
  auto write_axis = [&](const char* name, const std::vector<double>& axis) {
    os << "# " << name << ":";
    for (double v : axis) os << " " << fmt17(v);
    os << "\n";
  };
  write_axis("grid_r_m", f.r);
  write_axis("grid_phi_rad", f.phi);
  write_axis("grid_z_m", f.z);
  if (f.source) {
    os << "# source_dipole:";
    for (const auto& c : f.source->dipole.components)
      os << " " << fmt17(c.real()) << "," << fmt17(c.imag());
    os << "\n";
    os << "# source_position: " << fmt17(f.source->position.r) << " "
       << fmt17(f.source->position.phi) << " " << fmt17(f.source->position.z)
       << "\n";
  }
  os << "r_m,phi_rad,z_m,re_Er,im_Er,re_Ephi,im_Ephi,re_Ez,im_Ez\n";
  for (std::size_t ir = 0; ir < f.r.size(); ++ir) {
    for (std::size_t ip = 0; ip < f.phi.size(); ++ip) {
      for (std::size_t iz = 0; iz < f.z.size(); ++iz) {
        const Vec3c& v = f.at(ir, ip, iz);
        os << fmt17(f.r[ir]) << "," << fmt17(f.phi[ip]) << "," << fmt17(f.z[iz]);
        for (int c = 0; c < 3; ++c)
          os << "," << fmt17(v[c].real()) << "," << fmt17(v[c].imag());
        os << "\n";
      }
    }
  }
  if (!os) throw io_error("write_field_map: write failed for " + path.string());
}

FieldMap read_field_map(const std::filesystem::path& path) {
  std::ifstream is(path);
  if (!is) throw io_error("read_field_map: cannot open " + path.string());

  FieldMap f;
  bool got_magic = false;
  std::optional<FieldSource> source;
  DipoleVector src_dipole{};
  CylindricalPoint src_pos{};
  bool have_dipole = false, have_pos = false;

  std::string line;
  auto parse_axis = [](const std::string& rest) {
    std::vector<double> axis;
    std::istringstream ss(rest);
    double v;
    while (ss >> v) axis.push_back(v);
    return axis;
  };

  while (std::getline(is, line)) {
    if (line.empty()) continue;
    if (line[0] == '#') {
      if (line.find("slotring-fieldmap v1") != std::string::npos) got_magic = true;
      else if (line.rfind("# provenance:", 0) == 0) {
        f.provenance = line.find("INGESTED") != std::string::npos
                           ? Provenance::INGESTED
                           : Provenance::SYNTHETIC;
      } else if (line.rfind("# grid_r_m:", 0) == 0) {
        f.r = parse_axis(line.substr(11));
      } else if (line.rfind("# grid_phi_rad:", 0) == 0) {
        f.phi = parse_axis(line.substr(15));
      } else if (line.rfind("# grid_z_m:", 0) == 0) {
        f.z = parse_axis(line.substr(11));
      } else if (line.rfind("# source_dipole:", 0) == 0) {
        std::istringstream ss(line.substr(16));
        std::string tok;
        int c = 0;
        while (ss >> tok && c < 3) {
          const auto comma = tok.find(',');
          if (comma == std::string::npos)
            throw io_error("read_field_map: malformed source_dipole");
          src_dipole.components[c] = cplx(std::stod(tok.substr(0, comma)),
                                          std::stod(tok.substr(comma + 1)));
          ++c;
        }
        have_dipole = (c == 3);
      } else if (line.rfind("# source_position:", 0) == 0) {
        std::istringstream ss(line.substr(18));
        if (!(ss >> src_pos.r >> src_pos.phi >> src_pos.z))
          throw io_error("read_field_map: malformed source_position");
        have_pos = true;
      }
      continue;
    }
    // header row of the CSV body
    if (line.rfind("r_m,", 0) == 0) break;
    throw io_error("read_field_map: unexpected line before CSV header");
  }
  if (!got_magic) throw io_error("read_field_map: missing slotring-fieldmap magic");
  if (f.r.empty() || f.phi.empty() || f.z.empty())
    throw io_error("read_field_map: missing grid axes in header");

  const std::size_t expected = f.r.size() * f.phi.size() * f.z.size();
  f.values.assign(expected, Vec3c{});
  std::size_t row = 0;
  while (std::getline(is, line)) {
    if (line.empty()) continue;
    if (row >= expected) throw io_error("read_field_map: more rows than grid points");
    double cols[9];
    std::size_t pos = 0;
    for (int c = 0; c < 9; ++c) {
      const std::size_t next = line.find(',', pos);
      const std::string tok = line.substr(pos, next == std::string::npos
                                                   ? std::string::npos
                                                   : next - pos);
      try {
        cols[c] = std::stod(tok);
      } catch (const std::exception&) {
        throw io_error("read_field_map: malformed row " + std::to_string(row));
      }
      if (next == std::string::npos && c < 8)
        throw io_error("read_field_map: short row " + std::to_string(row));
      pos = next + 1;
    }
    f.values[row] = Vec3c{cplx(cols[3], cols[4]), cplx(cols[5], cols[6]),
                          cplx(cols[7], cols[8])};
    ++row;
  }
  if (row != expected)
    throw io_error("read_field_map: row count does not match declared grid");

  if (have_dipole && have_pos) source = FieldSource{src_dipole, src_pos};
  f.source = source;
  auto rep = validate(f);
  if (!rep.ok) throw validation_error("read_field_map: " + rep.joined());
  return f;
}

PermittivityProfile permittivity_profile(const RingGeometry& g) {
  auto rep = validate(g);
  if (!rep.ok) throw validation_error("permittivity_profile: " + rep.joined());
  const double ri = g.inner_radius();
  const double ro = g.outer_radius();
  const double slot_lo = g.radius - g.gap / 2.0;
  const double slot_hi = g.radius + g.gap / 2.0;
  const double half_h = g.height / 2.0;
  const double eps_high = g.n_high * g.n_high;
  const double eps_slot = g.n_slot * g.n_slot;
  const double eps_clad = g.n_clad * g.n_clad;
  return [=](double r, double z) {
    if (std::abs(z) > half_h || r < ri || r > ro) return eps_clad;
    if (r >= slot_lo && r <= slot_hi) return eps_slot;
    return eps_high;
  };
}

}  // namespace slotring
