// Copyright (c) the slotring developers.
// SPDX-License-Identifier: Apache-2.0

#include "slotring/config.hpp"

#include <fstream>

namespace slotring {

using nlohmann::json;

namespace {

json complex_to_json(const cplx& c) { return json::array({c.real(), c.imag()}); }

cplx complex_from_json(const json& j) {
  if (!j.is_array() || j.size() != 2)
    throw validation_error("config: complex values are [re, im] pairs");
  return {j[0].get<double>(), j[1].get<double>()};
}

double angular(const json& j, const char* rad_key, const char* hz_key) {
  if (j.contains(rad_key)) return j.at(rad_key).get<double>();
  if (j.contains(hz_key)) return hz_to_rad(j.at(hz_key).get<double>());
  throw validation_error(std::string("config: missing ") + rad_key + " or " + hz_key);
}

}  // namespace

json to_json(const ProjectConfig& c) {
  json j;
  j["emitter"] = {
      {"omega_rad_s", c.emitter.omega_e},
      {"gamma_hom_rad_s", c.emitter.gamma_hom},
      {"dipole",
       {{"components", json::array({complex_to_json(c.emitter.dipole.components[0]),
                                    complex_to_json(c.emitter.dipole.components[1]),
                                    complex_to_json(c.emitter.dipole.components[2])})}}},
      {"position",
       {{"r_m", c.emitter.position.r},
        {"phi_rad", c.emitter.position.phi},
        {"z_m", c.emitter.position.z}}}};
  j["mode"] = {{"omega_rad_s", c.mode.omega_cav},
               {"gamma_rad_s", c.mode.gamma_cav},
               {"m", c.mode.m}};
  if (c.mode.v_eff) j["mode"]["v_eff_m3"] = *c.mode.v_eff;
  if (c.mode.n_eff) j["mode"]["n_eff"] = *c.mode.n_eff;
  j["geometry"] = {{"radius_m", c.geometry.radius},
                   {"bar_width_m", c.geometry.bar_width},
                   {"height_m", c.geometry.height},
                   {"gap_m", c.geometry.gap},
                   {"n_high", c.geometry.n_high},
                   {"n_slot", c.geometry.n_slot},
                   {"n_clad", c.geometry.n_clad},
                   {"kappa_high", c.geometry.kappa_high}};
  j["chi"] = c.chi;
  return j;
}

ProjectConfig project_config_from_json(const json& j) {
  ProjectConfig c;
  const auto& je = j.at("emitter");
  const double omega_e = angular(je, "omega_rad_s", "frequency_hz");
  const double gamma_hom = angular(je, "gamma_hom_rad_s", "gamma_hom_hz");
  Vec3c comps{};
  const auto& jc = je.at("dipole").at("components");
  for (int i = 0; i < 3; ++i) comps[i] = complex_from_json(jc.at(i));
  CylindricalPoint pos{};
  const auto& jp = je.at("position");
  pos.r = jp.at("r_m").get<double>();
  pos.phi = jp.value("phi_rad", 0.0);
  pos.z = jp.value("z_m", 0.0);
  c.emitter = make_emitter(omega_e, gamma_hom, make_dipole(comps), pos);

  const auto& jm = j.at("mode");
  const double omega_cav = angular(jm, "omega_rad_s", "frequency_hz");
  const double gamma_cav = angular(jm, "gamma_rad_s", "fwhm_hz");
  std::optional<double> supplied_q;
  if (jm.contains("q")) supplied_q = jm.at("q").get<double>();
  std::optional<double> v_eff, n_eff;
  if (jm.contains("v_eff_m3")) v_eff = jm.at("v_eff_m3").get<double>();
  if (jm.contains("n_eff")) n_eff = jm.at("n_eff").get<double>();
  c.mode = make_cavity_mode(omega_cav, gamma_cav, jm.at("m").get<int>(),
                            supplied_q, v_eff, n_eff);

  const auto& jg = j.at("geometry");
  c.geometry = make_ring_geometry(
      jg.at("radius_m").get<double>(), jg.at("bar_width_m").get<double>(),
      jg.at("height_m").get<double>(), jg.at("gap_m").get<double>(),
      jg.at("n_high").get<double>(), jg.at("n_slot").get<double>(),
      jg.at("n_clad").get<double>(), jg.value("kappa_high", 0.0));

  c.chi = j.at("chi").get<double>();
  if (!(c.chi > 0.0)) throw validation_error("config: chi must be > 0");
  return c;
}

ProjectConfig load_project_config(const std::filesystem::path& path) {
  std::ifstream is(path);
  if (!is) throw io_error("cannot open config " + path.string());
  json j;
  try {
    is >> j;
  } catch (const json::exception& e) {
    throw io_error("config parse error in " + path.string() + ": " + e.what());
  }
  return project_config_from_json(j);
}

void save_project_config(const ProjectConfig& c, const std::filesystem::path& path) {
  std::ofstream os(path);
  if (!os) throw io_error("cannot write config " + path.string());
  os << to_json(c).dump(2) << "\n";
}

ProjectConfig preset(const std::string& name) {
  const double omega_760 = hz_to_rad(3.947e14);
  if (name == "gap") {
    ProjectConfig c;
    c.emitter = make_emitter(
        omega_760, hz_to_rad(30e6),
        make_dipole({cplx(1.0, 0.0), cplx(0.0, 0.0), cplx(0.0, 0.0)}),
        {1.44e-6, 0.0, 0.0});
    c.mode = make_cavity_mode(omega_760, hz_to_rad(1.4164e10), 24, std::nullopt,
                              1.34e-19, 2.015);
    c.geometry = make_ring_geometry(1.44e-6, 135e-9, 175e-9, 60e-9, 3.2, 1.6,
                                    1.48, 0.0);
    c.chi = 1330.0;
    return c;
  }
  if (name == "diamond") {
    ProjectConfig c;
    c.emitter = make_emitter(
        omega_760, hz_to_rad(30e6),
        make_dipole({cplx(1.0, 0.0), cplx(0.0, 0.0), cplx(0.0, 0.0)}),
        {3.1e-6, 0.0, 0.0});
    c.mode = make_cavity_mode(omega_760, omega_760 / 30000.0, 51, std::nullopt,
                              2.9e-19, 2.0);
    c.geometry = make_ring_geometry(3.1e-6, 180e-9, 230e-9, 60e-9, 2.4, 1.6,
                                    1.48, 0.0);
    c.chi = 1330.0 * 30000.0 / 27866.0;
    return c;
  }
  if (name == "sic") {
    ProjectConfig c;
    c.emitter = make_emitter(
        omega_760, hz_to_rad(30e6),
        make_dipole({cplx(1.0, 0.0), cplx(0.0, 0.0), cplx(0.0, 0.0)}),
        {2.5e-6, 0.0, 0.0});
    c.mode = make_cavity_mode(omega_760, omega_760 / 29000.0, 41, std::nullopt,
                              2.3e-19, 2.0);
    c.geometry = make_ring_geometry(2.5e-6, 170e-9, 220e-9, 60e-9, 2.5, 1.6,
                                    1.48, 0.0);
    c.chi = 1330.0 * 29000.0 / 27866.0;
    return c;
  }
  throw validation_error("unknown preset '" + name +
                         "' (available: gap, diamond, sic)");
}

std::vector<std::string> preset_names() { return {"gap", "diamond", "sic"}; }

const std::vector<RadiusTrendRow>& radius_trend_table() {
  // FEM-derived guide values for the GaP design; interpolation data only.
  static const std::vector<RadiusTrendRow> table = {
      {1.00e-6, 3000.0, 1.099e-19, 2.10},
      {1.06e-6, 4070.0, 1.134e-19, 2.09},
      {1.12e-6, 5510.0, 1.169e-19, 2.07},
      {1.19e-6, 7850.0, 1.208e-19, 2.06},
      {1.25e-6, 10600.0, 1.241e-19, 2.05},
      {1.31e-6, 14400.0, 1.273e-19, 2.04},
      {1.38e-6, 20600.0, 1.309e-19, 2.03},
      {1.44e-6, 27900.0, 1.340e-19, 2.015},
  };
  return table;
}

namespace {

double interp_column(double radius, double RadiusTrendRow::*col) {
  const auto& table = radius_trend_table();
  if (radius < table.front().radius || radius > table.back().radius)
    throw validation_error("radius outside the trend dataset range");
  for (std::size_t i = 1; i < table.size(); ++i) {
    if (radius <= table[i].radius) {
      const auto& a = table[i - 1];
      const auto& b = table[i];
      const double t = (radius - a.radius) / (b.radius - a.radius);
      return (1.0 - t) * (a.*col) + t * (b.*col);
    }
  }
  return table.back().*col;
}

}  // namespace

double q_rad_vs_radius(double radius) {
  return interp_column(radius, &RadiusTrendRow::q_rad);
}

double v_eff_vs_radius(double radius) {
  return interp_column(radius, &RadiusTrendRow::v_eff);
}

}  // namespace slotring
