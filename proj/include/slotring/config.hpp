// Copyright (c) the slotring developers.
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <filesystem>
#include <string>
#include <vector>

#include <json.hpp>

#include "slotring/types.hpp"

namespace slotring {

/// One self-consistent scene: emitter + cavity mode + ring geometry + the
/// emission enhancement chi of the emitter at its position.
struct ProjectConfig {
  EmitterSpec emitter{};
  CavityMode mode{};
  RingGeometry geometry{};
  double chi = 1.0;
};

/// Built-in presets: "gap" (the reference GaP design), "diamond", "sic".
ProjectConfig preset(const std::string& name);
std::vector<std::string> preset_names();

/// JSON schema (see README): angular frequencies are written as *_rad_s;
/// readers also accept the Hz convenience keys (frequency_hz, fwhm_hz,
/// gamma_hom_hz) which are converted by an explicit 2 pi factor.
nlohmann::json to_json(const ProjectConfig& c);
ProjectConfig project_config_from_json(const nlohmann::json& j);
ProjectConfig load_project_config(const std::filesystem::path& path);
void save_project_config(const ProjectConfig& c, const std::filesystem::path& path);

/// Radius-trend dataset for the GaP design: radiative Q, V_eff and n_eff vs
/// ring radius. FEM-derived guide values shipped as data, interpolated
/// linearly; not recomputed by this library.
struct RadiusTrendRow {
  double radius = 0.0;  // m
  double q_rad = 0.0;
  double v_eff = 0.0;  // m^3
  double n_eff = 0.0;
};
const std::vector<RadiusTrendRow>& radius_trend_table();
double q_rad_vs_radius(double radius);
double v_eff_vs_radius(double radius);

}  // namespace slotring
