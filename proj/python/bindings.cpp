// Copyright (c) the slotring developers.
// SPDX-License-Identifier: Apache-2.0

#include <pybind11/complex.h>
#include <pybind11/functional.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "slotring/chirality.hpp"
#include "slotring/config.hpp"
#include "slotring/dynamics.hpp"
#include "slotring/field_analysis.hpp"
#include "slotring/field_map.hpp"
#include "slotring/resonator.hpp"
#include "slotring/synth.hpp"

namespace py = pybind11;
using namespace slotring;

PYBIND11_MODULE(_core, m) {
  m.doc() = "emitter / slot-waveguide-ring coupling toolkit";

  py::register_exception<validation_error>(m, "ValidationError");
  py::register_exception<io_error>(m, "IoError");
  py::register_exception<numeric_error>(m, "NumericError");

  // --- core types ---
  py::class_<CylindricalPoint>(m, "CylindricalPoint")
      .def(py::init<double, double, double>(), py::arg("r"), py::arg("phi") = 0.0,
           py::arg("z") = 0.0)
      .def_readonly("r", &CylindricalPoint::r)
      .def_readonly("phi", &CylindricalPoint::phi)
      .def_readonly("z", &CylindricalPoint::z);

  py::class_<DipoleVector>(m, "DipoleVector")
      .def(py::init([](const Vec3c& c) { return make_dipole(c); }),
           py::arg("components"))
      .def_readonly("components", &DipoleVector::components)
      .def("magnitude", &DipoleVector::magnitude);

  py::enum_<DipoleClass>(m, "DipoleClass")
      .value("LINEAR", DipoleClass::LINEAR)
      .value("CIRCULAR_PLUS", DipoleClass::CIRCULAR_PLUS)
      .value("CIRCULAR_MINUS", DipoleClass::CIRCULAR_MINUS)
      .value("GENERAL", DipoleClass::GENERAL);
  m.def("classify_dipole", &classify_dipole);

  py::class_<EmitterSpec>(m, "EmitterSpec")
      .def(py::init(&make_emitter), py::arg("omega_e"), py::arg("gamma_hom"),
           py::arg("dipole"), py::arg("position"))
      .def_readonly("omega_e", &EmitterSpec::omega_e)
      .def_readonly("gamma_hom", &EmitterSpec::gamma_hom)
      .def_readonly("dipole", &EmitterSpec::dipole)
      .def_readonly("position", &EmitterSpec::position);

  py::class_<CavityMode>(m, "CavityMode")
      .def(py::init(&make_cavity_mode), py::arg("omega_cav"),
           py::arg("gamma_cav"), py::arg("m"),
           py::arg("supplied_q") = std::nullopt, py::arg("v_eff") = std::nullopt,
           py::arg("n_eff") = std::nullopt)
      .def_readonly("omega_cav", &CavityMode::omega_cav)
      .def_readonly("gamma_cav", &CavityMode::gamma_cav)
      .def_readonly("m", &CavityMode::m)
      .def_readonly("v_eff", &CavityMode::v_eff)
      .def_readonly("n_eff", &CavityMode::n_eff)
      .def("q", &CavityMode::q);

  py::class_<RingGeometry>(m, "RingGeometry")
      .def(py::init(&make_ring_geometry), py::arg("radius"), py::arg("bar_width"),
           py::arg("height"), py::arg("gap"), py::arg("n_high"), py::arg("n_slot"),
           py::arg("n_clad"), py::arg("kappa_high") = 0.0)
      .def_readonly("radius", &RingGeometry::radius)
      .def_readonly("bar_width", &RingGeometry::bar_width)
      .def_readonly("height", &RingGeometry::height)
      .def_readonly("gap", &RingGeometry::gap)
      .def("geometric_volume", &RingGeometry::geometric_volume);

  py::class_<ProjectConfig>(m, "ProjectConfig")
      .def_readonly("emitter", &ProjectConfig::emitter)
      .def_readonly("mode", &ProjectConfig::mode)
      .def_readonly("geometry", &ProjectConfig::geometry)
      .def_readonly("chi", &ProjectConfig::chi);
  m.def("preset", &preset, py::arg("name"));
  m.def("preset_names", &preset_names);
  m.def("q_rad_vs_radius", &q_rad_vs_radius);
  m.def("v_eff_vs_radius", &v_eff_vs_radius);

  m.attr("two_pi") = two_pi;
  m.attr("speed_of_light") = speed_of_light;
  m.def("hz_to_rad", &hz_to_rad);
  m.def("rad_to_hz", &rad_to_hz);

  // --- dynamics ---
  py::class_<CouplingParams>(m, "CouplingParams")
      .def_readonly("gamma", &CouplingParams::gamma)
      .def_readonly("k0", &CouplingParams::k0)
      .def_readonly("d", &CouplingParams::d)
      .def_readonly("detuning", &CouplingParams::detuning)
      .def_readonly("chi", &CouplingParams::chi);
  py::class_<DecayCurve>(m, "DecayCurve")
      .def_readonly("times", &DecayCurve::times)
      .def_readonly("amplitudes", &DecayCurve::amplitudes)
      .def_readonly("probabilities", &DecayCurve::probabilities);
  py::enum_<Regime>(m, "Regime")
      .value("WEAK", Regime::WEAK)
      .value("STRONG", Regime::STRONG);
  py::class_<RegimeReport>(m, "RegimeReport")
      .def_readonly("regime", &RegimeReport::regime)
      .def_readonly("rabi_visible", &RegimeReport::rabi_visible)
      .def_readonly("decay_rate", &RegimeReport::decay_rate)
      .def_readonly("rabi_omega", &RegimeReport::rabi_omega);

  m.def("coupling_params", &coupling_params, py::arg("emitter"), py::arg("mode"),
        py::arg("chi"));
  m.def("uniform_times", &uniform_times, py::arg("t_max"), py::arg("samples"));
  m.def("decay_analytic", &decay_analytic, py::arg("params"), py::arg("times"));
  m.def("decay_oracle", &decay_oracle, py::arg("params"), py::arg("times"),
        py::arg("substeps_per_interval") = std::nullopt);
  m.def("decay_volterra", &decay_volterra, py::arg("params"), py::arg("times"),
        py::arg("substeps_per_interval") = std::nullopt);
  m.def("classify_regime", &classify_regime, py::arg("params"));

  py::class_<LorentzianComb>(m, "LorentzianComb")
      .def("__call__", &LorentzianComb::operator());
  m.def("lorentzian_green_comb", &lorentzian_green_comb, py::arg("modes"),
        py::arg("amplitudes"));

  // --- resonator models ---
  py::class_<QBudget>(m, "QBudget")
      .def_readonly("q_rad", &QBudget::q_rad)
      .def_readonly("q_scat", &QBudget::q_scat)
      .def_readonly("q_abs", &QBudget::q_abs)
      .def_readonly("q_total", &QBudget::q_total);
  m.def("q_total", &q_total, py::arg("q_rad") = std::nullopt,
        py::arg("q_scat") = std::nullopt, py::arg("q_abs") = std::nullopt);

  py::class_<RoughnessSpec>(m, "RoughnessSpec")
      .def(py::init<double, double, double>(), py::arg("sigma_rms"),
           py::arg("l_corr"), py::arg("wavelength"));
  py::class_<QScatResult>(m, "QScatResult")
      .def_readonly("q_scat", &QScatResult::q_scat)
      .def_readonly("wavelength_flagged", &QScatResult::wavelength_flagged);
  m.def("q_scat_rayleigh", &q_scat_rayleigh, py::arg("roughness"));
  m.def("kappa_to_propagation_length", &kappa_to_propagation_length,
        py::arg("kappa"), py::arg("wavelength"));
  m.def("q_abs_from_propagation", &q_abs_from_propagation, py::arg("l_prop"),
        py::arg("n_group"), py::arg("wavelength"));
  m.def("transmission_comb", &transmission_comb, py::arg("modes"),
        py::arg("freq_hz"));
  py::class_<ChiTrendAnchor>(m, "ChiTrendAnchor")
      .def(py::init<double, double, double>(), py::arg("q0"), py::arg("v0"),
           py::arg("chi0"));
  m.def("chi_trend", &chi_trend, py::arg("q"), py::arg("v_eff"), py::arg("anchor"));

  // --- field maps and analysis ---
  py::enum_<Provenance>(m, "Provenance")
      .value("SYNTHETIC", Provenance::SYNTHETIC)
      .value("INGESTED", Provenance::INGESTED);
  py::class_<FieldSource>(m, "FieldSource")
      .def(py::init<DipoleVector, CylindricalPoint>(), py::arg("dipole"),
           py::arg("position"))
      .def_readonly("dipole", &FieldSource::dipole)
      .def_readonly("position", &FieldSource::position);
  py::class_<FieldMap>(m, "FieldMap")
      .def_readonly("r", &FieldMap::r)
      .def_readonly("phi", &FieldMap::phi)
      .def_readonly("z", &FieldMap::z)
      .def_readonly("provenance", &FieldMap::provenance)
      .def_readonly("source", &FieldMap::source)
      .def("at",
           [](const FieldMap& f, std::size_t ir, std::size_t ip, std::size_t iz) {
             return f.at(ir, ip, iz);
           });
  m.def("write_field_map", &write_field_map, py::arg("map"), py::arg("path"));
  m.def("read_field_map", &read_field_map, py::arg("path"));
  m.def("field_at", &field_at, py::arg("map"), py::arg("point"));
  m.def("permittivity_profile", &permittivity_profile, py::arg("geometry"));

  py::class_<LineTrace>(m, "LineTrace")
      .def_readonly("phi", &LineTrace::phi)
      .def_readonly("values", &LineTrace::values)
      .def_readonly("r_trace", &LineTrace::r_trace)
      .def_readonly("z_trace", &LineTrace::z_trace)
      .def_readonly("source_phi", &LineTrace::source_phi);
  m.def("make_line_trace", &make_line_trace, py::arg("phi"), py::arg("values"),
        py::arg("r_trace"), py::arg("z_trace"),
        py::arg("source_phi") = std::nullopt);
  m.def("extract_line_trace", &extract_line_trace, py::arg("map"),
        py::arg("r_trace"), py::arg("z_trace"), py::arg("component"));

  py::enum_<BetaMethod>(m, "BetaMethod")
      .value("PLATEAU", BetaMethod::PLATEAU)
      .value("ENVELOPE", BetaMethod::ENVELOPE);
  py::class_<BetaExtraction>(m, "BetaExtraction")
      .def_readonly("beta", &BetaExtraction::beta)
      .def_readonly("method", &BetaExtraction::method)
      .def_readonly("source_value", &BetaExtraction::source_value)
      .def_readonly("far_value", &BetaExtraction::far_value)
      .def_readonly("residual", &BetaExtraction::residual)
      .def_readonly("decay_rate_per_rad", &BetaExtraction::decay_rate_per_rad)
      .def_readonly("unreliable", &BetaExtraction::unreliable)
      .def_readonly("detected_order", &BetaExtraction::detected_order);
  py::class_<TraceFlatness>(m, "TraceFlatness")
      .def_readonly("near_crest", &TraceFlatness::near_crest)
      .def_readonly("far_crest", &TraceFlatness::far_crest)
      .def_readonly("ratio", &TraceFlatness::ratio)
      .def_readonly("slope_per_rad", &TraceFlatness::slope_per_rad)
      .def_readonly("flat", &TraceFlatness::flat);

  m.def("dissipated_power", &dissipated_power, py::arg("dipole"),
        py::arg("e_at_dipole"), py::arg("omega_e"));
  m.def("chi_from_fields", &chi_from_fields, py::arg("im_e_nano"),
        py::arg("im_e_hom"));
  m.def("trace_flatness", &trace_flatness, py::arg("trace"));
  m.def("beta_plateau", &beta_plateau, py::arg("trace"));
  m.def("beta_envelope", &beta_envelope, py::arg("trace"));
  m.def("effective_mode_volume", &effective_mode_volume, py::arg("map"),
        py::arg("eps"), py::arg("r_e"));
  m.def("bulk_im_field", &bulk_im_field, py::arg("n"), py::arg("omega"));

  // --- chirality ---
  m.def("ellipticity", &ellipticity, py::arg("e"));
  m.def("ellipticity_ez_ok", &ellipticity_ez_ok, py::arg("e"));
  py::class_<EllipticityMap>(m, "EllipticityMap")
      .def_readonly("r", &EllipticityMap::r)
      .def_readonly("z", &EllipticityMap::z)
      .def_readonly("epsilon", &EllipticityMap::epsilon)
      .def_readonly("ez_ok", &EllipticityMap::ez_ok)
      .def_readonly("phi_slice", &EllipticityMap::phi_slice)
      .def("at", &EllipticityMap::at);
  m.def("ellipticity_map", &ellipticity_map, py::arg("map"), py::arg("phi_slice"));

  py::class_<WavenumberSpectrum>(m, "WavenumberSpectrum")
      .def_readonly("wavenumber", &WavenumberSpectrum::wavenumber)
      .def_readonly("amplitude", &WavenumberSpectrum::amplitude)
      .def_readonly("order", &WavenumberSpectrum::order);
  m.def("wavenumber_spectrum", &wavenumber_spectrum, py::arg("trace"));

  py::class_<DirectionalityReport>(m, "DirectionalityReport")
      .def_readonly("a_plus", &DirectionalityReport::a_plus)
      .def_readonly("a_minus", &DirectionalityReport::a_minus)
      .def_readonly("directionality", &DirectionalityReport::directionality)
      .def_readonly("directionality_power",
                    &DirectionalityReport::directionality_power)
      .def_readonly("k_plus", &DirectionalityReport::k_plus)
      .def_readonly("k_minus", &DirectionalityReport::k_minus)
      .def_readonly("beta_plus", &DirectionalityReport::beta_plus)
      .def_readonly("beta_minus", &DirectionalityReport::beta_minus);
  m.def("directionality", &directionality, py::arg("trace"), py::arg("m_expected"),
        py::arg("beta_total") = std::nullopt);
  m.def("dipole_mode_coupling", &dipole_mode_coupling, py::arg("dipole"),
        py::arg("e_plus"), py::arg("e_minus"));

  // --- synthetic fields ---
  py::class_<CylGrid>(m, "CylGrid")
      .def_readonly("r", &CylGrid::r)
      .def_readonly("phi", &CylGrid::phi)
      .def_readonly("z", &CylGrid::z);
  m.def("make_grid", &make_grid, py::arg("r_min"), py::arg("r_max"), py::arg("nr"),
        py::arg("nphi"), py::arg("z_min"), py::arg("z_max"), py::arg("nz"));

  py::class_<SyntheticModeSpec>(m, "SyntheticModeSpec")
      .def(py::init<>())
      .def_readwrite("m", &SyntheticModeSpec::m)
      .def_readwrite("r0", &SyntheticModeSpec::r0)
      .def_readwrite("z0", &SyntheticModeSpec::z0)
      .def_readwrite("sigma_r", &SyntheticModeSpec::sigma_r)
      .def_readwrite("sigma_z", &SyntheticModeSpec::sigma_z)
      .def_readwrite("component_ratios", &SyntheticModeSpec::component_ratios)
      .def_readwrite("asymmetry", &SyntheticModeSpec::asymmetry)
      .def_readwrite("l_prop", &SyntheticModeSpec::l_prop);
  py::class_<DrivenFieldSpec>(m, "DrivenFieldSpec")
      .def(py::init<>())
      .def_readwrite("mode", &DrivenFieldSpec::mode)
      .def_readwrite("dipole", &DrivenFieldSpec::dipole)
      .def_readwrite("position", &DrivenFieldSpec::position)
      .def_readwrite("beta_true", &DrivenFieldSpec::beta_true)
      .def_readwrite("chi_true", &DrivenFieldSpec::chi_true)
      .def_readwrite("bulk_n", &DrivenFieldSpec::bulk_n)
      .def_readwrite("omega", &DrivenFieldSpec::omega);
  m.def("generate_mode_map", &generate_mode_map, py::arg("spec"), py::arg("grid"));
  m.def("generate_driven_map", &generate_driven_map, py::arg("spec"),
        py::arg("grid"));
  m.def("bulk_reference_map", &bulk_reference_map, py::arg("n"), py::arg("omega"),
        py::arg("grid"), py::arg("source"));
}
