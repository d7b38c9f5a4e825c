// Copyright (c) the slotring developers.
// SPDX-License-Identifier: Apache-2.0

#include <doctest.h>

#include "slotring/chirality.hpp"
#include "slotring/field_analysis.hpp"
#include "test_util.hpp"

using namespace slotring;
using namespace testutil;

TEST_CASE("mode map construction") {
  SUBCASE("lossless modulus is phi-independent") {
    const auto spec = radial_mode(12);
    const auto grid = standard_grid(spec);
    const auto map = generate_mode_map(spec, grid);
    for (std::size_t ir = 0; ir < grid.r.size(); ir += 6) {
      for (std::size_t iz = 0; iz < grid.z.size(); iz += 4) {
        const double ref = std::abs(map.at(ir, 0, iz)[0]);
        for (std::size_t ip = 0; ip < grid.phi.size(); ++ip)
          CHECK(std::abs(std::abs(map.at(ir, ip, iz)[0]) - ref) <=
                1e-12 * std::max(ref, 1e-30));
      }
    }
  }
  SUBCASE("normalized to unit peak amplitude") {
    auto spec = radial_mode(12);
    spec.component_ratios[1] = cplx(0.0, 0.4);
    const auto grid = standard_grid(spec);
    const auto map = generate_mode_map(spec, grid);
    double peak = 0.0;
    for (const auto& v : map.values)
      peak = std::max(peak, std::sqrt(std::norm(v[0]) + std::norm(v[1]) +
                                      std::norm(v[2])));
    CHECK(peak == doctest::Approx(1.0).epsilon(1e-12));
  }
  SUBCASE("folded arc-length decay") {
    const double l_prop = 15e-6;
    const auto spec = radial_mode(12, l_prop);
    const auto grid = standard_grid(spec);
    const auto map = generate_mode_map(spec, grid);
    const std::size_t half = grid.phi.size() / 2;  // phi = pi
    const double ratio = std::abs(map.at(13, half, 7)[0]) /
                         std::abs(map.at(13, 0, 7)[0]);
    CHECK(ratio ==
          doctest::Approx(std::exp(-pi * spec.r0 / (2.0 * l_prop))).epsilon(1e-12));
  }
  SUBCASE("under-resolved grid is rejected") {
    const auto spec = radial_mode(12);
    const auto coarse = make_grid(spec.r0 - 3 * spec.sigma_r,
                                  spec.r0 + 3 * spec.sigma_r, 5, 240,
                                  -1.5 * spec.sigma_z, 1.5 * spec.sigma_z, 13);
    CHECK_THROWS_AS(generate_mode_map(spec, coarse), validation_error);
  }
  SUBCASE("asymmetry skews the radial profile outward") {
    auto spec = radial_mode(12);
    spec.asymmetry = 0.3;
    const auto grid = standard_grid(spec);
    const auto map = generate_mode_map(spec, grid);
    const double inner = std::abs(map.at(9, 0, 7)[0]);   // r0 - sigma
    const double outer = std::abs(map.at(17, 0, 7)[0]);  // r0 + sigma
    CHECK(outer > inner);
  }
  SUBCASE("single-mode directionality is exactly one-sided") {
    const auto spec = radial_mode(12);
    const auto grid = standard_grid(spec);
    const auto map = generate_mode_map(spec, grid);
    const auto trace = extract_line_trace(map, spec.r0, spec.z0, 0);
    const auto rep = directionality(trace, 12);
    CHECK(rep.directionality == doctest::Approx(1.0).epsilon(1e-12));
  }
}

TEST_CASE("closed-loop recovery over the full test matrix") {
  const double inf = std::numeric_limits<double>::infinity();
  for (double l_prop : {inf, 15e-6}) {
    for (double beta_true : {1.0, 0.995, 0.95, 0.75}) {
      for (double chi_true : {3.25, 56.0, 243.0, 1330.0}) {
        CAPTURE(l_prop);
        CAPTURE(beta_true);
        CAPTURE(chi_true);
        const auto d = driven_spec(beta_true, chi_true, l_prop, radial_dipole(), 12);
        const auto map = generate_driven_map(d, standard_grid(d.mode));
        const auto trace = extract_line_trace(map, d.position.r, d.position.z, 0);

        const double im_src = field_at(map, d.position)[0].imag();
        const double chi = chi_from_fields(im_src, bulk_im_field(d.bulk_n, d.omega));
        const bool lossless = std::isinf(l_prop);
        CHECK(std::abs(chi - chi_true) / chi_true < (lossless ? 0.005 : 0.02));

        const auto flat = trace_flatness(trace);
        const auto beta = flat.flat ? beta_plateau(trace) : beta_envelope(trace);
        CHECK_FALSE(beta.unreliable);
        CHECK(std::abs(beta.beta - beta_true) < (lossless ? 0.002 : 0.01));
        if (lossless) CHECK(beta.method == BetaMethod::PLATEAU);
        if (!lossless) CHECK(beta.method == BetaMethod::ENVELOPE);
      }
    }
  }
}

TEST_CASE("driven-map directionality matches the configured ellipticity") {
  auto run = [](double t, int handed) {
    DrivenFieldSpec d;
    d.mode = radial_mode(24);
    d.mode.component_ratios[1] = cplx(0.0, t);
    d.dipole = circular_dipole(handed);
    d.position = {d.mode.r0, 0.0, d.mode.z0};
    d.beta_true = 0.99;
    d.chi_true = 56.0;
    const auto map = generate_driven_map(d, standard_grid(d.mode));
    const auto trace = extract_line_trace(map, d.mode.r0, d.mode.z0, 0);
    return directionality(trace, 24, d.beta_true);
  };

  SUBCASE("ellipticity 0.87 gives directionality 0.87 +- 0.02") {
    const auto rep = run(0.87, +1);
    CHECK(std::abs(rep.directionality - 0.87) < 0.02);
    REQUIRE(rep.beta_plus.has_value());
    CHECK(*rep.beta_plus + *rep.beta_minus == doctest::Approx(0.99).epsilon(1e-6));
  }
  SUBCASE("ellipticity 0.75 gives directionality 0.75 +- 0.02") {
    CHECK(std::abs(run(0.75, +1).directionality - 0.75) < 0.02);
  }
  SUBCASE("handedness swap negates") {
    const auto plus = run(0.87, +1);
    const auto minus = run(0.87, -1);
    CHECK(plus.directionality ==
          doctest::Approx(-minus.directionality).epsilon(1e-9));
  }
  SUBCASE("linear dipole shows no directionality") {
    DrivenFieldSpec d;
    d.mode = radial_mode(24);
    d.mode.component_ratios[1] = cplx(0.0, 0.87);
    d.dipole = radial_dipole();
    d.position = {d.mode.r0, 0.0, d.mode.z0};
    d.beta_true = 0.99;
    d.chi_true = 56.0;
    const auto map = generate_driven_map(d, standard_grid(d.mode));
    const auto trace = extract_line_trace(map, d.mode.r0, d.mode.z0, 0);
    const auto rep = directionality(trace, 24);
    CHECK(std::abs(rep.directionality) < 0.02);
  }
}

TEST_CASE("driven map validation") {
  auto d = driven_spec(0.995, 1330.0, std::numeric_limits<double>::infinity(),
                       radial_dipole(), 12);
  const auto grid = standard_grid(d.mode);

  SUBCASE("beta outside (0, 1] is infeasible") {
    d.beta_true = 0.0;
    CHECK_THROWS_AS(generate_driven_map(d, grid), validation_error);
    d.beta_true = 1.2;
    CHECK_THROWS_AS(generate_driven_map(d, grid), validation_error);
  }
  SUBCASE("chi must be positive") {
    d.chi_true = -3.0;
    CHECK_THROWS_AS(generate_driven_map(d, grid), validation_error);
  }
  SUBCASE("source angle must be a grid angle") {
    d.position.phi = 0.1234;
    CHECK_THROWS_AS(generate_driven_map(d, grid), validation_error);
  }
  SUBCASE("dipole far outside the mode is rejected") {
    d.position.r = d.mode.r0 + 20.0 * d.mode.sigma_r;
    CHECK_THROWS_AS(generate_driven_map(d, grid), validation_error);
  }
  SUBCASE("generated maps satisfy the field-map invariants") {
    const auto map = generate_driven_map(d, grid);
    CHECK(validate(map).ok);
    CHECK(map.provenance == Provenance::SYNTHETIC);
    REQUIRE(map.source.has_value());
    CHECK(map.source->position.r == d.position.r);
  }
}

TEST_CASE("bulk reference map") {
  const double omega = two_pi * 3.947e14;
  // compact domain so the sampled out-of-phase field is smooth near the
  // source; source placed off-grid between samples
  auto grid = make_grid(1.35e-6, 1.55e-6, 29, 48, -0.1e-6, 0.1e-6, 29);
  const CylindricalPoint src{1.4503e-6, 0.0, 0.0123e-6};

  SUBCASE("chi of a bulk map against itself is 1") {
    const auto map = bulk_reference_map(1.5, omega, grid, src);
    const double im = field_at(map, src)[0].imag();
    CHECK(chi_from_fields(im, im) == doctest::Approx(1.0));
  }
  SUBCASE("source Im value matches the closed form and scales as n omega^3") {
    const auto m1 = bulk_reference_map(1.5, omega, grid, src);
    const double im1 = field_at(m1, src)[0].imag();
    CHECK(im1 < 0.0);
    CHECK(im1 == doctest::Approx(bulk_im_field(1.5, omega)).epsilon(0.005));

    const auto m2 = bulk_reference_map(3.0, omega, grid, src);
    const double im2 = field_at(m2, src)[0].imag();
    CHECK(im2 / im1 == doctest::Approx(2.0).epsilon(0.01));

    const auto m3 = bulk_reference_map(1.5, 1.3 * omega, grid, src);
    const double im3 = field_at(m3, src)[0].imag();
    CHECK(im3 / im1 == doctest::Approx(1.3 * 1.3 * 1.3).epsilon(0.01));
  }
  SUBCASE("grid refinement moves the source sample by < 0.5%") {
    const auto coarse = bulk_reference_map(1.5, omega, grid, src);
    const auto fine_grid = make_grid(1.35e-6, 1.55e-6, 57, 96, -0.1e-6, 0.1e-6, 57);
    const auto fine = bulk_reference_map(1.5, omega, fine_grid, src);
    const double a = field_at(coarse, src)[0].imag();
    const double b = field_at(fine, src)[0].imag();
    CHECK(std::abs(a - b) / std::abs(b) < 0.005);
  }
  SUBCASE("a grid point on the source is rejected") {
    const CylindricalPoint on_grid{grid.r[14], grid.phi[0], grid.z[12]};
    CHECK_THROWS_AS(bulk_reference_map(1.5, omega, grid, on_grid),
                    validation_error);
  }
}
