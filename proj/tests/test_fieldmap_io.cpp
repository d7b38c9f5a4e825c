// Copyright (c) the slotring developers.
// SPDX-License-Identifier: Apache-2.0

#include <doctest.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <random>

#include "slotring/field_map.hpp"
#include "slotring/synth.hpp"

using namespace slotring;
namespace fs = std::filesystem;

namespace {

struct TempDir {
  fs::path path;
  TempDir() {
    path = fs::temp_directory_path() /
           ("slotring_test_" + std::to_string(std::random_device{}()));
    fs::create_directories(path);
  }
  ~TempDir() {
    std::error_code ec;
    fs::remove_all(path, ec);
  }
};

FieldMap small_map() {
  std::mt19937 rng(23);
  std::uniform_real_distribution<double> u(-2.0, 2.0);
  std::vector<double> r = {1.2e-6, 1.4e-6, 1.6e-6};
  std::vector<double> phi;
  for (int i = 0; i < 8; ++i) phi.push_back(two_pi * i / 8.0);
  std::vector<double> z = {-1e-7, 0.0, 1e-7};
  std::vector<Vec3c> vals(r.size() * phi.size() * z.size());
  for (auto& v : vals)
    v = Vec3c{cplx(u(rng), u(rng)), cplx(u(rng), u(rng)), cplx(u(rng), u(rng))};
  FieldSource src{make_dipole({cplx(1, 0), cplx(0, 0.5), cplx(0, 0)}),
                  {1.4e-6, 0.0, 0.0}};
  return make_field_map(r, phi, z, vals, Provenance::INGESTED, src);
}

}  // namespace

TEST_CASE("field map file round-trip is exact") {
  TempDir tmp;
  const auto map = small_map();
  const auto path = tmp.path / "map.fieldmap";
  write_field_map(map, path);
  const auto back = read_field_map(path);

  CHECK(back.provenance == Provenance::INGESTED);
  REQUIRE(back.r == map.r);
  REQUIRE(back.phi == map.phi);
  REQUIRE(back.z == map.z);
  REQUIRE(back.values.size() == map.values.size());
  for (std::size_t i = 0; i < map.values.size(); ++i)
    for (int c = 0; c < 3; ++c)
      CHECK(back.values[i][c] == map.values[i][c]);  // %.17g is lossless
  REQUIRE(back.source.has_value());
  CHECK(back.source->position.r == map.source->position.r);
  for (int c = 0; c < 3; ++c)
    CHECK(back.source->dipole.components[c] == map.source->dipole.components[c]);
}

TEST_CASE("writer output is byte-stable") {
  TempDir tmp;
  const auto map = small_map();
  write_field_map(map, tmp.path / "a.fieldmap");
  write_field_map(map, tmp.path / "b.fieldmap");
  std::ifstream a(tmp.path / "a.fieldmap"), b(tmp.path / "b.fieldmap");
  std::string sa((std::istreambuf_iterator<char>(a)), {});
  std::string sb((std::istreambuf_iterator<char>(b)), {});
  CHECK(sa == sb);
  CHECK(sa.find("slotring-fieldmap v1") != std::string::npos);
}

TEST_CASE("construction rejects invalid grids and values") {
  auto map = small_map();

  SUBCASE("NaN anywhere fails") {
    auto vals = map.values;
    vals[5][2] = cplx(0.0, std::nan(""));
    CHECK_THROWS_AS(
        make_field_map(map.r, map.phi, map.z, vals, Provenance::SYNTHETIC),
        validation_error);
  }
  SUBCASE("seam duplication fails") {
    auto phi = map.phi;
    phi.back() = two_pi;  // duplicates the 0 sample
    CHECK_THROWS_AS(
        make_field_map(map.r, phi, map.z, map.values, Provenance::SYNTHETIC),
        validation_error);
  }
  SUBCASE("partial phi coverage fails") {
    std::vector<double> phi;
    for (int i = 0; i < 8; ++i) phi.push_back(pi * i / 8.0);  // only half turn
    CHECK_THROWS_AS(
        make_field_map(map.r, phi, map.z, map.values, Provenance::SYNTHETIC),
        validation_error);
  }
  SUBCASE("non-increasing axis fails") {
    auto r = map.r;
    std::swap(r[0], r[1]);
    CHECK_THROWS_AS(
        make_field_map(r, map.phi, map.z, map.values, Provenance::SYNTHETIC),
        validation_error);
  }
}

TEST_CASE("reader failure modes") {
  TempDir tmp;
  CHECK_THROWS_AS(read_field_map(tmp.path / "missing.fieldmap"), io_error);

  SUBCASE("truncated body") {
    const auto map = small_map();
    const auto path = tmp.path / "map.fieldmap";
    write_field_map(map, path);
    std::ifstream is(path);
    std::string all((std::istreambuf_iterator<char>(is)), {});
    is.close();
    std::ofstream os(path);
    os << all.substr(0, all.size() * 2 / 3);
    os.close();
    CHECK_THROWS_AS(read_field_map(path), io_error);
  }
  SUBCASE("missing magic") {
    const auto path = tmp.path / "bad.fieldmap";
    std::ofstream os(path);
    os << "r_m,phi_rad\n1,2\n";
    os.close();
    CHECK_THROWS(read_field_map(path));
  }
}

TEST_CASE("line trace validation") {
  std::vector<double> phi = {0.0, 0.1, 0.2, 0.3};
  std::vector<cplx> vals(4, cplx(1.0, 0.0));
  CHECK_NOTHROW(make_line_trace(phi, vals, 1.4e-6, 0.0));
  phi[2] = 0.21;  // non-uniform
  CHECK_THROWS_AS(make_line_trace(phi, vals, 1.4e-6, 0.0), validation_error);
}

TEST_CASE("field interpolation") {
  // linear-in-(r,z) synthetic values: bilinear interpolation is exact
  std::vector<double> r = {1.0e-6, 1.5e-6, 2.0e-6};
  std::vector<double> phi = {0.0, pi / 2, pi, 3 * pi / 2};
  std::vector<double> z = {-1e-7, 0.0, 1e-7};
  std::vector<Vec3c> vals(r.size() * phi.size() * z.size());
  FieldMap f;
  f.r = r;
  f.phi = phi;
  f.z = z;
  f.values = vals;
  f.provenance = Provenance::INGESTED;
  for (std::size_t ir = 0; ir < r.size(); ++ir)
    for (std::size_t ip = 0; ip < phi.size(); ++ip)
      for (std::size_t iz = 0; iz < z.size(); ++iz)
        f.at(ir, ip, iz) = Vec3c{cplx(r[ir] * 1e6 + z[iz] * 1e7, 0.0),
                                 cplx(0.0, 0.0), cplx(0.0, 0.0)};

  SUBCASE("grid points are exact") {
    const auto v = field_at(f, {1.5e-6, pi / 2, 0.0});
    CHECK(v[0].real() == doctest::Approx(1.5).epsilon(1e-14));
  }
  SUBCASE("bilinear between nodes is exact for linear fields") {
    const auto v = field_at(f, {1.25e-6, pi / 2, 0.5e-7});
    CHECK(v[0].real() == doctest::Approx(1.25 + 0.5).epsilon(1e-12));
  }
  SUBCASE("out of hull throws") {
    CHECK_THROWS_AS(field_at(f, {2.5e-6, 0.0, 0.0}), validation_error);
    CHECK_THROWS_AS(field_at(f, {1.5e-6, 0.0, 5e-7}), validation_error);
  }
}

TEST_CASE("permittivity profile regions") {
  const auto g = make_ring_geometry(1.44e-6, 135e-9, 175e-9, 60e-9, 3.2, 1.6, 1.48);
  const auto eps = permittivity_profile(g);
  CHECK(eps(1.44e-6, 0.0) == doctest::Approx(1.6 * 1.6));          // slot
  CHECK(eps(1.44e-6 + 100e-9, 0.0) == doctest::Approx(3.2 * 3.2)); // bar
  CHECK(eps(1.44e-6 - 100e-9, 0.0) == doctest::Approx(3.2 * 3.2)); // bar
  CHECK(eps(1.44e-6, 200e-9) == doctest::Approx(1.48 * 1.48));     // above
  CHECK(eps(0.5e-6, 0.0) == doctest::Approx(1.48 * 1.48));         // inside
}
