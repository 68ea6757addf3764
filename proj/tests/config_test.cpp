// Copyright 2026 The nuphase Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <cstdio>
#include <fstream>
#include <string>

#include <doctest.h>

#include "nuphase/cenns.hpp"
#include "nuphase/config.hpp"
#include "nuphase/errors.hpp"
#include "test_support.hpp"

using namespace nuphase;
using doctest::Approx;

namespace {

// Line number carried by the ConfigError thrown for text.
std::size_t error_line(const std::string& text) {
  try {
    parse_config(text);
  } catch (const ConfigError& e) {
    return e.line();
  }
  return static_cast<std::size_t>(-1);
}

std::string error_message(const std::string& text) {
  try {
    parse_config(text);
  } catch (const ConfigError& e) {
    return e.what();
  }
  return {};
}

}  // namespace

TEST_CASE("empty document yields the reference defaults") {
  const auto cfg = parse_config("");
  CHECK(cfg.target.Z == 83);
  CHECK(cfg.target.N == 126);
  CHECK(cfg.target.n_atoms == 5e21);
  CHECK(cfg.target.density_g_cm3 == 9.78);
  CHECK(cfg.superposition.dx_m == 1e-14);
  CHECK(cfg.superposition.sigma_c_m == 1e-16);
  CHECK(cfg.superposition.beam_angle_rad == 0.0);
  CHECK(cfg.source.E0_MeV == 2.6);
  CHECK(cfg.source.sigmaE_MeV == 0.75);
  CHECK(cfg.source.power_GW == 4.5);
  CHECK(cfg.source.distance_m == 20.0);
  CHECK(cfg.source.rate_per_GW == 2e20);
  CHECK(flux_at_detector(cfg.reactor()) == Approx(1.79e13).epsilon(1e-3));
  CHECK(cfg.evolve.prefactor_convention == PrefactorConvention::paper);
  CHECK(cfg.env.gas == "He");
  CHECK(cfg.env.P_Pa == 1e-16);
  CHECK(cfg.env.T_K == 1.0);
  CHECK(cfg.quadrature.n_theta == 64);
  CHECK(cfg.quadrature.n_energy == 32);
  CHECK(cfg.quadrature.rel_tol == 1e-8);
  CHECK(cfg.quadrature.max_refinements == 8);
  CHECK_NOTHROW(cfg.validate());
}

TEST_CASE("values, comments and whitespace") {
  const auto cfg = parse_config(
      "# reference run\n"
      "\n"
      "  superposition.dx_m = 2e-14   # doubled\n"
      "source.E0_MeV=3.0\n"
      "env.gas = N2\n"
      "evolve.n_points = 11\n"
      "evolve.prefactor_convention = unit\n");
  CHECK(cfg.superposition.dx_m == 2e-14);
  CHECK(cfg.source.E0_MeV == 3.0);
  CHECK(cfg.env.gas == "N2");
  CHECK(cfg.evolve.n_points == 11);
  CHECK(cfg.evolve.prefactor_convention == PrefactorConvention::unit);
  CHECK(cfg.environment().gas_mass_kg > 4.0e-26);
}

TEST_CASE("invariant violations report the offending line") {
  CHECK(error_line("superposition.dx_m = -1\n") == 1);
  CHECK(error_message("superposition.dx_m = -1\n").find("superposition.dx_m") != std::string::npos);
  CHECK(error_line("# header\nsource.E0_MeV = 2\nsuperposition.sigma_c_m = 1e-12\n") == 3);
  CHECK(error_line("source.power_GW = 0\n") == 1);
  CHECK(error_line("evolve.n_points = 1\n") == 1);
  CHECK(error_line("quadrature.rel_tol = 2\n") == 1);
  CHECK(error_line("quadrature.max_refinements = 0\n") == 1);
  CHECK(error_line("superposition.beam_angle_rad = 2\n") == 1);
  CHECK(error_line("target.Z = 0\n") == 1);
}

TEST_CASE("malformed input is rejected with a line number") {
  CHECK(error_line("\n\nthis is not a pair\n") == 3);
  CHECK(error_line("dx_m = 1\n") == 1);
  CHECK(error_line("superposition.dx_m =\n") == 1);
  CHECK(error_line("superposition.dx_m = abc\n") == 1);
  CHECK(error_line("superposition.dx_m = 1e-14 m\n") == 1);
  CHECK(error_line("target.Z = 83.5\n") == 1);
  CHECK(error_line("evolve.n_points = -5\n") == 1);
  CHECK(error_line("evolve.prefactor_convention = double\n") == 1);
  CHECK(error_line("env.gas = Xe\n") == 1);
  CHECK(error_line("source.E0_MeV = 2\nsource.E0_MeV = 3\n") == 2);
}

TEST_CASE("non-finite numbers are rejected") {
  CHECK(error_line("superposition.dx_m = inf\n") == 1);
  CHECK(error_line("superposition.dx_m = nan\n") == 1);
  CHECK(error_line("source.E0_MeV = 1e400\n") == 1);
}

TEST_CASE("unknown keys are all listed") {
  const std::string text = "source.E0_MeV = 2\nsource.colour = red\ntarget.spin = 4.5\n";
  const auto message = error_message(text);
  CHECK(message.find("source.colour") != std::string::npos);
  CHECK(message.find("target.spin") != std::string::npos);
  CHECK(error_line(text) == 2);
}

TEST_CASE("format_config round-trips every value") {
  RunConfig cfg;
  cfg.superposition.dx_m = 3.0000000000000001e-14;
  cfg.source.sigmaE_MeV = 0.1 + 0.2;
  cfg.evolve.prefactor_convention = PrefactorConvention::unit;
  cfg.env.gas = "Ar";
  cfg.quadrature.n_theta = 128;
  const auto text = format_config(cfg);
  const auto again = parse_config(text);
  CHECK(format_config(again) == text);
  CHECK(again.superposition.dx_m == cfg.superposition.dx_m);
  CHECK(again.source.sigmaE_MeV == cfg.source.sigmaE_MeV);
  CHECK(again.env.gas == "Ar");
  CHECK(again.quadrature.n_theta == 128);

  // 22 keys, one per line.
  std::size_t lines = 0;
  for (char ch : format_config(RunConfig{})) lines += ch == '\n';
  CHECK(lines == 23);
}

TEST_CASE("derived objects follow the config") {
  RunConfig cfg;
  cfg.target.n_atoms = 1e21;
  cfg.superposition.beam_angle_rad = 0.3;
  cfg.env.T_K = 4.0;
  cfg.quadrature.rel_tol = 1e-6;
  CHECK(cfg.crystal().n_atoms() == 1e21);
  CHECK(cfg.superposition_config().beam_angle_rad == 0.3);
  CHECK(cfg.environment().temperature_K == 4.0);
  CHECK(cfg.environment().im_polarizability == 0.1);
  CHECK(cfg.quadrature_settings().rel_tol == 1e-6);
  CHECK(cfg.nuclide().Z == 83);
}

TEST_CASE("unit convention halves the rates") {
  const auto paper = parse_config("");
  const auto unit = parse_config("evolve.prefactor_convention = unit\n");
  const auto model = ScatteringAmplitudeModel::from_nuclide(paper.nuclide());
  const auto a = complex_rate(model, paper.reactor(), paper.crystal(), paper.superposition_config(),
                              paper.evolve.prefactor_convention, paper.quadrature_settings());
  const auto b = complex_rate(model, unit.reactor(), unit.crystal(), unit.superposition_config(),
                              unit.evolve.prefactor_convention, unit.quadrature_settings());
  CHECK(b.decay == Approx(0.5 * a.decay).epsilon(1e-15));
  CHECK(b.phase_rate == Approx(0.5 * a.phase_rate).epsilon(1e-15));
}

TEST_CASE("config files") {
  const std::string path = "config_test_tmp.cfg";
  {
    std::ofstream out(path);
    out << "superposition.dx_m = 5e-15\n";
  }
  CHECK(load_config(path).superposition.dx_m == 5e-15);
  std::remove(path.c_str());
  CHECK_THROWS_AS(load_config("no/such/file.cfg"), ConfigError);
}
