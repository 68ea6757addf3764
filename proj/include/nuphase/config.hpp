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

#pragma once

#include <cstddef>
#include <string>
#include <string_view>

#include "nuphase/feasibility.hpp"
#include "nuphase/superposition.hpp"
#include "nuphase/target.hpp"

namespace nuphase {

/*!
 * Complete run configuration.
 *
 * Read from flat `section.key = value` lines with '#' comments. Keys carry
 * their unit as a suffix; anything omitted keeps the default below, which
 * reproduces the reference bismuth scenario.
 */
struct RunConfig {
  struct Target {
    int Z = 83;
    int N = 126;
    double n_atoms = 5e21;
    double density_g_cm3 = 9.78;
  } target;

  struct Source {
    double power_GW = 4.5;
    double distance_m = 20.0;
    double rate_per_GW = 2e20;
    double E0_MeV = 2.6;
    double sigmaE_MeV = 0.75;
  } source;

  struct Superposition {
    double dx_m = 1e-14;
    double sigma_c_m = 1e-16;
    double beam_angle_rad = 0.0;
  } superposition;

  struct Evolve {
    double t_max_s = 3e5;
    std::size_t n_points = 301;
    PrefactorConvention prefactor_convention = PrefactorConvention::paper;
  } evolve;

  struct Env {
    double P_Pa = 1e-16;
    double T_K = 1.0;
    std::string gas = "He";
    double im_eps_bb = 0.1;
  } env;

  struct Quadrature {
    std::size_t n_theta = 64;
    std::size_t n_energy = 32;
    double rel_tol = 1e-8;
    std::size_t max_refinements = 8;
  } quadrature;

  //! Throws ConfigError (line 0) when a cross-field invariant fails.
  void validate() const;

  Nuclide nuclide() const;
  TargetCrystal crystal() const;
  ReactorSource reactor() const;
  SuperpositionConfig superposition_config() const;
  Environment environment() const;
  QuadratureSettings quadrature_settings() const;
};

//! Parse a config document; throws ConfigError carrying the offending line.
RunConfig parse_config(std::string_view text);

//! Read and parse a config file.
RunConfig load_config(const std::string& path);

//! Every effective value as `section.key = value` lines, parseable again.
std::string format_config(const RunConfig& cfg);

}  // namespace nuphase
