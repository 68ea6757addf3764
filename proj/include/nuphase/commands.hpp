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

#include <span>
#include <string>

#include <json.hpp>

#include "nuphase/config.hpp"
#include "nuphase/feasibility.hpp"
#include "nuphase/readout.hpp"
#include "nuphase/superposition.hpp"

namespace nuphase {

std::string tool_version();

//! Full-precision (17 significant digit) decimal used in every CSV.
std::string format_number(double value);

//---------------------------------------------------------------------------//
// evolve
//---------------------------------------------------------------------------//
inline constexpr const char* evolve_csv_header =
    "t_s,phase_rad,amplitude,signal_cos,signal_sin,click_prob";

struct EvolveResult {
  ComplexRate rate;
  CoherenceTrajectory trajectory;
  std::string csv;
  //! Config echo and derived quantities; carries no timestamp so that it is
  //! reproducible from the config alone.
  nlohmann::json manifest;
};

/*!
 * Coherence trajectory over n_points uniform samples of [0, t_max].
 *
 * Throws NumericalError if the rate quadrature does not converge.
 */
EvolveResult run_evolve(const RunConfig& cfg);

//---------------------------------------------------------------------------//
// scan-pt
//---------------------------------------------------------------------------//
inline constexpr const char* scan_csv_header =
    "P_Pa,T_K,gas_rate,bb_rate,coherence_time_s,allowed";

struct ScanResult {
  PtScan scan;
  std::string csv;
};

//! Decoherence map at the config's crystal and dx; gas and emissivity from env.
ScanResult run_scan_pt(const RunConfig& cfg, std::span<const double> pressure_grid,
                       std::span<const double> temperature_grid,
                       double coherence_time_target_s);

//---------------------------------------------------------------------------//
// cross-section
//---------------------------------------------------------------------------//
inline constexpr const char* table_csv_header = "E_MeV,T_max_eV,sigma_cm2";

//! Cross-section table; every energy is validated before any row is produced.
std::string run_table(const RunConfig& cfg, std::span<const double> energies_MeV);

//---------------------------------------------------------------------------//
// array-scale, design-sg, design-cavity, feasibility
//---------------------------------------------------------------------------//
inline constexpr const char* array_csv_header =
    "n,mass_factor,duration_factor,per_crystal_phase_factor,crystal_count,phase_precision";

std::string run_array_scale(std::span<const int> factors);

nlohmann::json run_design_sg(const SternGerlachPlan& plan);

nlohmann::json run_design_cavity(const CavityPlan& plan);

struct FeasibilityInputs {
  double coherence_time_target_s = 1e5;
  double neutrino_sigma_wp = 0.01;
  double neutrino_energy_MeV = 10.0;
  SternGerlachPlan stern_gerlach;
  CavityPlan cavity;
};

//! Decoherence budget, approximation windows and creation estimates.
nlohmann::json run_feasibility(const RunConfig& cfg, const FeasibilityInputs& inputs);

}  // namespace nuphase
