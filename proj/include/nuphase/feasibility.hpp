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

#include <complex>
#include <span>
#include <string_view>
#include <vector>

#include "nuphase/superposition.hpp"
#include "nuphase/target.hpp"
#include "nuphase/units.hpp"

namespace nuphase {

//---------------------------------------------------------------------------//
// Environmental decoherence
//---------------------------------------------------------------------------//
//! Molecular mass [kg] of a background gas: "He", "H2", "N2" or "Ar".
double gas_molecule_mass(std::string_view name);

//! Im[(eps - 1) / (eps + 2)].
double blackbody_polarizability(std::complex<double> epsilon);

/*!
 * Laboratory environment around the levitated crystal.
 *
 * One temperature describes both the residual gas and the crystal interior.
 */
struct Environment {
  double pressure_Pa = 1e-16;
  double temperature_K = 1.0;
  double gas_mass_kg = 4.002602 * constants.kg_per_u;
  double im_polarizability = 0.1;  // Im[(eps_bb - 1) / (eps_bb + 2)]

  void validate() const;
};

/*!
 * Order-unity coefficients of the decoherence models.
 *
 * gas: multiplies the localization rate R (dx / lambda_th)^2 below
 * saturation; 1 puts the crossover at dx = lambda_th and 4 pi^2 moves it to
 * 2 pi dx = lambda_th. blackbody: C_e in the thermal-emission rate.
 */
struct DecoherenceCoefficients {
  double gas = 1.0;
  double blackbody = 16.0 * pi * pi * pi * pi * pi / 189.0;
};

//! Mean gas-molecule speed sqrt(8 k T / pi m) [m/s].
double mean_gas_speed(const Environment& env);
//! Thermal de Broglie wavelength h / sqrt(2 pi m k T) [m].
double thermal_wavelength(const Environment& env);
//! Gas number density P / k T [m^-3].
double gas_number_density(const Environment& env);

/*!
 * Collisional decoherence rate [s^-1].
 *
 * R min(1, c (dx / lambda_th)^2) with R = n v pi r^2 the geometric
 * collision rate on the sphere-equivalent crystal.
 */
double gas_decoherence_rate(const Environment& env, const TargetCrystal& target,
                            double delta_x_m, const DecoherenceCoefficients& coeffs = {});

/*!
 * Thermal-emission decoherence rate [s^-1].
 *
 * C_e c V (k T / hbar c)^6 Im[(eps - 1)/(eps + 2)] dx^2, the long-wavelength
 * localization rate for a dielectric sphere at temperature T.
 */
double blackbody_decoherence_rate(const Environment& env, const TargetCrystal& target,
                                  double delta_x_m,
                                  const DecoherenceCoefficients& coeffs = {});

struct PtCell {
  double pressure_Pa;
  double temperature_K;
  double gas_rate;
  double bb_rate;
  double coherence_time_s;  // 1 / (gas_rate + bb_rate); infinite when both vanish
  bool allowed;
};

//! Cells are stored pressure-major: cell(i, j) has pressure_grid[i], temperature_grid[j].
struct PtScan {
  std::vector<double> pressure_grid;
  std::vector<double> temperature_grid;
  std::vector<PtCell> cells;

  const PtCell& cell(std::size_t i_p, std::size_t i_t) const {
    return cells[i_p * temperature_grid.size() + i_t];
  }
  //! True if no allowed cell has a disallowed neighbour at lower P or lower T.
  bool is_downward_closed() const;
};

/*!
 * Allowed/disallowed map over (P, T).
 *
 * env supplies the gas species and emissivity; its pressure and temperature
 * are replaced by the grid values. Grids must be non-empty and ascending.
 */
PtScan pt_region_scan(const TargetCrystal& target, double delta_x_m,
                      double coherence_time_target_s, std::span<const double> pressure_grid,
                      std::span<const double> temperature_grid, const Environment& env = {},
                      const DecoherenceCoefficients& coeffs = {});

//! count log-spaced values over [lo, hi]; count == 1 gives {lo}.
std::vector<double> log_grid(double lo, double hi, std::size_t count);

//---------------------------------------------------------------------------//
// Approximation windows
//---------------------------------------------------------------------------//
//! Lower bound on sigma_c quoted alongside the computed one, for comparison.
inline constexpr double quoted_wavepacket_lower_m = 1e-17;

struct WavepacketWindow {
  double lower_m;  // hbar c / m_nucl
  double upper_m;  // delta_x
  bool ok;
};

//! The wavepacket width must sit between the nuclear Compton length and dx.
WavepacketWindow wavepacket_window(const TargetCrystal& target, const SuperpositionConfig& cfg);

//! Neutrino position uncertainty 1 / (2 sigma_wp E) in metres.
double neutrino_coherence_width(double sigma_wp, double E_MeV);

struct NeutrinoCoherence {
  double width_m;
  bool resolution_risk;  // delta_x exceeds the neutrino coherence width
};

NeutrinoCoherence neutrino_coherence(double sigma_wp, double E_MeV, double delta_x_m);

//---------------------------------------------------------------------------//
// Superposition creation
//---------------------------------------------------------------------------//
struct SternGerlachPlan {
  double dBdx_T_per_m = 1e6;
  double t_acc_s = 1e-5;
  double mass_kg = 1e-3;
  double free_time_s = 1e5;
  double chi_m = 1.66e-4;  // |volume susceptibility| of bismuth
  double mu_0 = constants.mu_0;

  void validate() const;
};

struct SternGerlachDesign {
  double velocity_m_s;        // mu_B dB/dx t_acc / m
  double delta_x_m;           // 2 v tau
  double trap_freq_rad_s;     // sqrt(chi_m / mu_0) dB/dx
  double ground_state_spread_m;  // sqrt(hbar / 2 m omega)
};

SternGerlachDesign stern_gerlach_design(const SternGerlachPlan& plan);

struct CavityPlan {
  double V_m3 = 1e-6;
  double V_c_m3 = 1e-6;
  double epsilon = 1e30;  // effectively the perfect-dielectric limit
  double omega_L_rad_s = 1e10;
  double t_kick_s = 1e-6;
  int n_photon = 1;
  double mass_kg = 1e-3;

  void validate() const;
};

struct CavityDesign {
  double g_rad_s;      // (3V / 4V_c) (eps - 1)/(eps + 1) omega_L
  double v_kick_m_s;   // hbar g k n t_kick / m, k = omega_L / c
};

CavityDesign cavity_kick_design(const CavityPlan& plan);

}  // namespace nuphase
