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

#include "nuphase/feasibility.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

#include "nuphase/errors.hpp"

namespace nuphase {

namespace {

void require_ascending(std::span<const double> grid, const char* name) {
  if (grid.empty()) {
    throw InvalidInput(std::string(name) + " grid is empty");
  }
  if (!std::is_sorted(grid.begin(), grid.end())) {
    throw InvalidInput(std::string(name) + " grid must be ascending");
  }
}

}  // namespace

double gas_molecule_mass(std::string_view name) {
  const double u = constants.kg_per_u;
  if (name == "He") return 4.002602 * u;
  if (name == "H2") return 2.01588 * u;
  if (name == "N2") return 28.0134 * u;
  if (name == "Ar") return 39.948 * u;
  throw InvalidInput("unknown background gas '" + std::string(name) + "'");
}

double blackbody_polarizability(std::complex<double> epsilon) {
  return ((epsilon - 1.0) / (epsilon + 2.0)).imag();
}

void Environment::validate() const {
  if (!(pressure_Pa >= 0.0)) {
    throw InvalidInput("pressure must be non-negative");
  }
  if (!(temperature_K > 0.0)) {
    throw InvalidInput("temperature must be positive");
  }
  if (!(gas_mass_kg > 0.0)) {
    throw InvalidInput("gas molecule mass must be positive");
  }
}

double mean_gas_speed(const Environment& env) {
  return std::sqrt(8.0 * constants.k_B * env.temperature_K / (pi * env.gas_mass_kg));
}

double thermal_wavelength(const Environment& env) {
  return constants.h
         / std::sqrt(2.0 * pi * env.gas_mass_kg * constants.k_B * env.temperature_K);
}

double gas_number_density(const Environment& env) {
  return env.pressure_Pa / (constants.k_B * env.temperature_K);
}

double gas_decoherence_rate(const Environment& env, const TargetCrystal& target,
                            double delta_x_m, const DecoherenceCoefficients& coeffs) {
  env.validate();
  if (!(delta_x_m >= 0.0)) {
    throw InvalidInput("branch separation must be non-negative");
  }
  const double r = target.radius_m();
  const double collisions = gas_number_density(env) * mean_gas_speed(env) * pi * r * r;
  const double ratio = delta_x_m / thermal_wavelength(env);
  return collisions * std::min(1.0, coeffs.gas * ratio * ratio);
}

double blackbody_decoherence_rate(const Environment& env, const TargetCrystal& target,
                                  double delta_x_m, const DecoherenceCoefficients& coeffs) {
  env.validate();
  if (!(delta_x_m >= 0.0)) {
    throw InvalidInput("branch separation must be non-negative");
  }
  // Thermal wavenumber k_B T / (hbar c) [m^-1].
  const double k_th = constants.k_B * env.temperature_K / (constants.hbar_si * constants.c);
  const double k2 = k_th * k_th;
  return coeffs.blackbody * constants.c * target.volume_m3() * k2 * k2 * k2
         * env.im_polarizability * delta_x_m * delta_x_m;
}

bool PtScan::is_downward_closed() const {
  const std::size_t np = pressure_grid.size();
  const std::size_t nt = temperature_grid.size();
  for (std::size_t i = 0; i < np; ++i) {
    for (std::size_t j = 0; j < nt; ++j) {
      if (!cell(i, j).allowed) continue;
      if (i > 0 && !cell(i - 1, j).allowed) return false;
      if (j > 0 && !cell(i, j - 1).allowed) return false;
    }
  }
  return true;
}

PtScan pt_region_scan(const TargetCrystal& target, double delta_x_m,
                      double coherence_time_target_s, std::span<const double> pressure_grid,
                      std::span<const double> temperature_grid, const Environment& env,
                      const DecoherenceCoefficients& coeffs) {
  require_ascending(pressure_grid, "pressure");
  require_ascending(temperature_grid, "temperature");
  if (!(coherence_time_target_s > 0.0)) {
    throw InvalidInput("coherence time target must be positive");
  }

  PtScan scan;
  scan.pressure_grid.assign(pressure_grid.begin(), pressure_grid.end());
  scan.temperature_grid.assign(temperature_grid.begin(), temperature_grid.end());
  scan.cells.reserve(pressure_grid.size() * temperature_grid.size());
  for (double p : pressure_grid) {
    for (double t : temperature_grid) {
      Environment here = env;
      here.pressure_Pa = p;
      here.temperature_K = t;
      PtCell cell{p, t, gas_decoherence_rate(here, target, delta_x_m, coeffs),
                  blackbody_decoherence_rate(here, target, delta_x_m, coeffs), 0.0, false};
      const double total = cell.gas_rate + cell.bb_rate;
      cell.coherence_time_s =
          total > 0.0 ? 1.0 / total : std::numeric_limits<double>::infinity();
      cell.allowed = cell.coherence_time_s >= coherence_time_target_s;
      scan.cells.push_back(cell);
    }
  }
  return scan;
}

std::vector<double> log_grid(double lo, double hi, std::size_t count) {
  if (count == 0) {
    throw InvalidInput("grid must have at least one point");
  }
  if (!(lo > 0.0) || !(hi >= lo)) {
    throw InvalidInput("log grid needs 0 < lo <= hi");
  }
  std::vector<double> grid(count);
  if (count == 1) {
    grid[0] = lo;
    return grid;
  }
  const double a = std::log10(lo);
  const double step = (std::log10(hi) - a) / static_cast<double>(count - 1);
  for (std::size_t i = 0; i < count; ++i) {
    grid[i] = std::pow(10.0, a + step * static_cast<double>(i));
  }
  grid.front() = lo;
  grid.back() = hi;
  return grid;
}

WavepacketWindow wavepacket_window(const TargetCrystal& target, const SuperpositionConfig& cfg) {
  const double lower = length_to_m(1.0 / target.m_nucl_mev());
  const double upper = cfg.delta_x_m;
  return {lower, upper, lower <= cfg.sigma_c_m && cfg.sigma_c_m <= upper};
}

double neutrino_coherence_width(double sigma_wp, double E_MeV) {
  if (!(sigma_wp > 0.0) || !(E_MeV > 0.0)) {
    throw InvalidInput("wavepacket energy spread and energy must be positive");
  }
  // sigma_x sigma_nu = 1/2 with sigma_nu = sigma_wp E.
  return length_to_m(1.0 / (2.0 * sigma_wp * E_MeV));
}

NeutrinoCoherence neutrino_coherence(double sigma_wp, double E_MeV, double delta_x_m) {
  const double width = neutrino_coherence_width(sigma_wp, E_MeV);
  return {width, delta_x_m > width};
}

void SternGerlachPlan::validate() const {
  if (!(dBdx_T_per_m > 0.0) || !(mass_kg > 0.0) || !(chi_m > 0.0) || !(mu_0 > 0.0)) {
    throw InvalidInput("Stern-Gerlach gradient, mass, susceptibility and mu_0 must be positive");
  }
  if (!(t_acc_s >= 0.0) || !(free_time_s >= 0.0)) {
    throw InvalidInput("Stern-Gerlach times must be non-negative");
  }
}

SternGerlachDesign stern_gerlach_design(const SternGerlachPlan& plan) {
  plan.validate();
  SternGerlachDesign out;
  out.velocity_m_s = constants.mu_B * plan.dBdx_T_per_m * plan.t_acc_s / plan.mass_kg;
  out.delta_x_m = 2.0 * out.velocity_m_s * plan.free_time_s;
  out.trap_freq_rad_s = std::sqrt(plan.chi_m / plan.mu_0) * plan.dBdx_T_per_m;
  out.ground_state_spread_m =
      std::sqrt(constants.hbar_si / (2.0 * plan.mass_kg * out.trap_freq_rad_s));
  return out;
}

void CavityPlan::validate() const {
  if (!(V_m3 > 0.0) || !(V_c_m3 > 0.0) || !(omega_L_rad_s > 0.0) || !(mass_kg > 0.0)) {
    throw InvalidInput("cavity volumes, frequency and mass must be positive");
  }
  if (!(t_kick_s >= 0.0)) {
    throw InvalidInput("kick duration must be non-negative");
  }
  if (n_photon != 0 && n_photon != 1) {
    throw InvalidInput("photon number must be 0 or 1");
  }
  if (epsilon == -1.0) {
    throw ValidityError("dielectric constant -1 makes the coupling singular");
  }
}

CavityDesign cavity_kick_design(const CavityPlan& plan) {
  plan.validate();
  const double contrast =
      std::isinf(plan.epsilon) ? 1.0 : (plan.epsilon - 1.0) / (plan.epsilon + 1.0);
  CavityDesign out;
  out.g_rad_s = 3.0 * plan.V_m3 / (4.0 * plan.V_c_m3) * contrast * plan.omega_L_rad_s;
  const double k = plan.omega_L_rad_s / constants.c;
  out.v_kick_m_s = constants.hbar_si * out.g_rad_s * k * plan.n_photon * plan.t_kick_s
                   / plan.mass_kg;
  return out;
}

}  // namespace nuphase
