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

#include "nuphase/commands.hpp"

#include <cmath>
#include <limits>
#include <sstream>
#include <string_view>

#include <fmt/format.h>

#include "nuphase/cenns.hpp"
#include "nuphase/errors.hpp"
#include "nuphase/units.hpp"

#ifndef NUPHASE_VERSION
#define NUPHASE_VERSION "0.0.0"
#endif

namespace nuphase {

namespace {

using nlohmann::json;

// Config echo as key -> value strings, taken from the canonical text form so
// the echo and format_config can never disagree.
json config_echo(const RunConfig& cfg) {
  json echo = json::object();
  std::istringstream lines(format_config(cfg));
  std::string line;
  while (std::getline(lines, line)) {
    const auto eq = line.find(" = ");
    if (eq == std::string::npos) continue;
    echo[line.substr(0, eq)] = line.substr(eq + 3);
  }
  return echo;
}

json count_json(const ScatteringCount& count) {
  return {{"mean", count.mean}, {"p_geq_2", count.p_geq_2}};
}

// JSON has no infinity; report unbounded times as null.
json finite_or_null(double value) {
  return std::isfinite(value) ? json(value) : json(nullptr);
}

std::string join_row(std::initializer_list<std::string_view> fields) {
  std::string row;
  for (auto f : fields) {
    if (!row.empty()) row += ',';
    row += f;
  }
  row += '\n';
  return row;
}

}  // namespace

std::string tool_version() { return NUPHASE_VERSION; }

std::string format_number(double value) { return fmt::format("{:.17g}", value); }

EvolveResult run_evolve(const RunConfig& cfg) {
  cfg.validate();
  const auto crystal = cfg.crystal();
  const auto source = cfg.reactor();
  const auto sup = cfg.superposition_config();
  const auto model = ScatteringAmplitudeModel::from_nuclide(crystal.nuclide());
  const auto convention = cfg.evolve.prefactor_convention;

  const auto eval = complex_rate_detailed(model, source, crystal, sup, convention,
                                          cfg.quadrature_settings());
  const auto grid = uniform_time_grid(cfg.evolve.t_max_s, cfg.evolve.n_points);

  EvolveResult out;
  out.rate = eval.rate;
  out.trajectory = evolve_coherence(eval.rate, grid);

  std::string csv = std::string(evolve_csv_header) + '\n';
  for (std::size_t i = 0; i < grid.size(); ++i) {
    const double t = grid[i];
    csv += join_row({format_number(t), format_number(out.trajectory.phase[i]),
                     format_number(out.trajectory.amplitude[i]),
                     format_number(readout_signal(out.trajectory, t, ReadoutMode::cos)),
                     format_number(readout_signal(out.trajectory, t, ReadoutMode::sin)),
                     format_number(click_probability(out.trajectory, t))});
  }
  out.csv = std::move(csv);

  const double E0 = source.E0_MeV;
  const RecoilKinematics kin{E0, crystal.m_nucl_mev()};
  const double t_max = cfg.evolve.t_max_s;
  const double phase_rate = eval.rate.phase_rate;

  json derived;
  derived["Q_W"] = model.Q_W;
  derived["m_nucl_MeV"] = crystal.m_nucl_mev();
  derived["crystal_mass_g"] = crystal.mass_g();
  derived["crystal_radius_m"] = crystal.radius_m();
  derived["flux_cm2s"] = flux_at_detector(source);
  derived["T_max_eV_at_E0"] = 1e6 * max_recoil_energy(kin);
  derived["sigma_tot_cm2_at_E0"] = cross_section_to_cm2(sigma_total(model, E0));
  derived["sigma_bar_cm2"] = cross_section_to_cm2(spectrum_averaged_sigma(model, source));
  derived["Lambda"] = {{"decay_per_s", eval.rate.decay},
                       {"phase_rate_rad_per_s", phase_rate},
                       {"rel_change", eval.rel_change},
                       {"refinement_levels", eval.levels},
                       {"integrand_evaluations", eval.evaluations}};
  derived["saturation_decay_per_s"] =
      saturation_decay_rate(model, source, crystal, convention);
  derived["phase_at_t_max_rad"] = phase_rate * t_max;
  derived["amplitude_ratio_at_t_max"] = std::exp(-eval.rate.decay * t_max);
  derived["pi_shift_time_s"] =
      finite_or_null(phase_rate > 0.0 ? pi / phase_rate
                                      : std::numeric_limits<double>::infinity());
  derived["expected_scatterings_at_t_max"] = {
      {"paper", count_json(expected_scatterings(source, crystal, t_max,
                                                PrefactorConvention::paper))},
      {"unit", count_json(expected_scatterings(source, crystal, t_max,
                                               PrefactorConvention::unit))}};

  out.manifest = {{"tool", "nuphase"},
                  {"version", tool_version()},
                  {"command", "evolve"},
                  {"config", config_echo(cfg)},
                  {"derived", std::move(derived)}};
  return out;
}

ScanResult run_scan_pt(const RunConfig& cfg, std::span<const double> pressure_grid,
                       std::span<const double> temperature_grid,
                       double coherence_time_target_s) {
  cfg.validate();
  ScanResult out;
  out.scan = pt_region_scan(cfg.crystal(), cfg.superposition.dx_m, coherence_time_target_s,
                            pressure_grid, temperature_grid, cfg.environment());
  std::string csv = std::string(scan_csv_header) + '\n';
  for (const auto& cell : out.scan.cells) {
    csv += join_row({format_number(cell.pressure_Pa), format_number(cell.temperature_K),
                     format_number(cell.gas_rate), format_number(cell.bb_rate),
                     format_number(cell.coherence_time_s), cell.allowed ? "true" : "false"});
  }
  out.csv = std::move(csv);
  return out;
}

std::string run_table(const RunConfig& cfg, std::span<const double> energies_MeV) {
  cfg.validate();
  const auto crystal = cfg.crystal();
  const auto model = ScatteringAmplitudeModel::from_nuclide(crystal.nuclide());
  for (double E : energies_MeV) {
    if (!(E > 0.0)) {
      throw InvalidInput("energies must be positive, got " + format_number(E));
    }
    if (E > max_valid_energy_MeV) {
      throw ValidityError("energy " + format_number(E) + " MeV is above the 50 MeV limit");
    }
  }
  std::string csv = std::string(table_csv_header) + '\n';
  for (double E : energies_MeV) {
    const RecoilKinematics kin{E, crystal.m_nucl_mev()};
    csv += join_row({format_number(E), format_number(1e6 * max_recoil_energy(kin)),
                     format_number(cross_section_to_cm2(sigma_total(model, E)))});
  }
  return csv;
}

std::string run_array_scale(std::span<const int> factors) {
  std::vector<ArrayScaling> rows;
  rows.reserve(factors.size());
  for (int n : factors) rows.push_back(array_scaling(n));
  std::string csv = std::string(array_csv_header) + '\n';
  for (const auto& r : rows) {
    csv += join_row({std::to_string(r.n), format_number(r.mass_factor),
                     format_number(r.duration_factor), format_number(r.per_crystal_phase_factor),
                     std::to_string(r.crystal_count), format_number(r.phase_precision)});
  }
  return csv;
}

nlohmann::json run_design_sg(const SternGerlachPlan& plan) {
  const auto d = stern_gerlach_design(plan);
  return {{"inputs",
           {{"dBdx_T_per_m", plan.dBdx_T_per_m},
            {"t_acc_s", plan.t_acc_s},
            {"mass_kg", plan.mass_kg},
            {"free_time_s", plan.free_time_s},
            {"chi_m", plan.chi_m},
            {"mu_0", plan.mu_0}}},
          {"velocity_m_s", d.velocity_m_s},
          {"delta_x_m", d.delta_x_m},
          {"trap_freq_rad_s", d.trap_freq_rad_s},
          {"ground_state_spread_m", d.ground_state_spread_m}};
}

nlohmann::json run_design_cavity(const CavityPlan& plan) {
  const auto d = cavity_kick_design(plan);
  return {{"inputs",
           {{"V_m3", plan.V_m3},
            {"V_c_m3", plan.V_c_m3},
            {"epsilon", finite_or_null(plan.epsilon)},
            {"omega_L_rad_s", plan.omega_L_rad_s},
            {"t_kick_s", plan.t_kick_s},
            {"n_photon", plan.n_photon},
            {"mass_kg", plan.mass_kg}}},
          {"g_rad_s", d.g_rad_s},
          {"v_kick_m_s", d.v_kick_m_s}};
}

nlohmann::json run_feasibility(const RunConfig& cfg, const FeasibilityInputs& inputs) {
  cfg.validate();
  const auto crystal = cfg.crystal();
  const auto sup = cfg.superposition_config();
  const auto env = cfg.environment();
  const double dx = sup.delta_x_m;

  const double gas = gas_decoherence_rate(env, crystal, dx);
  const double bb = blackbody_decoherence_rate(env, crystal, dx);
  const double total = gas + bb;
  const double coherence_time =
      total > 0.0 ? 1.0 / total : std::numeric_limits<double>::infinity();

  const auto window = wavepacket_window(crystal, sup);
  const auto nu = neutrino_coherence(inputs.neutrino_sigma_wp, inputs.neutrino_energy_MeV, dx);

  json out;
  out["tool"] = "nuphase";
  out["version"] = tool_version();
  out["command"] = "feasibility";
  out["config"] = config_echo(cfg);
  out["decoherence"] = {{"gas_number_density_m3", gas_number_density(env)},
                        {"mean_gas_speed_m_s", mean_gas_speed(env)},
                        {"thermal_wavelength_m", thermal_wavelength(env)},
                        {"gas_rate_per_s", gas},
                        {"bb_rate_per_s", bb},
                        {"coherence_time_s", finite_or_null(coherence_time)},
                        {"coherence_time_target_s", inputs.coherence_time_target_s},
                        {"meets_target", coherence_time >= inputs.coherence_time_target_s}};
  out["wavepacket_window"] = {{"lower_m", window.lower_m},
                              {"quoted_lower_m", quoted_wavepacket_lower_m},
                              {"upper_m", window.upper_m},
                              {"sigma_c_m", sup.sigma_c_m},
                              {"ok", window.ok}};
  out["neutrino_coherence"] = {{"sigma_wp", inputs.neutrino_sigma_wp},
                               {"energy_MeV", inputs.neutrino_energy_MeV},
                               {"width_m", nu.width_m},
                               {"delta_x_m", dx},
                               {"resolution_risk", nu.resolution_risk}};
  out["stern_gerlach"] = run_design_sg(inputs.stern_gerlach);
  out["cavity"] = run_design_cavity(inputs.cavity);
  return out;
}

}  // namespace nuphase
