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

// nuphase: command-line front end.
//
// Exit codes: 0 success, 1 configuration error, 2 usage error, 3 numerical
// failure.

#include <chrono>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <fmt/chrono.h>
#include <fmt/format.h>

#include "nuphase/commands.hpp"
#include "nuphase/config.hpp"
#include "nuphase/errors.hpp"

namespace {

using namespace nuphase;

enum ExitCode : int { ok = 0, config_error = 1, usage_error = 2, numerical_failure = 3 };

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Overrides applied on top of the config file, in this order.
struct Overrides {
  std::optional<double> n_atoms, power, distance, E0, sigmaE;
  std::optional<double> dx, sigma_c, beam_angle;
  std::optional<double> t_max;
  std::optional<std::size_t> n_points;
  std::optional<std::string> convention;
  std::optional<double> pressure, temperature, im_eps;
  std::optional<std::string> gas;
  std::optional<int> Z, N;

  void apply(RunConfig& c) const {
    auto set = [](auto& field, const auto& value) {
      if (value) field = *value;
    };
    set(c.target.Z, Z);
    set(c.target.N, N);
    set(c.target.n_atoms, n_atoms);
    set(c.source.power_GW, power);
    set(c.source.distance_m, distance);
    set(c.source.E0_MeV, E0);
    set(c.source.sigmaE_MeV, sigmaE);
    set(c.superposition.dx_m, dx);
    set(c.superposition.sigma_c_m, sigma_c);
    set(c.superposition.beam_angle_rad, beam_angle);
    set(c.evolve.t_max_s, t_max);
    set(c.evolve.n_points, n_points);
    if (convention) {
      try {
        c.evolve.prefactor_convention = parse_prefactor_convention(*convention);
      } catch (const InvalidInput& e) {
        throw ConfigError(e.what());
      }
    }
    set(c.env.P_Pa, pressure);
    set(c.env.T_K, temperature);
    set(c.env.gas, gas);
    set(c.env.im_eps_bb, im_eps);
  }
};

struct ConfigOptions {
  std::string path;
  Overrides overrides;

  RunConfig load() const {
    RunConfig cfg = path.empty() ? RunConfig{} : load_config(path);
    overrides.apply(cfg);
    cfg.validate();
    return cfg;
  }
};

void add_config(CLI::App* cmd, ConfigOptions& opts) {
  cmd->add_option("--config", opts.path, "Config file (section.key = value)");
}

void add_target_overrides(CLI::App* cmd, Overrides& o) {
  cmd->add_option("--Z", o.Z, "Proton number");
  cmd->add_option("--N", o.N, "Neutron number");
  cmd->add_option("--n-atoms", o.n_atoms, "Atoms in the crystal");
}

void add_source_overrides(CLI::App* cmd, Overrides& o) {
  cmd->add_option("--power-GW", o.power, "Reactor thermal power");
  cmd->add_option("--distance-m", o.distance, "Reactor distance");
  cmd->add_option("--E0-MeV", o.E0, "Spectrum mean energy");
  cmd->add_option("--sigmaE-MeV", o.sigmaE, "Spectrum width");
}

void add_superposition_overrides(CLI::App* cmd, Overrides& o) {
  cmd->add_option("--dx-m", o.dx, "Branch separation");
  cmd->add_option("--sigma-c-m", o.sigma_c, "Branch wavepacket width");
  cmd->add_option("--beam-angle-rad", o.beam_angle, "Beam angle to the superposition axis");
}

void add_env_overrides(CLI::App* cmd, Overrides& o) {
  cmd->add_option("--P-Pa", o.pressure, "Background gas pressure");
  cmd->add_option("--T-K", o.temperature, "Environment temperature");
  cmd->add_option("--gas", o.gas, "Background gas (He, H2, N2, Ar)");
  cmd->add_option("--im-eps-bb", o.im_eps, "Im[(eps-1)/(eps+2)] for blackbody scattering");
}

void write_output(const std::string& path, const std::string& text) {
  if (path.empty() || path == "-") {
    std::cout << text;
    std::cout.flush();
    return;
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) {
    throw ConfigError("cannot open output file '" + path + "'");
  }
  out << text;
  if (!out) {
    throw ConfigError("failed writing '" + path + "'");
  }
}

std::string dump(const nlohmann::json& j) { return j.dump(2) + '\n'; }

// SOURCE_DATE_EPOCH pins the timestamp for reproducible output.
std::string run_timestamp() {
  std::time_t t = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
  if (const char* epoch = std::getenv("SOURCE_DATE_EPOCH")) {
    try {
      t = static_cast<std::time_t>(std::stoll(epoch));
    } catch (const std::exception&) {
      throw UsageError("SOURCE_DATE_EPOCH must be an integer");
    }
  }
  return fmt::format("{:%Y-%m-%dT%H:%M:%SZ}", fmt::gmtime(t));
}

std::vector<double> grid_from_flags(double lo, double hi, std::size_t count, const char* name) {
  if (count == 0) {
    throw UsageError(fmt::format("{} grid is empty", name));
  }
  try {
    return log_grid(lo, hi, count);
  } catch (const InvalidInput& e) {
    throw UsageError(fmt::format("{} grid: {}", name, e.what()));
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Coherent neutrino scattering phase in a spatially superposed crystal"};
  app.set_version_flag("--version", tool_version());
  app.require_subcommand(1);

  // cross-section
  ConfigOptions xs_cfg;
  std::vector<double> xs_energies{1.0, 2.0, 2.6, 5.0, 10.0, 20.0, 50.0};
  std::string xs_out = "-";
  auto* xs = app.add_subcommand("cross-section", "Total CEvNS cross-section table (CSV)");
  add_config(xs, xs_cfg);
  add_target_overrides(xs, xs_cfg.overrides);
  xs->add_option("--E-MeV", xs_energies, "Neutrino energies")->delimiter(',');
  xs->add_option("--out", xs_out, "Output path, '-' for stdout");

  // evolve
  ConfigOptions ev_cfg;
  std::string ev_out = "-";
  std::string ev_manifest;
  auto* ev = app.add_subcommand("evolve", "Coherence trajectory (CSV) and run manifest (JSON)");
  add_config(ev, ev_cfg);
  add_target_overrides(ev, ev_cfg.overrides);
  add_source_overrides(ev, ev_cfg.overrides);
  add_superposition_overrides(ev, ev_cfg.overrides);
  ev->add_option("--t-max-s", ev_cfg.overrides.t_max, "Trajectory end time");
  ev->add_option("--n-points", ev_cfg.overrides.n_points, "Trajectory samples");
  ev->add_option("--prefactor-convention", ev_cfg.overrides.convention, "paper or unit");
  ev->add_option("--out", ev_out, "CSV output path, '-' for stdout");
  ev->add_option("--manifest", ev_manifest, "JSON manifest output path");

  // scan-pt
  ConfigOptions pt_cfg;
  double p_min = 1e-18, p_max = 1e-8, t_min = 0.1, t_max = 1000.0, pt_target = 1e5;
  std::size_t p_count = 11, t_count = 9;
  std::string pt_out = "-";
  auto* pt = app.add_subcommand("scan-pt", "Allowed pressure-temperature region (CSV)");
  add_config(pt, pt_cfg);
  add_target_overrides(pt, pt_cfg.overrides);
  add_superposition_overrides(pt, pt_cfg.overrides);
  add_env_overrides(pt, pt_cfg.overrides);
  pt->add_option("--P-min", p_min, "Lowest pressure [Pa]");
  pt->add_option("--P-max", p_max, "Highest pressure [Pa]");
  pt->add_option("--P-count", p_count, "Pressure samples (log spaced)");
  pt->add_option("--T-min", t_min, "Lowest temperature [K]");
  pt->add_option("--T-max", t_max, "Highest temperature [K]");
  pt->add_option("--T-count", t_count, "Temperature samples (log spaced)");
  pt->add_option("--target-time-s", pt_target, "Required coherence time");
  pt->add_option("--out", pt_out, "Output path, '-' for stdout");

  // design-sg
  SternGerlachPlan sg_plan;
  std::string sg_out = "-";
  auto* sg = app.add_subcommand("design-sg", "Stern-Gerlach superposition estimate (JSON)");
  sg->add_option("--dBdx-T-per-m", sg_plan.dBdx_T_per_m, "Field gradient");
  sg->add_option("--t-acc-s", sg_plan.t_acc_s, "Acceleration time");
  sg->add_option("--mass-kg", sg_plan.mass_kg, "Crystal mass");
  sg->add_option("--free-time-s", sg_plan.free_time_s, "Free evolution time");
  sg->add_option("--chi-m", sg_plan.chi_m, "Magnitude of the volume susceptibility");
  sg->add_option("--out", sg_out, "Output path, '-' for stdout");

  // design-cavity
  CavityPlan cav_plan;
  std::string cav_out = "-";
  auto* cav = app.add_subcommand("design-cavity", "Cavity photon-kick estimate (JSON)");
  cav->add_option("--V-m3", cav_plan.V_m3, "Crystal volume");
  cav->add_option("--Vc-m3", cav_plan.V_c_m3, "Cavity mode volume");
  cav->add_option("--epsilon", cav_plan.epsilon, "Dielectric constant ('inf' allowed)");
  cav->add_option("--omega-L-rad-s", cav_plan.omega_L_rad_s, "Cavity frequency");
  cav->add_option("--t-kick-s", cav_plan.t_kick_s, "Kick duration");
  cav->add_option("--n-photon", cav_plan.n_photon, "Photon number (0 or 1)");
  cav->add_option("--mass-kg", cav_plan.mass_kg, "Crystal mass");
  cav->add_option("--out", cav_out, "Output path, '-' for stdout");

  // array-scale
  std::vector<int> arr_n{1, 2, 3, 5, 10};
  std::string arr_out = "-";
  auto* arr = app.add_subcommand("array-scale", "Crystal-array trade-off table (CSV)");
  arr->add_option("--n", arr_n, "Subdivision factors")->delimiter(',');
  arr->add_option("--out", arr_out, "Output path, '-' for stdout");

  // feasibility
  ConfigOptions fe_cfg;
  FeasibilityInputs fe_inputs;
  std::string fe_out = "-";
  auto* fe = app.add_subcommand("feasibility", "Decoherence budget and approximation checks (JSON)");
  add_config(fe, fe_cfg);
  add_target_overrides(fe, fe_cfg.overrides);
  add_superposition_overrides(fe, fe_cfg.overrides);
  add_env_overrides(fe, fe_cfg.overrides);
  fe->add_option("--target-time-s", fe_inputs.coherence_time_target_s, "Required coherence time");
  fe->add_option("--sigma-wp", fe_inputs.neutrino_sigma_wp, "Relative neutrino energy spread");
  fe->add_option("--E-nu-MeV", fe_inputs.neutrino_energy_MeV, "Neutrino energy");
  fe->add_option("--out", fe_out, "Output path, '-' for stdout");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? ok : usage_error;
  }

  try {
    if (xs->parsed()) {
      write_output(xs_out, run_table(xs_cfg.load(), xs_energies));
    } else if (ev->parsed()) {
      auto result = run_evolve(ev_cfg.load());
      write_output(ev_out, result.csv);
      if (!ev_manifest.empty()) {
        result.manifest["run"] = {{"timestamp", run_timestamp()}};
        write_output(ev_manifest, dump(result.manifest));
      }
    } else if (pt->parsed()) {
      const auto cfg = pt_cfg.load();
      const auto pg = grid_from_flags(p_min, p_max, p_count, "pressure");
      const auto tg = grid_from_flags(t_min, t_max, t_count, "temperature");
      write_output(pt_out, run_scan_pt(cfg, pg, tg, pt_target).csv);
    } else if (sg->parsed()) {
      write_output(sg_out, dump(run_design_sg(sg_plan)));
    } else if (cav->parsed()) {
      write_output(cav_out, dump(run_design_cavity(cav_plan)));
    } else if (arr->parsed()) {
      write_output(arr_out, run_array_scale(arr_n));
    } else if (fe->parsed()) {
      write_output(fe_out, dump(run_feasibility(fe_cfg.load(), fe_inputs)));
    }
  } catch (const ConfigError& e) {
    std::cerr << "config error: " << e.what() << '\n';
    return config_error;
  } catch (const NumericalError& e) {
    std::cerr << "numerical failure: " << e.what() << " (relative change "
              << format_number(e.rel_change()) << " after " << e.evaluations()
              << " integrand evaluations)\n";
    return numerical_failure;
  } catch (const UsageError& e) {
    std::cerr << "usage error: " << e.what() << '\n';
    return usage_error;
  } catch (const InvalidInput& e) {
    std::cerr << "usage error: " << e.what() << '\n';
    return usage_error;
  } catch (const ValidityError& e) {
    std::cerr << "usage error: " << e.what() << '\n';
    return usage_error;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return numerical_failure;
  }
  return ok;
}
