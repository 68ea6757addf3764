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

#include "nuphase/config.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <fstream>
#include <functional>
#include <map>
#include <sstream>
#include <type_traits>
#include <vector>

#include <fmt/format.h>

#include "nuphase/errors.hpp"
#include "nuphase/units.hpp"

namespace nuphase {

namespace {

std::string_view trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r");
  return s.substr(first, last - first + 1);
}

double parse_real(std::string_view text, std::size_t line) {
  double value = 0.0;
  const auto* end = text.data() + text.size();
  const auto [ptr, ec] = std::from_chars(text.data(), end, value);
  if (ec != std::errc() || ptr != end) {
    throw ConfigError("'" + std::string(text) + "' is not a number", line);
  }
  if (!std::isfinite(value)) {
    throw ConfigError("value must be finite", line);
  }
  return value;
}

long long parse_integer(std::string_view text, std::size_t line) {
  long long value = 0;
  const auto* end = text.data() + text.size();
  const auto [ptr, ec] = std::from_chars(text.data(), end, value);
  if (ec != std::errc() || ptr != end) {
    throw ConfigError("'" + std::string(text) + "' is not an integer", line);
  }
  return value;
}

// Shortest text that parses back to the same double.
std::string show_real(double v) { return fmt::format("{}", v); }

// One config key: how to assign it, and how to print its effective value.
struct Field {
  std::string_view key;
  std::function<void(RunConfig&, std::string_view, std::size_t)> assign;
  std::function<std::string(const RunConfig&)> show;
};

template <class Access>
Field real(std::string_view key, Access access) {
  return {key,
          [access](RunConfig& c, std::string_view v, std::size_t line) {
            access(c) = parse_real(v, line);
          },
          [access](const RunConfig& c) {
            return show_real(access(const_cast<RunConfig&>(c)));
          }};
}

template <class Access>
Field count(std::string_view key, Access access) {
  return {key,
          [access, key](RunConfig& c, std::string_view v, std::size_t line) {
            using T = std::remove_reference_t<decltype(access(c))>;
            const auto n = parse_integer(v, line);
            if (std::is_unsigned_v<T> && n < 0) {
              throw ConfigError(std::string(key) + " must be non-negative", line);
            }
            if (n > 1'000'000'000LL || n < -1'000'000'000LL) {
              throw ConfigError(std::string(key) + " is out of range", line);
            }
            access(c) = static_cast<T>(n);
          },
          [access](const RunConfig& c) {
            return std::to_string(access(const_cast<RunConfig&>(c)));
          }};
}

const std::vector<Field>& fields() {
  static const std::vector<Field> all = [] {
    std::vector<Field> f;
    f.push_back(count("target.Z", [](RunConfig& c) -> int& { return c.target.Z; }));
    f.push_back(count("target.N", [](RunConfig& c) -> int& { return c.target.N; }));
    f.push_back(real("target.n_atoms", [](RunConfig& c) -> double& { return c.target.n_atoms; }));
    f.push_back(real("target.density_g_cm3",
                     [](RunConfig& c) -> double& { return c.target.density_g_cm3; }));
    f.push_back(real("source.power_GW", [](RunConfig& c) -> double& { return c.source.power_GW; }));
    f.push_back(real("source.distance_m",
                     [](RunConfig& c) -> double& { return c.source.distance_m; }));
    f.push_back(real("source.rate_per_GW",
                     [](RunConfig& c) -> double& { return c.source.rate_per_GW; }));
    f.push_back(real("source.E0_MeV", [](RunConfig& c) -> double& { return c.source.E0_MeV; }));
    f.push_back(real("source.sigmaE_MeV",
                     [](RunConfig& c) -> double& { return c.source.sigmaE_MeV; }));
    f.push_back(real("superposition.dx_m",
                     [](RunConfig& c) -> double& { return c.superposition.dx_m; }));
    f.push_back(real("superposition.sigma_c_m",
                     [](RunConfig& c) -> double& { return c.superposition.sigma_c_m; }));
    f.push_back(real("superposition.beam_angle_rad",
                     [](RunConfig& c) -> double& { return c.superposition.beam_angle_rad; }));
    f.push_back(real("evolve.t_max_s", [](RunConfig& c) -> double& { return c.evolve.t_max_s; }));
    f.push_back(count("evolve.n_points",
                      [](RunConfig& c) -> std::size_t& { return c.evolve.n_points; }));
    f.push_back({"evolve.prefactor_convention",
                 [](RunConfig& c, std::string_view v, std::size_t line) {
                   if (v == "paper") {
                     c.evolve.prefactor_convention = PrefactorConvention::paper;
                   } else if (v == "unit") {
                     c.evolve.prefactor_convention = PrefactorConvention::unit;
                   } else {
                     throw ConfigError("prefactor_convention must be 'paper' or 'unit'", line);
                   }
                 },
                 [](const RunConfig& c) {
                   return std::string(to_string(c.evolve.prefactor_convention));
                 }});
    f.push_back(real("env.P_Pa", [](RunConfig& c) -> double& { return c.env.P_Pa; }));
    f.push_back(real("env.T_K", [](RunConfig& c) -> double& { return c.env.T_K; }));
    f.push_back({"env.gas",
                 [](RunConfig& c, std::string_view v, std::size_t line) {
                   try {
                     gas_molecule_mass(v);
                   } catch (const InvalidInput& e) {
                     throw ConfigError(e.what(), line);
                   }
                   c.env.gas = std::string(v);
                 },
                 [](const RunConfig& c) { return c.env.gas; }});
    f.push_back(real("env.im_eps_bb", [](RunConfig& c) -> double& { return c.env.im_eps_bb; }));
    f.push_back(count("quadrature.n_theta",
                      [](RunConfig& c) -> std::size_t& { return c.quadrature.n_theta; }));
    f.push_back(count("quadrature.n_energy",
                      [](RunConfig& c) -> std::size_t& { return c.quadrature.n_energy; }));
    f.push_back(real("quadrature.rel_tol",
                     [](RunConfig& c) -> double& { return c.quadrature.rel_tol; }));
    f.push_back(count("quadrature.max_refinements",
                      [](RunConfig& c) -> std::size_t& { return c.quadrature.max_refinements; }));
    return f;
  }();
  return all;
}

// Invariant checks, each tied to the key whose line is reported.
struct Check {
  std::string_view key;
  std::function<bool(const RunConfig&)> ok;
  std::string_view message;
};

const std::vector<Check>& checks() {
  static const std::vector<Check> all = {
      {"target.Z", [](const RunConfig& c) { return c.target.Z >= 1; }, "target.Z must be >= 1"},
      {"target.N", [](const RunConfig& c) { return c.target.N >= 0; }, "target.N must be >= 0"},
      {"target.n_atoms", [](const RunConfig& c) { return c.target.n_atoms > 0; },
       "target.n_atoms must be positive"},
      {"target.density_g_cm3", [](const RunConfig& c) { return c.target.density_g_cm3 > 0; },
       "target.density_g_cm3 must be positive"},
      {"source.power_GW", [](const RunConfig& c) { return c.source.power_GW > 0; },
       "source.power_GW must be positive"},
      {"source.distance_m", [](const RunConfig& c) { return c.source.distance_m > 0; },
       "source.distance_m must be positive"},
      {"source.rate_per_GW", [](const RunConfig& c) { return c.source.rate_per_GW > 0; },
       "source.rate_per_GW must be positive"},
      {"source.E0_MeV", [](const RunConfig& c) { return c.source.E0_MeV > 0; },
       "source.E0_MeV must be positive"},
      {"source.sigmaE_MeV", [](const RunConfig& c) { return c.source.sigmaE_MeV > 0; },
       "source.sigmaE_MeV must be positive"},
      {"superposition.dx_m", [](const RunConfig& c) { return c.superposition.dx_m > 0; },
       "superposition.dx_m must be positive"},
      {"superposition.sigma_c_m",
       [](const RunConfig& c) { return c.superposition.sigma_c_m > 0; },
       "superposition.sigma_c_m must be positive"},
      {"superposition.sigma_c_m",
       [](const RunConfig& c) { return c.superposition.sigma_c_m <= c.superposition.dx_m; },
       "superposition.sigma_c_m must not exceed superposition.dx_m"},
      {"superposition.beam_angle_rad",
       [](const RunConfig& c) {
         return c.superposition.beam_angle_rad >= 0 && c.superposition.beam_angle_rad <= 0.5 * pi;
       },
       "superposition.beam_angle_rad must lie in [0, pi/2]"},
      {"evolve.t_max_s", [](const RunConfig& c) { return c.evolve.t_max_s > 0; },
       "evolve.t_max_s must be positive"},
      {"evolve.n_points", [](const RunConfig& c) { return c.evolve.n_points >= 2; },
       "evolve.n_points must be >= 2"},
      {"env.P_Pa", [](const RunConfig& c) { return c.env.P_Pa >= 0; },
       "env.P_Pa must be non-negative"},
      {"env.T_K", [](const RunConfig& c) { return c.env.T_K > 0; }, "env.T_K must be positive"},
      {"env.im_eps_bb", [](const RunConfig& c) { return c.env.im_eps_bb >= 0; },
       "env.im_eps_bb must be non-negative"},
      {"quadrature.n_theta", [](const RunConfig& c) { return c.quadrature.n_theta >= 1; },
       "quadrature.n_theta must be >= 1"},
      {"quadrature.n_energy", [](const RunConfig& c) { return c.quadrature.n_energy >= 1; },
       "quadrature.n_energy must be >= 1"},
      {"quadrature.rel_tol",
       [](const RunConfig& c) { return c.quadrature.rel_tol > 0 && c.quadrature.rel_tol < 1; },
       "quadrature.rel_tol must lie in (0, 1)"},
      {"quadrature.max_refinements",
       [](const RunConfig& c) {
         return c.quadrature.max_refinements >= 1 && c.quadrature.max_refinements <= 16;
       },
       "quadrature.max_refinements must lie in [1, 16]"},
  };
  return all;
}

void run_checks(const RunConfig& cfg, const std::map<std::string, std::size_t, std::less<>>& lines) {
  for (const auto& check : checks()) {
    if (!check.ok(cfg)) {
      const auto it = lines.find(check.key);
      throw ConfigError(std::string(check.message), it == lines.end() ? 0 : it->second);
    }
  }
}

}  // namespace

void RunConfig::validate() const { run_checks(*this, {}); }

Nuclide RunConfig::nuclide() const { return {target.Z, target.N}; }

TargetCrystal RunConfig::crystal() const {
  return TargetCrystal(nuclide(), target.n_atoms, target.density_g_cm3);
}

ReactorSource RunConfig::reactor() const {
  ReactorSource s;
  s.rate_per_GW = source.rate_per_GW;
  s.power_GW = source.power_GW;
  s.distance_m = source.distance_m;
  s.E0_MeV = source.E0_MeV;
  s.sigma_E_MeV = source.sigmaE_MeV;
  return s;
}

SuperpositionConfig RunConfig::superposition_config() const {
  return {superposition.dx_m, superposition.sigma_c_m, superposition.beam_angle_rad};
}

Environment RunConfig::environment() const {
  Environment e;
  e.pressure_Pa = env.P_Pa;
  e.temperature_K = env.T_K;
  e.gas_mass_kg = gas_molecule_mass(env.gas);
  e.im_polarizability = env.im_eps_bb;
  return e;
}

QuadratureSettings RunConfig::quadrature_settings() const {
  QuadratureSettings q;
  q.n_theta = quadrature.n_theta;
  q.n_energy = quadrature.n_energy;
  q.rel_tol = quadrature.rel_tol;
  q.max_refinements = static_cast<unsigned>(quadrature.max_refinements);
  return q;
}

RunConfig parse_config(std::string_view text) {
  RunConfig cfg;
  std::map<std::string, std::size_t, std::less<>> seen;
  std::vector<std::pair<std::string, std::size_t>> unknown;

  std::size_t line_no = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    const auto eol = text.find('\n', pos);
    std::string_view line = text.substr(pos, eol == std::string_view::npos ? text.npos : eol - pos);
    pos = eol == std::string_view::npos ? text.size() + 1 : eol + 1;
    ++line_no;

    if (const auto hash = line.find('#'); hash != std::string_view::npos) {
      line = line.substr(0, hash);
    }
    line = trim(line);
    if (line.empty()) continue;

    const auto eq = line.find('=');
    if (eq == std::string_view::npos) {
      throw ConfigError("expected 'section.key = value'", line_no);
    }
    const auto key = trim(line.substr(0, eq));
    const auto value = trim(line.substr(eq + 1));
    if (key.empty() || key.find('.') == std::string_view::npos) {
      throw ConfigError("key must have the form section.key", line_no);
    }
    if (value.empty()) {
      throw ConfigError("missing value for '" + std::string(key) + "'", line_no);
    }

    const auto& all = fields();
    const auto field = std::find_if(all.begin(), all.end(),
                                    [&](const Field& f) { return f.key == key; });
    if (field == all.end()) {
      unknown.emplace_back(std::string(key), line_no);
      continue;
    }
    if (!seen.emplace(std::string(key), line_no).second) {
      throw ConfigError("duplicate key '" + std::string(key) + "'", line_no);
    }
    field->assign(cfg, value, line_no);
  }

  if (!unknown.empty()) {
    std::string names;
    for (const auto& [name, line] : unknown) {
      names += (names.empty() ? "" : ", ") + name + " (line " + std::to_string(line) + ")";
    }
    throw ConfigError("unknown keys: " + names, unknown.front().second);
  }
  run_checks(cfg, seen);
  return cfg;
}

RunConfig load_config(const std::string& path) {
  std::ifstream in(path);
  if (!in) {
    throw ConfigError("cannot open config file '" + path + "'", 0);
  }
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return parse_config(buffer.str());
}

std::string format_config(const RunConfig& cfg) {
  std::string out;
  for (const auto& field : fields()) {
    out += fmt::format("{} = {}\n", field.key, field.show(cfg));
  }
  return out;
}

}  // namespace nuphase
