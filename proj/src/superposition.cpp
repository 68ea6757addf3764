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

#include "nuphase/superposition.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <string>

#include "nuphase/errors.hpp"
#include "nuphase/quadrature.hpp"
#include "nuphase/units.hpp"

namespace nuphase {

namespace {

using cplx = std::complex<double>;

// 1 - exp(-i x), with the real part written as 2 sin^2(x/2) to avoid
// cancellation at small x.
cplx one_minus_phase(double x) {
  const double h = std::sin(0.5 * x);
  return {2.0 * h * h, std::sin(x)};
}

// Phase advance of the integrand across one 64-node cos(theta) panel.
constexpr double max_phase_per_panel = 24.0;

std::size_t panels_for(std::size_t nodes, std::size_t rule_order) {
  return std::max<std::size_t>(1, (nodes + rule_order - 1) / rule_order);
}

// Angular integral (1 / 64 pi^2 m^2) int dOmega |M|^2 (1 - exp(-i q_x dx))
// at fixed neutrino energy [MeV^-2].
class AngularIntegrand {
 public:
  AngularIntegrand(const ScatteringAmplitudeModel& model, double dx_natural, double beta,
                   const QuadratureSettings& settings)
      : model_(model),
        dx_(dx_natural),
        cos_beta_(std::cos(beta)),
        sin_beta_(std::sin(beta)),
        settings_(settings) {}

  cplx operator()(double E, unsigned level, std::size_t& evaluations) const {
    const double norm = 1.0 / (64.0 * pi * pi * model_.m_nucl * model_.m_nucl);
    const double span = 2.0 * E * dx_;
    const std::size_t base = std::max(panels_for(settings_.n_theta, quad::GL64::order),
                                      static_cast<std::size_t>(std::ceil(span / max_phase_per_panel)));
    const std::size_t panels = base << level;

    if (sin_beta_ == 0.0) {
      // Beam along the superposition axis: q_x = E (1 - cos theta), no
      // azimuthal dependence.
      auto f = [&](double c) {
        ++evaluations;
        const double arg = E * (1.0 - c) * dx_;
        const double weight = amplitude_sq_cos(model_, E, c);
        return weight * one_minus_phase(arg);
      };
      return 2.0 * pi * norm * quad::composite<quad::GL64>(f, -1.0, 1.0, panels);
    }

    const std::size_t az_nodes = std::max<std::size_t>(1, settings_.n_azimuth) << level;
    auto f = [&](double c) {
      const double s = std::sqrt(std::max(0.0, 1.0 - c * c));
      const double weight = amplitude_sq_cos(model_, E, c);
      auto g = [&](double phi) {
        ++evaluations;
        // x component of the scattered direction, built from a frame whose
        // polar axis is the beam (cos b, 0, sin b).
        const double s_x = c * cos_beta_ - s * std::cos(phi) * sin_beta_;
        const double arg = E * (cos_beta_ - s_x) * dx_;
        return one_minus_phase(arg);
      };
      return weight * quad::periodic_trapezoid(g, az_nodes, settings_.azimuth_offset);
    };
    return norm * quad::composite<quad::GL64>(f, -1.0, 1.0, panels);
  }

 private:
  const ScatteringAmplitudeModel& model_;
  double dx_;
  double cos_beta_;
  double sin_beta_;
  const QuadratureSettings& settings_;
};

}  // namespace

void SuperpositionConfig::validate() const {
  if (!(delta_x_m > 0.0) || !std::isfinite(delta_x_m)) {
    throw InvalidInput("branch separation must be positive");
  }
  if (!(sigma_c_m > 0.0)) {
    throw InvalidInput("wavepacket width must be positive");
  }
  if (sigma_c_m > delta_x_m) {
    throw InvalidInput("wavepacket width must not exceed the branch separation");
  }
  if (!(beam_angle_rad >= 0.0 && beam_angle_rad <= 0.5 * pi)) {
    throw InvalidInput("beam angle must lie in [0, pi/2]");
  }
}

KickFactor gaussian_kick(double q_x_MeV, double x_bar_m, double sigma_c_m) {
  if (!(sigma_c_m > 0.0)) {
    throw InvalidInput("wavepacket width must be positive");
  }
  const double sigma = length_to_natural(sigma_c_m);
  const double qs = q_x_MeV * sigma;
  return {-q_x_MeV * length_to_natural(x_bar_m), std::exp(-0.5 * qs * qs)};
}

double branch_phase_difference(double q_x_MeV, const SuperpositionConfig& cfg) {
  cfg.validate();
  return q_x_MeV * length_to_natural(cfg.delta_x_m);
}

PrefactorConvention parse_prefactor_convention(std::string_view text) {
  if (text == "paper") return PrefactorConvention::paper;
  if (text == "unit") return PrefactorConvention::unit;
  throw InvalidInput("prefactor convention must be 'paper' or 'unit', got '"
                     + std::string(text) + "'");
}

std::string_view to_string(PrefactorConvention convention) {
  return convention == PrefactorConvention::paper ? "paper" : "unit";
}

double prefactor_multiplier(PrefactorConvention convention) {
  return convention == PrefactorConvention::paper ? 2.0 : 1.0;
}

void QuadratureSettings::validate() const {
  if (n_theta == 0 || n_energy == 0 || n_azimuth == 0) {
    throw InvalidInput("quadrature node counts must be positive");
  }
  if (!(rel_tol > 0.0 && rel_tol < 1.0)) {
    throw InvalidInput("quadrature tolerance must lie in (0, 1)");
  }
}

RateEvaluation complex_rate_detailed(const ScatteringAmplitudeModel& model,
                                     const ReactorSource& source,
                                     const TargetCrystal& target,
                                     const SuperpositionConfig& cfg,
                                     PrefactorConvention convention,
                                     const QuadratureSettings& settings) {
  source.validate();
  settings.validate();
  if (!(cfg.delta_x_m >= 0.0) || !std::isfinite(cfg.delta_x_m)) {
    throw InvalidInput("branch separation must be non-negative");
  }
  if (!(cfg.beam_angle_rad >= 0.0 && cfg.beam_angle_rad <= 0.5 * pi)) {
    throw InvalidInput("beam angle must lie in [0, pi/2]");
  }

  RateEvaluation out;
  if (cfg.delta_x_m == 0.0) {
    return out;
  }

  const auto [lo, hi] = spectrum_support(source);
  if (hi > max_valid_energy_MeV) {
    throw ValidityError("spectrum extends above 50 MeV: form factor F=1 assumption broken");
  }

  const AngularIntegrand angular(model, length_to_natural(cfg.delta_x_m),
                                 cfg.beam_angle_rad, settings);
  const std::size_t energy_panels = panels_for(settings.n_energy, quad::GL32::order);

  std::size_t evaluations = 0;
  auto estimate = [&](unsigned level) -> cplx {
    evaluations = 0;
    if (source.shape == SpectrumShape::monochromatic) {
      return angular(source.E0_MeV, level, evaluations);
    }
    auto f = [&](double E) {
      return spectrum_density(source, E) * angular(E, level, evaluations);
    };
    return quad::composite<quad::GL32>(f, lo, hi, energy_panels << level);
  };

  const auto refined = quad::refine_until_stable(estimate, settings.rel_tol,
                                                 settings.max_refinements);
  if (!refined.converged) {
    throw NumericalError("complex rate quadrature did not reach rel_tol "
                             + std::to_string(settings.rel_tol) + " after "
                             + std::to_string(settings.max_refinements)
                             + " refinements (last relative change "
                             + std::to_string(refined.rel_change) + ")",
                         refined.rel_change, evaluations);
  }

  // sigma_eff [MeV^-2] -> rate [s^-1] via k F1 [cm^-2 s^-1] N sigma [cm^2]
  const double scale = prefactor_multiplier(convention) * flux_at_detector(source)
                       * target.n_atoms() * constants.mev_inv2_to_cm2;
  out.rate.decay = scale * refined.value.real();
  out.rate.phase_rate = scale * refined.value.imag();
  out.rel_change = refined.rel_change;
  out.levels = refined.levels;
  out.evaluations = evaluations;
  return out;
}

ComplexRate complex_rate(const ScatteringAmplitudeModel& model, const ReactorSource& source,
                         const TargetCrystal& target, const SuperpositionConfig& cfg,
                         PrefactorConvention convention, const QuadratureSettings& settings) {
  return complex_rate_detailed(model, source, target, cfg, convention, settings).rate;
}

double saturation_decay_rate(const ScatteringAmplitudeModel& model, const ReactorSource& source,
                             const TargetCrystal& target, PrefactorConvention convention) {
  return prefactor_multiplier(convention) * flux_at_detector(source) * target.n_atoms()
         * cross_section_to_cm2(spectrum_averaged_static_sigma(model, source));
}

CoherencePoint CoherenceTrajectory::at(double t) const {
  if (times.empty() || !(t >= times.front() && t <= times.back())) {
    throw InvalidInput("time outside the trajectory span");
  }
  return {initial_amplitude * std::exp(-rate.decay * t), rate.phase_rate * t};
}

CoherenceTrajectory evolve_coherence(const ComplexRate& rate, std::span<const double> t_grid,
                                     double initial_amplitude) {
  if (t_grid.empty() || t_grid.front() != 0.0) {
    throw InvalidInput("time grid must start at 0");
  }
  if (!std::is_sorted(t_grid.begin(), t_grid.end())) {
    throw InvalidInput("time grid must be ascending");
  }
  CoherenceTrajectory traj;
  traj.rate = rate;
  traj.initial_amplitude = initial_amplitude;
  traj.times.assign(t_grid.begin(), t_grid.end());
  traj.amplitude.reserve(t_grid.size());
  traj.phase.reserve(t_grid.size());
  for (double t : t_grid) {
    traj.amplitude.push_back(initial_amplitude * std::exp(-rate.decay * t));
    traj.phase.push_back(rate.phase_rate * t);
  }
  return traj;
}

std::vector<double> uniform_time_grid(double t_max, std::size_t n_points) {
  if (n_points < 2 || !(t_max > 0.0)) {
    throw InvalidInput("time grid needs t_max > 0 and at least two points");
  }
  std::vector<double> grid(n_points);
  const double step = t_max / static_cast<double>(n_points - 1);
  for (std::size_t i = 0; i < n_points; ++i) {
    grid[i] = step * static_cast<double>(i);
  }
  grid.back() = t_max;
  return grid;
}

}  // namespace nuphase
