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
#include <span>
#include <string_view>
#include <vector>

#include "nuphase/cenns.hpp"
#include "nuphase/target.hpp"

namespace nuphase {

//---------------------------------------------------------------------------//
/*!
 * Two-branch spatial superposition of the crystal centre of mass.
 *
 * Branches sit at x0 and x1 = x0 + delta_x along the x axis. The neutrino
 * beam lies in the x-z plane at beam_angle from the x axis.
 */
struct SuperpositionConfig {
  double delta_x_m = 1e-14;
  double sigma_c_m = 1e-16;
  double beam_angle_rad = 0.0;

  //! delta_x > 0, 0 < sigma_c <= delta_x, beam_angle in [0, pi/2].
  void validate() const;
};

struct KickFactor {
  double phase_rad;    // -q_x * x_bar
  double attenuation;  // exp(-q_x^2 sigma_c^2 / 2)
};

//! Phase and envelope factor picked up by a Gaussian packet at x_bar after
//! a momentum transfer q_x [MeV].
KickFactor gaussian_kick(double q_x_MeV, double x_bar_m, double sigma_c_m);

//! Relative phase q_x * delta_x between the two branches.
double branch_phase_difference(double q_x_MeV, const SuperpositionConfig& cfg);

//---------------------------------------------------------------------------//
// Complex scattering rate
//---------------------------------------------------------------------------//
/*!
 * Overall factor in front of the master-equation rate.
 *
 * paper: 2 F1 N (saturated decay rate is twice the scattering rate).
 * unit: F1 N (saturated decay rate equals the scattering rate).
 */
enum class PrefactorConvention { paper, unit };

PrefactorConvention parse_prefactor_convention(std::string_view text);
std::string_view to_string(PrefactorConvention convention);
double prefactor_multiplier(PrefactorConvention convention);

struct QuadratureSettings {
  std::size_t n_theta = 64;    // initial cos(theta) nodes (whole 64-node panels)
  std::size_t n_energy = 32;   // initial energy nodes (whole 32-node panels)
  std::size_t n_azimuth = 16;  // initial azimuth nodes, used when beam_angle > 0
  double rel_tol = 1e-8;
  unsigned max_refinements = 8;
  double azimuth_offset = 0.0;  // rotation of the azimuthal node set [rad]

  void validate() const;
};

//! Coherence decay rate [s^-1] and relative-phase accrual rate [rad s^-1].
struct ComplexRate {
  double decay = 0.0;
  double phase_rate = 0.0;
};

struct RateEvaluation {
  ComplexRate rate;
  double rel_change = 0.0;
  unsigned levels = 0;
  std::size_t evaluations = 0;  // integrand calls at the final level
};

/*!
 * Master-equation rate for the off-diagonal coherence <x0|rho|x1>.
 *
 * d rho01/dt = -(decay + i phase_rate) rho01 with
 *
 *   decay + i phase_rate = k F1 N / (64 pi^2 m^2)
 *       * integral dE S(E) integral dOmega |M|^2 (1 - exp(-i q_x dx))
 *
 * where q_x = E (cos beta - s_x) is the momentum delivered along the
 * superposition axis for scattered direction s (elastic, static nucleus) and
 * k is the convention multiplier. delta_x = 0 is accepted and gives zero.
 */
RateEvaluation complex_rate_detailed(const ScatteringAmplitudeModel& model,
                                     const ReactorSource& source,
                                     const TargetCrystal& target,
                                     const SuperpositionConfig& cfg,
                                     PrefactorConvention convention = PrefactorConvention::paper,
                                     const QuadratureSettings& settings = {});

ComplexRate complex_rate(const ScatteringAmplitudeModel& model, const ReactorSource& source,
                         const TargetCrystal& target, const SuperpositionConfig& cfg,
                         PrefactorConvention convention = PrefactorConvention::paper,
                         const QuadratureSettings& settings = {});

//! Large-separation limit of the decay rate, k F1 N <sigma_static> [s^-1].
double saturation_decay_rate(const ScatteringAmplitudeModel& model, const ReactorSource& source,
                             const TargetCrystal& target, PrefactorConvention convention);

//---------------------------------------------------------------------------//
// Time evolution
//---------------------------------------------------------------------------//
struct CoherencePoint {
  double amplitude;
  double phase;
};

/*!
 * Off-diagonal coherence A(t) exp(-i phi(t)) sampled on a time grid.
 *
 * The rate is constant in time, so A(t) = A0 exp(-decay t) and
 * phi(t) = phase_rate t exactly; the grid is only for presentation.
 */
struct CoherenceTrajectory {
  ComplexRate rate;
  double initial_amplitude = 0.5;
  std::vector<double> times;
  std::vector<double> amplitude;
  std::vector<double> phase;

  //! Closed-form value at t; throws InvalidInput outside the grid span.
  CoherencePoint at(double t) const;
};

//! t_grid must be ascending and start at 0.
CoherenceTrajectory evolve_coherence(const ComplexRate& rate, std::span<const double> t_grid,
                                     double initial_amplitude = 0.5);

//! n_points uniformly spaced samples over [0, t_max].
std::vector<double> uniform_time_grid(double t_max, std::size_t n_points);

}  // namespace nuphase
