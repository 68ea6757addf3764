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

#include "nuphase/target.hpp"

namespace nuphase {

//! Above this energy the unit form factor is no longer a fair approximation.
inline constexpr double max_valid_energy_MeV = 50.0;

enum class FormFactorMode { unity };

//---------------------------------------------------------------------------//
/*!
 * Coherent elastic neutrino-nucleus scattering off a single nuclide.
 *
 * Only the neutral-current vector coupling through the weak charge is
 * modelled, with F(q^2) = 1.
 */
struct ScatteringAmplitudeModel {
  double Q_W;
  double m_nucl;  // [MeV]
  FormFactorMode form_factor = FormFactorMode::unity;

  static ScatteringAmplitudeModel from_nuclide(const Nuclide& nuclide);
};

//! Static-nucleus kinematics; requires 0 < E_nu < 1e-2 m_nucl.
struct RecoilKinematics {
  double E_nu;    // [MeV]
  double m_nucl;  // [MeV]

  RecoilKinematics(double E_nu_MeV, double m_nucl_MeV);
};

//! Kinetic energy T_max = 2 m E^2 / ((m + E)^2 - E^2) [MeV].
double max_recoil_energy(const RecoilKinematics& kin);

/*!
 * Nuclear recoil kinetic energy for recoil angle theta relative to the
 * incident neutrino, theta in [0, pi/2].
 */
double recoil_energy(const RecoilKinematics& kin, double theta_recoil);

/*!
 * Differential cross section dsigma/dT [MeV^-3].
 *
 * The bracket (1 - T/E - m T / 2E^2) vanishes at T_max; rounding can push it
 * slightly negative there, in which case zero is returned.
 */
double dsigma_dT(const ScatteringAmplitudeModel& model, double E_MeV, double T_MeV);

struct CrossSectionIntegral {
  double value = 0.0;       // [MeV^-2]
  double rel_change = 0.0;  // last refinement step
  unsigned levels = 0;
  std::size_t clamped_nodes = 0;  // nodes where dsigma/dT was clamped to zero
};

//! Integral of dsigma/dT over [0, T_max] with diagnostics.
CrossSectionIntegral sigma_total_detailed(const ScatteringAmplitudeModel& model,
                                          double E_MeV, double rel_tol = 1e-8);

//! Total cross section [MeV^-2]; throws ValidityError above 50 MeV.
double sigma_total(const ScatteringAmplitudeModel& model, double E_MeV);

/*!
 * Spin-summed |M|^2 [MeV^2] in the static-nucleus limit as a function of the
 * scattered neutrino's polar angle.
 *
 * Equal to 4 G_F^2 Q_W^2 m^2 E^2 (1 + cos theta). The constant is fixed so
 * that (1 / 64 pi^2 m^2) * integral dOmega |M|^2 reproduces the total cross
 * section.
 */
double amplitude_sq(const ScatteringAmplitudeModel& model, double E_MeV, double theta_nu);

//! |M|^2 expressed through cos(theta_nu), used by the angular integrators.
double amplitude_sq_cos(const ScatteringAmplitudeModel& model, double E_MeV, double cos_theta);

//! integral S(E) sigma_total(E) dE [MeV^-2]; sigma_total(E0) for a line spectrum.
double spectrum_averaged_sigma(const ScatteringAmplitudeModel& model,
                               const ReactorSource& source);

/*!
 * Cross section [MeV^-2] implied by amplitude_sq, G_F^2 Q_W^2 E^2 / (4 pi).
 *
 * Larger than sigma_total by the recoil factor (m + 2E) / m; it is the exact
 * large-separation limit of the superposition decay integral.
 */
double sigma_static(const ScatteringAmplitudeModel& model, double E_MeV);

//! integral S(E) sigma_static(E) dE [MeV^-2]; throws ValidityError above 50 MeV.
double spectrum_averaged_static_sigma(const ScatteringAmplitudeModel& model,
                                      const ReactorSource& source);

}  // namespace nuphase
