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

namespace nuphase {

//---------------------------------------------------------------------------//
// Detector crystal
//---------------------------------------------------------------------------//
struct Nuclide {
  int Z = 83;
  int N = 126;

  void validate() const;
};

//! Weak charge (1 - 4 sin^2 theta_W) Z + N.
double weak_charge(const Nuclide& nuclide);

//! Nuclear mass [MeV] from the semi-empirical atomic-mass expression.
double nucleus_mass(const Nuclide& nuclide);

/*!
 * Crystal of a single nuclide, treated as a sphere for geometric purposes.
 *
 * The atom count is the primary quantity; mass and radius are derived from
 * it and the bulk density.
 */
class TargetCrystal {
 public:
  TargetCrystal(Nuclide nuclide, double n_atoms, double mass_density_g_cm3);

  const Nuclide& nuclide() const { return nuclide_; }
  double n_atoms() const { return n_atoms_; }
  double mass_density_g_cm3() const { return density_; }
  double m_nucl_mev() const { return m_nucl_; }

  //! n_atoms * m_nucl in grams.
  double mass_g() const;
  double mass_kg() const { return 1e-3 * mass_g(); }
  double volume_m3() const;
  //! Sphere-equivalent radius (3V / 4 pi)^(1/3).
  double radius_m() const;

 private:
  Nuclide nuclide_;
  double n_atoms_;
  double density_;
  double m_nucl_;
};

//---------------------------------------------------------------------------//
// Reactor source
//---------------------------------------------------------------------------//
enum class SpectrumShape {
  gaussian,      // truncated, renormalized Gaussian about E0
  monochromatic  // delta function at E0
};

struct ReactorSource {
  double rate_per_GW = 2e20;  // [s^-1 GW^-1]
  double power_GW = 4.5;
  double distance_m = 20.0;
  double E0_MeV = 2.6;
  double sigma_E_MeV = 0.75;
  SpectrumShape shape = SpectrumShape::gaussian;

  void validate() const;
};

struct EnergyInterval {
  double lo;
  double hi;
};

//! Antineutrino flux rate * P / (4 pi d^2) at the detector [cm^-2 s^-1].
double flux_at_detector(const ReactorSource& source);

//! [max(0.05, E0 - 4 sigma_E), E0 + 4 sigma_E] in MeV.
EnergyInterval spectrum_support(const ReactorSource& source);

/*!
 * Normalized spectral density S(E) [MeV^-1].
 *
 * Zero outside spectrum_support; the Gaussian is renormalized to unit area
 * over the truncated support. Only meaningful for the Gaussian shape.
 */
double spectrum_density(const ReactorSource& source, double E_MeV);

}  // namespace nuphase
