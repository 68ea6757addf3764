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

#include <numbers>
#include <string_view>

namespace nuphase {

//---------------------------------------------------------------------------//
/*!
 * Physical constants.
 *
 * Everything inside the physics modules is expressed in natural units built
 * on the MeV (hbar = c = 1). SI values appear only at the configuration and
 * report boundary. G_F and u are the values used for the reference
 * calculation; the remaining constants are CODATA 2018.
 */
struct PhysicalConstants {
  double G_F = 1.1664e-11;          // [MeV^-2]
  double u = 931.5;                 // atomic mass unit [MeV]
  double hbar_c = 197.3269804;      // [MeV fm]
  double hbar = 6.582119569e-22;    // [MeV s]
  double sin2_theta_W = 0.23857;    // low-energy effective value
  double mu_B = 9.2740100783e-24;   // [J/T]
  double k_B = 1.380649e-23;        // [J/K]
  double c = 299792458.0;           // [m/s]
  double h = 6.62607015e-34;        // [J s]
  double hbar_si = 1.054571817e-34; // [J s]
  double mu_0 = 1.25663706212e-6;   // [T m/A]
  double MeV_to_J = 1.602176634e-13;
  double kg_per_u = 1.66053906660e-27;

  // Conversion triple: (MeV^-1 -> m) * (s -> MeV^-1) == c.
  double mev_inv_to_m = 1.973269804e-13;
  double mev_inv2_to_cm2 = 1.973269804e-11 * 1.973269804e-11;
  double s_to_mev_inv = 1.0 / 6.582119569e-22;
};

inline constexpr PhysicalConstants constants{};

inline constexpr double pi = std::numbers::pi;

//! Kilograms per MeV/c^2.
inline constexpr double kg_per_mev = constants.MeV_to_J / (constants.c * constants.c);

//---------------------------------------------------------------------------//
// SI <-> natural unit conversions
//---------------------------------------------------------------------------//
enum class UnitKind { length, area, time, energy, mass, inverse_time };

// Accepts "length", "area", "time", "energy", "mass", "inverse_time".
UnitKind parse_unit_kind(std::string_view tag);

/*!
 * Convert an SI value to natural units.
 *
 * length [m] -> MeV^-1, area [m^2] -> MeV^-2, time [s] -> MeV^-1,
 * energy [J] -> MeV, mass [kg] -> MeV, inverse_time [s^-1] -> MeV.
 */
double to_natural(double si_value, UnitKind kind);

//! Inverse of to_natural.
double to_si(double natural_value, UnitKind kind);

//! Cross section in MeV^-2 to cm^2; negative input is rejected.
double cross_section_to_cm2(double sigma_mev2);

//! Length in MeV^-1 to metres.
inline double length_to_m(double mev_inv) { return mev_inv * constants.mev_inv_to_m; }

//! Length in metres to MeV^-1.
inline double length_to_natural(double metres) { return metres / constants.mev_inv_to_m; }

}  // namespace nuphase
