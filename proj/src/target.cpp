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

#include "nuphase/target.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "nuphase/errors.hpp"
#include "nuphase/units.hpp"

namespace nuphase {

namespace {

constexpr double g_per_mev = kg_per_mev * 1e3;
constexpr double min_spectrum_energy = 0.05;  // [MeV]
constexpr double support_half_width = 4.0;    // in units of sigma_E

}  // namespace

void Nuclide::validate() const {
  if (Z < 1 || N < 0) {
    throw InvalidInput("nuclide requires Z >= 1 and N >= 0");
  }
}

double weak_charge(const Nuclide& nuclide) {
  return (1.0 - 4.0 * constants.sin2_theta_W) * nuclide.Z + nuclide.N;
}

double nucleus_mass(const Nuclide& nuclide) {
  const double u = constants.u;
  const double Z = nuclide.Z;
  const double A = nuclide.Z + nuclide.N;
  // Atomic mass minus electrons, plus total electron binding energy.
  return A * u - 0.00054858 * Z * u
         + (14.4381 * std::pow(Z, 2.39) + 1.55468e-6 * std::pow(Z, 5.35)) * 1e-6;
}

TargetCrystal::TargetCrystal(Nuclide nuclide, double n_atoms, double mass_density_g_cm3)
    : nuclide_(nuclide), n_atoms_(n_atoms), density_(mass_density_g_cm3) {
  nuclide_.validate();
  if (!(n_atoms > 0.0) || !std::isfinite(n_atoms)) {
    throw InvalidInput("crystal atom count must be positive");
  }
  if (!(mass_density_g_cm3 > 0.0) || !std::isfinite(mass_density_g_cm3)) {
    throw InvalidInput("crystal mass density must be positive");
  }
  m_nucl_ = nucleus_mass(nuclide_);
}

double TargetCrystal::mass_g() const { return n_atoms_ * m_nucl_ * g_per_mev; }

double TargetCrystal::volume_m3() const { return mass_g() / density_ * 1e-6; }

double TargetCrystal::radius_m() const {
  return std::cbrt(3.0 * volume_m3() / (4.0 * pi));
}

void ReactorSource::validate() const {
  if (!(rate_per_GW >= 0.0) || !(power_GW >= 0.0)) {
    throw InvalidInput("reactor rate and power must be non-negative");
  }
  if (!(distance_m > 0.0)) {
    throw InvalidInput("reactor distance must be positive");
  }
  if (!(E0_MeV > 0.0)) {
    throw InvalidInput("mean antineutrino energy must be positive");
  }
  if (shape == SpectrumShape::gaussian && !(sigma_E_MeV > 0.0)) {
    throw InvalidInput("spectral width must be positive");
  }
}

double flux_at_detector(const ReactorSource& source) {
  if (!(source.distance_m > 0.0)) {
    throw InvalidInput("reactor distance must be positive");
  }
  const double d_cm = source.distance_m * 100.0;
  return source.rate_per_GW * source.power_GW / (4.0 * pi * d_cm * d_cm);
}

EnergyInterval spectrum_support(const ReactorSource& source) {
  if (source.shape == SpectrumShape::monochromatic) {
    return {source.E0_MeV, source.E0_MeV};
  }
  const double half = support_half_width * source.sigma_E_MeV;
  return {std::max(min_spectrum_energy, source.E0_MeV - half), source.E0_MeV + half};
}

double spectrum_density(const ReactorSource& source, double E_MeV) {
  if (source.shape != SpectrumShape::gaussian) {
    throw InvalidInput("a monochromatic spectrum has no density");
  }
  const auto [lo, hi] = spectrum_support(source);
  if (E_MeV < lo || E_MeV > hi) {
    return 0.0;
  }
  const double s = source.sigma_E_MeV;
  const double z = (E_MeV - source.E0_MeV) / s;
  const double root2 = std::numbers::sqrt2;
  const double mass = 0.5 * (std::erf((hi - source.E0_MeV) / (s * root2))
                             - std::erf((lo - source.E0_MeV) / (s * root2)));
  return std::exp(-0.5 * z * z) / (s * std::sqrt(2.0 * pi) * mass);
}

}  // namespace nuphase
