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

#include "nuphase/cenns.hpp"

#include <cmath>
#include <string>

#include "nuphase/errors.hpp"
#include "nuphase/quadrature.hpp"
#include "nuphase/units.hpp"

namespace nuphase {

namespace {

constexpr double static_limit_ratio = 1e-2;  // E_nu / m_nucl
constexpr double endpoint_slack = 1e-9;
constexpr unsigned max_refinements = 20;

// Normalization of |M|^2 relative to G_F^2 Q_W^2 m^2 E^2 (1 + cos theta).
constexpr double amplitude_norm = 4.0;

void check_validity(double E_MeV) {
  if (E_MeV > max_valid_energy_MeV) {
    throw ValidityError("E = " + std::to_string(E_MeV)
                        + " MeV exceeds 50 MeV: form factor F=1 assumption broken");
  }
}

double flat_prefactor(const ScatteringAmplitudeModel& model) {
  const double g = constants.G_F;
  return g * g * model.Q_W * model.Q_W * model.m_nucl / (4.0 * pi);
}

// 1 - T/E - m T / (2 E^2); may round slightly negative at T_max.
double kinematic_bracket(double m, double E, double T) {
  return 1.0 - T / E - m * T / (2.0 * E * E);
}

}  // namespace

ScatteringAmplitudeModel ScatteringAmplitudeModel::from_nuclide(const Nuclide& nuclide) {
  nuclide.validate();
  return {weak_charge(nuclide), nucleus_mass(nuclide), FormFactorMode::unity};
}

RecoilKinematics::RecoilKinematics(double E_nu_MeV, double m_nucl_MeV)
    : E_nu(E_nu_MeV), m_nucl(m_nucl_MeV) {
  if (!(m_nucl > 0.0)) {
    throw InvalidInput("nucleus mass must be positive");
  }
  if (!(E_nu > 0.0) || !(E_nu < static_limit_ratio * m_nucl)) {
    throw InvalidInput("neutrino energy must satisfy 0 < E < 1e-2 m_nucl");
  }
}

double max_recoil_energy(const RecoilKinematics& kin) {
  const double m = kin.m_nucl;
  const double E = kin.E_nu;
  return 2.0 * m * E * E / ((m + E) * (m + E) - E * E);
}

double recoil_energy(const RecoilKinematics& kin, double theta_recoil) {
  if (!(theta_recoil >= 0.0 && theta_recoil <= 0.5 * pi)) {
    throw InvalidInput("recoil angle must lie in [0, pi/2]");
  }
  const double m = kin.m_nucl;
  const double E = kin.E_nu;
  const double c = std::cos(theta_recoil);
  const double c2 = c * c;
  return 2.0 * m * E * E * c2 / ((m + E) * (m + E) - E * E * c2);
}

double dsigma_dT(const ScatteringAmplitudeModel& model, double E_MeV, double T_MeV) {
  check_validity(E_MeV);
  const RecoilKinematics kin(E_MeV, model.m_nucl);
  const double t_max = max_recoil_energy(kin);
  if (!(T_MeV >= 0.0) || T_MeV > t_max * (1.0 + endpoint_slack)) {
    throw InvalidInput("recoil energy outside [0, T_max]");
  }
  const double bracket = kinematic_bracket(model.m_nucl, E_MeV, T_MeV);
  return bracket > 0.0 ? flat_prefactor(model) * bracket : 0.0;
}

CrossSectionIntegral sigma_total_detailed(const ScatteringAmplitudeModel& model,
                                          double E_MeV, double rel_tol) {
  check_validity(E_MeV);
  CrossSectionIntegral out;
  if (E_MeV == 0.0) {
    return out;
  }
  const RecoilKinematics kin(E_MeV, model.m_nucl);
  const double t_max = max_recoil_energy(kin);
  const double prefactor = flat_prefactor(model);

  std::size_t clamped = 0;
  auto integrand = [&](double T) {
    const double bracket = kinematic_bracket(model.m_nucl, E_MeV, T);
    if (bracket < 0.0) {
      ++clamped;
      return 0.0;
    }
    return prefactor * bracket;
  };
  auto estimate = [&](unsigned level) {
    clamped = 0;
    return quad::composite<quad::GL64>(integrand, 0.0, t_max, std::size_t{1} << level);
  };
  const auto refined = quad::refine_until_stable(estimate, rel_tol, max_refinements);
  if (!refined.converged) {
    throw NumericalError("total cross section did not converge", refined.rel_change,
                         0);
  }
  out.value = refined.value;
  out.rel_change = refined.rel_change;
  out.levels = refined.levels;
  out.clamped_nodes = clamped;
  return out;
}

double sigma_total(const ScatteringAmplitudeModel& model, double E_MeV) {
  if (E_MeV < 0.0) {
    throw InvalidInput("neutrino energy must be non-negative");
  }
  return sigma_total_detailed(model, E_MeV).value;
}

double amplitude_sq_cos(const ScatteringAmplitudeModel& model, double E_MeV,
                        double cos_theta) {
  const double g = constants.G_F;
  const double m = model.m_nucl;
  return amplitude_norm * g * g * model.Q_W * model.Q_W * m * m * E_MeV * E_MeV
         * (1.0 + cos_theta);
}

double amplitude_sq(const ScatteringAmplitudeModel& model, double E_MeV, double theta_nu) {
  if (!(theta_nu >= 0.0 && theta_nu <= pi)) {
    throw InvalidInput("neutrino scattering angle must lie in [0, pi]");
  }
  return amplitude_sq_cos(model, E_MeV, std::cos(theta_nu));
}

double sigma_static(const ScatteringAmplitudeModel& model, double E_MeV) {
  if (!(E_MeV > 0.0)) {
    throw InvalidInput("neutrino energy must be positive");
  }
  // (1 / 64 pi^2 m^2) integral dOmega |M|^2 with integral dOmega (1 + cos) = 4 pi.
  const double g = constants.G_F;
  return amplitude_norm * g * g * model.Q_W * model.Q_W * E_MeV * E_MeV / (16.0 * pi);
}

namespace {

template <class Sigma>
double average_over_spectrum(const ReactorSource& source, Sigma&& sigma, const char* what) {
  source.validate();
  if (source.shape == SpectrumShape::monochromatic) {
    return sigma(source.E0_MeV);
  }
  const auto [lo, hi] = spectrum_support(source);
  auto integrand = [&](double E) { return spectrum_density(source, E) * sigma(E); };
  auto estimate = [&](unsigned level) {
    return quad::composite<quad::GL32>(integrand, lo, hi, std::size_t{1} << level);
  };
  const auto refined = quad::refine_until_stable(estimate, 1e-10, 8);
  if (!refined.converged) {
    throw NumericalError(std::string(what) + " did not converge", refined.rel_change, 0);
  }
  return refined.value;
}

}  // namespace

double spectrum_averaged_sigma(const ScatteringAmplitudeModel& model,
                               const ReactorSource& source) {
  return average_over_spectrum(
      source, [&](double E) { return sigma_total(model, E); },
      "spectrum-averaged cross section");
}

double spectrum_averaged_static_sigma(const ScatteringAmplitudeModel& model,
                                      const ReactorSource& source) {
  return average_over_spectrum(
      source,
      [&](double E) {
        check_validity(E);
        return sigma_static(model, E);
      },
      "spectrum-averaged static cross section");
}

}  // namespace nuphase
