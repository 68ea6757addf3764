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

#include "nuphase/readout.hpp"

#include <algorithm>
#include <cmath>

#include "nuphase/cenns.hpp"
#include "nuphase/errors.hpp"
#include "nuphase/units.hpp"

namespace nuphase {

namespace {

constexpr double state_tolerance = 1e-12;

using Matrix = QubitState::Matrix;

Matrix multiply(const Matrix& a, const Matrix& b) {
  return {a[0] * b[0] + a[1] * b[2], a[0] * b[1] + a[1] * b[3],
          a[2] * b[0] + a[3] * b[2], a[2] * b[1] + a[3] * b[3]};
}

Matrix adjoint(const Matrix& a) {
  return {std::conj(a[0]), std::conj(a[2]), std::conj(a[1]), std::conj(a[3])};
}

}  // namespace

// Wraps the output of a unitary conjugation, which preserves the state
// invariants up to rounding.
QubitState apply_unitary_exact(const Matrix& rho) {
  return QubitState(rho, QubitState::Unchecked{});
}

QubitState::QubitState(const Matrix& rho) : rho_(rho) {
  if (std::abs(trace() - 1.0) > state_tolerance) {
    throw InvalidInput("density matrix trace must be 1");
  }
  if (std::abs(rho_[0].imag()) > state_tolerance || std::abs(rho_[3].imag()) > state_tolerance
      || hermiticity_error() > state_tolerance) {
    throw InvalidInput("density matrix must be Hermitian");
  }
  if (eigenvalues()[0] < -state_tolerance) {
    throw InvalidInput("density matrix must be positive semidefinite");
  }
}

QubitState QubitState::from_coherence(double a, double b, double amplitude, double phase) {
  const Complex off = std::polar(amplitude, -phase);
  return QubitState(Matrix{Complex(a), off, std::conj(off), Complex(b)});
}

double QubitState::trace() const { return rho_[0].real() + rho_[3].real(); }

double QubitState::hermiticity_error() const {
  return std::max({std::abs(rho_[1] - std::conj(rho_[2])), std::abs(rho_[0].imag()),
                   std::abs(rho_[3].imag())});
}

std::array<double, 2> QubitState::eigenvalues() const {
  const double a = rho_[0].real();
  const double d = rho_[3].real();
  const double mean = 0.5 * (a + d);
  const double radius = std::hypot(0.5 * (a - d), std::abs(rho_[1]));
  return {mean - radius, mean + radius};
}

QubitState apply_unitary(const QubitState& state, const Matrix& u) {
  return apply_unitary_exact(multiply(multiply(u, state.rho_), adjoint(u)));
}

// Both gates are expanded element-wise so that the 1/2 from H H^dagger is an
// exact factor; the result equals apply_unitary with the same matrix.
QubitState apply_hadamard(const QubitState& state) {
  const auto& m = state.matrix();
  const Complex sum = m[0] + m[3];
  const Complex diff = m[0] - m[3];
  const Complex off = m[1] + m[2];
  const Complex skew = m[1] - m[2];
  return apply_unitary_exact(
      {0.5 * (sum + off), 0.5 * (diff - skew), 0.5 * (diff + skew), 0.5 * (sum - off)});
}

QubitState apply_phase_gate(const QubitState& state) {
  const auto& m = state.matrix();
  const Complex i(0.0, 1.0);
  return apply_unitary_exact({m[0], -i * m[1], i * m[2], m[3]});
}

double readout_signal(const CoherenceTrajectory& traj, double t, ReadoutMode mode) {
  const auto point = traj.at(t);
  const auto rho = QubitState::from_coherence(0.5, 0.5, point.amplitude, point.phase);
  if (mode == ReadoutMode::cos) {
    const auto out = apply_hadamard(rho);
    return out.population(0) - out.population(1);
  }
  const auto out = apply_hadamard(apply_phase_gate(rho));
  return out.population(1) - out.population(0);
}

double click_probability(const CoherenceTrajectory& traj, double t) {
  const auto point = traj.at(t);
  const auto rho = QubitState::from_coherence(0.5, 0.5, point.amplitude, point.phase);
  // |-> maps to |1> under the Hadamard.
  return apply_hadamard(rho).population(1);
}

ScatteringCount poisson_count(double mean) {
  if (!(mean >= 0.0)) {
    throw InvalidInput("mean count must be non-negative");
  }
  // 1 - e^-mu (1 + mu), arranged to avoid cancellation for small mu.
  return {mean, -std::expm1(-mean) - mean * std::exp(-mean)};
}

ScatteringCount expected_scatterings(const ReactorSource& source, const TargetCrystal& target,
                                     double t, PrefactorConvention convention) {
  if (!(t >= 0.0)) {
    throw InvalidInput("time must be non-negative");
  }
  const auto model = ScatteringAmplitudeModel::from_nuclide(target.nuclide());
  const double rate = prefactor_multiplier(convention) * flux_at_detector(source)
                      * target.n_atoms()
                      * cross_section_to_cm2(spectrum_averaged_sigma(model, source));
  return poisson_count(rate * t);
}

ArrayScaling array_scaling(int n) {
  if (n < 1) {
    throw InvalidInput("array scaling factor must be >= 1");
  }
  const double nd = n;
  const long long n2 = static_cast<long long>(n) * n;
  ArrayScaling out;
  out.n = n;
  out.mass_factor = 1.0 / nd;
  out.duration_factor = 1.0 / nd;
  out.per_crystal_phase_factor = 1.0 / static_cast<double>(n2);
  out.crystal_count = n2 * n2;
  // shot noise: 1 / sqrt(n^4)
  out.phase_precision = 1.0 / static_cast<double>(n2);
  return out;
}

}  // namespace nuphase
