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

#include <array>
#include <complex>
#include <string_view>

#include "nuphase/superposition.hpp"
#include "nuphase/target.hpp"

namespace nuphase {

using Complex = std::complex<double>;

//---------------------------------------------------------------------------//
/*!
 * Two-level density matrix in the {|0>, |1>} basis.
 *
 * After recombination |0> and |1> are the spin states that carried the x0
 * and x1 branches. Elements are stored row-major.
 */
class QubitState {
 public:
  using Matrix = std::array<Complex, 4>;

  //! Validates trace, Hermiticity and positivity to 1e-12.
  explicit QubitState(const Matrix& rho);

  //! [[a, A e^{-i phi}], [A e^{i phi}, b]]
  static QubitState from_coherence(double a, double b, double amplitude, double phase);

  Complex operator()(int row, int col) const { return rho_[2 * row + col]; }
  const Matrix& matrix() const { return rho_; }

  double population(int level) const { return rho_[3 * level].real(); }
  double trace() const;
  //! Largest |rho_ij - conj(rho_ji)|.
  double hermiticity_error() const;
  //! Eigenvalues in ascending order.
  std::array<double, 2> eigenvalues() const;

 private:
  struct Unchecked {};
  QubitState(const Matrix& rho, Unchecked) : rho_(rho) {}

  friend QubitState apply_unitary(const QubitState&, const Matrix&);
  friend QubitState apply_unitary_exact(const Matrix&);

  Matrix rho_;
};

//! U rho U^dagger.
QubitState apply_unitary(const QubitState& state, const QubitState::Matrix& u);

//! H rho H with H = [[1, 1], [1, -1]] / sqrt(2).
QubitState apply_hadamard(const QubitState& state);

//! S rho S^dagger with S = diag(1, i).
QubitState apply_phase_gate(const QubitState& state);

//---------------------------------------------------------------------------//
// Interferometric readout
//---------------------------------------------------------------------------//
enum class ReadoutMode {
  cos,  // Hadamard only: p(0) - p(1) = 2 A cos(phi)
  sin   // phase gate then Hadamard: p(1) - p(0) = 2 A sin(phi)
};

/*!
 * Population difference measured on the recombined spin at time t.
 *
 * Evaluated by running rho_f through the gate sequence; recombination is
 * taken as ideal so rho_f inherits (A, phi) from the trajectory.
 */
double readout_signal(const CoherenceTrajectory& traj, double t, ReadoutMode mode);

//! Probability of the |-> outcome, 1/2 - A cos(phi).
double click_probability(const CoherenceTrajectory& traj, double t);

struct ScatteringCount {
  double mean = 0.0;
  double p_geq_2 = 0.0;  // Poisson probability of two or more events
};

//! Expected scatterings k F1 N sigma_bar t, k from the convention.
ScatteringCount expected_scatterings(const ReactorSource& source, const TargetCrystal& target,
                                     double t, PrefactorConvention convention);

//! Poisson statistics for a given mean count.
ScatteringCount poisson_count(double mean);

//---------------------------------------------------------------------------//
/*!
 * Detector-array trade-off: n^4 crystals of mass m/n running for tau/n each
 * accrue phi/n^2 per crystal, which shot-noise averaging recovers.
 */
struct ArrayScaling {
  int n = 1;
  double mass_factor = 1.0;
  double duration_factor = 1.0;
  double per_crystal_phase_factor = 1.0;
  long long crystal_count = 1;
  double phase_precision = 1.0;  // standard error of the mean phase, relative
};

ArrayScaling array_scaling(int n);

}  // namespace nuphase
