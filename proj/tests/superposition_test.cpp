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

#include <cmath>
#include <vector>

#include <doctest.h>

#include "nuphase/cenns.hpp"
#include "nuphase/errors.hpp"
#include "nuphase/superposition.hpp"
#include "nuphase/target.hpp"
#include "test_support.hpp"

using namespace nuphase;
using doctest::Approx;

namespace {

const Nuclide bi{83, 126};
const auto model = ScatteringAmplitudeModel::from_nuclide(bi);
const TargetCrystal crystal(bi, 5e21, 9.78);

SuperpositionConfig with_dx(double dx) {
  SuperpositionConfig cfg;
  cfg.delta_x_m = dx;
  cfg.sigma_c_m = std::min(1e-16, dx);
  return cfg;
}

ComplexRate rate_at(double dx, const ReactorSource& source = {},
                    PrefactorConvention convention = PrefactorConvention::paper) {
  return complex_rate(model, source, crystal, with_dx(dx), convention);
}

double flux_oracle() { return 2e20 * 4.5 / (4.0 * testing::pi * 2000.0 * 2000.0); }

// Weighted angular average <f>_{(1+c)/2} over c in [-1, 1].
template <class F>
double angular_average(F&& f) {
  return testing::simpson([&](double c) { return 0.5 * (1.0 + c) * f(c); }, -1.0, 1.0, 4000);
}

}  // namespace

TEST_CASE("gaussian kick examples") {
  const auto identity = gaussian_kick(0.0, 1e-14, 1e-16);
  CHECK(identity.phase_rad == 0.0);
  CHECK(identity.attenuation == 1.0);

  const double sigma = 1e-16 / testing::hbar_c_m;
  CHECK(sigma == Approx(5.068e-4).epsilon(1e-3));
  const auto k = gaussian_kick(5.2, 0.0, 1e-16);
  CHECK(k.attenuation == Approx(std::exp(-0.5 * 5.2 * 5.2 * sigma * sigma)).epsilon(1e-15));
  CHECK(1.0 - k.attenuation == Approx(3.47e-6).epsilon(2e-3));

  const auto p = gaussian_kick(1.0, 1e-14, 1e-16);
  CHECK(p.phase_rad == Approx(-5.068e-2).epsilon(1e-3));
  CHECK(p.phase_rad == Approx(-1e-14 / testing::hbar_c_m).epsilon(1e-14));

  CHECK_THROWS_AS(gaussian_kick(1.0, 0.0, 0.0), InvalidInput);
}

TEST_CASE("attenuation stays in (0, 1] (property)") {
  for (int trial = 0; trial < 1000; ++trial) {
    const auto k = gaussian_kick(testing::uniform(-100.0, 100.0), testing::uniform(-1e-12, 1e-12),
                                 testing::log_uniform(1e-19, 1e-14));
    CHECK(k.attenuation > 0.0);
    CHECK(k.attenuation <= 1.0);
  }
}

TEST_CASE("branch phase difference") {
  const SuperpositionConfig cfg;
  CHECK(branch_phase_difference(5.2, cfg) == Approx(0.2635).epsilon(1e-3));
  CHECK(branch_phase_difference(0.0, cfg) == 0.0);
  SuperpositionConfig doubled = cfg;
  doubled.delta_x_m *= 2.0;
  CHECK(branch_phase_difference(5.2, doubled)
        == Approx(2.0 * branch_phase_difference(5.2, cfg)).epsilon(1e-15));
}

TEST_CASE("superposition config validation") {
  SuperpositionConfig cfg;
  CHECK_NOTHROW(cfg.validate());
  cfg.delta_x_m = 0.0;
  CHECK_THROWS_AS(cfg.validate(), InvalidInput);
  cfg = {};
  cfg.sigma_c_m = 2e-14;
  CHECK_THROWS_AS(cfg.validate(), InvalidInput);
  cfg = {};
  cfg.sigma_c_m = 0.0;
  CHECK_THROWS_AS(cfg.validate(), InvalidInput);
  cfg = {};
  cfg.beam_angle_rad = 1.6;
  CHECK_THROWS_AS(cfg.validate(), InvalidInput);
  CHECK_THROWS_AS(branch_phase_difference(1.0, cfg), InvalidInput);
}

TEST_CASE("prefactor conventions") {
  CHECK(parse_prefactor_convention("paper") == PrefactorConvention::paper);
  CHECK(parse_prefactor_convention("unit") == PrefactorConvention::unit);
  CHECK_THROWS_AS(parse_prefactor_convention("half"), InvalidInput);
  CHECK(to_string(PrefactorConvention::paper) == "paper");
  CHECK(to_string(PrefactorConvention::unit) == "unit");
  CHECK(prefactor_multiplier(PrefactorConvention::paper) == 2.0);
  CHECK(prefactor_multiplier(PrefactorConvention::unit) == 1.0);
}

TEST_CASE("rate at the reference parameters") {
  const auto eval = complex_rate_detailed(model, ReactorSource{}, crystal, SuperpositionConfig{});
  CHECK(eval.rel_change <= 1e-8);
  CHECK(eval.evaluations > 0);
  // Reference values from an independent adaptive-quadrature evaluation.
  CHECK(eval.rate.phase_rate == Approx(9.3859e-6).epsilon(1e-4));
  CHECK(eval.rate.decay == Approx(7.5308e-7).epsilon(1e-4));
  CHECK(eval.rate.phase_rate > 5e-6);
  CHECK(eval.rate.phase_rate < 2e-5);

  const auto unit = rate_at(1e-14, {}, PrefactorConvention::unit);
  CHECK(unit.decay == Approx(0.5 * eval.rate.decay).epsilon(1e-14));
  CHECK(unit.phase_rate == Approx(0.5 * eval.rate.phase_rate).epsilon(1e-14));
}

TEST_CASE("zero separation gives zero rate") {
  SuperpositionConfig cfg;
  cfg.delta_x_m = 0.0;
  const auto r = complex_rate(model, ReactorSource{}, crystal, cfg);
  CHECK(r.decay == 0.0);
  CHECK(r.phase_rate == 0.0);
  cfg.delta_x_m = -1e-14;
  CHECK_THROWS_AS(complex_rate(model, ReactorSource{}, crystal, cfg), InvalidInput);
}

TEST_CASE("large separation saturates at the total scattering rate") {
  const ReactorSource source;
  const double sat = saturation_decay_rate(model, source, crystal, PrefactorConvention::paper);
  // Static cross section G^2 Q^2 E^2 / 4 pi averaged by Simpson over the
  // Gaussian truncated to [0.05, E0 + 4 sigma] and renormalized.
  const double s2 = 0.75 * 0.75;
  auto gauss = [&](double E) { return std::exp(-(E - 2.6) * (E - 2.6) / (2.0 * s2)); };
  const double lo = 0.05;
  const double hi = 2.6 + 4.0 * 0.75;
  const double avg_E2 = testing::simpson([&](double E) { return gauss(E) * E * E; }, lo, hi)
                        / testing::simpson(gauss, lo, hi);
  const double sigma_static_cm2 = testing::G_F * testing::G_F * testing::Q_W_bi * testing::Q_W_bi
                                  * avg_E2 / (4.0 * testing::pi) * testing::hbar_c_cm
                                  * testing::hbar_c_cm;
  CHECK(sat == Approx(2.0 * flux_oracle() * 5e21 * sigma_static_cm2).epsilon(1e-6));
  CHECK(sat == Approx(9.3132e-5).epsilon(1e-4));
  const auto r = rate_at(1e-8);
  CHECK(testing::rel_diff(r.decay, sat) < 0.05);
  CHECK(saturation_decay_rate(model, source, crystal, PrefactorConvention::unit)
        == Approx(0.5 * sat).epsilon(1e-15));
}

TEST_CASE("small-separation scaling") {
  const auto base = rate_at(1e-14);
  for (double s : {0.25, 0.5}) {
    const auto r = rate_at(s * 1e-14);
    CHECK(testing::rel_diff(r.phase_rate / base.phase_rate, s) < 0.02);
    CHECK(testing::rel_diff(r.decay / base.decay, s * s) < 0.05);
  }
}

TEST_CASE("decay is monotone and bounded by saturation (property)") {
  const ReactorSource source;
  const double sat = saturation_decay_rate(model, source, crystal, PrefactorConvention::paper);
  double previous = 0.0;
  for (double dx = 1e-15; dx <= 1e-10; dx *= 2.5) {
    const auto r = rate_at(dx);
    CHECK(r.decay >= previous);
    CHECK(r.decay <= sat * (1.0 + 1e-9));
    CHECK(r.decay >= 0.0);
    previous = r.decay;
  }
}

TEST_CASE("monochromatic rate matches the one-dimensional angular oracle") {
  ReactorSource line;
  line.shape = SpectrumShape::monochromatic;
  for (double dx : {2.5e-15, 1e-14, 4e-14, 1e-13}) {
    const double E = 2.6;
    const double arg = E * dx / testing::hbar_c_m;
    const double sigma_cm2 = testing::G_F * testing::G_F * testing::Q_W_bi * testing::Q_W_bi * E
                             * E / (4.0 * testing::pi) * testing::hbar_c_cm * testing::hbar_c_cm;
    const double scale = 2.0 * flux_oracle() * 5e21 * sigma_cm2;
    const double phase = scale * angular_average([&](double c) { return std::sin(arg * (1.0 - c)); });
    const double decay =
        scale * angular_average([&](double c) { return 1.0 - std::cos(arg * (1.0 - c)); });
    const auto r = complex_rate(model, line, crystal, with_dx(dx));
    CHECK(testing::rel_diff(r.phase_rate, phase) < 5e-3);
    CHECK(testing::rel_diff(r.decay, decay) < 5e-3);
  }
}

TEST_CASE("rate is invariant under azimuthal rotation of the node set (property)") {
  SuperpositionConfig cfg;
  cfg.beam_angle_rad = 0.7;
  QuadratureSettings settings;
  const auto reference = complex_rate(model, ReactorSource{}, crystal, cfg,
                                      PrefactorConvention::paper, settings);
  for (int trial = 0; trial < 8; ++trial) {
    settings.azimuth_offset = testing::uniform(0.0, 2.0 * testing::pi);
    const auto r = complex_rate(model, ReactorSource{}, crystal, cfg, PrefactorConvention::paper,
                                settings);
    CHECK(r.phase_rate == Approx(reference.phase_rate).epsilon(1e-7));
    CHECK(r.decay == Approx(reference.decay).epsilon(1e-7));
  }
}

TEST_CASE("tilted beam reduces the phase rate") {
  SuperpositionConfig along;
  SuperpositionConfig tilted;
  tilted.beam_angle_rad = 0.7;
  SuperpositionConfig transverse;
  transverse.beam_angle_rad = 0.5 * testing::pi;
  const auto a = complex_rate(model, ReactorSource{}, crystal, along);
  const auto b = complex_rate(model, ReactorSource{}, crystal, tilted);
  const auto c = complex_rate(model, ReactorSource{}, crystal, transverse);
  CHECK(b.phase_rate < a.phase_rate);
  CHECK(b.phase_rate > 0.0);
  // A beam transverse to the axis kicks both ways equally: no net phase.
  CHECK(std::abs(c.phase_rate) < 1e-9 * a.phase_rate);
  CHECK(c.decay > 0.0);
}

TEST_CASE("quadrature failure is reported with diagnostics") {
  QuadratureSettings settings;
  settings.rel_tol = 1e-300;
  settings.max_refinements = 1;
  try {
    complex_rate(model, ReactorSource{}, crystal, SuperpositionConfig{}, PrefactorConvention::paper,
                 settings);
    FAIL("expected a NumericalError");
  } catch (const NumericalError& e) {
    CHECK(e.evaluations() > 0);
    CHECK(e.rel_change() > 1e-300);
  }
  settings = {};
  settings.n_theta = 0;
  CHECK_THROWS_AS(complex_rate(model, ReactorSource{}, crystal, SuperpositionConfig{},
                               PrefactorConvention::paper, settings),
                  InvalidInput);
}

TEST_CASE("coherence evolution") {
  const ComplexRate rate{5.8e-7, 9.4e-6};
  const auto grid = uniform_time_grid(3e5, 301);
  CHECK(grid.front() == 0.0);
  CHECK(grid.back() == 3e5);
  CHECK(grid[100] == Approx(1e5));

  const auto traj = evolve_coherence(rate, grid);
  CHECK(traj.amplitude[0] == 0.5);
  CHECK(traj.phase[0] == 0.0);
  CHECK(traj.at(1e5).amplitude / 0.5 == Approx(0.944).epsilon(1e-3));
  CHECK(traj.at(1e5).amplitude / 0.5 == Approx(std::exp(-0.058)).epsilon(1e-14));
  CHECK(traj.at(1e5).phase == Approx(0.94).epsilon(1e-14));
  CHECK_THROWS_AS(traj.at(-1.0), InvalidInput);
  CHECK_THROWS_AS(traj.at(3.1e5), InvalidInput);

  for (std::size_t i = 1; i < grid.size(); ++i) {
    CHECK(traj.amplitude[i] <= traj.amplitude[i - 1]);
    CHECK(traj.amplitude[i] >= 0.0);
    CHECK(traj.amplitude[i] <= 0.5);
    CHECK(traj.phase[i] > traj.phase[i - 1]);
  }

  const std::vector<double> late{1.0, 2.0};
  CHECK_THROWS_AS(evolve_coherence(rate, late), InvalidInput);
  const std::vector<double> unsorted{0.0, 2.0, 1.0};
  CHECK_THROWS_AS(evolve_coherence(rate, unsorted), InvalidInput);
  CHECK_THROWS_AS(uniform_time_grid(1.0, 1), InvalidInput);
}

TEST_CASE("reference trajectory at 1e5 s") {
  const auto rate = rate_at(1e-14);
  const auto grid = uniform_time_grid(3e5, 301);
  const auto traj = evolve_coherence(rate, grid);
  const auto p = traj.at(1e5);
  CHECK(p.phase >= 0.5);
  CHECK(p.phase <= 2.0);
  CHECK(p.amplitude / 0.5 >= 0.85);
}
