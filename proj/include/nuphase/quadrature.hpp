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

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstddef>
#include <limits>
#include <numbers>
#include <span>

#include <boost/math/quadrature/gauss.hpp>

namespace nuphase::quad {

//---------------------------------------------------------------------------//
/*!
 * Fixed-order Gauss-Legendre rule on [-1, 1].
 *
 * Boost stores only the non-negative half of the symmetric node set; for even
 * orders there is no node at zero.
 */
template <unsigned Order>
struct GaussLegendre {
  static_assert(Order % 2 == 0, "only even orders are tabulated without a centre node");
  using table = boost::math::quadrature::gauss<double, Order>;

  static constexpr unsigned order = Order;
  static std::span<const double> abscissa() { return {table::abscissa().data(), table::abscissa().size()}; }
  static std::span<const double> weights() { return {table::weights().data(), table::weights().size()}; }
};

using GL32 = GaussLegendre<32>;
using GL64 = GaussLegendre<64>;

//---------------------------------------------------------------------------//
/*!
 * Composite rule: split [a, b] into equal panels and apply Rule on each.
 *
 * The summation order is fixed (panel by panel, node pairs outermost first),
 * so results are bitwise reproducible for a given panel count.
 */
template <class Rule, class F>
auto composite(F&& f, double a, double b, std::size_t panels) {
  using value_type = decltype(f(a));
  const auto x = Rule::abscissa();
  const auto w = Rule::weights();
  const double width = (b - a) / static_cast<double>(panels);
  const double half = 0.5 * width;

  value_type total{};
  for (std::size_t p = 0; p < panels; ++p) {
    const double mid = a + (static_cast<double>(p) + 0.5) * width;
    value_type panel_sum{};
    for (std::size_t i = 0; i < x.size(); ++i) {
      const double dx = half * x[i];
      panel_sum += w[i] * (f(mid - dx) + f(mid + dx));
    }
    total += half * panel_sum;
  }
  return total;
}

//! Trapezoid rule for a 2*pi-periodic integrand, nodes shifted by offset.
template <class F>
auto periodic_trapezoid(F&& f, std::size_t nodes, double offset) {
  using value_type = decltype(f(offset));
  const double step = 2.0 * std::numbers::pi / static_cast<double>(nodes);
  value_type total{};
  for (std::size_t i = 0; i < nodes; ++i) {
    total += f(offset + step * static_cast<double>(i));
  }
  return step * total;
}

//---------------------------------------------------------------------------//
//! Result of a refinement sequence.
template <class T>
struct Refined {
  T value{};
  double rel_change = std::numeric_limits<double>::infinity();
  unsigned levels = 0;
  bool converged = false;
};

inline double magnitude(double v) { return std::abs(v); }
inline double magnitude(std::complex<double> v) {
  return std::max(std::abs(v.real()), std::abs(v.imag()));
}

/*!
 * Evaluate estimate(level) for level = 0, 1, ... until two successive
 * estimates differ by at most rel_tol relative to the latest one.
 *
 * For complex values the test is applied to the larger of the two
 * components, so a small imaginary part is judged against the real part's
 * scale and vice versa. An estimate that is exactly zero at two levels
 * counts as converged.
 */
template <class Estimate>
auto refine_until_stable(Estimate&& estimate, double rel_tol, unsigned max_levels) {
  using value_type = decltype(estimate(0u));
  Refined<value_type> out;
  value_type previous = estimate(0u);
  for (unsigned level = 1; level <= max_levels; ++level) {
    const value_type current = estimate(level);
    const double scale = magnitude(current);
    const double change = magnitude(current - previous);
    out.value = current;
    out.levels = level;
    out.rel_change = scale > 0.0 ? change / scale : (change > 0.0 ? 1.0 : 0.0);
    if (out.rel_change <= rel_tol) {
      out.converged = true;
      return out;
    }
    previous = current;
  }
  return out;
}

}  // namespace nuphase::quad
