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
#include <limits>

#include <doctest.h>

#include "nuphase/errors.hpp"
#include "nuphase/units.hpp"
#include "test_support.hpp"

using namespace nuphase;
using doctest::Approx;

TEST_CASE("constants carry the pinned values") {
  CHECK(constants.G_F == 1.1664e-11);
  CHECK(constants.u == 931.5);
  CHECK(constants.sin2_theta_W == 0.23857);
  CHECK(constants.hbar_c == Approx(197.3269804));
  CHECK(constants.hbar == Approx(6.582119569e-22));
}

TEST_CASE("length, time and c conversions are mutually consistent") {
  const double c = constants.mev_inv_to_m * constants.s_to_mev_inv;
  CHECK(testing::rel_diff(c, 299792458.0) < 1e-6);
  CHECK(testing::rel_diff(constants.mev_inv2_to_cm2, testing::hbar_c_cm * testing::hbar_c_cm)
        < 1e-12);
}

TEST_CASE("to_natural examples") {
  CHECK(to_natural(1e-14, UnitKind::length) == Approx(1e-14 / testing::hbar_c_m).epsilon(1e-12));
  CHECK(to_natural(1e-14, UnitKind::length) == Approx(5.068e-2).epsilon(1e-3));
  CHECK(to_natural(0.0, UnitKind::length) == 0.0);
  CHECK(to_natural(1.0, UnitKind::time) == Approx(1.519e21).epsilon(1e-3));
  CHECK(to_natural(1.0, UnitKind::time) == Approx(1.0 / 6.582119569e-22).epsilon(1e-12));
  CHECK(to_natural(1.602176634e-13, UnitKind::energy) == Approx(1.0).epsilon(1e-12));
  CHECK(to_natural(1.0, UnitKind::inverse_time) == Approx(6.582119569e-22).epsilon(1e-12));
  CHECK(to_natural(1e-4, UnitKind::area) == Approx(1.0 / 3.8938e-22).epsilon(1e-4));
  // 1 u in kg back to MeV: 931.494 MeV from CODATA (not the pinned 931.5).
  CHECK(to_natural(1.66053906660e-27, UnitKind::mass) == Approx(931.494).epsilon(1e-5));
}

TEST_CASE("unit tags parse, unknown tags are rejected") {
  CHECK(parse_unit_kind("length") == UnitKind::length);
  CHECK(parse_unit_kind("area") == UnitKind::area);
  CHECK(parse_unit_kind("time") == UnitKind::time);
  CHECK(parse_unit_kind("energy") == UnitKind::energy);
  CHECK(parse_unit_kind("mass") == UnitKind::mass);
  CHECK(parse_unit_kind("inverse_time") == UnitKind::inverse_time);
  CHECK_THROWS_AS(parse_unit_kind("furlong"), InvalidInput);
  CHECK_THROWS_AS(parse_unit_kind(""), InvalidInput);
}

TEST_CASE("round trips are identity to 1e-12 (property)") {
  const UnitKind kinds[] = {UnitKind::length, UnitKind::area,   UnitKind::time,
                            UnitKind::energy, UnitKind::mass,   UnitKind::inverse_time};
  for (int trial = 0; trial < 2000; ++trial) {
    const double v = (trial % 2 ? 1.0 : -1.0) * testing::log_uniform(1e-40, 1e40);
    for (auto kind : kinds) {
      CHECK(std::abs(to_si(to_natural(v, kind), kind) - v) <= 1e-12 * std::abs(v));
      CHECK(std::abs(to_natural(to_si(v, kind), kind) - v) <= 1e-12 * std::abs(v));
    }
  }
}

TEST_CASE("cross_section_to_cm2 examples and errors") {
  CHECK(cross_section_to_cm2(1.0) == Approx(3.8938e-22).epsilon(1e-4));
  CHECK(cross_section_to_cm2(0.0) == 0.0);
  CHECK(cross_section_to_cm2(1.233e-18) == Approx(4.80e-40).epsilon(1e-2));
  CHECK_THROWS_AS(cross_section_to_cm2(-1e-30), InvalidInput);
  CHECK_THROWS_AS(cross_section_to_cm2(std::numeric_limits<double>::quiet_NaN()), InvalidInput);
}

TEST_CASE("length helpers invert each other") {
  CHECK(length_to_m(length_to_natural(3.7e-12)) == Approx(3.7e-12).epsilon(1e-15));
  CHECK(length_to_m(1.0) == testing::hbar_c_m);
}
