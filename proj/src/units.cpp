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

#include "nuphase/units.hpp"

#include <string>

#include "nuphase/errors.hpp"

namespace nuphase {

namespace {

// Multiplier taking one SI unit of the given kind to natural units.
double si_to_natural_factor(UnitKind kind) {
  const auto& k = constants;
  switch (kind) {
    case UnitKind::length:
      return 1.0 / k.mev_inv_to_m;
    case UnitKind::area:
      return 1.0 / (k.mev_inv_to_m * k.mev_inv_to_m);
    case UnitKind::time:
      return k.s_to_mev_inv;
    case UnitKind::energy:
      return 1.0 / k.MeV_to_J;
    case UnitKind::mass:
      return 1.0 / kg_per_mev;
    case UnitKind::inverse_time:
      return 1.0 / k.s_to_mev_inv;
  }
  throw InvalidInput("unknown unit kind");
}

}  // namespace

UnitKind parse_unit_kind(std::string_view tag) {
  if (tag == "length") return UnitKind::length;
  if (tag == "area") return UnitKind::area;
  if (tag == "time") return UnitKind::time;
  if (tag == "energy") return UnitKind::energy;
  if (tag == "mass") return UnitKind::mass;
  if (tag == "inverse_time") return UnitKind::inverse_time;
  throw InvalidInput("unknown unit tag '" + std::string(tag) + "'");
}

double to_natural(double si_value, UnitKind kind) {
  return si_value * si_to_natural_factor(kind);
}

double to_si(double natural_value, UnitKind kind) {
  return natural_value / si_to_natural_factor(kind);
}

double cross_section_to_cm2(double sigma_mev2) {
  if (!(sigma_mev2 >= 0.0)) {
    throw InvalidInput("cross section must be non-negative");
  }
  return sigma_mev2 * constants.mev_inv2_to_cm2;
}

}  // namespace nuphase
