// Copyright 2026 The fuota-sim Authors
//
// SPDX-License-Identifier: Apache-2.0
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "fuota/lifetime.hpp"

#include <cmath>

#include "fuota/errors.hpp"

namespace fuota {

namespace {
constexpr double kHoursPerYear = 365.0 * 24.0;
}

void DutyProfile::validate() const {
  if (!(battery_mah > 0.0)) throw ConfigError("must be > 0", "lifetime.duty.battery_mah");
  if (!(updates_per_month >= 0.0))
    throw ConfigError("must be >= 0", "lifetime.duty.updates_per_month");
  if (!(uplink_period_hr > 0.0))
    throw ConfigError("must be > 0", "lifetime.duty.uplink_period_hr");
  if (uplink_payload_bytes < 0)
    throw ConfigError("must be >= 0", "lifetime.duty.uplink_payload_bytes");
  if (uplink_sf < SfIndex::kMin || uplink_sf > SfIndex::kMax)
    throw ConfigError("must be in 7..12", "lifetime.duty.uplink_sf");
  if (!(tx_current_ma >= 0.0) || !(rx_current_ma >= 0.0) || !(sleep_current_ma >= 0.0))
    throw ConfigError("currents must be >= 0", "lifetime.duty.currents_ma");
}

LifetimeBreakdown lifetime_breakdown(const DutyProfile& profile, double rx_hours_per_update,
                                     const PhyProfile& phy) {
  profile.validate();
  if (!(rx_hours_per_update >= 0.0) || !std::isfinite(rx_hours_per_update))
    throw ConfigError("receive time per update must be finite and >= 0", "lifetime.rx_hours");

  LifetimeBreakdown b;
  const double airtime =
      frame_airtime(SfIndex(profile.uplink_sf), profile.uplink_payload_bytes, phy);
  b.tx_hours_per_year =
      std::isinf(profile.uplink_period_hr) ? 0.0 : 365.0 * (24.0 / profile.uplink_period_hr) * airtime / 3600.0;
  b.rx_hours_per_year = 12.0 * profile.updates_per_month * rx_hours_per_update;
  b.sleep_hours_per_year = kHoursPerYear - (b.tx_hours_per_year + b.rx_hours_per_year);
  if (!(b.sleep_hours_per_year >= 0.0))
    throw ConfigError("transmit and receive time exceed one year", "lifetime.duty");

  const double drain = profile.tx_current_ma * b.tx_hours_per_year +
                       profile.rx_current_ma * b.rx_hours_per_year +
                       profile.sleep_current_ma * b.sleep_hours_per_year;
  if (!(drain > 0.0)) throw NumericalError("zero battery drain");
  b.years = profile.battery_mah / drain;
  return b;
}

double battery_lifetime_years(const DutyProfile& profile, double rx_hours_per_update,
                              const PhyProfile& phy) {
  return lifetime_breakdown(profile, rx_hours_per_update, phy).years;
}

double receive_hours(double receive_energy_j, double rx_power_w) {
  if (!(rx_power_w > 0.0)) throw ConfigError("must be > 0", "phy.rx_power_w");
  return receive_energy_j / rx_power_w / 3600.0;
}

}  // namespace fuota
