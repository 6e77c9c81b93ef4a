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

#pragma once

#include "fuota/phy.hpp"

namespace fuota {

/// Battery and traffic profile of an end device between updates.
struct DutyProfile {
  double battery_mah = 1200.0;
  double updates_per_month = 1.0;
  double uplink_period_hr = 0.5;
  long uplink_payload_bytes = 50;
  int uplink_sf = 12;
  double tx_current_ma = 83.0;
  double rx_current_ma = 38.0;
  double sleep_current_ma = 0.045;

  void validate() const;
  bool operator==(const DutyProfile&) const = default;
};

struct LifetimeBreakdown {
  double tx_hours_per_year = 0.0;
  double rx_hours_per_year = 0.0;
  double sleep_hours_per_year = 0.0;
  double years = 0.0;
};

/// Linear-battery lifetime with `rx_hours_per_update` hours spent receiving
/// each firmware update. Throws ConfigError when transmit plus receive time
/// exceeds a year.
LifetimeBreakdown lifetime_breakdown(const DutyProfile& profile,
                                     double rx_hours_per_update,
                                     const PhyProfile& phy);
double battery_lifetime_years(const DutyProfile& profile,
                              double rx_hours_per_update,
                              const PhyProfile& phy);

/// Receive time implied by a receive-energy ledger at constant draw p_r.
double receive_hours(double receive_energy_j, double rx_power_w);

}  // namespace fuota
