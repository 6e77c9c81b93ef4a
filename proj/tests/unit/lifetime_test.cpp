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

#include <gtest/gtest.h>

#include <limits>

#include "fuota/errors.hpp"
#include "fuota/lifetime.hpp"
#include "oracles.hpp"

namespace fuota {
namespace {

const PhyProfile& phy() {
  static const PhyProfile p = testing::reference_model().phy();
  return p;
}

TEST(Lifetime, EqualCurrentsGiveCommonFactor) {
  DutyProfile d;
  d.tx_current_ma = d.rx_current_ma = d.sleep_current_ma = 2.0;
  for (double rx : {0.0, 1.5, 40.0})
    EXPECT_NEAR(battery_lifetime_years(d, rx, phy()), d.battery_mah / (2.0 * 8760.0), 1e-12);
}

TEST(Lifetime, SleepOnlyLimit) {
  DutyProfile d;
  d.uplink_period_hr = std::numeric_limits<double>::infinity();
  const auto b = lifetime_breakdown(d, 0.0, phy());
  EXPECT_EQ(b.tx_hours_per_year, 0.0);
  EXPECT_EQ(b.rx_hours_per_year, 0.0);
  EXPECT_DOUBLE_EQ(b.years, d.battery_mah / (d.sleep_current_ma * 8760.0));
}

TEST(Lifetime, BreakdownFollowsTheDutyProfile) {
  DutyProfile d;
  const auto b = lifetime_breakdown(d, 2.0, phy());
  EXPECT_NEAR(b.tx_hours_per_year, 365.0 * 48.0 * 2.301952 / 3600.0, 1e-9);
  EXPECT_DOUBLE_EQ(b.rx_hours_per_year, 24.0);
  EXPECT_NEAR(b.tx_hours_per_year + b.rx_hours_per_year + b.sleep_hours_per_year, 8760.0, 1e-9);
  const double drain = 83.0 * b.tx_hours_per_year + 38.0 * b.rx_hours_per_year +
                       0.045 * b.sleep_hours_per_year;
  EXPECT_NEAR(b.years, 1200.0 / drain, 1e-12);
}

TEST(Lifetime, DecreasesWithReceiveTimeUpdatesAndUplinkRate) {
  DutyProfile d;
  const double base = battery_lifetime_years(d, 1.0, phy());
  EXPECT_LT(battery_lifetime_years(d, 2.0, phy()), base);
  auto more = d;
  more.updates_per_month = 2.0;
  EXPECT_LT(battery_lifetime_years(more, 1.0, phy()), base);
  auto faster = d;
  faster.uplink_period_hr = 0.25;
  EXPECT_LT(battery_lifetime_years(faster, 1.0, phy()), base);
}

TEST(Lifetime, InfeasibleProfileIsAnError) {
  DutyProfile d;
  EXPECT_THROW(lifetime_breakdown(d, 800.0, phy()), ConfigError);
  EXPECT_THROW(lifetime_breakdown(d, -1.0, phy()), ConfigError);
  d.uplink_sf = 13;
  EXPECT_THROW(lifetime_breakdown(d, 1.0, phy()), ConfigError);
}

TEST(Lifetime, ReceiveHoursFromEnergy) {
  EXPECT_DOUBLE_EQ(receive_hours(3600.0 * 0.5, 0.5), 1.0);
  EXPECT_THROW(receive_hours(1.0, 0.0), ConfigError);
}

}  // namespace
}  // namespace fuota
