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

#include <cmath>

#include "fuota/errors.hpp"
#include "fuota/phy.hpp"
#include "oracles.hpp"

namespace fuota {
namespace {

using testing::reference_model;
using testing::semtech_airtime_s;

struct AirtimeCase {
  int sf;
  int payload;
  double seconds;
};

// frozen from the calculator oracle
constexpr AirtimeCase kAirtimes[] = {
    {7, 10, 0.041216},  {7, 50, 0.097536},  {7, 222, 0.348416}, {8, 50, 0.174592},
    {8, 1, 0.051712},   {9, 50, 0.328704},  {9, 100, 0.553984}, {10, 50, 0.616448},
    {10, 12, 0.288768}, {11, 50, 1.314816}, {12, 50, 2.301952}, {12, 12, 1.155072},
};

TEST(Phy, AirtimeMatchesCalculatorWithinOneSymbol) {
  const auto phy = reference_model().phy();
  for (const auto& c : kAirtimes) {
    const SfIndex sf(c.sf);
    const double t = frame_airtime(sf, c.payload, phy);
    EXPECT_NEAR(t, semtech_airtime_s(c.sf, c.payload), symbol_duration(sf, phy))
        << "SF" << c.sf << " PL" << c.payload;
    EXPECT_NEAR(t, c.seconds, 1e-9) << "SF" << c.sf << " PL" << c.payload;
  }
}

TEST(Phy, AirtimeSplitsIntoPreambleAndPayload) {
  const auto phy = reference_model().phy();
  for (auto sf : kAllSfs) {
    EXPECT_DOUBLE_EQ(frame_airtime(sf, 50, phy),
                     preamble_duration(sf, phy) + payload_duration(sf, 50, phy));
    EXPECT_DOUBLE_EQ(preamble_duration(sf, phy), 12.25 * symbol_duration(sf, phy));
  }
}

TEST(Phy, AirtimeGrowsWithSfAndPayload) {
  const auto phy = reference_model().phy();
  for (auto sf : kAllSfs) {
    for (long pl = 1; pl < 240; ++pl)
      EXPECT_LE(frame_airtime(sf, pl, phy), frame_airtime(sf, pl + 1, phy));
    if (sf.value() < 12) {
      EXPECT_LT(frame_airtime(sf, 50, phy), frame_airtime(SfIndex(sf.value() + 1), 50, phy));
    }
  }
}

TEST(Phy, ImplicitHeaderNeverLonger) {
  auto phy = reference_model().phy();
  auto implicit = phy;
  implicit.header_flag = 1;
  for (auto sf : kAllSfs) {
    EXPECT_LE(frame_airtime(sf, 50, implicit), frame_airtime(sf, 50, phy));
    EXPECT_NEAR(frame_airtime(sf, 50, implicit), semtech_airtime_s(sf.value(), 50, 125e3, 8, true),
                1e-12);
  }
}

TEST(Phy, EnergiesScaleWithReceivePower) {
  const auto phy = reference_model().phy();
  const SfIndex sf(9);
  EXPECT_DOUBLE_EQ(rx_energy_frame(sf, 50, phy), phy.rx_power_w * frame_airtime(sf, 50, phy));
  EXPECT_DOUBLE_EQ(rx_energy_preamble(sf, phy), phy.rx_power_w * preamble_duration(sf, phy));
}

TEST(Phy, UnitConversions) {
  EXPECT_NEAR(dbm_to_watts(30.0), 1.0, 1e-15);
  EXPECT_NEAR(dbm_to_watts(14.0), 0.025118864315, 1e-12);
  EXPECT_NEAR(db_to_linear(6.0), 3.98107170553, 1e-10);
}

TEST(Phy, SfIndexRejectsOutOfRange) {
  EXPECT_THROW(SfIndex(6), std::out_of_range);
  EXPECT_THROW(SfIndex(13), std::out_of_range);
  EXPECT_EQ(SfIndex::from_offset(5).value(), 12);
}

TEST(Phy, ValidationRejectsBadProfiles) {
  const auto good = reference_model().phy();
  EXPECT_NO_THROW(good.validate());

  auto p = good;
  p.sensitivity_dbm[3] = p.sensitivity_dbm[2];
  EXPECT_THROW(p.validate(), ConfigError);

  p = good;
  p.capture_threshold_db[1][2] = std::nan("");
  EXPECT_THROW(p.validate(), ConfigError);

  p = good;
  p.header_flag = 2;
  EXPECT_THROW(p.validate(), ConfigError);

  p = good;
  p.coding_rate_index = 0;
  EXPECT_THROW(p.validate(), ConfigError);

  p = good;
  p.rx_power_w = -1.0;
  EXPECT_THROW(p.validate(), ConfigError);
}

}  // namespace
}  // namespace fuota
