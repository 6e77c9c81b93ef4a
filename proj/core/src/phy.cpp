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

#include "fuota/phy.hpp"

#include <cmath>
#include <stdexcept>

#include "fuota/errors.hpp"

namespace fuota {

double dbm_to_watts(double dbm) { return std::pow(10.0, (dbm - 30.0) / 10.0); }

double db_to_linear(double db) { return std::pow(10.0, db / 10.0); }

void PhyProfile::validate() const {
  if (!(bandwidth_hz > 0.0)) throw ConfigError("must be > 0", "phy.bandwidth_hz");
  if (preamble_symbols < 0) throw ConfigError("must be >= 0", "phy.preamble_symbols");
  if (header_flag != 0 && header_flag != 1)
    throw ConfigError("must be 0 or 1", "phy.header_flag");
  if (coding_rate_index < 1 || coding_rate_index > 4)
    throw ConfigError("must be in {1,2,3,4}", "phy.coding_rate_index");
  for (auto sf : kAllSfs) {
    const int y = ldro_flag[sf.offset()];
    if (y != 0 && y != 1) throw ConfigError("flags must be 0 or 1", "phy.ldro");
    if (!std::isfinite(sensitivity_dbm[sf.offset()]))
      throw ConfigError("non-finite entry", "phy.sensitivity_dbm");
    for (auto other : kAllSfs) {
      if (!std::isfinite(capture_threshold_db[sf.offset()][other.offset()]))
        throw ConfigError("matrix must hold 36 finite entries",
                          "phy.capture_threshold_db");
    }
  }
  for (std::size_t i = 1; i < SfIndex::kCount; ++i) {
    if (!(sensitivity_dbm[i] < sensitivity_dbm[i - 1]))
      throw ConfigError("must strictly improve (decrease) from SF7 to SF12",
                        "phy.sensitivity_dbm");
  }
  if (rx_power_w < 0.0) throw ConfigError("must be >= 0", "phy.rx_power_w");
  if (tx_power_w < 0.0) throw ConfigError("must be >= 0", "phy.tx_power_w");
  if (!std::isfinite(tx_rf_power_dbm))
    throw ConfigError("must be finite", "phy.tx_power_dbm");
}

double PhyProfile::sensitivity_w(SfIndex sf) const {
  return dbm_to_watts(sensitivity_dbm[sf.offset()]);
}

double PhyProfile::capture_ratio(SfIndex desired, SfIndex interferer) const {
  return db_to_linear(capture_threshold_db[desired.offset()][interferer.offset()]);
}

double PhyProfile::tx_rf_power_w() const { return dbm_to_watts(tx_rf_power_dbm); }

double symbol_duration(SfIndex sf, const PhyProfile& profile) {
  return std::ldexp(1.0, sf.value()) / profile.bandwidth_hz;
}

double preamble_duration(SfIndex sf, const PhyProfile& profile) {
  return (profile.preamble_symbols + 4.25) * symbol_duration(sf, profile);
}

long payload_symbols(SfIndex sf, long payload_bytes, const PhyProfile& profile) {
  if (payload_bytes < 0) throw std::invalid_argument("payload_bytes must be >= 0");
  const long i = sf.value();
  const long denom = i - 2L * profile.ldro_flag[sf.offset()];
  if (denom <= 0) throw std::domain_error("SF - 2*LDRO must be positive");
  const long numer = 2 * payload_bytes - i - 5L * profile.header_flag + 11;
  const long blocks = numer > 0 ? (numer + denom - 1) / denom : 0;
  return 8 + blocks * (profile.coding_rate_index + 4);
}

double payload_duration(SfIndex sf, long payload_bytes, const PhyProfile& profile) {
  return static_cast<double>(payload_symbols(sf, payload_bytes, profile)) *
         symbol_duration(sf, profile);
}

double frame_airtime(SfIndex sf, long payload_bytes, const PhyProfile& profile) {
  return preamble_duration(sf, profile) + payload_duration(sf, payload_bytes, profile);
}

double rx_energy_frame(SfIndex sf, long payload_bytes, const PhyProfile& profile) {
  return profile.rx_power_w * frame_airtime(sf, payload_bytes, profile);
}

double rx_energy_preamble(SfIndex sf, const PhyProfile& profile) {
  return profile.rx_power_w * preamble_duration(sf, profile);
}

}  // namespace fuota
