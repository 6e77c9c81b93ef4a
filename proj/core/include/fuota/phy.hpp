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

#include <array>
#include <compare>
#include <cstddef>
#include <stdexcept>
#include <string>

namespace fuota {

/// LoRa spreading factor, always within [7, 12].
class SfIndex {
 public:
  static constexpr int kMin = 7;
  static constexpr int kMax = 12;
  static constexpr std::size_t kCount = kMax - kMin + 1;

  constexpr explicit SfIndex(int value) : value_(value) {
    if (value < kMin || value > kMax) {
      throw std::out_of_range("spreading factor must lie in [7, 12], got " +
                              std::to_string(value));
    }
  }

  static constexpr SfIndex from_offset(std::size_t offset) {
    return SfIndex(kMin + static_cast<int>(offset));
  }

  constexpr int value() const noexcept { return value_; }
  /// Zero-based position in a PerSf table.
  constexpr std::size_t offset() const noexcept {
    return static_cast<std::size_t>(value_ - kMin);
  }

  constexpr auto operator<=>(const SfIndex&) const = default;

 private:
  int value_;
};

/// One value per spreading factor, indexed by SfIndex::offset().
template <class T>
using PerSf = std::array<T, SfIndex::kCount>;

inline constexpr std::array<SfIndex, SfIndex::kCount> kAllSfs{
    SfIndex(7), SfIndex(8), SfIndex(9), SfIndex(10), SfIndex(11), SfIndex(12)};

/// Radio and modulation parameters shared by the gateway and the end devices.
///
/// `header_flag` follows the usual airtime-calculator convention: 0 means the
/// explicit PHY header is present, 1 means implicit-header mode.
/// Capture thresholds are indexed [desired SF][interfering SF] in dB; a frame
/// received at power R is destroyed by an overlapping frame at power R' when
/// R / R' is strictly below the threshold.
struct PhyProfile {
  double bandwidth_hz = 125e3;
  int preamble_symbols = 8;
  int header_flag = 0;
  PerSf<int> ldro_flag{0, 0, 0, 0, 1, 1};
  int coding_rate_index = 1;
  PerSf<double> sensitivity_dbm{};
  std::array<PerSf<double>, SfIndex::kCount> capture_threshold_db{};
  double rx_power_w = 0.0;  ///< draw while demodulating
  double tx_power_w = 0.0;  ///< draw while transmitting (consumption)
  double tx_rf_power_dbm = 14.0;

  /// Throws ConfigError when an invariant is violated.
  void validate() const;

  double sensitivity_w(SfIndex sf) const;
  /// Linear desired-to-interferer power ratio below which capture fails.
  double capture_ratio(SfIndex desired, SfIndex interferer) const;
  double tx_rf_power_w() const;

  bool operator==(const PhyProfile&) const = default;
};

double dbm_to_watts(double dbm);
double db_to_linear(double db);

double symbol_duration(SfIndex sf, const PhyProfile& profile);
double preamble_duration(SfIndex sf, const PhyProfile& profile);
/// Number of payload symbols (including the 8 fixed symbols).
long payload_symbols(SfIndex sf, long payload_bytes, const PhyProfile& profile);
double payload_duration(SfIndex sf, long payload_bytes,
                        const PhyProfile& profile);
double frame_airtime(SfIndex sf, long payload_bytes, const PhyProfile& profile);

double rx_energy_frame(SfIndex sf, long payload_bytes,
                       const PhyProfile& profile);
double rx_energy_preamble(SfIndex sf, const PhyProfile& profile);

}  // namespace fuota
