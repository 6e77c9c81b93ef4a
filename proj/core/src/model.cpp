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

#include "fuota/model.hpp"

#include <cmath>

#include "fuota/errors.hpp"

namespace fuota {

long NetworkConfig::fragment_bytes() const {
  return (image_bytes + fragments - 1) / fragments;
}

void NetworkConfig::validate() const {
  if (recipients < 1) throw ConfigError("must be >= 1", "network.recipients");
  if (!(region_radius_m > 0.0)) throw ConfigError("must be > 0", "network.region_radius_m");
  if (image_bytes < 1) throw ConfigError("must be >= 1", "network.image_bytes");
  if (fragments < 1) throw ConfigError("must be >= 1", "network.fragments");
  if (!(duty_cycle_percent > 0.0 && duty_cycle_percent <= 100.0))
    throw ConfigError("must lie in (0, 100]", "network.duty_cycle_percent");
  if (!(interferer_frame_interval_s > 0.0))
    throw ConfigError("must be > 0", "network.interferer_frame_interval_s");
  if (interferer_payload_bytes < 0)
    throw ConfigError("must be >= 0", "network.interferer_payload_bytes");
  if (control_airtime_s < 0.0) throw ConfigError("must be >= 0", "network.control_airtime_s");
  if (ack_payload_bytes < 0) throw ConfigError("must be >= 0", "network.ack_payload_bytes");
  if (ack_sf < SfIndex::kMin || ack_sf > SfIndex::kMax)
    throw ConfigError("must lie in [7, 12]", "network.ack_sf");
}

ScenarioModel::ScenarioModel(PhyProfile phy, NetworkConfig network,
                             AnalysisOptions options)
    : phy_(std::move(phy)), network_(std::move(network)), options_(options) {
  phy_.validate();
  network_.validate();

  link_.path_loss_exponent = network_.path_loss_exponent;
  link_.gamma0 = network_.gamma0;
  link_.tx_rf_power_w = phy_.tx_rf_power_w();
  link_.validate();

  field_.intensity_per_m2 = network_.interferer_intensity_per_m2;
  field_.frame_rate_hz = 1.0 / network_.interferer_frame_interval_s;
  field_.channel_count = network_.channels;
  field_.sf_probabilities = network_.interferer_sf_probabilities;
  field_.detection_epsilon = network_.detection_epsilon;
  for (auto sf : kAllSfs) {
    field_.mean_frame_duration_s[sf.offset()] =
        frame_airtime(sf, network_.interferer_payload_bytes, phy_);
  }
  field_.validate();

  fragment_bytes_ = network_.fragment_bytes();
  for (auto sf : kAllSfs) {
    preamble_s_[sf.offset()] = preamble_duration(sf, phy_);
    frame_s_[sf.offset()] = frame_airtime(sf, fragment_bytes_, phy_);
  }
  ack_airtime_s_ = frame_airtime(SfIndex(network_.ack_sf), network_.ack_payload_bytes, phy_);

  interference_radius_m_ = interference_radius(link_, field_, phy_.sensitivity_w(SfIndex(12)));
  mean_interferers_ = mean_interferer_count(interference_radius_m_, field_);
  window_ = poisson_window(mean_interferers_, options_.poisson_tail_mass);
}

double ScenarioModel::preamble_energy_j(SfIndex sf) const {
  return phy_.rx_power_w * preamble_s_[sf.offset()];
}

double ScenarioModel::frame_energy_j(SfIndex sf) const {
  return phy_.rx_power_w * frame_s_[sf.offset()];
}

double ScenarioModel::cycle_time_s(SfIndex sf) const {
  return 100.0 / network_.duty_cycle_percent * frame_s_[sf.offset()];
}

double ScenarioModel::control_energy_j() const {
  return phy_.rx_power_w * network_.control_airtime_s + phy_.tx_power_w * ack_airtime_s_;
}

double ScenarioModel::normalization_energy_j() const {
  return static_cast<double>(network_.fragments) * frame_energy_j(SfIndex(7));
}

RatelessModel ScenarioModel::decoder(DecoderMode mode) const {
  RatelessModel m;
  m.k = network_.fragments;
  m.failure_at_k = network_.failure_at_k;
  m.failure_beyond_k = network_.failure_beyond_k;
  m.mode = mode;
  m.validate();
  return m;
}

ScenarioModel ScenarioModel::with_intensity(double intensity_per_m2) const {
  NetworkConfig net = network_;
  net.interferer_intensity_per_m2 = intensity_per_m2;
  return ScenarioModel(phy_, net, options_);
}

}  // namespace fuota
