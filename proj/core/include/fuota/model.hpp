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

#include "fuota/channel.hpp"
#include "fuota/fec.hpp"
#include "fuota/phy.hpp"

namespace fuota {

/// Deployment, traffic and energy parameters of one FUOTA experiment.
/// Defaults reproduce the reference scenario: 100 recipients on a 1 km disc,
/// a 10 kB image in 200 fragments, 1 % gateway duty cycle.
struct NetworkConfig {
  int recipients = 100;
  double region_radius_m = 1000.0;

  long image_bytes = 10000;
  long fragments = 200;
  double duty_cycle_percent = 1.0;

  double path_loss_exponent = 2.5;
  double gamma0 = 2.2e-8;

  double interferer_intensity_per_m2 = 5e-5;
  double interferer_frame_interval_s = 600.0;
  int channels = 8;
  long interferer_payload_bytes = 5;
  PerSf<double> interferer_sf_probabilities{1.0 / 6, 1.0 / 6, 1.0 / 6,
                                            1.0 / 6, 1.0 / 6, 1.0 / 6};
  double detection_epsilon = 0.01;

  double control_airtime_s = 60.0;
  long ack_payload_bytes = 12;
  int ack_sf = 12;

  double failure_at_k = 0.85;
  double failure_beyond_k = 0.567;
  DecoderMode proposed_decoder = DecoderMode::raptor;
  DecoderMode benchmark_decoder = DecoderMode::ideal;

  /// Bytes per coded fragment: ceil(image_bytes / fragments).
  long fragment_bytes() const;
  void validate() const;

  bool operator==(const NetworkConfig&) const = default;
};

/// Switches between the self-consistent expressions used by default and the
/// literal printed forms of the per-attempt energy and final-round attempts.
enum class EnergyFormula { partitioned, as_printed };
enum class AttemptsFormula { success_probability, as_printed };

struct AnalysisOptions {
  EnergyFormula energy_formula = EnergyFormula::partitioned;
  AttemptsFormula attempts_formula = AttemptsFormula::success_probability;
  double poisson_tail_mass = 1e-6;
  double integration_tail = 1e-10;
  double quad_rel_tol = 1e-10;
  /// Frame-success probability below which a fixed SF is considered unable
  /// to reach a recipient.
  double min_success_probability = 1e-3;

  bool operator==(const AnalysisOptions&) const = default;
};

/// Immutable bundle of everything the analysis and the simulator need,
/// with the derived quantities (airtimes, energies, interference radius)
/// precomputed once.
class ScenarioModel {
 public:
  ScenarioModel(PhyProfile phy, NetworkConfig network,
                AnalysisOptions options = {});

  const PhyProfile& phy() const { return phy_; }
  const NetworkConfig& network() const { return network_; }
  const AnalysisOptions& options() const { return options_; }
  const LinkModel& link() const { return link_; }
  const InterfererField& field() const { return field_; }

  long fragment_bytes() const { return fragment_bytes_; }
  double interference_radius_m() const { return interference_radius_m_; }
  double mean_interferers() const { return mean_interferers_; }
  const PoissonWindow& interferer_window() const { return window_; }

  double preamble_airtime_s(SfIndex sf) const { return preamble_s_[sf.offset()]; }
  double frame_airtime_s(SfIndex sf) const { return frame_s_[sf.offset()]; }
  double preamble_energy_j(SfIndex sf) const;
  double frame_energy_j(SfIndex sf) const;
  /// Gateway time consumed by one frame at the duty-cycle limit.
  double cycle_time_s(SfIndex sf) const;
  double ack_airtime_s() const { return ack_airtime_s_; }
  /// p_r l_c + p_t l_a.
  double control_energy_j() const;
  /// k p_r l_fr(7): energy of an erasure-free SF7 reception of the image.
  double normalization_energy_j() const;

  RatelessModel decoder(DecoderMode mode) const;

  /// Copy with a different interferer intensity (used by traffic sweeps).
  ScenarioModel with_intensity(double intensity_per_m2) const;

 private:
  PhyProfile phy_;
  NetworkConfig network_;
  AnalysisOptions options_;
  LinkModel link_;
  InterfererField field_;
  long fragment_bytes_ = 0;
  double interference_radius_m_ = 0.0;
  double mean_interferers_ = 0.0;
  PoissonWindow window_;
  PerSf<double> preamble_s_{};
  PerSf<double> frame_s_{};
  double ack_airtime_s_ = 0.0;
};

}  // namespace fuota
