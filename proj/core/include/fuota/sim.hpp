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

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "fuota/model.hpp"
#include "fuota/random.hpp"
#include "fuota/schemes.hpp"

namespace fuota {

enum class Layout { uniform, grid };

struct SimConfig {
  SchemeConfig scheme = ProposedScheme{};
  long runs = 100;
  std::uint64_t seed = 1;
  Layout layout = Layout::uniform;
  /// Grid layout: recipients spread evenly over distances R0*i/grid_points.
  int grid_points = 10;
  /// Extra recipients pinned at these distances, reported separately.
  std::vector<double> probe_distances_m;
  /// Per-stream frame cap, as a multiple of the mean fragments needed.
  double max_frames_factor = 50.0;
  int distance_bins = 10;
  bool record_frames = false;
  unsigned threads = 0;  ///< 0: one per hardware thread
};

struct RecipientOutcome {
  double distance_m = 0.0;
  bool probe = false;
  std::optional<SfIndex> group_sf;
  bool completed = false;
  long fragments_needed = 0;
  long fragments_received = 0;
  double fragment_energy_j = 0.0;
  double control_energy_j = 0.0;
  double energy_j = 0.0;
  double completion_time_s = 0.0;
  PerSf<long> full_attempts{};
  PerSf<long> preamble_only_attempts{};
};

struct FrameRecord {
  long index = 0;
  SfIndex sf{7};
  double start_s = 0.0;
  double airtime_s = 0.0;
};

struct SessionResult {
  std::vector<RecipientOutcome> recipients;
  long transmissions = 0;
  double duration_s = 0.0;
  bool incomplete = false;
  /// (group SF or none, frames sent) per stream, in service order.
  std::vector<std::pair<std::optional<SfIndex>, long>> streams;
  std::vector<double> stream_durations_s;
  std::vector<FrameRecord> frames;  ///< only with SimConfig::record_frames
};

/// Time window of a desired frame segment on one channel.
struct ReceptionWindow {
  double start_s = 0.0;
  double end_s = 0.0;
  int channel = 0;
};

struct InterferingFrame {
  double power_w = 0.0;
  SfIndex sf{7};
  double start_s = 0.0;
  double end_s = 0.0;
  int channel = 0;
};

enum class CollisionResult { survive, lost };

/// Dominant-interferer capture: the desired segment is lost iff some frame
/// overlapping it on the same channel has R / R' strictly below the capture
/// threshold for (desired SF, interfering SF).
CollisionResult collision_outcome(double desired_power_w, SfIndex desired_sf,
                                  const ReceptionWindow& window,
                                  std::span<const InterferingFrame> frames,
                                  const PhyProfile& phy);

/// Recipient distances for one run: uniform on the disc or on the grid,
/// followed by the probes.
std::vector<double> layout_distances(const SimConfig& config,
                                     const ScenarioModel& model, Rng& rng);

/// One FUOTA session with an explicit recipient layout. Recipients whose
/// index is >= first_probe are flagged as probes.
SessionResult run_session(const SimConfig& config, const ScenarioModel& model,
                          std::span<const double> distances_m, Rng& rng,
                          std::size_t first_probe = SIZE_MAX);

/// One session of run `run_index`, using the layout and channel streams
/// derived from config.seed. Identical layouts across schemes for equal
/// seeds and run indices.
SessionResult run_session(const SimConfig& config, const ScenarioModel& model,
                          long run_index);

struct BinStats {
  double lo_m = 0.0;
  double hi_m = 0.0;
  double center_m = 0.0;
  long samples = 0;
  double ee_norm_mean = 0.0;
  double ee_norm_stderr = 0.0;
  double dt_hours_mean = 0.0;
  double dt_hours_stderr = 0.0;
};

struct ProbeStats {
  double distance_m = 0.0;
  long samples = 0;
  double ee_norm_mean = 0.0;
  double dt_hours_mean = 0.0;
  /// Mean receive energy (fragments + control downlink) per update, in J.
  double receive_energy_j = 0.0;
};

struct ExperimentResult {
  std::string scheme;
  long runs = 0;
  std::vector<RecipientOutcome> recipients;  ///< all runs, probes included
  std::vector<BinStats> bins;
  std::vector<ProbeStats> probes;
  double avg_ee_norm = 0.0;
  double avg_ee_norm_stderr = 0.0;
  /// Fragment receptions only, without the control overhead.
  double avg_ee_fragments_norm = 0.0;
  double avg_dt_hours = 0.0;
  double avg_dt_hours_stderr = 0.0;
  double mean_session_hours = 0.0;
  long incomplete_recipients = 0;
  long incomplete_runs = 0;
};

/// Independent runs with seeds derived from config.seed, aggregated in run
/// order (bitwise reproducible regardless of thread count).
ExperimentResult run_experiment(const SimConfig& config,
                                const ScenarioModel& model);

}  // namespace fuota
