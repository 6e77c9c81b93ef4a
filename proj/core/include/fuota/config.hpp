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
#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "fuota/lifetime.hpp"
#include "fuota/model.hpp"
#include "fuota/schemes.hpp"
#include "fuota/sim.hpp"

namespace fuota {

enum class RunMode { analysis, simulate, both };

struct SweepSpec {
  std::vector<long> frames_per_round;
  std::vector<int> first_sfs;
  int last_sf = 12;

  bool operator==(const SweepSpec&) const = default;
};

/// One lifetime-table column: a recipient at region_radius * fraction.
struct LifetimePoint {
  double distance_fraction = 1.0;
  int uplink_sf = 12;

  bool operator==(const LifetimePoint&) const = default;
};

struct LifetimeSpec {
  DutyProfile duty;
  std::vector<SchemeConfig> schemes;
  std::vector<LifetimePoint> points;

  bool operator==(const LifetimeSpec&) const = default;
};

struct ExperimentSpec {
  std::string name;
  RunMode mode = RunMode::both;
  std::vector<SchemeConfig> schemes;
  Layout layout = Layout::grid;
  int grid_points = 10;
  int distance_bins = 10;
  int quadrature_panels = 10;
  long runs = 100;
  std::uint64_t seed = 1;
  double max_frames_factor = 50.0;
  std::optional<SweepSpec> sweep;
  std::vector<double> traffic_intensities;
  LifetimeSpec lifetime;
  std::string output_dir = "out";

  bool operator==(const ExperimentSpec&) const = default;
};

struct LoadedConfig {
  ExperimentSpec experiment;
  NetworkConfig network;
  PhyProfile phy;
  AnalysisOptions analysis;

  bool operator==(const LoadedConfig&) const = default;
};

/// Reads and validates a config file (JSON, // comments allowed).
/// Relative table paths resolve against the file's directory first, then
/// against FUOTA_DATA_DIR and the installed data directory.
LoadedConfig load_config(const std::filesystem::path& path);
LoadedConfig parse_config(const nlohmann::json& document,
                          const std::filesystem::path& base_dir = {});

/// Fully resolved document (PHY tables inlined); parse_config of the result
/// yields an equal LoadedConfig.
nlohmann::json to_json(const LoadedConfig& config);

/// 64-bit FNV-1a of the canonical resolved document, as 16 hex digits.
std::string fingerprint(const LoadedConfig& config);

ScenarioModel make_model(const LoadedConfig& config);
SimConfig make_sim_config(const LoadedConfig& config,
                          const SchemeConfig& scheme);

nlohmann::json scheme_to_json(const SchemeConfig& scheme);

}  // namespace fuota
