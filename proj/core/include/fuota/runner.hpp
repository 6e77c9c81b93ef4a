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

#include <filesystem>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "fuota/config.hpp"
#include "fuota/report.hpp"

namespace fuota {

/// Process exit codes of the command-line tool.
enum ExitCode : int {
  kExitOk = 0,
  kExitConfigError = 2,
  kExitNumericalFailure = 3,
  kExitIncompleteSimulation = 4,
};

struct RunOverrides {
  std::optional<std::uint64_t> seed;
  std::optional<long> runs;
  std::optional<RunMode> mode;
  std::optional<std::filesystem::path> out_dir;
};

void apply_overrides(LoadedConfig& config, const RunOverrides& overrides);

/// Per-distance table and scheme averages. Writes per_distance.csv,
/// averages.csv and manifest.json under the output directory.
int run_distance_experiment(const LoadedConfig& config, std::ostream& log);
/// (w, L) sweep of the proposed scheme; writes sweep.csv and manifest.json.
int run_sweep(const LoadedConfig& config, std::ostream& log);
/// Battery lifetime table; writes lifetime.csv and manifest.json.
int run_lifetime(const LoadedConfig& config, std::ostream& log);
/// Scheme averages for each configured interferer intensity; writes
/// traffic.csv and manifest.json.
int run_traffic(const LoadedConfig& config, std::ostream& log);

std::vector<DistanceRow> per_distance_rows(const LoadedConfig& config,
                                           bool with_analysis, bool with_sim,
                                           bool& incomplete);
std::vector<SweepRow> sweep_rows(const LoadedConfig& config);
std::vector<LifetimeRow> lifetime_rows(const LoadedConfig& config,
                                       bool from_simulation,
                                       bool& incomplete);

void write_manifest(const std::filesystem::path& path,
                    const LoadedConfig& config, const std::string& verb,
                    const std::vector<std::string>& artifacts);

}  // namespace fuota
