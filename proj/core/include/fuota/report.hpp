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
#include <optional>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "fuota/benchmarks.hpp"

namespace fuota {

/// Schema identifiers written on the first line of every CSV.
inline constexpr const char* kDistanceSchema = "fuota-per-distance/v1";
inline constexpr const char* kAverageSchema = "fuota-averages/v1";
inline constexpr const char* kSweepSchema = "fuota-sweep/v1";
inline constexpr const char* kLifetimeSchema = "fuota-lifetime/v1";

struct DistanceRow {
  double distance_m = 0.0;
  std::string scheme;
  std::optional<double> ee_norm_analysis;
  std::optional<double> ee_norm_sim;
  std::optional<double> dt_hours_analysis;
  std::optional<double> dt_hours_sim;
  std::optional<double> ee_norm_sim_stderr;
  std::optional<double> dt_hours_sim_stderr;
  long samples = 0;

  bool operator==(const DistanceRow&) const = default;
};

struct SweepRow {
  long frames_per_round = 0;
  int first_sf = 7;
  double avg_ee_norm = 0.0;
  double avg_dt_hours = 0.0;
};

struct LifetimeRow {
  std::string scheme;
  double distance_m = 0.0;
  int uplink_sf = 12;
  std::string source;  ///< "sim" or "analysis"
  double receive_hours_per_update = 0.0;
  double lifetime_years = 0.0;
  double dt_hours = 0.0;
};

void write_distance_csv(const std::filesystem::path& path,
                        const std::vector<DistanceRow>& rows,
                        const std::string& fingerprint);
std::vector<DistanceRow> read_distance_csv(const std::filesystem::path& path);

void write_averages_csv(const std::filesystem::path& path,
                        const std::vector<SuiteRow>& rows,
                        const std::string& fingerprint);
void write_sweep_csv(const std::filesystem::path& path,
                     const std::vector<SweepRow>& rows,
                     const std::string& fingerprint);
void write_lifetime_csv(const std::filesystem::path& path,
                        const std::vector<LifetimeRow>& rows,
                        const std::string& fingerprint);

struct CompareEntry {
  std::string scheme;
  double distance_m = 0.0;
  std::string metric;
  double reference = 0.0;
  double candidate = 0.0;
  double rel_error = 0.0;
  bool pass = false;
};

struct CompareReport {
  std::vector<CompareEntry> entries;
  double max_rel_error = 0.0;
  bool pass = true;
};

/// Per-distance relative errors between two per-distance CSVs. The first
/// file contributes its analysis columns (sim columns if it has none), the
/// second its sim columns (analysis columns if it has none); rows are
/// matched on (scheme, distance).
CompareReport compare(const std::filesystem::path& analysis_csv,
                      const std::filesystem::path& sim_csv, double tolerance);
CompareReport compare(const std::vector<DistanceRow>& reference_rows,
                      const std::vector<DistanceRow>& candidate_rows,
                      double tolerance);

}  // namespace fuota
