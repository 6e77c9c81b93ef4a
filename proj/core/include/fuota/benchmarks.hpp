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

#include <optional>
#include <string>
#include <vector>

#include "fuota/model.hpp"
#include "fuota/schemes.hpp"
#include "fuota/sim.hpp"

namespace fuota {

enum class EvalMode { analysis, simulate, both };

/// Schemes compared side by side on one network; default is Proposed,
/// FSF-10/11/12, GB-E and GB-L.
struct BenchmarkSuite {
  std::vector<SchemeConfig> schemes;

  static BenchmarkSuite defaults(const ProposedScheme& proposed = {});
};

struct SuiteRow {
  std::string scheme;
  double intensity_per_m2 = 0.0;
  std::optional<double> ee_norm_analysis;
  std::optional<double> dt_hours_analysis;
  std::optional<double> ee_norm_sim;
  std::optional<double> ee_norm_sim_stderr;
  std::optional<double> dt_hours_sim;
  std::optional<double> dt_hours_sim_stderr;
  /// Normalised fragment-reception energy, control overhead excluded.
  std::optional<double> ee_fragments_norm_analysis;
  std::optional<double> ee_fragments_norm_sim;
  /// Fraction of the distance-quadrature nodes the scheme cannot reach.
  double unreachable_fraction = 0.0;
  long incomplete_recipients = 0;
};

/// Distance-averaged analytical EE (normalised) and DT (hours); DT is
/// absent for group-based schemes, both are absent when any distance is
/// unreachable.
SuiteRow analyze_average(const SchemeConfig& scheme, const ScenarioModel& model,
                         int panels = 10);

/// One row per scheme. Simulations reuse the same seed for every scheme,
/// so all schemes see identical layouts (paired comparison). Analytical
/// averages follow the simulated layout: the grid distances with equal
/// weights, or the disc quadrature with `panels` panels.
std::vector<SuiteRow> evaluate_suite(const BenchmarkSuite& suite,
                                     const ScenarioModel& model, EvalMode mode,
                                     const SimConfig& sim_template,
                                     int panels = 10);

/// evaluate_suite repeated for each interferer intensity.
std::vector<SuiteRow> traffic_sweep(const BenchmarkSuite& suite,
                                    const ScenarioModel& model, EvalMode mode,
                                    const SimConfig& sim_template,
                                    const std::vector<double>& intensities,
                                    int panels = 10);

}  // namespace fuota
