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

#include "fuota/benchmarks.hpp"

#include "fuota/analysis.hpp"
#include "fuota/errors.hpp"

namespace fuota {

BenchmarkSuite BenchmarkSuite::defaults(const ProposedScheme& proposed) {
  return {{proposed, FixedSfScheme{SfIndex(10)}, FixedSfScheme{SfIndex(11)},
           FixedSfScheme{SfIndex(12)}, GroupBasedScheme{GroupCriterion::energy},
           GroupBasedScheme{GroupCriterion::latency}}};
}

namespace {

struct Nodes {
  DistanceQuadrature quad;
  std::vector<LinkProfile> profiles;
};

Nodes profile_nodes(const ScenarioModel& model, DistanceQuadrature quad) {
  Nodes nodes{std::move(quad), {}};
  nodes.profiles.reserve(nodes.quad.distances_m.size());
  for (double d : nodes.quad.distances_m) nodes.profiles.push_back(link_profile(d, model));
  return nodes;
}

SuiteRow average_over(const SchemeConfig& scheme, const Nodes& nodes,
                      const ScenarioModel& model) {
  SuiteRow row;
  row.scheme = scheme_label(scheme);
  row.intensity_per_m2 = model.network().interferer_intensity_per_m2;
  const double norm = model.normalization_energy_j();
  double ee = 0.0;
  double frag = 0.0;
  double dt = 0.0;
  bool has_dt = true;
  std::size_t unreachable = 0;
  for (std::size_t i = 0; i < nodes.profiles.size(); ++i) {
    try {
      const auto out = analyze(nodes.profiles[i], scheme, model);
      const double w = nodes.quad.weights[i];
      ee += w * out.energy_total_j / norm;
      frag += w * out.energy_fragments_j / norm;
      if (out.update_time_s) dt += w * *out.update_time_s / 3600.0;
      else has_dt = false;
    } catch (const UnreachableRecipient&) {
      ++unreachable;
    }
  }
  row.unreachable_fraction =
      static_cast<double>(unreachable) / static_cast<double>(nodes.profiles.size());
  if (unreachable == 0) {
    row.ee_norm_analysis = ee;
    row.ee_fragments_norm_analysis = frag;
    if (has_dt) row.dt_hours_analysis = dt;
  }
  return row;
}

void fill_sim(SuiteRow& row, const SchemeConfig& scheme, const ScenarioModel& model,
              const SimConfig& sim_template) {
  SimConfig sim = sim_template;
  sim.scheme = scheme;
  const auto result = run_experiment(sim, model);
  row.ee_norm_sim = result.avg_ee_norm;
  row.ee_norm_sim_stderr = result.avg_ee_norm_stderr;
  row.ee_fragments_norm_sim = result.avg_ee_fragments_norm;
  row.dt_hours_sim = result.avg_dt_hours;
  row.dt_hours_sim_stderr = result.avg_dt_hours_stderr;
  row.incomplete_recipients = result.incomplete_recipients;
}

}  // namespace

SuiteRow analyze_average(const SchemeConfig& scheme, const ScenarioModel& model, int panels) {
  return average_over(
      scheme, profile_nodes(model, distance_quadrature(model.network().region_radius_m, panels)),
      model);
}

std::vector<SuiteRow> evaluate_suite(const BenchmarkSuite& suite, const ScenarioModel& model,
                                     EvalMode mode, const SimConfig& sim_template,
                                     int panels) {
  std::vector<SuiteRow> rows;
  std::optional<Nodes> nodes;
  if (mode != EvalMode::simulate) {
    const double r0 = model.network().region_radius_m;
    nodes = profile_nodes(model, sim_template.layout == Layout::grid
                                     ? grid_quadrature(r0, sim_template.grid_points)
                                     : distance_quadrature(r0, panels));
  }
  for (const auto& scheme : suite.schemes) {
    validate(scheme);
    SuiteRow row;
    if (nodes) {
      row = average_over(scheme, *nodes, model);
    } else {
      row.scheme = scheme_label(scheme);
      row.intensity_per_m2 = model.network().interferer_intensity_per_m2;
    }
    if (mode != EvalMode::analysis) fill_sim(row, scheme, model, sim_template);
    rows.push_back(std::move(row));
  }
  return rows;
}

std::vector<SuiteRow> traffic_sweep(const BenchmarkSuite& suite, const ScenarioModel& model,
                                    EvalMode mode, const SimConfig& sim_template,
                                    const std::vector<double>& intensities, int panels) {
  std::vector<SuiteRow> rows;
  for (double lambda : intensities) {
    const auto scaled = model.with_intensity(lambda);
    auto part = evaluate_suite(suite, scaled, mode, sim_template, panels);
    rows.insert(rows.end(), part.begin(), part.end());
  }
  return rows;
}

}  // namespace fuota
