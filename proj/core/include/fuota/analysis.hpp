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

#include <functional>
#include <optional>
#include <vector>

#include "fuota/model.hpp"
#include "fuota/schemes.hpp"

namespace fuota {

enum class Segment { preamble, frame };

/// Probability that one interferer sends an overlapping frame on the
/// recipient's channel during the vulnerable window of `segment`.
/// Clamped to 1 (with a warning) when the linear approximation breaks.
double collision_probability(SfIndex desired, SfIndex interferer,
                             Segment segment, const ScenarioModel& model);

/// Probability that a single interferer inside the interference disc
/// destroys the segment, given desired-signal fading coefficient `a`.
double interference_loss_probability(double a, double d0, SfIndex sf,
                                     Segment segment,
                                     const ScenarioModel& model);

/// P(segment received | n interferers in the disc).
double segment_success(double d0, long n, SfIndex sf, Segment segment,
                       const ScenarioModel& model);
double preamble_failure(double d0, long n, SfIndex sf,
                        const ScenarioModel& model);
double frame_success(double d0, long n, SfIndex sf, const ScenarioModel& model);
double payload_failure_given_preamble(double d0, long n, SfIndex sf,
                                      const ScenarioModel& model);

/// Frame success with the interferer count averaged out.
double mean_frame_success(double d0, SfIndex sf, const ScenarioModel& model);

struct SuccessProbabilities {
  PerSf<double> preamble_fail{};
  PerSf<double> frame_success{};
  PerSf<double> payload_fail_given_preamble{};
};

/// Success probabilities at one distance for every interferer count in the
/// model's truncated Poisson window.
struct LinkProfile {
  double distance_m = 0.0;
  long first_n = 0;
  std::vector<double> weights;
  std::vector<SuccessProbabilities> by_n;
};

LinkProfile link_profile(double d0, const ScenarioModel& model);

double expected_round_receptions(long frames_per_round, double frame_success);

/// Round in which decoding completes under the mean-reception approximation;
/// rounds L..M use SF L..M, round M+1 continues on SF M.
int completion_round(const PerSf<double>& frame_success,
                     const ProposedScheme& scheme, double ns_bar);

/// Expected attempts in round m0. Throws UnreachableRecipient when the
/// round's success probability is zero but fragments are still missing.
double final_round_attempts(const PerSf<double>& frame_success,
                            const ProposedScheme& scheme, int m0,
                            double ns_bar, AttemptsFormula formula,
                            double distance_m = 0.0);

/// Mean receiver energy of one reception attempt on `sf`.
double attempt_energy(const SuccessProbabilities& p, SfIndex sf,
                      const ScenarioModel& model);

struct ConditionalOutcome {
  int round_completed = 0;
  double final_round_attempts = 0.0;
  double fragment_energy_j = 0.0;
  double update_time_s = 0.0;
};

ConditionalOutcome conditional_outcome(const SuccessProbabilities& p,
                                       const ProposedScheme& scheme,
                                       double ns_bar,
                                       const ScenarioModel& model,
                                       double distance_m = 0.0);

struct AnalyticalOutcome {
  double energy_total_j = 0.0;
  double energy_fragments_j = 0.0;
  double energy_control_j = 0.0;
  /// Absent for group-based schemes: their delivery time depends on the
  /// completion of every earlier group, which has no closed form here.
  std::optional<double> update_time_s;
  double mean_round_completed = 0.0;
  double mean_final_round_attempts = 0.0;
  std::optional<SfIndex> assigned_sf;
};

/// Expected outcome for a recipient at profile.distance_m.
AnalyticalOutcome analyze(const LinkProfile& profile, const SchemeConfig& scheme,
                          const ScenarioModel& model);
AnalyticalOutcome analyze(double d0, const SchemeConfig& scheme,
                          const ScenarioModel& model);

double expected_energy(double d0, const SchemeConfig& scheme,
                       const ScenarioModel& model);
double expected_update_time(double d0, const SchemeConfig& scheme,
                            const ScenarioModel& model);

/// Average of a per-distance metric over recipients uniform on a disc of
/// radius R0 (distance density 2d / R0^2).
double distance_average(const std::function<double(double)>& metric,
                        double region_radius_m, int panels = 10);

/// Quadrature nodes and weights (already including 2d/R0^2) used by
/// distance_average; lets callers reuse link profiles across schemes.
struct DistanceQuadrature {
  std::vector<double> distances_m;
  std::vector<double> weights;
};
DistanceQuadrature distance_quadrature(double region_radius_m, int panels = 10);
/// Equal weights on the grid R0 * i / points, i = 1..points.
DistanceQuadrature grid_quadrature(double region_radius_m, int points);

}  // namespace fuota
