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

#include <vector>

#include "fuota/phy.hpp"
#include "fuota/random.hpp"

namespace fuota {

/// Path-loss link: R = gamma0 * p_t * A * d^-alpha, A ~ Exp(1).
struct LinkModel {
  double path_loss_exponent = 2.5;
  double gamma0 = 1.0;
  double tx_rf_power_w = 0.025;

  void validate() const;
  /// gamma0 from antenna gains and carrier wavelength: g_t g_r lambda / 4 pi.
  static double gamma0_from(double tx_gain, double rx_gain,
                            double wavelength_m);

  bool operator==(const LinkModel&) const = default;
};

/// Poisson field of uncoordinated pure-ALOHA interferers around a recipient.
struct InterfererField {
  double intensity_per_m2 = 0.0;
  double frame_rate_hz = 0.0;
  int channel_count = 1;
  PerSf<double> sf_probabilities{};
  PerSf<double> mean_frame_duration_s{};
  double detection_epsilon = 0.01;

  void validate() const;
  bool operator==(const InterfererField&) const = default;
};

double received_power(double distance_m, double fading_coeff,
                      const LinkModel& link);

/// Unit-mean exponential power fading (Rayleigh amplitude).
double sample_fading(Rng& rng);

/// Largest distance at which an interferer still exceeds the SF12
/// sensitivity with probability detection_epsilon.
double interference_radius(const LinkModel& link, const InterfererField& field,
                           double zeta12_w);

double mean_interferer_count(double radius_m, const InterfererField& field);

/// Distances of the interferers inside the disc of radius `radius_m`.
std::vector<double> sample_interferer_positions(double radius_m,
                                                const InterfererField& field,
                                                Rng& rng);

double poisson_pmf(long n, double mean);
double poisson_interferer_pmf(long n, double radius_m,
                              const InterfererField& field);

/// Contiguous range [first, first + weights.size()) of a Poisson law holding
/// all but `tail_mass` of its probability; weights are renormalised to 1.
struct PoissonWindow {
  long first = 0;
  std::vector<double> weights;

  long last() const { return first + static_cast<long>(weights.size()) - 1; }
};

PoissonWindow poisson_window(double mean, double tail_mass);

}  // namespace fuota
