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

#include "fuota/channel.hpp"

#include <cmath>
#include <numbers>
#include <numeric>
#include <stdexcept>

#include "fuota/errors.hpp"

namespace fuota {

void LinkModel::validate() const {
  if (!(path_loss_exponent > 2.0))
    throw ConfigError("must exceed 2", "network.path_loss_exponent");
  if (!(gamma0 > 0.0)) throw ConfigError("must be > 0", "network.gamma0");
  if (!(tx_rf_power_w > 0.0)) throw ConfigError("must be > 0", "phy.tx_power_dbm");
}

double LinkModel::gamma0_from(double tx_gain, double rx_gain, double wavelength_m) {
  return tx_gain * rx_gain * wavelength_m / (4.0 * std::numbers::pi);
}

void InterfererField::validate() const {
  if (intensity_per_m2 < 0.0)
    throw ConfigError("must be >= 0", "network.interferer_intensity_per_m2");
  if (frame_rate_hz < 0.0)
    throw ConfigError("must be >= 0", "network.interferer_frame_interval_s");
  if (channel_count < 1) throw ConfigError("must be >= 1", "network.channels");
  if (!(detection_epsilon > 0.0 && detection_epsilon < 1.0))
    throw ConfigError("must lie in (0, 1)", "network.detection_epsilon");
  double total = 0.0;
  for (double p : sf_probabilities) {
    if (p < 0.0) throw ConfigError("entries must be >= 0", "network.interferer_sf_probabilities");
    total += p;
  }
  if (std::abs(total - 1.0) > 1e-9)
    throw ConfigError("must sum to 1", "network.interferer_sf_probabilities");
}

double received_power(double distance_m, double fading_coeff, const LinkModel& link) {
  if (!(distance_m > 0.0)) throw std::invalid_argument("distance must be > 0");
  if (fading_coeff < 0.0) throw std::invalid_argument("fading coefficient must be >= 0");
  return link.gamma0 * link.tx_rf_power_w * fading_coeff *
         std::pow(distance_m, -link.path_loss_exponent);
}

double sample_fading(Rng& rng) {
  std::exponential_distribution<double> unit(1.0);
  return unit(rng);
}

double interference_radius(const LinkModel& link, const InterfererField& field,
                           double zeta12_w) {
  const double scale = link.gamma0 * link.tx_rf_power_w *
                       std::log(1.0 / field.detection_epsilon) / zeta12_w;
  return std::pow(scale, 1.0 / link.path_loss_exponent);
}

double mean_interferer_count(double radius_m, const InterfererField& field) {
  return field.intensity_per_m2 * std::numbers::pi * radius_m * radius_m;
}

std::vector<double> sample_interferer_positions(double radius_m,
                                                const InterfererField& field,
                                                Rng& rng) {
  const double mean = mean_interferer_count(radius_m, field);
  std::vector<double> out;
  if (mean <= 0.0) return out;
  std::poisson_distribution<long> count(mean);
  const long n = count(rng);
  out.reserve(static_cast<std::size_t>(n));
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  // Inverse CDF of f(u) = 2u / R^2.
  for (long i = 0; i < n; ++i) out.push_back(radius_m * std::sqrt(unit(rng)));
  return out;
}

double poisson_pmf(long n, double mean) {
  if (n < 0) return 0.0;
  if (mean <= 0.0) return n == 0 ? 1.0 : 0.0;
  const double log_p = static_cast<double>(n) * std::log(mean) - mean -
                       std::lgamma(static_cast<double>(n) + 1.0);
  return std::exp(log_p);
}

double poisson_interferer_pmf(long n, double radius_m, const InterfererField& field) {
  return poisson_pmf(n, mean_interferer_count(radius_m, field));
}

PoissonWindow poisson_window(double mean, double tail_mass) {
  PoissonWindow w;
  if (mean <= 0.0) {
    w.weights = {1.0};
    return w;
  }
  const long mode = static_cast<long>(std::floor(mean));
  long lo = mode;
  long hi = mode;
  double mass = poisson_pmf(mode, mean);
  // Grow towards whichever side carries more mass until the remainder is
  // below the tolerance.
  while (1.0 - mass > tail_mass) {
    const double left = lo > 0 ? poisson_pmf(lo - 1, mean) : 0.0;
    const double right = poisson_pmf(hi + 1, mean);
    if (left <= 0.0 && right <= 0.0) break;
    if (left >= right) {
      --lo;
      mass += left;
    } else {
      ++hi;
      mass += right;
    }
  }
  w.first = lo;
  w.weights.reserve(static_cast<std::size_t>(hi - lo + 1));
  for (long n = lo; n <= hi; ++n) w.weights.push_back(poisson_pmf(n, mean));
  const double total = std::accumulate(w.weights.begin(), w.weights.end(), 0.0);
  for (double& x : w.weights) x /= total;
  return w;
}

}  // namespace fuota
