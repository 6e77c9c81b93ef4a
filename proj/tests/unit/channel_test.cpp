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

#include <gtest/gtest.h>

#include <cmath>
#include <numbers>
#include <numeric>

#include "fuota/channel.hpp"
#include "oracles.hpp"

namespace fuota {
namespace {

using testing::bisect_interference_radius;
using testing::reference_model;

TEST(Channel, InterferenceRadiusMatchesBisection) {
  const auto m = reference_model();
  const auto& link = m.link();
  const double zeta12 = m.phy().sensitivity_w(SfIndex(12));
  const double r = interference_radius(link, m.field(), zeta12);
  const double oracle = bisect_interference_radius(link.gamma0 * link.tx_rf_power_w,
                                                   link.path_loss_exponent, zeta12,
                                                   m.field().detection_epsilon);
  EXPECT_NEAR(r, oracle, 1e-6 * oracle);
  EXPECT_NEAR(m.interference_radius_m(), 1746.897189, 1e-5);
}

TEST(Channel, ReceivedPowerFollowsPathLoss) {
  LinkModel link{2.5, 2e-8, 0.025};
  EXPECT_DOUBLE_EQ(received_power(100.0, 1.0, link), 2e-8 * 0.025 * std::pow(100.0, -2.5));
  EXPECT_NEAR(received_power(200.0, 1.0, link) / received_power(100.0, 1.0, link),
              std::pow(2.0, -2.5), 1e-14);
  EXPECT_DOUBLE_EQ(received_power(100.0, 3.0, link), 3.0 * received_power(100.0, 1.0, link));
}

TEST(Channel, FadingHasUnitMeanAndVariance) {
  Rng rng(11);
  const int n = 1'000'000;
  double s = 0.0, s2 = 0.0;
  for (int i = 0; i < n; ++i) {
    const double a = sample_fading(rng);
    ASSERT_GE(a, 0.0);
    s += a;
    s2 += a * a;
  }
  const double mean = s / n;
  const double var = s2 / n - mean * mean;
  // 4 sigma bands: sd(mean) = 1e-3, sd(var) ~ sqrt(8/n)
  EXPECT_NEAR(mean, 1.0, 4e-3);
  EXPECT_NEAR(var, 1.0, 4 * std::sqrt(8.0 / n));
}

TEST(Channel, InterfererPositionsAreUniformOnDisc) {
  InterfererField field;
  field.intensity_per_m2 = 1e-3;
  const double r = 500.0;
  Rng rng(5);
  long count = 0;
  double s1 = 0.0, s2 = 0.0;
  const int draws = 2000;
  for (int i = 0; i < draws; ++i) {
    for (double d : sample_interferer_positions(r, field, rng)) {
      ASSERT_GE(d, 0.0);
      ASSERT_LE(d, r);
      ++count;
      s1 += d;
      s2 += d * d;
    }
  }
  const double mean_n = mean_interferer_count(r, field);
  EXPECT_NEAR(static_cast<double>(count) / draws, mean_n, 4 * std::sqrt(mean_n / draws));
  EXPECT_NEAR(s1 / count, 2.0 * r / 3.0, 0.01 * r);
  EXPECT_NEAR(s2 / count, r * r / 2.0, 0.01 * r * r);
}

TEST(Channel, PoissonPmfSumsToOne) {
  for (double mean : {0.3, 4.0, 47.9, 480.0}) {
    double s = 0.0, first = 0.0;
    for (long n = 0; n < 2000; ++n) {
      s += poisson_pmf(n, mean);
      first += n * poisson_pmf(n, mean);
    }
    EXPECT_NEAR(s, 1.0, 1e-12);
    EXPECT_NEAR(first, mean, 1e-9 * mean);
  }
  EXPECT_EQ(poisson_pmf(0, 0.0), 1.0);
  EXPECT_EQ(poisson_pmf(3, 0.0), 0.0);
  EXPECT_EQ(poisson_pmf(-1, 2.0), 0.0);
  EXPECT_NEAR(poisson_pmf(2, 3.0), 4.5 * std::exp(-3.0), 1e-15);
}

TEST(Channel, PoissonWindowHoldsRequestedMass) {
  for (double mean : {0.0, 0.5, 12.0, 479.2}) {
    const auto w = poisson_window(mean, 1e-6);
    double raw = 0.0;
    for (long n = w.first; n <= w.last(); ++n) raw += poisson_pmf(n, mean);
    EXPECT_GE(raw, 1.0 - 1e-6);
    EXPECT_NEAR(std::accumulate(w.weights.begin(), w.weights.end(), 0.0), 1.0, 1e-12);
    EXPECT_LE(static_cast<double>(w.first), mean + 1.0);
    EXPECT_GE(static_cast<double>(w.last()), std::floor(mean));
  }
}

TEST(Channel, MeanInterfererCountIsAreaTimesIntensity) {
  const auto m = reference_model();
  const double r = m.interference_radius_m();
  EXPECT_NEAR(m.mean_interferers(), 5e-5 * std::numbers::pi * r * r, 1e-9);
}

}  // namespace
}  // namespace fuota
