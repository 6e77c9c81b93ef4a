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

#include "fuota/errors.hpp"
#include "fuota/fec.hpp"
#include "oracles.hpp"

namespace fuota {
namespace {

RatelessModel raptor() { return RatelessModel{200, 0.85, 0.567, DecoderMode::raptor}; }

TEST(Fec, ExpectedFragmentsMatchesBruteForce) {
  const double brute = testing::brute_force_expected_fragments(200, 0.85, 0.567);
  EXPECT_NEAR(brute, 201.963048499, 1e-8);
  EXPECT_NEAR(expected_fragments(raptor()), 201.963, 1e-6 + 5e-5);
  EXPECT_NEAR(expected_fragments(raptor()), brute, 1e-9);
}

TEST(Fec, SampledThresholdMeanMatches) {
  Rng rng(2024);
  const auto m = raptor();
  const int n = 1'000'000;
  double s = 0.0;
  for (int i = 0; i < n; ++i) {
    const long t = sample_completion_threshold(m, rng);
    ASSERT_GE(t, m.k);
    s += static_cast<double>(t);
  }
  EXPECT_NEAR(s / n, expected_fragments(m), 0.01);
}

TEST(Fec, PmfIsADistribution) {
  const auto m = raptor();
  double total = 0.0, mean = 0.0;
  for (long x = 0; x < 400; ++x) {
    const double p = completion_pmf(x, m);
    ASSERT_GE(p, 0.0);
    total += p;
    mean += x * p;
  }
  EXPECT_NEAR(total, 1.0, 1e-12);
  EXPECT_NEAR(mean, expected_fragments(m), 1e-9);
  EXPECT_NEAR(completion_pmf(200, m), 0.15, 1e-15);
  EXPECT_EQ(completion_pmf(199, m), 0.0);
}

TEST(Fec, TailIsProductOfConditionalFailures) {
  const auto m = raptor();
  double prod = 1.0;
  for (long l = 1; l < 260; ++l) {
    prod *= conditional_failure(l, m);
    EXPECT_NEAR(completion_tail(l, m), prod, 1e-15);
  }
}

TEST(Fec, IdealDecoderNeedsExactlyK) {
  RatelessModel m = raptor();
  m.mode = DecoderMode::ideal;
  EXPECT_EQ(expected_fragments(m), 200.0);
  EXPECT_EQ(completion_pmf(200, m), 1.0);
  Rng rng(1);
  for (int i = 0; i < 100; ++i) EXPECT_EQ(sample_completion_threshold(m, rng), 200);
}

TEST(Fec, ValidationRejectsBadProbabilities) {
  auto m = raptor();
  m.failure_beyond_k = 1.0;
  EXPECT_THROW(m.validate(), ConfigError);
  m = raptor();
  m.failure_at_k = -0.1;
  EXPECT_THROW(m.validate(), ConfigError);
  m = raptor();
  m.k = 0;
  EXPECT_THROW(m.validate(), ConfigError);
}

}  // namespace
}  // namespace fuota
