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

#include <string_view>

#include "fuota/random.hpp"

namespace fuota {

enum class DecoderMode { ideal, raptor };

std::string_view to_string(DecoderMode mode);

/// Statistical model of a rateless decoder: how many successfully received
/// coded fragments it takes before decoding succeeds.
struct RatelessModel {
  long k = 200;
  double failure_at_k = 0.85;
  double failure_beyond_k = 0.567;
  DecoderMode mode = DecoderMode::raptor;

  void validate() const;
  bool operator==(const RatelessModel&) const = default;
};

/// Probability that the decoding attempt on the l-th fragment fails given
/// that every earlier attempt failed.
double conditional_failure(long l, const RatelessModel& model);

/// P(decoding needs exactly m fragments).
double completion_pmf(long m, const RatelessModel& model);

/// P(decoding needs more than m fragments).
double completion_tail(long m, const RatelessModel& model);

/// Mean number of fragments needed (closed form).
double expected_fragments(const RatelessModel& model);

long sample_completion_threshold(const RatelessModel& model, Rng& rng);

}  // namespace fuota
