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

#include "fuota/fec.hpp"

#include <cmath>

#include "fuota/errors.hpp"

namespace fuota {

std::string_view to_string(DecoderMode mode) {
  return mode == DecoderMode::ideal ? "ideal" : "raptor";
}

void RatelessModel::validate() const {
  if (k < 1) throw ConfigError("must be >= 1", "network.fragments");
  if (failure_at_k < 0.0 || failure_at_k > 1.0)
    throw ConfigError("must lie in [0, 1]", "fec.failure_at_k");
  if (failure_beyond_k < 0.0 || failure_beyond_k >= 1.0)
    throw ConfigError("must lie in [0, 1)", "fec.failure_beyond_k");
}

double conditional_failure(long l, const RatelessModel& model) {
  if (l < model.k) return 1.0;
  if (model.mode == DecoderMode::ideal) return 0.0;
  return l == model.k ? model.failure_at_k : model.failure_beyond_k;
}

double completion_tail(long m, const RatelessModel& model) {
  if (m < model.k) return 1.0;
  if (model.mode == DecoderMode::ideal) return 0.0;
  return model.failure_at_k *
         std::pow(model.failure_beyond_k, static_cast<double>(m - model.k));
}

double completion_pmf(long m, const RatelessModel& model) {
  if (m < model.k) return 0.0;
  return completion_tail(m - 1, model) - completion_tail(m, model);
}

double expected_fragments(const RatelessModel& model) {
  if (model.mode == DecoderMode::ideal) return static_cast<double>(model.k);
  return static_cast<double>(model.k) +
         model.failure_at_k / (1.0 - model.failure_beyond_k);
}

long sample_completion_threshold(const RatelessModel& model, Rng& rng) {
  if (model.mode == DecoderMode::ideal) return model.k;
  std::bernoulli_distribution fails_at_k(model.failure_at_k);
  if (!fails_at_k(rng)) return model.k;
  // After failing at k, each further fragment succeeds w.p. 1 - failure_beyond_k.
  std::geometric_distribution<long> extra(1.0 - model.failure_beyond_k);
  return model.k + 1 + extra(rng);
}

}  // namespace fuota
