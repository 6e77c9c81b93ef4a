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

#include <benchmark/benchmark.h>

#include "fuota/analysis.hpp"
#include "fuota/config.hpp"
#include "fuota/sim.hpp"

namespace {

using namespace fuota;

const ScenarioModel& model() {
  static const ScenarioModel m = make_model(parse_config(
      {{"experiment", {{"name", "bench"}}},
       {"phy", {{"tables", FUOTA_BENCH_DATA_DIR "/lora_phy_tables_v1.json"}}}}));
  return m;
}

void BM_Airtime(benchmark::State& state) {
  const auto& phy = model().phy();
  long pl = 1;
  for (auto _ : state) {
    for (auto sf : kAllSfs) benchmark::DoNotOptimize(frame_airtime(sf, pl, phy));
    pl = pl % 222 + 1;
  }
}
BENCHMARK(BM_Airtime);

void BM_LinkProfile(benchmark::State& state) {
  const double d0 = static_cast<double>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(link_profile(d0, model()));
}
BENCHMARK(BM_LinkProfile)->Arg(100)->Arg(1000)->Unit(benchmark::kMillisecond);

void BM_AnalyzeProposed(benchmark::State& state) {
  const auto profile = link_profile(600.0, model());
  for (auto _ : state) benchmark::DoNotOptimize(analyze(profile, ProposedScheme{}, model()));
}
BENCHMARK(BM_AnalyzeProposed)->Unit(benchmark::kMicrosecond);

void BM_Session(benchmark::State& state) {
  SimConfig c;
  c.layout = Layout::grid;
  c.max_frames_factor = 200.0;
  c.scheme = state.range(0) == 0 ? SchemeConfig(ProposedScheme{})
                                 : SchemeConfig(GroupBasedScheme{GroupCriterion::energy});
  long run = 0;
  for (auto _ : state) benchmark::DoNotOptimize(run_session(c, model(), run++));
}
BENCHMARK(BM_Session)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
