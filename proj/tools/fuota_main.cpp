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

#include <cstdint>
#include <exception>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include "fuota/errors.hpp"
#include "fuota/runner.hpp"

namespace {

using namespace fuota;

struct Common {
  std::string config;
  std::optional<std::uint64_t> seed;
  std::optional<long> runs;
  std::optional<std::string> out;
  std::optional<std::string> mode;
};

void add_common(CLI::App* cmd, Common& c, bool with_mode) {
  cmd->add_option("--config", c.config, "Experiment config (JSON, // comments allowed)")
      ->required();
  cmd->add_option("--seed", c.seed, "Master seed");
  cmd->add_option("--runs", c.runs, "Simulation runs");
  cmd->add_option("--out", c.out, "Output directory");
  if (with_mode)
    cmd->add_option("--mode", c.mode, "analysis | simulate | both")
        ->check(CLI::IsMember({"analysis", "simulate", "both"}));
}

RunMode to_mode(const std::string& s) {
  if (s == "analysis") return RunMode::analysis;
  if (s == "simulate") return RunMode::simulate;
  return RunMode::both;
}

LoadedConfig load(const Common& c) {
  auto config = load_config(c.config);
  RunOverrides o;
  o.seed = c.seed;
  o.runs = c.runs;
  if (c.mode) o.mode = to_mode(*c.mode);
  if (c.out) o.out_dir = *c.out;
  apply_overrides(config, o);
  return config;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Sequential-SF firmware-update multicast: analysis and simulation"};
  app.require_subcommand(1);

  Common analyze_opts, simulate_opts, sweep_opts, lifetime_opts;
  auto* analyze = app.add_subcommand("analyze", "Analytical per-distance table and averages");
  add_common(analyze, analyze_opts, false);
  auto* simulate = app.add_subcommand("simulate", "Monte Carlo sessions (optionally with analysis)");
  add_common(simulate, simulate_opts, true);
  auto* sweep = app.add_subcommand("sweep", "(w, L) sweep of the proposed scheme");
  add_common(sweep, sweep_opts, true);
  auto* lifetime = app.add_subcommand("lifetime", "Battery lifetime table");
  add_common(lifetime, lifetime_opts, true);

  std::string reference, candidate;
  double tolerance = 0.10;
  auto* cmp = app.add_subcommand("compare", "Relative errors between two per-distance tables");
  cmp->add_option("reference", reference, "Per-distance CSV (analysis columns preferred)")
      ->required();
  cmp->add_option("candidate", candidate, "Per-distance CSV (simulation columns preferred)")
      ->required();
  cmp->add_option("--tol", tolerance, "Relative tolerance")->check(CLI::PositiveNumber);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitConfigError;
  }

  try {
    if (*analyze) {
      auto config = load(analyze_opts);
      config.experiment.mode = RunMode::analysis;
      return run_distance_experiment(config, std::cout);
    }
    if (*simulate) {
      auto config = load(simulate_opts);
      if (config.experiment.mode == RunMode::analysis) config.experiment.mode = RunMode::simulate;
      return run_distance_experiment(config, std::cout);
    }
    if (*sweep) return run_sweep(load(sweep_opts), std::cout);
    if (*lifetime) return run_lifetime(load(lifetime_opts), std::cout);
    if (*cmp) {
      const auto report = compare(reference, candidate, tolerance);
      for (const auto& e : report.entries) {
        std::cout << e.scheme << ',' << e.distance_m << ',' << e.metric << ',' << e.reference
                  << ',' << e.candidate << ',' << e.rel_error << ',' << (e.pass ? "ok" : "FAIL")
                  << '\n';
      }
      std::cout << "max relative error " << report.max_rel_error << " ("
                << report.entries.size() << " values, tolerance " << tolerance << ")\n";
      return report.pass ? kExitOk : 1;
    }
  } catch (const ConfigError& e) {
    std::cerr << "config error: " << e.what() << '\n';
    return kExitConfigError;
  } catch (const NumericalError& e) {
    std::cerr << "numerical failure: " << e.what() << '\n';
    return kExitNumericalFailure;
  } catch (const UnreachableRecipient& e) {
    std::cerr << "numerical failure: " << e.what() << '\n';
    return kExitNumericalFailure;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }
  return kExitOk;
}
