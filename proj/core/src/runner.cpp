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

#include "fuota/runner.hpp"

#include <cmath>
#include <fstream>
#include <ostream>

#include <fmt/format.h>

#include "fuota/analysis.hpp"
#include "fuota/errors.hpp"

namespace fuota {

namespace fs = std::filesystem;
using nlohmann::json;

void apply_overrides(LoadedConfig& config, const RunOverrides& o) {
  auto& e = config.experiment;
  if (o.seed) e.seed = *o.seed;
  if (o.runs) {
    if (*o.runs < 1) throw ConfigError("must be >= 1", "--runs");
    e.runs = *o.runs;
  }
  if (o.mode) e.mode = *o.mode;
  if (o.out_dir) e.output_dir = o.out_dir->string();
}

namespace {

EvalMode eval_mode(RunMode mode) {
  switch (mode) {
    case RunMode::analysis: return EvalMode::analysis;
    case RunMode::simulate: return EvalMode::simulate;
    case RunMode::both: break;
  }
  return EvalMode::both;
}

std::vector<double> report_distances(const ExperimentSpec& e, double r0) {
  std::vector<double> d;
  if (e.layout == Layout::grid) {
    for (int i = 1; i <= e.grid_points; ++i) d.push_back(r0 * i / e.grid_points);
  } else {
    for (int b = 0; b < e.distance_bins; ++b) d.push_back(r0 * (b + 0.5) / e.distance_bins);
  }
  return d;
}

struct DistanceTables {
  std::vector<DistanceRow> rows;
  std::vector<SuiteRow> averages;
  bool incomplete = false;
};

DistanceTables distance_tables(const LoadedConfig& config, bool with_analysis, bool with_sim,
                               std::ostream* log) {
  const auto& e = config.experiment;
  const auto model = make_model(config);
  const double norm = model.normalization_energy_j();
  const auto distances = report_distances(e, model.network().region_radius_m);

  std::vector<LinkProfile> profiles;
  if (with_analysis)
    for (double d : distances) profiles.push_back(link_profile(d, model));

  DistanceTables out;
  if (with_analysis) {
    out.averages = evaluate_suite({e.schemes}, model, EvalMode::analysis,
                                  make_sim_config(config, e.schemes.front()), e.quadrature_panels);
  } else {
    for (const auto& s : e.schemes) {
      SuiteRow row;
      row.scheme = scheme_label(s);
      row.intensity_per_m2 = model.network().interferer_intensity_per_m2;
      out.averages.push_back(row);
    }
  }

  for (std::size_t s = 0; s < e.schemes.size(); ++s) {
    const auto& scheme = e.schemes[s];
    const std::string label = scheme_label(scheme);
    std::vector<DistanceRow> rows(distances.size());
    for (std::size_t i = 0; i < distances.size(); ++i) {
      rows[i].distance_m = distances[i];
      rows[i].scheme = label;
    }
    if (with_analysis) {
      for (std::size_t i = 0; i < distances.size(); ++i) {
        try {
          const auto a = analyze(profiles[i], scheme, model);
          rows[i].ee_norm_analysis = a.energy_total_j / norm;
          if (a.update_time_s) rows[i].dt_hours_analysis = *a.update_time_s / 3600.0;
        } catch (const UnreachableRecipient&) {
        }
      }
    }
    if (with_sim) {
      if (log) *log << fmt::format("simulating {} ({} runs)\n", label, e.runs) << std::flush;
      const auto r = run_experiment(make_sim_config(config, scheme), model);
      for (std::size_t i = 0; i < distances.size() && i < r.bins.size(); ++i) {
        const auto& b = r.bins[i];
        rows[i].samples = b.samples;
        if (b.samples == 0) continue;
        rows[i].ee_norm_sim = b.ee_norm_mean;
        rows[i].ee_norm_sim_stderr = b.ee_norm_stderr;
        rows[i].dt_hours_sim = b.dt_hours_mean;
        rows[i].dt_hours_sim_stderr = b.dt_hours_stderr;
      }
      auto& avg = out.averages[s];
      avg.ee_norm_sim = r.avg_ee_norm;
      avg.ee_norm_sim_stderr = r.avg_ee_norm_stderr;
      avg.ee_fragments_norm_sim = r.avg_ee_fragments_norm;
      avg.dt_hours_sim = r.avg_dt_hours;
      avg.dt_hours_sim_stderr = r.avg_dt_hours_stderr;
      avg.incomplete_recipients = r.incomplete_recipients;
      if (r.incomplete_recipients > 0) {
        out.incomplete = true;
        if (log)
          *log << fmt::format("warning: {} recipients of {} did not complete\n",
                              r.incomplete_recipients, label);
      }
    }
    out.rows.insert(out.rows.end(), rows.begin(), rows.end());
  }
  return out;
}

DistanceQuadrature averaging_nodes(const ExperimentSpec& e, double r0) {
  return e.layout == Layout::grid ? grid_quadrature(r0, e.grid_points)
                                  : distance_quadrature(r0, e.quadrature_panels);
}

bool wants_analysis(RunMode m) { return m != RunMode::simulate; }
bool wants_sim(RunMode m) { return m != RunMode::analysis; }

fs::path output_dir(const LoadedConfig& config) {
  fs::path dir(config.experiment.output_dir);
  fs::create_directories(dir);
  return dir;
}

}  // namespace

std::vector<DistanceRow> per_distance_rows(const LoadedConfig& config, bool with_analysis,
                                           bool with_sim, bool& incomplete) {
  auto t = distance_tables(config, with_analysis, with_sim, nullptr);
  incomplete = t.incomplete;
  return t.rows;
}

int run_distance_experiment(const LoadedConfig& config, std::ostream& log) {
  const auto mode = config.experiment.mode;
  const auto dir = output_dir(config);
  const auto fp = fingerprint(config);
  auto t = distance_tables(config, wants_analysis(mode), wants_sim(mode), &log);
  write_distance_csv(dir / "per_distance.csv", t.rows, fp);
  write_averages_csv(dir / "averages.csv", t.averages, fp);
  std::vector<std::string> artifacts{"per_distance.csv", "averages.csv"};
  for (const auto& a : t.averages) {
    log << fmt::format("{:<24} EE {:>10} DT(h) {:>10}\n", a.scheme,
                       a.ee_norm_sim ? fmt::format("{:.3f}", *a.ee_norm_sim)
                       : a.ee_norm_analysis ? fmt::format("{:.3f}", *a.ee_norm_analysis)
                                            : std::string("-"),
                       a.dt_hours_sim ? fmt::format("{:.2f}", *a.dt_hours_sim)
                       : a.dt_hours_analysis ? fmt::format("{:.2f}", *a.dt_hours_analysis)
                                             : std::string("-"));
  }
  int code = t.incomplete ? kExitIncompleteSimulation : kExitOk;
  if (!config.experiment.traffic_intensities.empty()) {
    const int traffic = run_traffic(config, log);
    if (traffic != kExitOk) code = traffic;
    artifacts.push_back("traffic.csv");
  }
  const char* verb = config.experiment.mode == RunMode::analysis ? "analyze" : "simulate";
  write_manifest(dir / "manifest.json", config, verb, artifacts);
  return code;
}

std::vector<SweepRow> sweep_rows(const LoadedConfig& config) {
  const auto& e = config.experiment;
  if (!e.sweep) throw ConfigError("no sweep configured", "experiment.sweep");
  const auto model = make_model(config);
  const double norm = model.normalization_energy_j();
  const auto quad = averaging_nodes(e, model.network().region_radius_m);
  std::vector<LinkProfile> profiles;
  if (wants_analysis(e.mode))
    for (double d : quad.distances_m) profiles.push_back(link_profile(d, model));

  std::vector<SweepRow> rows;
  for (int first : e.sweep->first_sfs) {
    for (long w : e.sweep->frames_per_round) {
      const ProposedScheme scheme{SfIndex(first), SfIndex(e.sweep->last_sf), w};
      SweepRow row{w, first, 0.0, 0.0};
      if (wants_analysis(e.mode)) {
        for (std::size_t i = 0; i < profiles.size(); ++i) {
          const auto a = analyze(profiles[i], scheme, model);
          row.avg_ee_norm += quad.weights[i] * a.energy_total_j / norm;
          row.avg_dt_hours += quad.weights[i] * a.update_time_s.value_or(0.0) / 3600.0;
        }
      } else {
        const auto r = run_experiment(make_sim_config(config, scheme), model);
        row.avg_ee_norm = r.avg_ee_norm;
        row.avg_dt_hours = r.avg_dt_hours;
      }
      rows.push_back(row);
    }
  }
  return rows;
}

int run_sweep(const LoadedConfig& config, std::ostream& log) {
  const auto dir = output_dir(config);
  const auto rows = sweep_rows(config);
  write_sweep_csv(dir / "sweep.csv", rows, fingerprint(config));
  write_manifest(dir / "manifest.json", config, "sweep", {"sweep.csv"});
  log << fmt::format("{} sweep points written to {}\n", rows.size(), (dir / "sweep.csv").string());
  return kExitOk;
}

std::vector<LifetimeRow> lifetime_rows(const LoadedConfig& config, bool from_simulation,
                                       bool& incomplete) {
  const auto& e = config.experiment;
  const auto& spec = e.lifetime;
  const auto model = make_model(config);
  const double r0 = model.network().region_radius_m;
  const double p_r = model.phy().rx_power_w;
  incomplete = false;

  std::vector<double> probes;
  for (const auto& p : spec.points) probes.push_back(r0 * p.distance_fraction);

  std::vector<LifetimeRow> rows;
  for (const auto& scheme : spec.schemes) {
    std::optional<ExperimentResult> sim;
    if (from_simulation) {
      auto cfg = make_sim_config(config, scheme);
      cfg.probe_distances_m = probes;
      sim = run_experiment(cfg, model);
    }
    for (std::size_t i = 0; i < spec.points.size(); ++i) {
      LifetimeRow row;
      row.scheme = scheme_label(scheme);
      row.distance_m = probes[i];
      row.uplink_sf = spec.points[i].uplink_sf;
      double receive_j = 0.0;
      if (sim) {
        const auto& p = sim->probes[i];
        row.source = "sim";
        if (p.samples < sim->runs) incomplete = true;
        if (p.samples == 0) continue;
        receive_j = p.receive_energy_j;
        row.dt_hours = p.dt_hours_mean;
      } else {
        row.source = "analysis";
        try {
          const auto a = analyze(probes[i], scheme, model);
          receive_j = a.energy_fragments_j + p_r * model.network().control_airtime_s;
          row.dt_hours = a.update_time_s ? *a.update_time_s / 3600.0 : NAN;
        } catch (const UnreachableRecipient&) {
          continue;
        }
      }
      row.receive_hours_per_update = receive_hours(receive_j, p_r);
      auto duty = spec.duty;
      duty.uplink_sf = row.uplink_sf;
      row.lifetime_years = battery_lifetime_years(duty, row.receive_hours_per_update, model.phy());
      rows.push_back(row);
    }
  }
  return rows;
}

int run_lifetime(const LoadedConfig& config, std::ostream& log) {
  const auto dir = output_dir(config);
  bool incomplete = false;
  const auto rows = lifetime_rows(config, wants_sim(config.experiment.mode), incomplete);
  write_lifetime_csv(dir / "lifetime.csv", rows, fingerprint(config));
  write_manifest(dir / "manifest.json", config, "lifetime", {"lifetime.csv"});
  for (const auto& r : rows)
    log << fmt::format("{:<24} d={:>6.0f} m  DT {:>7.2f} h  R_u {:.3f} h  LT {:.2f} y\n", r.scheme,
                       r.distance_m, r.dt_hours, r.receive_hours_per_update, r.lifetime_years);
  return incomplete ? kExitIncompleteSimulation : kExitOk;
}

int run_traffic(const LoadedConfig& config, std::ostream& log) {
  const auto& e = config.experiment;
  if (e.traffic_intensities.empty())
    throw ConfigError("no intensities configured", "experiment.traffic_intensities");
  const auto dir = output_dir(config);
  const auto model = make_model(config);
  SimConfig sim = make_sim_config(config, e.schemes.front());
  const auto rows = traffic_sweep({e.schemes}, model, eval_mode(e.mode), sim,
                                  e.traffic_intensities, e.quadrature_panels);
  write_averages_csv(dir / "traffic.csv", rows, fingerprint(config));
  bool incomplete = false;
  for (const auto& r : rows) {
    incomplete = incomplete || r.incomplete_recipients > 0;
    log << fmt::format("lambda={:<8g} {:<24} EE {} DT {}\n", r.intensity_per_m2, r.scheme,
                       r.ee_norm_sim ? fmt::format("{:.3f}", *r.ee_norm_sim)
                       : r.ee_norm_analysis ? fmt::format("{:.3f}", *r.ee_norm_analysis)
                                            : std::string("-"),
                       r.dt_hours_sim ? fmt::format("{:.2f}", *r.dt_hours_sim)
                       : r.dt_hours_analysis ? fmt::format("{:.2f}", *r.dt_hours_analysis)
                                             : std::string("-"));
  }
  write_manifest(dir / "manifest.json", config, "traffic", {"traffic.csv"});
  return incomplete ? kExitIncompleteSimulation : kExitOk;
}

void write_manifest(const fs::path& path, const LoadedConfig& config, const std::string& verb,
                    const std::vector<std::string>& artifacts) {
  const auto& e = config.experiment;
  json manifest = {{"tool", "fuota"},
                   {"version", "0.1.0"},
                   {"verb", verb},
                   {"experiment", e.name},
                   {"fingerprint", fingerprint(config)},
                   {"seed", e.seed},
                   {"runs", e.runs},
                   {"artifacts", artifacts},
                   {"config", to_json(config)}};
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write " + path.string());
  out << manifest.dump(2) << "\n";
}

}  // namespace fuota
