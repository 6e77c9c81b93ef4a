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

#include "fuota/report.hpp"

#include <cmath>
#include <fstream>
#include <sstream>

#include <fmt/format.h>

#include "fuota/errors.hpp"

namespace fuota {

namespace fs = std::filesystem;

namespace {

std::string cell(const std::optional<double>& v) {
  return v ? fmt::format("{:.10g}", *v) : std::string();
}
std::string cell(double v) { return fmt::format("{:.10g}", v); }

std::ofstream open_csv(const fs::path& path, const char* schema, const std::string& fp) {
  if (path.has_parent_path()) fs::create_directories(path.parent_path());
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write " + path.string());
  out << "# schema=" << schema << " fingerprint=" << fp << "\n";
  return out;
}

std::vector<std::string> split(const std::string& line) {
  std::vector<std::string> out;
  std::string field;
  std::istringstream in(line);
  while (std::getline(in, field, ',')) out.push_back(field);
  if (!line.empty() && line.back() == ',') out.emplace_back();
  return out;
}

std::optional<double> parse_cell(const std::string& text) {
  if (text.empty()) return std::nullopt;
  return std::stod(text);
}

}  // namespace

void write_distance_csv(const fs::path& path, const std::vector<DistanceRow>& rows,
                        const std::string& fp) {
  auto out = open_csv(path, kDistanceSchema, fp);
  out << "distance_m,scheme,ee_norm_analysis,ee_norm_sim,dt_hours_analysis,dt_hours_sim,"
         "ee_norm_sim_stderr,dt_hours_sim_stderr,samples\n";
  for (const auto& r : rows) {
    out << cell(r.distance_m) << ',' << r.scheme << ',' << cell(r.ee_norm_analysis) << ','
        << cell(r.ee_norm_sim) << ',' << cell(r.dt_hours_analysis) << ',' << cell(r.dt_hours_sim)
        << ',' << cell(r.ee_norm_sim_stderr) << ',' << cell(r.dt_hours_sim_stderr) << ','
        << r.samples << '\n';
  }
}

std::vector<DistanceRow> read_distance_csv(const fs::path& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot open '" + path.string() + "'", "compare");
  std::string line;
  std::getline(in, line);
  if (line.find(std::string("schema=") + kDistanceSchema) == std::string::npos)
    throw ConfigError("'" + path.string() + "' is not a per-distance table", "compare");
  std::getline(in, line);  // header
  std::vector<DistanceRow> rows;
  long line_no = 2;
  while (std::getline(in, line)) {
    ++line_no;
    if (line.empty()) continue;
    const auto f = split(line);
    if (f.size() != 9)
      throw ConfigError(fmt::format("{}:{}: expected 9 columns", path.string(), line_no), "compare");
    try {
      DistanceRow r;
      r.distance_m = std::stod(f[0]);
      r.scheme = f[1];
      r.ee_norm_analysis = parse_cell(f[2]);
      r.ee_norm_sim = parse_cell(f[3]);
      r.dt_hours_analysis = parse_cell(f[4]);
      r.dt_hours_sim = parse_cell(f[5]);
      r.ee_norm_sim_stderr = parse_cell(f[6]);
      r.dt_hours_sim_stderr = parse_cell(f[7]);
      r.samples = std::stol(f[8]);
      rows.push_back(std::move(r));
    } catch (const std::logic_error&) {
      throw ConfigError(fmt::format("{}:{}: malformed number", path.string(), line_no), "compare");
    }
  }
  return rows;
}

void write_averages_csv(const fs::path& path, const std::vector<SuiteRow>& rows,
                        const std::string& fp) {
  auto out = open_csv(path, kAverageSchema, fp);
  out << "scheme,intensity_per_m2,ee_norm_analysis,dt_hours_analysis,ee_norm_sim,"
         "ee_norm_sim_stderr,dt_hours_sim,dt_hours_sim_stderr,unreachable_fraction,"
         "incomplete_recipients,ee_fragments_norm_analysis,ee_fragments_norm_sim\n";
  for (const auto& r : rows) {
    out << r.scheme << ',' << cell(r.intensity_per_m2) << ',' << cell(r.ee_norm_analysis) << ','
        << cell(r.dt_hours_analysis) << ',' << cell(r.ee_norm_sim) << ','
        << cell(r.ee_norm_sim_stderr) << ',' << cell(r.dt_hours_sim) << ','
        << cell(r.dt_hours_sim_stderr) << ',' << cell(r.unreachable_fraction) << ','
        << r.incomplete_recipients << ',' << cell(r.ee_fragments_norm_analysis) << ','
        << cell(r.ee_fragments_norm_sim) << '\n';
  }
}

void write_sweep_csv(const fs::path& path, const std::vector<SweepRow>& rows,
                     const std::string& fp) {
  auto out = open_csv(path, kSweepSchema, fp);
  out << "w,L,avg_ee_norm,avg_dt_hours\n";
  for (const auto& r : rows)
    out << r.frames_per_round << ',' << r.first_sf << ',' << cell(r.avg_ee_norm) << ','
        << cell(r.avg_dt_hours) << '\n';
}

void write_lifetime_csv(const fs::path& path, const std::vector<LifetimeRow>& rows,
                        const std::string& fp) {
  auto out = open_csv(path, kLifetimeSchema, fp);
  out << "scheme,distance_m,uplink_sf,source,dt_hours,receive_hours_per_update,lifetime_years\n";
  for (const auto& r : rows)
    out << r.scheme << ',' << cell(r.distance_m) << ',' << r.uplink_sf << ',' << r.source << ','
        << cell(r.dt_hours) << ',' << cell(r.receive_hours_per_update) << ','
        << cell(r.lifetime_years) << '\n';
}

CompareReport compare(const std::vector<DistanceRow>& reference_rows,
                      const std::vector<DistanceRow>& candidate_rows, double tolerance) {
  CompareReport report;
  auto add = [&](const DistanceRow& r, const char* metric, std::optional<double> ref,
                 std::optional<double> cand) {
    if (!ref || !cand) return;
    CompareEntry e{r.scheme, r.distance_m, metric, *ref, *cand, 0.0, false};
    e.rel_error = *ref != 0.0 ? std::abs(*cand - *ref) / std::abs(*ref)
                              : (*cand == 0.0 ? 0.0 : INFINITY);
    e.pass = e.rel_error <= tolerance;
    report.max_rel_error = std::max(report.max_rel_error, e.rel_error);
    report.pass = report.pass && e.pass;
    report.entries.push_back(std::move(e));
  };
  for (const auto& r : reference_rows) {
    for (const auto& c : candidate_rows) {
      if (c.scheme != r.scheme ||
          std::abs(c.distance_m - r.distance_m) > 1e-6 * std::max(1.0, r.distance_m))
        continue;
      add(r, "ee_norm", r.ee_norm_analysis ? r.ee_norm_analysis : r.ee_norm_sim,
          c.ee_norm_sim ? c.ee_norm_sim : c.ee_norm_analysis);
      add(r, "dt_hours", r.dt_hours_analysis ? r.dt_hours_analysis : r.dt_hours_sim,
          c.dt_hours_sim ? c.dt_hours_sim : c.dt_hours_analysis);
      break;
    }
  }
  if (report.entries.empty()) report.pass = false;
  return report;
}

CompareReport compare(const fs::path& analysis_csv, const fs::path& sim_csv, double tolerance) {
  return compare(read_distance_csv(analysis_csv), read_distance_csv(sim_csv), tolerance);
}

}  // namespace fuota
