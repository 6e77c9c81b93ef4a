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

#include <algorithm>
#include <chrono>
#include <cmath>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <limits>
#include <map>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include <fmt/core.h>

#include "fuota/analysis.hpp"
#include "fuota/benchmarks.hpp"
#include "fuota/config.hpp"
#include "fuota/fec.hpp"
#include "fuota/lifetime.hpp"
#include "fuota/runner.hpp"
#include "fuota/sim.hpp"
#include "oracles.hpp"

namespace {

using namespace fuota;
namespace fs = std::filesystem;

struct Check {
  bool ok = true;
  std::vector<std::string> notes;

  void expect(bool cond, const std::string& what) {
    if (!cond) {
      ok = false;
      notes.push_back("miss: " + what);
    }
  }
  void note(const std::string& what) { notes.push_back(what); }
};

double rel(double a, double ref) { return std::abs(a - ref) / std::abs(ref); }

LoadedConfig shipped(const std::string& name) {
  return load_config(fs::path(FUOTA_TEST_CONFIG_DIR) / name);
}

// Analysis against simulation, proposed scheme, grid layout.
Check agreement() {
  Check c;
  const auto model = testing::reference_model();
  SimConfig sim;
  sim.scheme = ProposedScheme{};
  sim.runs = 100;
  sim.layout = Layout::grid;
  sim.max_frames_factor = 200.0;
  const auto t0 = std::chrono::steady_clock::now();
  const auto result = run_experiment(sim, model);
  const double secs =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  const double norm = model.normalization_energy_j();
  double worst_ee = 0.0, worst_dt = 0.0;
  for (const auto& bin : result.bins) {
    const auto a = analyze(bin.center_m, ProposedScheme{}, model);
    const double ee = a.energy_total_j / norm;
    const double dt = *a.update_time_s / 3600.0;
    const double e_ee = rel(bin.ee_norm_mean, ee);
    const double e_dt = rel(bin.dt_hours_mean, dt);
    worst_ee = std::max(worst_ee, e_ee);
    worst_dt = std::max(worst_dt, e_dt);
    c.note(fmt::format("d={:>5.0f} n={:>4} EE sim {:.3f} ana {:.3f} ({:+.2f}%)  DT sim {:.3f} ana "
                       "{:.3f} ({:+.2f}%)",
                       bin.center_m, bin.samples, bin.ee_norm_mean, ee,
                       100 * (bin.ee_norm_mean / ee - 1), bin.dt_hours_mean, dt,
                       100 * (bin.dt_hours_mean / dt - 1)));
    c.expect(bin.samples == sim.runs * model.network().recipients / sim.grid_points,
             fmt::format("bin {} has {} completed samples", bin.center_m, bin.samples));
    c.expect(e_ee <= 0.10 && e_dt <= 0.10, fmt::format("bin {} outside 10%", bin.center_m));
  }
  c.note(fmt::format("max relative error EE {:.2f}% DT {:.2f}%, {} runs x {} nodes in {:.1f} s",
                     100 * worst_ee, 100 * worst_dt, sim.runs, model.network().recipients, secs));
  c.expect(secs <= 600.0, "runtime above 10 min");
  return c;
}

Check decode_overhead() {
  Check c;
  const RatelessModel m{200, 0.85, 0.567, DecoderMode::raptor};
  const double closed = expected_fragments(m);
  const double brute = testing::brute_force_expected_fragments(200, 0.85, 0.567);
  c.expect(std::abs(closed - brute) <= 1e-6, "closed form vs brute-force sum");
  c.expect(std::abs(closed - 201.963) <= 1e-6 + 5e-5, "closed form vs 201.963");
  Rng rng(20240611);
  double s = 0.0;
  const int n = 1'000'000;
  for (int i = 0; i < n; ++i) s += static_cast<double>(sample_completion_threshold(m, rng));
  c.expect(std::abs(s / n - closed) <= 0.01, "sampled mean");
  c.note(fmt::format("closed {:.9f} brute {:.9f} sampled {:.5f}", closed, brute, s / n));
  return c;
}

Check airtime() {
  Check c;
  const auto phy = testing::reference_model().phy();
  const std::pair<int, int> cases[] = {{7, 10},  {7, 50},  {7, 222}, {8, 50},  {8, 1},   {9, 50},
                                       {9, 100}, {10, 50}, {10, 12}, {11, 50}, {12, 50}, {12, 12}};
  double worst = 0.0;
  for (auto [sf, pl] : cases) {
    const SfIndex s(sf);
    const double diff = std::abs(frame_airtime(s, pl, phy) - testing::semtech_airtime_s(sf, pl));
    worst = std::max(worst, diff / symbol_duration(s, phy));
    c.expect(diff <= symbol_duration(s, phy), fmt::format("SF{} {} B", sf, pl));
  }
  c.note(fmt::format("12 pairs, worst difference {:.3g} symbols", worst));
  return c;
}

Check degenerate() {
  Check c;
  const auto silent = testing::model_with([](NetworkConfig& n) {
    n.interferer_frame_interval_s = std::numeric_limits<double>::infinity();
  });
  const auto& l = silent.link();
  double worst = 0.0;
  for (double d0 = 50.0; d0 <= 1000.0; d0 += 50.0)
    for (auto sf : kAllSfs)
      for (long n : {0L, 1L, 10L, 100L, 1000L}) {
        const double closed = 1.0 - std::exp(-silent.phy().sensitivity_w(sf) *
                                             std::pow(d0, l.path_loss_exponent) /
                                             (l.gamma0 * l.tx_rf_power_w));
        worst = std::max(worst, std::abs(preamble_failure(d0, n, sf, silent) - closed));
      }
  c.expect(worst <= 1e-9, "silent-interferer preamble failure");
  c.note(fmt::format("no interferer traffic: max |P_f - closed form| = {:.2g}", worst));

  const auto quiet = testing::model_with([](NetworkConfig& n) {
    n.interferer_intensity_per_m2 = 0.0;
    n.proposed_decoder = DecoderMode::ideal;
  });
  const double k = static_cast<double>(quiet.network().fragments);
  const double expect_e = k * quiet.frame_energy_j(SfIndex(7)) + quiet.control_energy_j();
  const double expect_t = k * quiet.cycle_time_s(SfIndex(7));
  const double d0 = 0.01;
  const auto a = analyze(d0, ProposedScheme{}, quiet);
  c.expect(rel(a.energy_total_j, expect_e) <= 1e-9, "analysis energy k e_L + E_C");
  c.expect(rel(*a.update_time_s, expect_t) <= 1e-9, "analysis completion at frame k");
  SimConfig sim;
  const std::vector<double> d(10, d0);
  Rng rng(1);
  const auto s = run_session(sim, quiet, d, rng);
  bool exact = s.transmissions == quiet.network().fragments;
  for (const auto& r : s.recipients)
    exact = exact && r.completed && r.full_attempts[0] == quiet.network().fragments &&
            std::abs(r.energy_j - expect_e) <= 1e-12 * expect_e &&
            std::abs(r.completion_time_s - expect_t) <= 1e-9 * expect_t;
  c.expect(exact, "simulated lossless session");
  c.note(fmt::format("no interferers, ideal code: analysis EE {:.9g} J (expect {:.9g}), sim "
                     "{} frames",
                     a.energy_total_j, expect_e, s.transmissions));
  return c;
}

std::map<std::string, SuiteRow> by_scheme(const std::vector<SuiteRow>& rows) {
  std::map<std::string, SuiteRow> m;
  for (const auto& r : rows) m[r.scheme.rfind("Proposed", 0) == 0 ? "Proposed" : r.scheme] = r;
  return m;
}

Check table_two() {
  Check c;
  const auto config = shipped("table2.json");
  const auto model = make_model(config);
  SimConfig sim = make_sim_config(config, ProposedScheme{});
  const auto rows = by_scheme(
      evaluate_suite({config.experiment.schemes}, model, EvalMode::both, sim,
                     config.experiment.quadrature_panels));
  const std::map<std::string, std::pair<double, double>> target = {
      {"Proposed", {11.6, 15.3}}, {"FSF-10", {13.4, 24.2}}, {"FSF-11", {16.3, 17.0}},
      {"FSF-12", {26.5, 19.5}},   {"GB-E", {8.7, 36.4}},    {"GB-L", {10.7, 28.3}}};

  auto opt = [](const std::optional<double>& v) { return v ? fmt::format("{:7.2f}", *v) : "      -"; };
  for (const auto& [name, ref] : target) {
    const auto& r = rows.at(name);
    c.note(fmt::format("{:<8} EE total ana {} sim {} | EE fragments ana {} sim {} (ref {:5.1f}) "
                       "| DT ana {} sim {} (ref {:5.1f})",
                       name, opt(r.ee_norm_analysis), opt(r.ee_norm_sim),
                       opt(r.ee_fragments_norm_analysis), opt(r.ee_fragments_norm_sim), ref.first,
                       opt(r.dt_hours_analysis), opt(r.dt_hours_sim), ref.second));
    c.expect(r.incomplete_recipients == 0, name + " has incomplete recipients");
  }

  // orderings: EE from both routes, DT from simulation (no closed form for GB)
  const auto& p = rows.at("Proposed");
  for (const auto& other : {"FSF-10", "FSF-11", "FSF-12", "GB-E", "GB-L"})
    c.expect(*p.dt_hours_sim < *rows.at(other).dt_hours_sim,
             std::string("DT(Proposed) < DT(") + other + ")");
  for (const auto& fsf : {"FSF-10", "FSF-11", "FSF-12"}) {
    c.expect(*p.ee_norm_sim < *rows.at(fsf).ee_norm_sim, std::string("sim EE(Proposed) < EE(") + fsf + ")");
    c.expect(*p.ee_norm_analysis < *rows.at(fsf).ee_norm_analysis,
             std::string("analysis EE(Proposed) < EE(") + fsf + ")");
  }
  c.expect(*rows.at("GB-E").ee_norm_sim < *p.ee_norm_sim, "sim EE(GB-E) < EE(Proposed)");
  c.expect(*rows.at("GB-E").ee_norm_analysis < *p.ee_norm_analysis,
           "analysis EE(GB-E) < EE(Proposed)");

  // values within 25%: fragment energy against the EE row, simulated DT
  for (const auto& [name, ref] : target) {
    const auto& r = rows.at(name);
    const double ee = *r.ee_fragments_norm_sim;
    const double dt = *r.dt_hours_sim;
    c.expect(rel(ee, ref.first) <= 0.25,
             fmt::format("{} EE {:.2f} vs {:.1f} ({:+.0f}%)", name, ee, ref.first,
                         100 * (ee / ref.first - 1)));
    c.expect(rel(dt, ref.second) <= 0.25,
             fmt::format("{} DT {:.2f} vs {:.1f} ({:+.0f}%)", name, dt, ref.second,
                         100 * (dt / ref.second - 1)));
  }
  return c;
}

Check sweep_shape() {
  Check c;
  const auto config = shipped("fig3.json");
  const auto rows = sweep_rows(config);
  std::map<int, std::vector<SweepRow>> by_l;
  for (const auto& r : rows) by_l[r.first_sf].push_back(r);
  for (auto& [l, v] : by_l)
    std::sort(v.begin(), v.end(),
              [](const SweepRow& a, const SweepRow& b) { return a.frames_per_round < b.frames_per_round; });

  const auto& l7 = by_l.at(7);
  std::size_t arg = 0;
  for (std::size_t i = 1; i < l7.size(); ++i)
    if (l7[i].avg_dt_hours < l7[arg].avg_dt_hours) arg = i;
  c.expect(arg > 0 && arg + 1 < l7.size(), "L=7 DT minimum is interior");
  bool unimodal = true;
  for (std::size_t i = 1; i < l7.size(); ++i) {
    if (i <= arg) unimodal = unimodal && l7[i].avg_dt_hours <= l7[i - 1].avg_dt_hours;
    else unimodal = unimodal && l7[i].avg_dt_hours >= l7[i - 1].avg_dt_hours;
  }
  c.expect(unimodal, "L=7 DT falls to the minimum and rises after it");
  c.note(fmt::format("L=7 DT minimum {:.2f} h at w={} (w=50: {:.2f} h, w=1000: {:.2f} h)",
                     l7[arg].avg_dt_hours, l7[arg].frames_per_round, l7.front().avg_dt_hours,
                     l7.back().avg_dt_hours));

  int violations = 0;
  double worst = 0.0;
  for (std::size_t i = 0; i < l7.size(); ++i) {
    for (int l = 7; l < 11; ++l) {
      const double lo = by_l.at(l)[i].avg_ee_norm;
      const double hi = by_l.at(l + 1)[i].avg_ee_norm;
      if (!(lo < hi)) {
        ++violations;
        worst = std::max(worst, lo / hi - 1);
        c.expect(false, fmt::format("EE(L={}) {:.3f} >= EE(L={}) {:.3f} at w={}", l, lo, l + 1,
                                    hi, l7[i].frames_per_round));
      }
    }
  }
  c.note(fmt::format("EE ordering in L: {} violations over {} (w, L) pairs, worst excess {:.2f}%",
                     violations, 4 * l7.size(), 100 * worst));
  return c;
}

Check traffic_trend() {
  Check c;
  const auto config = shipped("table3.json");
  const auto model = make_model(config);
  SimConfig sim = make_sim_config(config, ProposedScheme{});
  const auto rows = traffic_sweep({config.experiment.schemes}, model, EvalMode::both, sim,
                                  config.experiment.traffic_intensities,
                                  config.experiment.quadrature_panels);
  std::map<std::string, std::vector<SuiteRow>> series;
  for (const auto& r : rows)
    series[r.scheme.rfind("Proposed", 0) == 0 ? "Proposed" : r.scheme].push_back(r);

  auto opt = [](const std::optional<double>& v) { return v ? fmt::format("{:6.2f}", *v) : "     -"; };
  for (const auto& [name, v] : series) {
    for (const auto& r : v)
      c.note(fmt::format("{:<8} lambda={:<6g} EE ana {} sim {} | DT ana {} sim {} | incomplete {}",
                         name, r.intensity_per_m2, opt(r.ee_norm_analysis), opt(r.ee_norm_sim),
                         opt(r.dt_hours_analysis), opt(r.dt_hours_sim), r.incomplete_recipients));
    for (std::size_t i = 1; i < v.size(); ++i) {
      c.expect(*v[i].ee_norm_sim >= *v[i - 1].ee_norm_sim,
               fmt::format("{} EE falls from {:.3f} to {:.3f} at lambda={}", name,
                           *v[i - 1].ee_norm_sim, *v[i].ee_norm_sim, v[i].intensity_per_m2));
      c.expect(*v[i].dt_hours_sim >= *v[i - 1].dt_hours_sim,
               fmt::format("{} DT falls from {:.3f} to {:.3f} at lambda={}", name,
                           *v[i - 1].dt_hours_sim, *v[i].dt_hours_sim, v[i].intensity_per_m2));
    }
  }
  const auto& prop = series.at("Proposed");
  for (std::size_t i = 0; i < prop.size(); ++i)
    for (const auto& [name, v] : series) {
      if (name == "Proposed") continue;
      c.expect(*prop[i].dt_hours_sim < *v[i].dt_hours_sim,
               fmt::format("DT(Proposed) {:.2f} >= DT({}) {:.2f} at lambda={}",
                           *prop[i].dt_hours_sim, name, *v[i].dt_hours_sim,
                           prop[i].intensity_per_m2));
    }
  c.note(fmt::format("trends use simulated values, {} runs per point", sim.runs));
  return c;
}

Check lifetime() {
  Check c;
  const auto config = shipped("table1.json");
  bool incomplete = false;
  const auto rows = lifetime_rows(config, true, incomplete);
  c.expect(!incomplete, "every probe completed");
  // (scheme, distance fraction) -> years
  const std::map<std::pair<std::string, int>, double> target = {
      {{"Proposed", 0}, 1.42}, {{"FSF-11", 0}, 1.47}, {{"GB-E", 0}, 1.47},
      {{"Proposed", 1}, 1.82}, {{"FSF-11", 1}, 1.66}, {{"GB-E", 1}, 1.82}};
  const double r0 = config.network.region_radius_m;
  for (const auto& r : rows) {
    const std::string name = r.scheme.rfind("Proposed", 0) == 0 ? "Proposed" : r.scheme;
    const int col = std::abs(r.distance_m - r0) < 1e-6 ? 0 : 1;
    const double ref = target.at({name, col});
    c.note(fmt::format("{:<8} d={:>5.0f} m SF{:<2} DT {:6.2f} h  R_u {:.3f} h  LT {:.3f} y (ref {:.2f}, "
                       "{:+.0f}%)",
                       name, r.distance_m, r.uplink_sf, r.dt_hours, r.receive_hours_per_update,
                       r.lifetime_years, ref, 100 * (r.lifetime_years / ref - 1)));
    c.expect(rel(r.lifetime_years, ref) <= 0.15,
             fmt::format("{} at {:.0f} m: {:.3f} y vs {:.2f} y", name, r.distance_m,
                         r.lifetime_years, ref));
  }
  c.expect(rows.size() == target.size(), "one row per scheme and point");

  const auto phy = testing::reference_model().phy();
  DutyProfile same;
  same.tx_current_ma = same.rx_current_ma = same.sleep_current_ma = 1.7;
  c.expect(rel(battery_lifetime_years(same, 3.0, phy), same.battery_mah / (1.7 * 8760.0)) <= 1e-12,
           "equal currents limit");
  DutyProfile idle;
  idle.uplink_period_hr = std::numeric_limits<double>::infinity();
  c.expect(battery_lifetime_years(idle, 0.0, phy) == idle.battery_mah / (idle.sleep_current_ma * 8760.0),
           "sleep-only limit");
  // transmit time alone bounds the edge lifetime from above
  DutyProfile edge;
  const auto tx_only = lifetime_breakdown(edge, 0.0, phy);
  c.note(fmt::format("SF12 uplink: {:.2f} h/yr on air, {:.0f} mAh/yr; lifetime with no receive "
                     "time {:.3f} y",
                     tx_only.tx_hours_per_year, edge.tx_current_ma * tx_only.tx_hours_per_year,
                     tx_only.years));
  return c;
}

std::string slurp(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::stringstream s;
  s << in.rdbuf();
  return s.str();
}

Check properties() {
  Check c;
  const auto heavy = testing::model_with([](NetworkConfig& n) {
    n.interferer_frame_interval_s = 4;
    n.channels = 1;
  });

  // partition of each attempt into preamble loss, payload loss, success
  double worst = 0.0;
  for (double d0 : {100.0, 400.0, 700.0, 1000.0}) {
    const auto p = link_profile(d0, heavy);
    for (const auto& s : p.by_n)
      for (auto sf : kAllSfs) {
        const auto i = sf.offset();
        worst = std::max(worst, std::abs(s.preamble_fail[i] +
                                         (1 - s.preamble_fail[i]) * s.payload_fail_given_preamble[i] +
                                         s.frame_success[i] - 1.0));
      }
  }
  c.expect(worst <= 1e-12, "probability partition");
  c.note(fmt::format("partition identity: max deviation {:.2g}", worst));

  // energy ledger and gateway duty cycle over a full session of every scheme
  const auto model = testing::reference_model();
  double ledger = 0.0, duty_excess = -1.0;
  for (const auto& scheme : BenchmarkSuite::defaults().schemes) {
    SimConfig sim;
    sim.scheme = scheme;
    sim.layout = Layout::uniform;
    sim.record_frames = true;
    sim.max_frames_factor = 200.0;
    const auto s = run_session(sim, model, 3);
    for (const auto& r : s.recipients) {
      double e = r.control_energy_j;
      for (auto sf : kAllSfs)
        e += r.full_attempts[sf.offset()] * model.frame_energy_j(sf) +
             r.preamble_only_attempts[sf.offset()] * model.preamble_energy_j(sf);
      ledger = std::max(ledger, std::abs(e - r.energy_j) / r.energy_j);
    }
    const double dc = model.network().duty_cycle_percent / 100.0;
    double on_air = 0.0;
    for (const auto& f : s.frames) {
      on_air += f.airtime_s;
      duty_excess = std::max(duty_excess, on_air / (f.start_s + model.cycle_time_s(f.sf)) - dc);
    }
  }
  c.expect(ledger <= 1e-12, "energy accounting identity");
  c.expect(duty_excess <= 1e-12, "duty-cycle prefix bound");
  c.note(fmt::format("energy ledger max relative gap {:.2g}; duty-cycle prefix max excess {:.2g}",
                     ledger, duty_excess));

  // sampler statistics
  Rng rng(77);
  const int n = 1'000'000;
  double sum = 0.0;
  long above = 0;
  for (int i = 0; i < n; ++i) {
    const double a = sample_fading(rng);
    sum += a;
    above += a > 1.0;
  }
  c.expect(std::abs(sum / n - 1.0) <= 0.01, "fading mean");
  c.expect(std::abs(static_cast<double>(above) / n - std::exp(-1.0)) <= 0.005, "fading tail");
  const double r_i = model.interference_radius_m();
  long count = 0, inner = 0;
  const int draws = 100'000;
  for (int i = 0; i < draws; ++i)
    for (double u : sample_interferer_positions(r_i, model.field(), rng)) {
      ++count;
      inner += u <= r_i / 2;
    }
  const double mean_count = static_cast<double>(count) / draws;
  c.expect(rel(mean_count, model.mean_interferers()) <= 0.01, "interferer count mean");
  c.expect(std::abs(static_cast<double>(inner) / count - 0.25) <= 0.01, "distance CDF at R_I/2");
  c.note(fmt::format("fading mean {:.4f}, P(A>1) {:.4f}; interferers {:.2f} (expect {:.2f}), "
                     "CDF(R_I/2) {:.4f}",
                     sum / n, static_cast<double>(above) / n, mean_count, model.mean_interferers(),
                     static_cast<double>(inner) / count));

  // fixed seed: identical artifacts bit for bit
  auto config = shipped("table2.json");
  config.experiment.schemes = {ProposedScheme{}, GroupBasedScheme{GroupCriterion::latency}};
  config.experiment.runs = 3;
  config.experiment.seed = 12345;
  config.experiment.output_dir = (fs::temp_directory_path() / "fuota_acceptance_repro").string();
  std::ostringstream log;
  const std::vector<std::string> files = {"per_distance.csv", "averages.csv", "manifest.json"};
  std::vector<std::string> first;
  run_distance_experiment(config, log);
  for (const auto& f : files) first.push_back(slurp(fs::path(config.experiment.output_dir) / f));
  run_distance_experiment(config, log);
  bool same = true;
  for (std::size_t i = 0; i < files.size(); ++i)
    same = same && !first[i].empty() &&
           first[i] == slurp(fs::path(config.experiment.output_dir) / files[i]);
  c.expect(same, "rerun with the same seed reproduces every artifact");
  c.note(same ? "rerun reproduced per_distance.csv, averages.csv, manifest.json byte for byte"
              : "rerun changed an artifact");
  fs::remove_all(config.experiment.output_dir);
  return c;
}

}  // namespace

int main() {
  struct Criterion {
    int id;
    const char* title;
    Check (*run)();
  };
  const Criterion criteria[] = {
      {1, "analysis vs simulation, proposed scheme, 10 distances", agreement},
      {2, "decode overhead", decode_overhead},
      {3, "airtime against reference calculator", airtime},
      {4, "closed-form degenerate cases", degenerate},
      {5, "scheme averages: orderings and values", table_two},
      {6, "(w, L) sweep shape", sweep_shape},
      {7, "interferer density trend", traffic_trend},
      {8, "battery lifetime", lifetime},
      {9, "property suites and reproducibility", properties},
  };
  std::vector<std::string> summary;
  bool all = true;
  for (const auto& cr : criteria) {
    std::cout << "== criterion " << cr.id << ": " << cr.title << std::endl;
    Check c;
    try {
      c = cr.run();
    } catch (const std::exception& e) {
      c.ok = false;
      c.notes.push_back(std::string("exception: ") + e.what());
    }
    for (const auto& n : c.notes) std::cout << "   " << n << '\n';
    const std::string line =
        fmt::format("[{}] criterion {}: {}", c.ok ? "PASS" : "FAIL", cr.id, cr.title);
    std::cout << line << std::endl;
    summary.push_back(line);
    all = all && c.ok;
  }
  std::cout << "\n";
  for (const auto& s : summary) std::cout << s << '\n';
  return all ? 0 : 1;
}
