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

#include "fuota/sim.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <exception>
#include <mutex>
#include <thread>

#include "fuota/errors.hpp"

namespace fuota {

CollisionResult collision_outcome(double desired_power_w, SfIndex desired_sf,
                                  const ReceptionWindow& window,
                                  std::span<const InterferingFrame> frames,
                                  const PhyProfile& phy) {
  for (const auto& f : frames) {
    if (f.channel != window.channel) continue;
    if (!(f.start_s < window.end_s && f.end_s > window.start_s)) continue;
    if (!(f.power_w > 0.0)) continue;
    if (desired_power_w / f.power_w < phy.capture_ratio(desired_sf, f.sf))
      return CollisionResult::lost;
  }
  return CollisionResult::survive;
}

std::vector<double> layout_distances(const SimConfig& config, const ScenarioModel& model,
                                     Rng& rng) {
  const auto& net = model.network();
  std::vector<double> d;
  d.reserve(static_cast<std::size_t>(net.recipients) + config.probe_distances_m.size());
  if (config.layout == Layout::grid) {
    if (config.grid_points < 1) throw ConfigError("must be >= 1", "experiment.grid_points");
    for (int i = 0; i < net.recipients; ++i) {
      const int point = i % config.grid_points + 1;
      d.push_back(net.region_radius_m * point / config.grid_points);
    }
  } else {
    std::uniform_real_distribution<double> unit(0.0, 1.0);
    for (int i = 0; i < net.recipients; ++i) {
      // Uniform on the disc; reject the (measure-zero) gateway position.
      double u = 0.0;
      do u = unit(rng);
      while (u == 0.0);
      d.push_back(net.region_radius_m * std::sqrt(u));
    }
  }
  for (double p : config.probe_distances_m) {
    if (!(p > 0.0)) throw ConfigError("probe distances must be > 0", "experiment.probes");
    d.push_back(p);
  }
  return d;
}

namespace {

struct Recipient {
  double mean_power_w = 0.0;            // gamma0 p_t d^-alpha
  std::vector<double> interferer_power; // gamma0 p_t u^-alpha per interferer
};

DecoderMode decoder_for(const SchemeConfig& scheme, const NetworkConfig& net) {
  return std::holds_alternative<ProposedScheme>(scheme) ? net.proposed_decoder
                                                        : net.benchmark_decoder;
}

}  // namespace

SessionResult run_session(const SimConfig& config, const ScenarioModel& model,
                          std::span<const double> distances_m, Rng& rng,
                          std::size_t first_probe) {
  const auto& net = model.network();
  const auto& phy = model.phy();
  const auto& link = model.link();
  const auto& field = model.field();
  const std::size_t count = distances_m.size();

  const RatelessModel decoder = model.decoder(decoder_for(config.scheme, net));
  const double ns_bar = expected_fragments(decoder);
  const long cap = static_cast<long>(std::ceil(config.max_frames_factor * ns_bar));

  std::optional<GroupAssignment> groups;
  if (const auto* gb = std::get_if<GroupBasedScheme>(&config.scheme))
    groups = assign_groups(gb->criterion, distances_m, model, net.fragments);

  SessionResult result;
  result.recipients.resize(count);
  std::vector<Recipient> state(count);
  const double base = link.gamma0 * link.tx_rf_power_w;
  const bool interference = field.frame_rate_hz > 0.0 && field.intensity_per_m2 > 0.0;
  for (std::size_t r = 0; r < count; ++r) {
    auto& out = result.recipients[r];
    out.distance_m = distances_m[r];
    out.probe = r >= first_probe;
    if (groups) out.group_sf = groups->sf_of_recipient[r];
    out.fragments_needed = sample_completion_threshold(decoder, rng);
    state[r].mean_power_w = base * std::pow(distances_m[r], -link.path_loss_exponent);
    if (interference) {
      for (double u : sample_interferer_positions(model.interference_radius_m(), field, rng))
        state[r].interferer_power.push_back(base * std::pow(u, -link.path_loss_exponent));
    }
  }

  SessionScheduler scheduler(config.scheme, count, cap, groups);
  const double control = model.control_energy_j();
  std::exponential_distribution<double> fading(1.0);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  std::uniform_int_distribution<int> channel_of(0, field.channel_count - 1);
  std::vector<InterferingFrame> arrivals;
  double clock = 0.0;

  while (auto frame = scheduler.next()) {
    const SfIndex sf = frame->sf;
    const double l_pr = model.preamble_airtime_s(sf);
    const double l_fr = model.frame_airtime_s(sf);
    const double e_pr = model.preamble_energy_j(sf);
    const double e_fr = model.frame_energy_j(sf);
    const double zeta = phy.sensitivity_w(sf);
    const double start = clock;
    clock += model.cycle_time_s(sf);
    if (result.stream_durations_s.size() < scheduler.streams().size())
      result.stream_durations_s.resize(scheduler.streams().size(), 0.0);
    result.stream_durations_s.back() += model.cycle_time_s(sf);
    if (config.record_frames) result.frames.push_back({frame->index, sf, start, l_fr});

    const ReceptionWindow preamble{0.0, l_pr, 0};
    const ReceptionWindow whole{0.0, l_fr, 0};
    for (std::size_t r = 0; r < count; ++r) {
      if (!scheduler.listens(r, *frame)) continue;
      auto& out = result.recipients[r];
      const auto& st = state[r];
      const double power = st.mean_power_w * fading(rng);
      bool acquired = power >= zeta;
      bool received = acquired;
      if (acquired && !st.interferer_power.empty()) {
        arrivals.clear();
        const double n = static_cast<double>(st.interferer_power.size());
        std::uniform_int_distribution<std::size_t> pick(0, st.interferer_power.size() - 1);
        for (auto j : kAllSfs) {
          const double other = field.mean_frame_duration_s[j.offset()];
          const double mean = n * field.frame_rate_hz * field.sf_probabilities[j.offset()] *
                              (l_fr + other);
          if (mean <= 0.0) continue;
          std::poisson_distribution<long> hits(mean);
          for (long h = hits(rng); h > 0; --h) {
            InterferingFrame f;
            f.sf = j;
            f.start_s = -other + unit(rng) * (l_fr + other);
            f.end_s = f.start_s + other;
            f.channel = channel_of(rng);
            f.power_w = st.interferer_power[pick(rng)] * fading(rng);
            arrivals.push_back(f);
          }
        }
        acquired = collision_outcome(power, sf, preamble, arrivals, phy) == CollisionResult::survive;
        received = acquired &&
                   collision_outcome(power, sf, whole, arrivals, phy) == CollisionResult::survive;
      }
      if (acquired) {
        ++out.full_attempts[sf.offset()];
        out.fragment_energy_j += e_fr;
      } else {
        ++out.preamble_only_attempts[sf.offset()];
        out.fragment_energy_j += e_pr;
      }
      if (received && ++out.fragments_received == out.fragments_needed) {
        out.completed = true;
        out.completion_time_s = clock;
        out.control_energy_j = control;
        scheduler.mark_completed(r);
      }
    }
  }

  for (auto& out : result.recipients) {
    out.energy_j = out.fragment_energy_j + out.control_energy_j;
    if (!out.completed) result.incomplete = true;
  }
  result.incomplete = result.incomplete || scheduler.cap_exceeded();
  result.transmissions = scheduler.frames_issued();
  result.duration_s = clock;
  result.streams = scheduler.streams();
  result.stream_durations_s.resize(result.streams.size(), 0.0);
  return result;
}

SessionResult run_session(const SimConfig& config, const ScenarioModel& model,
                          long run_index) {
  Rng layout_rng = make_rng(config.seed, {static_cast<std::uint64_t>(run_index), 0});
  Rng channel_rng = make_rng(config.seed, {static_cast<std::uint64_t>(run_index), 1});
  const auto distances = layout_distances(config, model, layout_rng);
  return run_session(config, model, distances, channel_rng,
                     static_cast<std::size_t>(model.network().recipients));
}

namespace {

struct Accumulator {
  long n = 0;
  double sum = 0.0;
  double sum_sq = 0.0;

  void add(double x) {
    ++n;
    sum += x;
    sum_sq += x * x;
  }
  double mean() const { return n > 0 ? sum / n : 0.0; }
  double stderr_() const {
    if (n < 2) return 0.0;
    const double m = mean();
    const double var = std::max(0.0, (sum_sq - n * m * m) / (n - 1));
    return std::sqrt(var / n);
  }
};

}  // namespace

ExperimentResult run_experiment(const SimConfig& config, const ScenarioModel& model) {
  if (config.runs < 1) throw ConfigError("must be >= 1", "experiment.runs");
  const auto& net = model.network();
  std::vector<SessionResult> sessions(static_cast<std::size_t>(config.runs));

  unsigned threads = config.threads != 0 ? config.threads : std::thread::hardware_concurrency();
  threads = std::clamp<unsigned>(threads, 1, static_cast<unsigned>(config.runs));
  std::atomic<long> next{0};
  std::exception_ptr failure;
  std::mutex failure_mutex;
  auto worker = [&] {
    for (long run = next++; run < config.runs; run = next++) {
      try {
        sessions[static_cast<std::size_t>(run)] = run_session(config, model, run);
      } catch (...) {
        std::lock_guard lock(failure_mutex);
        if (!failure) failure = std::current_exception();
      }
    }
  };
  if (threads == 1) {
    worker();
  } else {
    std::vector<std::jthread> pool;
    for (unsigned t = 0; t < threads; ++t) pool.emplace_back(worker);
  }
  if (failure) std::rethrow_exception(failure);

  ExperimentResult result;
  result.scheme = scheme_label(config.scheme);
  result.runs = config.runs;
  const double norm = model.normalization_energy_j();
  const double r0 = net.region_radius_m;

  const bool grid = config.layout == Layout::grid;
  const int nbins = grid ? config.grid_points : config.distance_bins;
  if (nbins < 1) throw ConfigError("must be >= 1", "experiment.distance_bins");
  std::vector<Accumulator> ee(static_cast<std::size_t>(nbins)), dt(static_cast<std::size_t>(nbins));
  std::vector<Accumulator> probe_ee(config.probe_distances_m.size()),
      probe_dt(config.probe_distances_m.size()), probe_rx(config.probe_distances_m.size());
  Accumulator all_ee, all_dt, all_frag;
  double session_hours = 0.0;

  for (auto& s : sessions) {
    session_hours += s.duration_s / 3600.0;
    if (s.incomplete) ++result.incomplete_runs;
    std::size_t probe = 0;
    for (const auto& r : s.recipients) {
      if (!r.completed) ++result.incomplete_recipients;
      if (r.probe) {
        if (r.completed) {
          probe_ee[probe].add(r.energy_j / norm);
          probe_dt[probe].add(r.completion_time_s / 3600.0);
          probe_rx[probe].add(r.fragment_energy_j + model.phy().rx_power_w * net.control_airtime_s);
        }
        ++probe;
        continue;
      }
      if (!r.completed) continue;
      int bin = grid ? static_cast<int>(std::lround(r.distance_m / r0 * config.grid_points)) - 1
                     : static_cast<int>(r.distance_m / r0 * nbins);
      bin = std::clamp(bin, 0, nbins - 1);
      const double e = r.energy_j / norm;
      const double t = r.completion_time_s / 3600.0;
      ee[static_cast<std::size_t>(bin)].add(e);
      dt[static_cast<std::size_t>(bin)].add(t);
      all_ee.add(e);
      all_frag.add(r.fragment_energy_j / norm);
      all_dt.add(t);
    }
    result.recipients.insert(result.recipients.end(), s.recipients.begin(), s.recipients.end());
  }

  for (int b = 0; b < nbins; ++b) {
    BinStats bs;
    if (grid) {
      bs.center_m = r0 * (b + 1) / config.grid_points;
      bs.lo_m = bs.hi_m = bs.center_m;
    } else {
      bs.lo_m = r0 * b / nbins;
      bs.hi_m = r0 * (b + 1) / nbins;
      bs.center_m = 0.5 * (bs.lo_m + bs.hi_m);
    }
    const auto i = static_cast<std::size_t>(b);
    bs.samples = ee[i].n;
    bs.ee_norm_mean = ee[i].mean();
    bs.ee_norm_stderr = ee[i].stderr_();
    bs.dt_hours_mean = dt[i].mean();
    bs.dt_hours_stderr = dt[i].stderr_();
    result.bins.push_back(bs);
  }
  for (std::size_t p = 0; p < config.probe_distances_m.size(); ++p) {
    ProbeStats ps;
    ps.distance_m = config.probe_distances_m[p];
    ps.samples = probe_ee[p].n;
    ps.ee_norm_mean = probe_ee[p].mean();
    ps.dt_hours_mean = probe_dt[p].mean();
    ps.receive_energy_j = probe_rx[p].mean();
    result.probes.push_back(ps);
  }
  result.avg_ee_norm = all_ee.mean();
  result.avg_ee_norm_stderr = all_ee.stderr_();
  result.avg_ee_fragments_norm = all_frag.mean();
  result.avg_dt_hours = all_dt.mean();
  result.avg_dt_hours_stderr = all_dt.stderr_();
  result.mean_session_hours = session_hours / static_cast<double>(config.runs);
  return result;
}

}  // namespace fuota
