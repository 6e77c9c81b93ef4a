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

#include "fuota/schemes.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <regex>

#include "fuota/analysis.hpp"
#include "fuota/errors.hpp"
#include "fuota/model.hpp"

namespace fuota {

void ProposedScheme::validate() const {
  if (first_sf > last_sf) throw ConfigError("L must not exceed M", "scheme.proposed");
  if (frames_per_round < 1) throw ConfigError("w must be >= 1", "scheme.proposed.w");
}

void validate(const SchemeConfig& scheme) {
  if (const auto* p = std::get_if<ProposedScheme>(&scheme)) p->validate();
}

std::string scheme_label(const SchemeConfig& scheme) {
  if (const auto* p = std::get_if<ProposedScheme>(&scheme)) {
    return "Proposed:L" + std::to_string(p->first_sf.value()) + ":M" +
           std::to_string(p->last_sf.value()) + ":w" + std::to_string(p->frames_per_round);
  }
  if (const auto* f = std::get_if<FixedSfScheme>(&scheme))
    return "FSF-" + std::to_string(f->sf.value());
  return std::get<GroupBasedScheme>(scheme).criterion == GroupCriterion::energy ? "GB-E"
                                                                                : "GB-L";
}

SchemeConfig parse_scheme_label(const std::string& label) {
  static const std::regex fsf(R"(FSF-(\d+))");
  static const std::regex proposed(R"(Proposed:L(\d+):M(\d+):w(\d+))");
  std::smatch m;
  if (label == "GB-E") return GroupBasedScheme{GroupCriterion::energy};
  if (label == "GB-L") return GroupBasedScheme{GroupCriterion::latency};
  if (label == "Proposed") return ProposedScheme{};
  try {
    if (std::regex_match(label, m, fsf)) return FixedSfScheme{SfIndex(std::stoi(m[1]))};
    if (std::regex_match(label, m, proposed)) {
      ProposedScheme p{SfIndex(std::stoi(m[1])), SfIndex(std::stoi(m[2])), std::stol(m[3])};
      p.validate();
      return p;
    }
  } catch (const std::out_of_range& e) {
    throw ConfigError(e.what(), "scheme");
  }
  throw ConfigError("unknown scheme label '" + label + "'", "scheme");
}

SfIndex sf_for_transmission(long t, const ProposedScheme& scheme) {
  if (t < 1) throw std::invalid_argument("transmission index is 1-based");
  const long step = (t - 1) / scheme.frames_per_round;
  const long sf = std::min<long>(scheme.first_sf.value() + step, scheme.last_sf.value());
  return SfIndex(static_cast<int>(sf));
}

namespace {

SfIndex argmin_cost(const PerSf<double>& success, const PerSf<double>& per_frame, long k,
                    double d0) {
  std::size_t best = SfIndex::kCount;
  double best_cost = std::numeric_limits<double>::infinity();
  for (std::size_t i = 0; i < SfIndex::kCount; ++i) {
    if (!(success[i] > 0.0)) continue;
    const double cost = static_cast<double>(k) / success[i] * per_frame[i];
    if (cost < best_cost) {  // strict: ties keep the smaller SF
      best_cost = cost;
      best = i;
    }
  }
  if (best == SfIndex::kCount)
    throw UnreachableRecipient("no SF reaches a recipient at " + std::to_string(d0) + " m", d0);
  return SfIndex::from_offset(best);
}

PerSf<double> mean_success_all(double d0, const ScenarioModel& model) {
  PerSf<double> s{};
  for (auto sf : kAllSfs) s[sf.offset()] = mean_frame_success(d0, sf, model);
  return s;
}

}  // namespace

SfIndex assign_group_energy(double d0, const ScenarioModel& model, long k) {
  PerSf<double> e{};
  for (auto sf : kAllSfs) e[sf.offset()] = model.frame_energy_j(sf);
  return argmin_cost(mean_success_all(d0, model), e, k, d0);
}

SfIndex assign_group_latency(double d0, const ScenarioModel& model, long k) {
  PerSf<double> t{};
  for (auto sf : kAllSfs) t[sf.offset()] = model.cycle_time_s(sf);
  return argmin_cost(mean_success_all(d0, model), t, k, d0);
}

SfIndex assign_group(GroupCriterion criterion, double d0, const ScenarioModel& model, long k) {
  return criterion == GroupCriterion::energy ? assign_group_energy(d0, model, k)
                                             : assign_group_latency(d0, model, k);
}

GroupAssignment assign_groups(GroupCriterion criterion, std::span<const double> distances_m,
                              const ScenarioModel& model, long k) {
  GroupAssignment g;
  g.sf_of_recipient.reserve(distances_m.size());
  for (double d : distances_m) g.sf_of_recipient.push_back(assign_group(criterion, d, model, k));
  return g;
}

SessionScheduler::SessionScheduler(SchemeConfig scheme, std::size_t recipients,
                                   long max_frames_per_stream,
                                   std::optional<GroupAssignment> groups)
    : scheme_(std::move(scheme)),
      groups_(std::move(groups)),
      cap_(max_frames_per_stream),
      pending_(recipients, true),
      pending_total_(static_cast<long>(recipients)) {
  validate(scheme_);
  if (cap_ < 1) throw std::invalid_argument("frame cap must be >= 1");
  if (std::holds_alternative<GroupBasedScheme>(scheme_)) {
    if (!groups_ || groups_->sf_of_recipient.size() != recipients)
      throw std::invalid_argument("group-based schedule needs one SF per recipient");
    for (auto sf : groups_->sf_of_recipient) ++pending_per_group_[sf.offset()];
  } else {
    groups_.reset();
  }
}

bool SessionScheduler::stream_done() const {
  if (!groups_) return pending_total_ == 0;
  return pending_per_group_[*current_group_] == 0;
}

bool SessionScheduler::advance_group() {
  const std::size_t start = current_group_ ? *current_group_ + 1 : 0;
  for (std::size_t g = start; g < SfIndex::kCount; ++g) {
    if (pending_per_group_[g] > 0) {
      current_group_ = g;
      issued_in_stream_ = 0;
      streams_.emplace_back(SfIndex::from_offset(g), 0);
      return true;
    }
  }
  current_group_ = SfIndex::kCount;
  return false;
}

std::optional<ScheduledFrame> SessionScheduler::next() {
  if (!started_) {
    started_ = true;
    if (groups_) {
      if (!advance_group()) return std::nullopt;
    } else {
      streams_.emplace_back(std::nullopt, 0);
    }
  }
  if (groups_) {
    if (*current_group_ >= SfIndex::kCount) return std::nullopt;
    while (stream_done() || issued_in_stream_ >= cap_) {
      if (!stream_done()) cap_exceeded_ = true;
      if (!advance_group()) return std::nullopt;
    }
  } else if (stream_done()) {
    return std::nullopt;
  } else if (issued_in_stream_ >= cap_) {
    cap_exceeded_ = true;
    return std::nullopt;
  }

  ++issued_;
  ++issued_in_stream_;
  ++streams_.back().second;
  ScheduledFrame frame;
  frame.index = issued_;
  frame.group_index = issued_in_stream_;
  if (const auto* p = std::get_if<ProposedScheme>(&scheme_)) {
    frame.sf = sf_for_transmission(issued_in_stream_, *p);
  } else if (const auto* f = std::get_if<FixedSfScheme>(&scheme_)) {
    frame.sf = f->sf;
  } else {
    frame.sf = SfIndex::from_offset(*current_group_);
    frame.target_group = frame.sf;
  }
  return frame;
}

void SessionScheduler::mark_completed(std::size_t recipient) {
  if (!pending_.at(recipient)) return;
  pending_[recipient] = false;
  --pending_total_;
  if (groups_) --pending_per_group_[groups_->sf_of_recipient[recipient].offset()];
}

bool SessionScheduler::listens(std::size_t recipient, const ScheduledFrame& frame) const {
  if (!pending_[recipient]) return false;
  if (!groups_) return true;
  return frame.target_group && groups_->sf_of_recipient[recipient] == *frame.target_group;
}

}  // namespace fuota
