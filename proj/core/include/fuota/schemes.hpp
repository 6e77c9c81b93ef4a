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

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <variant>
#include <vector>

#include "fuota/phy.hpp"

namespace fuota {

class ScenarioModel;

/// Sequential-SF multicast: w frames on SF L, w on L+1, ..., then SF M
/// until every recipient has decoded.
struct ProposedScheme {
  SfIndex first_sf{7};
  SfIndex last_sf{12};
  long frames_per_round = 300;

  void validate() const;
  bool operator==(const ProposedScheme&) const = default;
};

struct FixedSfScheme {
  SfIndex sf{12};
  bool operator==(const FixedSfScheme&) const = default;
};

enum class GroupCriterion { energy, latency };

/// Recipients grouped by their best SF; groups served one after another in
/// ascending SF order, each until all of its members have decoded.
struct GroupBasedScheme {
  GroupCriterion criterion = GroupCriterion::energy;
  bool operator==(const GroupBasedScheme&) const = default;
};

using SchemeConfig = std::variant<ProposedScheme, FixedSfScheme, GroupBasedScheme>;

/// Label used in tables: "Proposed:L7:M12:w300", "FSF-11", "GB-E", "GB-L".
std::string scheme_label(const SchemeConfig& scheme);
/// Parses the labels above; a bare "Proposed" means the default parameters.
SchemeConfig parse_scheme_label(const std::string& label);

void validate(const SchemeConfig& scheme);

/// SF of the t-th (1-based) multicast frame of the proposed scheme.
SfIndex sf_for_transmission(long t, const ProposedScheme& scheme);

/// Energy-optimal group: argmin_i (k / S_i) e_i, ties to the smaller SF.
SfIndex assign_group_energy(double d0, const ScenarioModel& model, long k);
/// Latency-optimal group: argmin_i (k / S_i) l_i (100 / DC_max).
SfIndex assign_group_latency(double d0, const ScenarioModel& model, long k);
SfIndex assign_group(GroupCriterion criterion, double d0,
                     const ScenarioModel& model, long k);

/// Per-recipient SF, indexed like the recipient list.
struct GroupAssignment {
  std::vector<SfIndex> sf_of_recipient;
};
GroupAssignment assign_groups(GroupCriterion criterion,
                              std::span<const double> distances_m,
                              const ScenarioModel& model, long k);

struct ScheduledFrame {
  long index = 0;        ///< 1-based over the whole session
  long group_index = 0;  ///< 1-based within the current group stream
  SfIndex sf{7};
  std::optional<SfIndex> target_group;
};

/// Drives a FUOTA session frame by frame. Termination is closed-loop:
/// recipients report completion through mark_completed(); SF choice for the
/// proposed and fixed schemes is open-loop. For group-based schemes the
/// schedule walks groups in ascending SF order, skipping empty ones.
/// Each stream (the single multicast stream, or each group stream) is capped
/// at `max_frames_per_stream`; hitting the cap abandons the stream and is
/// reported through cap_exceeded().
class SessionScheduler {
 public:
  SessionScheduler(SchemeConfig scheme, std::size_t recipients,
                   long max_frames_per_stream,
                   std::optional<GroupAssignment> groups = std::nullopt);

  std::optional<ScheduledFrame> next();
  void mark_completed(std::size_t recipient);

  /// Whether `recipient` attempts to receive `frame`.
  bool listens(std::size_t recipient, const ScheduledFrame& frame) const;
  bool pending(std::size_t recipient) const { return pending_[recipient]; }

  bool cap_exceeded() const { return cap_exceeded_; }
  long frames_issued() const { return issued_; }
  /// Frames sent to each group (GB) or to the single stream, in service order.
  const std::vector<std::pair<std::optional<SfIndex>, long>>& streams() const {
    return streams_;
  }

 private:
  bool stream_done() const;
  bool advance_group();

  SchemeConfig scheme_;
  std::optional<GroupAssignment> groups_;
  long cap_;
  std::vector<bool> pending_;
  PerSf<long> pending_per_group_{};
  long pending_total_ = 0;
  std::optional<std::size_t> current_group_;  // SF offset
  long issued_ = 0;
  long issued_in_stream_ = 0;
  bool started_ = false;
  bool cap_exceeded_ = false;
  std::vector<std::pair<std::optional<SfIndex>, long>> streams_;
};

}  // namespace fuota
