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

#include <stdexcept>
#include <string>

namespace fuota {

/// Invalid or inconsistent configuration. Carries the offending field path
/// when it is known (e.g. "network.channels").
class ConfigError : public std::runtime_error {
 public:
  explicit ConfigError(const std::string& what, std::string field = {})
      : std::runtime_error(field.empty() ? what : field + ": " + what),
        field_(std::move(field)) {}

  const std::string& field() const noexcept { return field_; }

 private:
  std::string field_;
};

/// Quadrature failed to converge or produced a non-finite value.
class NumericalError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A recipient that can never collect the fragments it needs under the
/// scheme being evaluated (zero or negligible frame-success probability).
class UnreachableRecipient : public std::runtime_error {
 public:
  UnreachableRecipient(const std::string& what, double distance_m)
      : std::runtime_error(what), distance_m_(distance_m) {}

  double distance_m() const noexcept { return distance_m_; }

 private:
  double distance_m_;
};

}  // namespace fuota
