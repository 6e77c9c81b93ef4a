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

#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>
#include <string>

#include "fuota/errors.hpp"
#include "fuota/report.hpp"

namespace fuota {
namespace {

namespace fs = std::filesystem;

fs::path temp(const std::string& name) {
  return fs::temp_directory_path() / ("fuota_report_test_" + name);
}

std::vector<DistanceRow> sample_rows() {
  DistanceRow a{100.0, "FSF-12", 13.25, 13.5, 20.0, 20.5, 0.125, 0.25, 100};
  DistanceRow b{200.0, "FSF-12", 14.0, std::nullopt, 21.0, std::nullopt, std::nullopt,
                std::nullopt, 0};
  return {a, b};
}

TEST(Report, DistanceCsvRoundTrips) {
  const auto p = temp("rt.csv");
  write_distance_csv(p, sample_rows(), "0123456789abcdef");
  std::ifstream in(p);
  std::string first;
  std::getline(in, first);
  EXPECT_EQ(first, "# schema=fuota-per-distance/v1 fingerprint=0123456789abcdef");
  EXPECT_EQ(read_distance_csv(p), sample_rows());
}

TEST(Report, ReaderRejectsForeignFiles) {
  const auto p = temp("foreign.csv");
  std::ofstream(p) << "a,b\n1,2\n";
  EXPECT_THROW(read_distance_csv(p), ConfigError);
  EXPECT_THROW(read_distance_csv(temp("missing.csv")), ConfigError);
}

TEST(Report, CompareAnalysisAgainstSimulation) {
  const auto rows = sample_rows();
  auto sim = rows;
  sim[0].ee_norm_sim = 13.25 * 1.05;
  sim[0].dt_hours_sim = 20.0 * 0.97;
  sim[1].ee_norm_sim = 14.0 * 1.2;
  sim[1].dt_hours_sim = 21.0;
  const auto r = compare(rows, sim, 0.10);
  ASSERT_EQ(r.entries.size(), 4u);
  EXPECT_NEAR(r.entries[0].rel_error, 0.05, 1e-12);
  EXPECT_TRUE(r.entries[0].pass);
  EXPECT_FALSE(r.entries[2].pass);
  EXPECT_FALSE(r.pass);
  EXPECT_NEAR(r.max_rel_error, 0.2, 1e-12);
  EXPECT_TRUE(compare(rows, sim, 0.25).pass);
}

TEST(Report, CompareWithNothingInCommonFails) {
  auto other = sample_rows();
  for (auto& r : other) r.scheme = "GB-E";
  EXPECT_FALSE(compare(sample_rows(), other, 0.5).pass);
}

TEST(Report, OtherTablesCarrySchemaLine) {
  const auto p = temp("sweep.csv");
  write_sweep_csv(p, {{300, 7, 11.5, 15.25}}, "ff");
  std::ifstream in(p);
  std::string first, header, row;
  std::getline(in, first);
  std::getline(in, header);
  std::getline(in, row);
  EXPECT_EQ(first, "# schema=fuota-sweep/v1 fingerprint=ff");
  EXPECT_EQ(header, "w,L,avg_ee_norm,avg_dt_hours");
  EXPECT_EQ(row, "300,7,11.5,15.25");
}

}  // namespace
}  // namespace fuota
