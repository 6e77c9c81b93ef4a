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

#include <cmath>
#include <limits>
#include <numbers>

#include "fuota/errors.hpp"
#include "fuota/quadrature.hpp"

namespace fuota {
namespace {

TEST(Quadrature, KnownScalarIntegrals) {
  EXPECT_NEAR(integrate_adaptive([](double x) { return std::sin(x); }, 0.0, std::numbers::pi),
              2.0, 1e-12);
  EXPECT_NEAR(integrate_adaptive([](double x) { return std::exp(-x); }, 0.0, 40.0),
              1.0 - std::exp(-40.0), 1e-12);
  EXPECT_NEAR(integrate_adaptive([](double x) { return std::sqrt(x); }, 0.0, 1.0), 2.0 / 3.0,
              1e-10);
  EXPECT_NEAR(integrate_adaptive([](double x) { return 1.0 / (1.0 + x * x); }, -50.0, 50.0),
              2.0 * std::atan(50.0), 1e-11);
}

TEST(Quadrature, VectorComponentsShareOneSubdivision) {
  auto f = [](double x, std::span<double> out) {
    for (std::size_t j = 0; j < out.size(); ++j) out[j] = std::pow(x, static_cast<double>(j));
  };
  const auto r = integrate_adaptive(f, 6, 0.0, 2.0);
  ASSERT_EQ(r.values.size(), 6u);
  for (std::size_t j = 0; j < 6; ++j)
    EXPECT_NEAR(r.values[j], std::pow(2.0, j + 1.0) / (j + 1.0), 1e-12);
}

TEST(Quadrature, NonFiniteIntegrandThrows) {
  EXPECT_THROW(integrate_adaptive(
                   [](double) { return std::numeric_limits<double>::quiet_NaN(); }, 0.0, 1.0),
               NumericalError);
  EXPECT_THROW(integrate_adaptive([](double) { return std::numeric_limits<double>::infinity(); },
                                  0.0, 1.0),
               NumericalError);
}

TEST(Quadrature, CompositeGaussLegendreIsExactForPolynomials) {
  const auto rule = composite_gauss_legendre(0.0, 3.0, 4);
  ASSERT_EQ(rule.nodes.size(), 32u);
  double s0 = 0.0, s7 = 0.0;
  for (std::size_t i = 0; i < rule.nodes.size(); ++i) {
    s0 += rule.weights[i];
    s7 += rule.weights[i] * std::pow(rule.nodes[i], 7);
  }
  EXPECT_NEAR(s0, 3.0, 1e-13);
  EXPECT_NEAR(s7, std::pow(3.0, 8) / 8.0, 1e-9);
}

}  // namespace
}  // namespace fuota
