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
#include <functional>
#include <span>
#include <vector>

namespace fuota {

struct QuadratureOptions {
  double abs_tol = 1e-12;
  double rel_tol = 1e-10;
  int max_intervals = 4000;
};

struct QuadratureResult {
  std::vector<double> values;
  double error_estimate = 0.0;
  int intervals = 0;
};

/// Vector integrand: writes f_1(x) .. f_dim(x) into `out`.
using VectorIntegrand = std::function<void(double x, std::span<double> out)>;

/// Globally adaptive 7/15-point Gauss-Kronrod over a finite interval.
/// All components share one subdivision; an interval is refined while the
/// largest component error dominates. Throws NumericalError on
/// non-convergence or a non-finite integrand.
QuadratureResult integrate_adaptive(const VectorIntegrand& f, std::size_t dim,
                                    double a, double b,
                                    const QuadratureOptions& opts = {});

double integrate_adaptive(const std::function<double(double)>& f, double a,
                          double b, const QuadratureOptions& opts = {});

/// Composite 8-point Gauss-Legendre rule on [a, b] with `panels` panels.
struct QuadratureRule {
  std::vector<double> nodes;
  std::vector<double> weights;
};
QuadratureRule composite_gauss_legendre(double a, double b, int panels);

}  // namespace fuota
