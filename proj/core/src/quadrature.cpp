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

#include "fuota/quadrature.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <queue>

#include <boost/math/quadrature/gauss.hpp>

#include "fuota/errors.hpp"

namespace fuota {
namespace {

// Kronrod 15-point abscissae (non-negative half) and weights; the Gauss
// 7-point rule uses the odd-indexed abscissae.
constexpr std::array<double, 8> kXk{
    0.991455371120812639206854697526329, 0.949107912342758524526189684047851,
    0.864864423359769072789712788640926, 0.741531185599394439863864773280788,
    0.586087235467691130294144845693013, 0.405845151377397166906606412076961,
    0.207784955007898467600689403773245, 0.000000000000000000000000000000000};
constexpr std::array<double, 8> kWk{
    0.022935322010529224963732008058970, 0.063092092629978553290700663189204,
    0.104790010322250183839876322541518, 0.140653259715525918745189590510238,
    0.169004726639267902826583426598550, 0.190350578064785409913256402421014,
    0.204432940075298892414161999234649, 0.209482141084727828012999174891714};
constexpr std::array<double, 4> kWg{
    0.129484966168869693270611432679082, 0.279705391489276667901467771423780,
    0.381830050505118944950369775488975, 0.417959183673469387755102040816327};

struct Segment {
  double a, b;
  std::vector<double> value;
  double error;
};

struct ByError {
  bool operator()(const Segment& l, const Segment& r) const { return l.error < r.error; }
};

Segment evaluate(const VectorIntegrand& f, std::size_t dim, double a, double b,
                 std::vector<double>& scratch) {
  Segment s{a, b, std::vector<double>(dim, 0.0), 0.0};
  std::vector<double> gauss(dim, 0.0);
  const double center = 0.5 * (a + b);
  const double half = 0.5 * (b - a);
  auto accumulate = [&](double x, double wk, double wg) {
    f(x, scratch);
    for (std::size_t i = 0; i < dim; ++i) {
      if (!std::isfinite(scratch[i]))
        throw NumericalError("non-finite integrand value during quadrature");
      s.value[i] += wk * scratch[i];
      gauss[i] += wg * scratch[i];
    }
  };
  accumulate(center, kWk[7], kWg[3]);
  for (std::size_t j = 0; j < 7; ++j) {
    const double dx = half * kXk[j];
    const double wg = (j % 2 == 1) ? kWg[j / 2] : 0.0;
    accumulate(center - dx, kWk[j], wg);
    accumulate(center + dx, kWk[j], wg);
  }
  double err = 0.0;
  for (std::size_t i = 0; i < dim; ++i) {
    s.value[i] *= half;
    err = std::max(err, std::abs(s.value[i] - half * gauss[i]));
  }
  s.error = err;
  return s;
}

}  // namespace

QuadratureResult integrate_adaptive(const VectorIntegrand& f, std::size_t dim,
                                    double a, double b,
                                    const QuadratureOptions& opts) {
  std::vector<double> scratch(dim, 0.0);
  std::priority_queue<Segment, std::vector<Segment>, ByError> heap;
  heap.push(evaluate(f, dim, a, b, scratch));

  std::vector<double> total(dim, 0.0);
  double total_error = 0.0;
  auto refresh = [&] {
    // Recomputed from scratch to avoid drift from repeated subtraction.
    std::fill(total.begin(), total.end(), 0.0);
    total_error = 0.0;
    auto copy = heap;
    while (!copy.empty()) {
      const Segment& s = copy.top();
      for (std::size_t i = 0; i < dim; ++i) total[i] += s.value[i];
      total_error += s.error;
      copy.pop();
    }
  };
  refresh();

  int intervals = 1;
  while (true) {
    double scale = 0.0;
    for (double v : total) scale = std::max(scale, std::abs(v));
    if (total_error <= std::max(opts.abs_tol, opts.rel_tol * scale)) break;
    if (intervals >= opts.max_intervals)
      throw NumericalError("adaptive quadrature did not converge (error " +
                           std::to_string(total_error) + ")");
    Segment worst = heap.top();
    heap.pop();
    const double mid = 0.5 * (worst.a + worst.b);
    Segment left = evaluate(f, dim, worst.a, mid, scratch);
    Segment right = evaluate(f, dim, mid, worst.b, scratch);
    for (std::size_t i = 0; i < dim; ++i)
      total[i] += left.value[i] + right.value[i] - worst.value[i];
    total_error += left.error + right.error - worst.error;
    heap.push(std::move(left));
    heap.push(std::move(right));
    ++intervals;
    if (intervals % 64 == 0) refresh();
  }
  refresh();
  return QuadratureResult{std::move(total), total_error, intervals};
}

double integrate_adaptive(const std::function<double(double)>& f, double a, double b,
                          const QuadratureOptions& opts) {
  VectorIntegrand vf = [&f](double x, std::span<double> out) { out[0] = f(x); };
  return integrate_adaptive(vf, 1, a, b, opts).values[0];
}

QuadratureRule composite_gauss_legendre(double a, double b, int panels) {
  using Rule = boost::math::quadrature::gauss<double, 8>;
  const auto& x = Rule::abscissa();
  const auto& w = Rule::weights();
  QuadratureRule rule;
  const double width = (b - a) / panels;
  for (int p = 0; p < panels; ++p) {
    const double center = a + (p + 0.5) * width;
    const double half = 0.5 * width;
    for (std::size_t i = 0; i < x.size(); ++i) {
      if (x[i] == 0.0) {
        rule.nodes.push_back(center);
        rule.weights.push_back(half * w[i]);
        continue;
      }
      rule.nodes.push_back(center - half * x[i]);
      rule.weights.push_back(half * w[i]);
      rule.nodes.push_back(center + half * x[i]);
      rule.weights.push_back(half * w[i]);
    }
  }
  return rule;
}

}  // namespace fuota
