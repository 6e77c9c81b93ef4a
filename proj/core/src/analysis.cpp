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

#include "fuota/analysis.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <iostream>

#include <boost/math/special_functions/gamma.hpp>

#include "fuota/errors.hpp"
#include "fuota/quadrature.hpp"

namespace fuota {
namespace {

std::atomic<bool> g_clamp_warned{false};

// gamma(s, x) / x^s, the per-interferer capture integral in dimensionless form.
double scaled_lower_gamma(double s, double x) {
  if (x < 1e-12) return 1.0 / s - x / (s + 1.0);
  return boost::math::tgamma_lower(s, x) / std::pow(x, s);
}

// Q(a) = sum_j coef_j * g(ratio_j * a) for one (desired SF, segment, d0),
// coef_j = (2 / alpha) eta_j C_j.
struct LossTerms {
  double shape = 0.0;  // 2 / alpha
  PerSf<double> coef{};
  PerSf<double> ratio{};
  bool active = false;

  double operator()(double a) const {
    double q = 0.0;
    for (std::size_t j = 0; j < SfIndex::kCount; ++j) {
      if (coef[j] == 0.0) continue;
      q += coef[j] * scaled_lower_gamma(shape, ratio[j] * a);
    }
    return std::min(q, 1.0);
  }
};

LossTerms loss_terms(double d0, SfIndex sf, Segment segment, const ScenarioModel& model) {
  if (!(d0 > 0.0)) throw std::invalid_argument("distance must be > 0");
  const double alpha = model.link().path_loss_exponent;
  const double reach = std::pow(model.interference_radius_m() / d0, alpha);
  LossTerms t;
  t.shape = 2.0 / alpha;
  for (auto j : kAllSfs) {
    const double c = collision_probability(sf, j, segment, model);
    t.coef[j.offset()] = t.shape * model.field().sf_probabilities[j.offset()] * c;
    t.ratio[j.offset()] = reach / model.phy().capture_ratio(sf, j);
    if (t.coef[j.offset()] > 0.0) t.active = true;
  }
  return t;
}

double sensitivity_threshold(double d0, SfIndex sf, const ScenarioModel& model) {
  const auto& link = model.link();
  return model.phy().sensitivity_w(sf) * std::pow(d0, link.path_loss_exponent) /
         (link.gamma0 * link.tx_rf_power_w);
}

QuadratureOptions quad_options(const ScenarioModel& model) {
  QuadratureOptions o;
  o.abs_tol = 1e-13;
  o.rel_tol = model.options().quad_rel_tol;
  return o;
}

// P(segment survives | n) for n = first .. first + count - 1:
//   e^{-c} * int_0^inf (1 - Q(c + t))^n e^{-t} dt,
// truncated at t = ln(1/tail) with the tail closed by its value at the cut.
std::vector<double> success_over_n(double d0, SfIndex sf, Segment segment, long first,
                                   std::size_t count, const ScenarioModel& model) {
  const double c = sensitivity_threshold(d0, sf, model);
  const double outage = std::exp(-c);
  const LossTerms terms = loss_terms(d0, sf, segment, model);
  std::vector<double> out(count, outage);
  if (!terms.active || (count == 1 && first == 0)) return out;

  const double cut = std::log(1.0 / model.options().integration_tail);
  auto log_survive = [&](double a) {
    const double q = terms(a);
    return q >= 1.0 ? -std::numeric_limits<double>::infinity() : std::log1p(-q);
  };
  auto power = [](long n, double log_base) {
    return n == 0 ? 1.0 : std::exp(static_cast<double>(n) * log_base);
  };
  VectorIntegrand f = [&](double t, std::span<double> values) {
    const double lb = log_survive(c + t);
    const double decay = std::exp(-t);
    for (std::size_t i = 0; i < values.size(); ++i)
      values[i] = power(first + static_cast<long>(i), lb) * decay;
  };
  const auto result = integrate_adaptive(f, count, 0.0, cut, quad_options(model));
  const double lb_cut = log_survive(c + cut);
  const double tail = std::exp(-cut);
  for (std::size_t i = 0; i < count; ++i) {
    const double v = outage * (result.values[i] + power(first + static_cast<long>(i), lb_cut) * tail);
    if (!std::isfinite(v)) throw NumericalError("non-finite success probability");
    out[i] = std::clamp(v, 0.0, 1.0);
  }
  return out;
}

ProposedScheme as_single_sf(SfIndex sf) { return ProposedScheme{sf, sf, 1}; }

SfIndex round_sf(int round, const ProposedScheme& scheme) {
  return SfIndex(std::min(round, scheme.last_sf.value()));
}

double mean_success(const LinkProfile& profile, SfIndex sf) {
  double s = 0.0;
  for (std::size_t i = 0; i < profile.by_n.size(); ++i)
    s += profile.weights[i] * profile.by_n[i].frame_success[sf.offset()];
  return s;
}

AnalyticalOutcome decondition(const LinkProfile& profile, const ProposedScheme& scheme,
                              double ns_bar, const ScenarioModel& model, bool with_time) {
  AnalyticalOutcome out;
  double time = 0.0;
  for (std::size_t i = 0; i < profile.by_n.size(); ++i) {
    const double w = profile.weights[i];
    const auto c = conditional_outcome(profile.by_n[i], scheme, ns_bar, model,
                                       profile.distance_m);
    out.energy_fragments_j += w * c.fragment_energy_j;
    time += w * c.update_time_s;
    out.mean_round_completed += w * c.round_completed;
    out.mean_final_round_attempts += w * c.final_round_attempts;
  }
  out.energy_control_j = model.control_energy_j();
  out.energy_total_j = out.energy_fragments_j + out.energy_control_j;
  if (with_time) out.update_time_s = time;
  return out;
}

}  // namespace

double collision_probability(SfIndex desired, SfIndex interferer, Segment segment,
                             const ScenarioModel& model) {
  const auto& field = model.field();
  const double own = segment == Segment::preamble ? model.preamble_airtime_s(desired)
                                                  : model.frame_airtime_s(desired);
  const double window = own + field.mean_frame_duration_s[interferer.offset()];
  const double p = field.frame_rate_hz * window / field.channel_count;
  if (p > 1.0) {
    if (!g_clamp_warned.exchange(true)) {
      std::clog << "warning: interferer collision probability " << p
                << " exceeds 1; clamping (vulnerable-window approximation breaks down)\n";
    }
    return 1.0;
  }
  return p;
}

double interference_loss_probability(double a, double d0, SfIndex sf, Segment segment,
                                     const ScenarioModel& model) {
  return loss_terms(d0, sf, segment, model)(a);
}

double segment_success(double d0, long n, SfIndex sf, Segment segment,
                       const ScenarioModel& model) {
  if (n < 0) throw std::invalid_argument("interferer count must be >= 0");
  return success_over_n(d0, sf, segment, n, 1, model)[0];
}

double preamble_failure(double d0, long n, SfIndex sf, const ScenarioModel& model) {
  return 1.0 - segment_success(d0, n, sf, Segment::preamble, model);
}

double frame_success(double d0, long n, SfIndex sf, const ScenarioModel& model) {
  const double pre = segment_success(d0, n, sf, Segment::preamble, model);
  return std::min(segment_success(d0, n, sf, Segment::frame, model), pre);
}

double payload_failure_given_preamble(double d0, long n, SfIndex sf,
                                      const ScenarioModel& model) {
  const double pre = segment_success(d0, n, sf, Segment::preamble, model);
  if (!(pre > 0.0))
    throw std::domain_error("payload failure undefined when the preamble always fails");
  const double fr = std::min(segment_success(d0, n, sf, Segment::frame, model), pre);
  return 1.0 - fr / pre;
}

double mean_frame_success(double d0, SfIndex sf, const ScenarioModel& model) {
  const double c = sensitivity_threshold(d0, sf, model);
  const LossTerms terms = loss_terms(d0, sf, Segment::frame, model);
  const double mu = model.mean_interferers();
  if (!terms.active || mu == 0.0) return std::exp(-c);
  // Poisson generating function: sum_n P(n) (1 - Q)^n = exp(-mu Q).
  const double cut = std::log(1.0 / model.options().integration_tail);
  auto f = [&](double t) { return std::exp(-mu * terms(c + t) - t); };
  const double body = integrate_adaptive(f, 0.0, cut, quad_options(model));
  return std::clamp(std::exp(-c) * (body + f(cut)), 0.0, 1.0);
}

LinkProfile link_profile(double d0, const ScenarioModel& model) {
  const auto& window = model.interferer_window();
  LinkProfile p;
  p.distance_m = d0;
  p.first_n = window.first;
  p.weights = window.weights;
  p.by_n.resize(window.weights.size());
  for (auto sf : kAllSfs) {
    const auto pre = success_over_n(d0, sf, Segment::preamble, window.first,
                                    window.weights.size(), model);
    const auto fr = success_over_n(d0, sf, Segment::frame, window.first,
                                   window.weights.size(), model);
    for (std::size_t i = 0; i < p.by_n.size(); ++i) {
      auto& s = p.by_n[i];
      const double frame_ok = std::min(fr[i], pre[i]);
      s.preamble_fail[sf.offset()] = 1.0 - pre[i];
      s.frame_success[sf.offset()] = frame_ok;
      s.payload_fail_given_preamble[sf.offset()] = pre[i] > 0.0 ? 1.0 - frame_ok / pre[i] : 1.0;
    }
  }
  return p;
}

double expected_round_receptions(long frames_per_round, double frame_success) {
  return static_cast<double>(frames_per_round) * frame_success;
}

int completion_round(const PerSf<double>& frame_success, const ProposedScheme& scheme,
                     double ns_bar) {
  double collected = 0.0;
  for (int m = scheme.first_sf.value(); m <= scheme.last_sf.value(); ++m) {
    collected += expected_round_receptions(scheme.frames_per_round,
                                           frame_success[SfIndex(m).offset()]);
    if (collected >= ns_bar) return m;
  }
  return scheme.last_sf.value() + 1;
}

double final_round_attempts(const PerSf<double>& frame_success, const ProposedScheme& scheme,
                            int m0, double ns_bar, AttemptsFormula formula,
                            double distance_m) {
  double collected = 0.0;
  for (int m = scheme.first_sf.value(); m < m0; ++m) {
    collected += expected_round_receptions(scheme.frames_per_round,
                                           frame_success[round_sf(m, scheme).offset()]);
  }
  const double remaining = ns_bar - collected;
  if (remaining <= 0.0) return 0.0;
  const double s = frame_success[round_sf(m0, scheme).offset()];
  if (formula == AttemptsFormula::as_printed) {
    if (!(s < 1.0))
      throw NumericalError("as-printed attempts formula divides by 1 - S = 0");
    return remaining / (1.0 - s);
  }
  if (!(s > 0.0)) {
    throw UnreachableRecipient("recipient at " + std::to_string(distance_m) +
                                   " m cannot receive SF" +
                                   std::to_string(round_sf(m0, scheme).value()) + " frames",
                               distance_m);
  }
  return remaining / s;
}

double attempt_energy(const SuccessProbabilities& p, SfIndex sf, const ScenarioModel& model) {
  const std::size_t i = sf.offset();
  const double e_fr = model.frame_energy_j(sf);
  const double e_pr = model.preamble_energy_j(sf);
  if (model.options().energy_formula == EnergyFormula::as_printed) {
    return p.frame_success[i] * e_fr + p.payload_fail_given_preamble[i] * e_fr +
           p.preamble_fail[i] * e_pr;
  }
  const double acquired = 1.0 - p.preamble_fail[i];
  return acquired * e_fr + (1.0 - acquired) * e_pr;
}

ConditionalOutcome conditional_outcome(const SuccessProbabilities& p,
                                       const ProposedScheme& scheme, double ns_bar,
                                       const ScenarioModel& model, double distance_m) {
  ConditionalOutcome out;
  out.round_completed = completion_round(p.frame_success, scheme, ns_bar);
  out.final_round_attempts =
      final_round_attempts(p.frame_success, scheme, out.round_completed, ns_bar,
                           model.options().attempts_formula, distance_m);
  const double w = static_cast<double>(scheme.frames_per_round);
  for (int m = scheme.first_sf.value(); m < out.round_completed; ++m) {
    const SfIndex sf = round_sf(m, scheme);
    out.fragment_energy_j += w * attempt_energy(p, sf, model);
    out.update_time_s += w * model.cycle_time_s(sf);
  }
  const SfIndex last = round_sf(out.round_completed, scheme);
  out.fragment_energy_j += out.final_round_attempts * attempt_energy(p, last, model);
  out.update_time_s += out.final_round_attempts * model.cycle_time_s(last);
  return out;
}

AnalyticalOutcome analyze(const LinkProfile& profile, const SchemeConfig& scheme,
                          const ScenarioModel& model) {
  const double d0 = profile.distance_m;
  if (const auto* p = std::get_if<ProposedScheme>(&scheme)) {
    const double ns_bar = expected_fragments(model.decoder(model.network().proposed_decoder));
    return decondition(profile, *p, ns_bar, model, true);
  }
  const double k = expected_fragments(model.decoder(model.network().benchmark_decoder));
  auto single_sf = [&](SfIndex sf, bool with_time) {
    if (mean_success(profile, sf) < model.options().min_success_probability) {
      throw UnreachableRecipient("SF" + std::to_string(sf.value()) + " cannot reach a recipient at " +
                                     std::to_string(d0) + " m",
                                 d0);
    }
    auto out = decondition(profile, as_single_sf(sf), k, model, with_time);
    out.assigned_sf = sf;
    return out;
  };
  if (const auto* f = std::get_if<FixedSfScheme>(&scheme)) return single_sf(f->sf, true);

  const auto& gb = std::get<GroupBasedScheme>(scheme);
  PerSf<double> means{};
  for (auto sf : kAllSfs) means[sf.offset()] = mean_success(profile, sf);
  PerSf<double> cost{};
  for (auto sf : kAllSfs) {
    const double per_frame = gb.criterion == GroupCriterion::energy ? model.frame_energy_j(sf)
                                                                    : model.cycle_time_s(sf);
    cost[sf.offset()] = means[sf.offset()] > 0.0 ? k / means[sf.offset()] * per_frame
                                                 : std::numeric_limits<double>::infinity();
  }
  const auto best = std::min_element(cost.begin(), cost.end());
  if (!std::isfinite(*best))
    throw UnreachableRecipient("no SF reaches a recipient at " + std::to_string(d0) + " m", d0);
  return single_sf(SfIndex::from_offset(static_cast<std::size_t>(best - cost.begin())), false);
}

AnalyticalOutcome analyze(double d0, const SchemeConfig& scheme, const ScenarioModel& model) {
  return analyze(link_profile(d0, model), scheme, model);
}

double expected_energy(double d0, const SchemeConfig& scheme, const ScenarioModel& model) {
  return analyze(d0, scheme, model).energy_total_j;
}

double expected_update_time(double d0, const SchemeConfig& scheme, const ScenarioModel& model) {
  const auto out = analyze(d0, scheme, model);
  if (!out.update_time_s)
    throw std::invalid_argument("update time has no closed form for group-based schemes");
  return *out.update_time_s;
}

DistanceQuadrature distance_quadrature(double region_radius_m, int panels) {
  const auto rule = composite_gauss_legendre(0.0, region_radius_m, panels);
  DistanceQuadrature q;
  q.distances_m = rule.nodes;
  q.weights.resize(rule.nodes.size());
  const double r2 = region_radius_m * region_radius_m;
  for (std::size_t i = 0; i < rule.nodes.size(); ++i)
    q.weights[i] = rule.weights[i] * 2.0 * rule.nodes[i] / r2;
  return q;
}

DistanceQuadrature grid_quadrature(double region_radius_m, int points) {
  if (points < 1) throw std::invalid_argument("grid needs at least one point");
  DistanceQuadrature q;
  for (int i = 1; i <= points; ++i) {
    q.distances_m.push_back(region_radius_m * i / points);
    q.weights.push_back(1.0 / points);
  }
  return q;
}

double distance_average(const std::function<double(double)>& metric, double region_radius_m,
                        int panels) {
  const auto q = distance_quadrature(region_radius_m, panels);
  double total = 0.0;
  for (std::size_t i = 0; i < q.distances_m.size(); ++i)
    total += q.weights[i] * metric(q.distances_m[i]);
  return total;
}

}  // namespace fuota
