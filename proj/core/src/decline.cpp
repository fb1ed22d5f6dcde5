// Copyright 2026 The resopt Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "resopt/decline.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <limits>
#include <string>

#include "resopt/errors.hpp"
#include "resopt/table_io.hpp"

namespace resopt {

DeclineCurve DeclineCurve::from_points(std::vector<std::pair<double, double>> points) {
  if (points.empty()) throw ConfigError("decline curve: no points");
  for (const auto& [c, r] : points) {
    if (!std::isfinite(c) || !std::isfinite(r)) throw ConfigError("decline curve: non-finite point");
    if (c < 0.0 || r < 0.0) throw ConfigError("decline curve: negative cumulative or rate");
  }
  std::stable_sort(points.begin(), points.end(),
                   [](const auto& a, const auto& b) { return a.first < b.first; });
  DeclineCurve curve;
  for (const auto& [c, r] : points) {
    if (!curve.cum_.empty() && curve.cum_.back() == c) {
      curve.rate_.back() = std::max(curve.rate_.back(), r);
      continue;
    }
    curve.cum_.push_back(c);
    curve.rate_.push_back(r);
  }
  return curve;
}

double DeclineCurve::max_rate(double cumulative) const {
  if (cumulative <= cum_.front()) return rate_.front();
  if (cumulative >= cum_.back()) return rate_.back();
  const auto it = std::upper_bound(cum_.begin(), cum_.end(), cumulative);
  const std::size_t k = static_cast<std::size_t>(it - cum_.begin()) - 1;
  if (cum_[k] == cumulative) return rate_[k];
  const double w = (cumulative - cum_[k]) / (cum_[k + 1] - cum_[k]);
  return rate_[k] + w * (rate_[k + 1] - rate_[k]);
}

double DeclineCurve::rate_max() const { return *std::max_element(rate_.begin(), rate_.end()); }

void write_decline_curve(const std::filesystem::path& path, const DeclineCurve& curve) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw ConfigError("cannot write " + path.string());
  out << "cumulative,max_rate\n";
  for (std::size_t i = 0; i < curve.size(); ++i) {
    out << format_number(curve.cumulative()[i]) << ',' << format_number(curve.rates()[i]) << '\n';
  }
}

DeclineCurve read_decline_curve(const std::filesystem::path& path) {
  const NumericTable table = read_numeric_table(path);
  std::vector<std::pair<double, double>> points;
  for (const auto& row : table.rows) {
    if (row.size() != 2) throw ConfigError(path.string() + ": expected two columns");
    points.emplace_back(row[0], row[1]);
  }
  return DeclineCurve::from_points(std::move(points));
}

// ---------------------------------------------------------------------------

DeclineCurve generate_deliverability_curve(const DpModel& model, std::span<const double> controls,
                                           std::span<const double> x0) {
  const std::size_t dims = model.dims();
  StateVec x{};
  std::copy(x0.begin(), x0.end(), x.begin());
  double cum = 0.0;
  std::vector<std::pair<double, double>> points;
  points.emplace_back(0.0, model.max_production(std::span<const double>(x.data(), dims)));
  for (std::size_t t = 0; t < controls.size(); ++t) {
    const std::span<const double> xs(x.data(), dims);
    const ControlInterval adm = model.admissible(xs);
    const double slack = 1e-9 * std::max({1.0, std::abs(adm.lo), std::abs(adm.hi)});
    if (adm.empty() || !adm.contains(controls[t], slack)) {
      throw InfeasibleError("decline curve: control " + format_number(controls[t]) +
                                " outside [" + format_number(adm.lo) + ", " +
                                format_number(adm.hi) + "]",
                            t);
    }
    const Transition tr = model.transition(xs, adm.clamp(controls[t]));
    cum += model.production(tr);
    x = tr.next;
    points.emplace_back(cum, model.max_production(std::span<const double>(x.data(), dims)));
  }
  return DeclineCurve::from_points(std::move(points));
}

std::vector<double> max_rate_schedule(const DpModel& model, std::span<const double> x0,
                                      std::size_t steps) {
  const std::size_t dims = model.dims();
  StateVec x{};
  std::copy(x0.begin(), x0.end(), x.begin());
  std::vector<double> out;
  out.reserve(steps);
  for (std::size_t t = 0; t < steps; ++t) {
    const std::span<const double> xs(x.data(), dims);
    const ControlInterval adm = model.admissible(xs);
    if (adm.empty()) throw InfeasibleError("decline curve: empty admissible set", t);
    out.push_back(adm.lo);
    x = model.transition(xs, adm.lo).next;
  }
  return out;
}

DeclineCurve generate_decline_curve(const DpModel& model, std::span<const double> x0,
                                    std::size_t steps) {
  const auto controls = max_rate_schedule(model, x0, steps);
  return generate_deliverability_curve(model, controls, x0);
}

DeclineCurve decline_curve_from_states(const DpModel& model, double x0,
                                       std::span<const double> states) {
  if (model.dims() != 1) throw ConfigError("decline curve: states need a one-dimensional model");
  std::vector<std::pair<double, double>> points;
  for (double x : states) {
    if (x > x0) continue;
    const double xs[] = {x};
    points.emplace_back(x0 - x, model.max_production(xs));
  }
  return DeclineCurve::from_points(std::move(points));
}

// ---------------------------------------------------------------------------

ControlInterval DeclineModel::admissible(std::span<const double> x) const {
  return {0.0, curve_.max_rate(x[0])};
}

Transition DeclineModel::transition(std::span<const double> x, double u) const {
  Transition tr;
  tr.next[0] = x[0] + u;
  tr.flows[0] = u;
  return tr;
}

double DeclineModel::gain(const Transition& tr, std::size_t t, const Scenario& sc) const {
  return sc.price(t) * tr.flows[0];
}

void DeclineModel::observe(std::span<const double> x, std::span<double> out) const {
  out[0] = curve_.max_rate(x[0]);
}

double DeclineModel::max_production(std::span<const double> x) const {
  return curve_.max_rate(x[0]);
}

DeclineSolution solve_decline_dp(const DeclineCurve& curve, const Scenario& scenario,
                                 const DeclineSolveOptions& options) {
  DeclineModel model(curve);
  Scenario sc = scenario;
  const double top = curve.rate_max();
  sc.controls = top > 0.0 ? ControlGrid::uniform(0.0, top, std::max<std::size_t>(2, options.rate_controls))
                          : ControlGrid::absolute({0.0});
  // Beyond the last point the curve stays flat, so the reachable cumulative
  // range ends one full-rate horizon past it.
  double hi = curve.cumulative_max() + static_cast<double>(sc.horizon) * curve.rates().back();
  if (!(hi > 0.0)) hi = 1.0;
  const Grid grid({Grid::uniform_axis(0.0, hi, std::max<std::size_t>(2, options.cumulative_nodes))});

  DeclineSolution out;
  const DpSolution sol = solve_dp(model, grid, sc, {options.threads, true});
  const double x0[] = {0.0};
  out.value = sol.value_functions.front().values.front();
  out.trajectory = simulate_policy(model, sol, x0, sc);
  for (const auto& row : out.trajectory.rows) out.rates.push_back(row.flows[0]);
  out.seconds = sol.seconds;
  return out;
}

// ---------------------------------------------------------------------------

namespace {

// Control at a state with known pressure that produces `rate`, or the
// largest admissible rate if `rate` is out of reach.
double control_for_rate(double pressure, double rate, ControlInterval adm,
                        const GasTankParams& tank) {
  const double max_rate = gas_production_at(pressure, adm.lo, tank);
  if (rate >= max_rate) return adm.lo;
  if (rate <= 0.0) return adm.hi;
  return adm.clamp(bhp_for_gas_rate(pressure, rate, tank));
}

// |a - b| / |b|, 0 when both vanish.
double relative_gap(double a, double b) {
  const double gap = std::abs(a - b);
  if (gap == 0.0) return 0.0;
  return b != 0.0 ? gap / std::abs(b) : std::numeric_limits<double>::infinity();
}

}  // namespace

std::vector<double> rates_to_controls(const GasOneTankModel& model, std::span<const double> rates,
                                      double x0) {
  std::vector<double> out;
  out.reserve(rates.size());
  double x[] = {x0};
  for (double r : rates) {
    const double p = psi_one_tank(x[0], model.params());
    const ControlInterval adm = model.admissible(x);
    const double u = control_for_rate(p, r, adm, model.params());
    out.push_back(u);
    x[0] = model.transition(x, u).next[0];
  }
  return out;
}

std::vector<double> rates_to_controls(const GasTwoTankModel& model, std::span<const double> rates,
                                      std::array<double, 2> x0) {
  std::vector<double> out;
  out.reserve(rates.size());
  double x[] = {x0[0], x0[1]};
  for (double r : rates) {
    const ControlInterval adm = model.admissible(x);
    const double u = control_for_rate(adm.hi, r, adm, model.params().tank1);
    out.push_back(u);
    const Transition tr = model.transition(x, u);
    x[0] = tr.next[0];
    x[1] = tr.next[1];
  }
  return out;
}

EquivalenceReport check_equivalence_1d(const GasOneTankModel& model, double x0,
                                       const Scenario& scenario,
                                       const EquivalenceOptions& options) {
  const double lo = min_gas_volume(model.params());
  if (!(x0 > lo)) throw ConfigError("equivalence: initial gas must exceed the minimum gas volume");
  const Grid grid({Grid::uniform_axis(lo, x0, options.state_nodes)});

  EquivalenceReport rep;
  const DpSolution mb = solve_dp(model, grid, scenario, {options.threads, true});
  const double xs[] = {x0};
  rep.mb_value = interpolate_value(grid, mb.value_functions.front(), xs);
  const Trajectory mb_traj = simulate_policy(model, mb, xs, scenario);
  for (const auto& row : mb_traj.rows) rep.mb_rates.push_back(row.flows[0]);
  rep.mb_seconds = mb.seconds;

  const DeclineCurve curve = decline_curve_from_states(model, x0, grid.axis(0));
  const DeclineSolution dc =
      solve_decline_dp(curve, scenario,
                       {options.state_nodes, scenario.controls.size(), options.threads});
  rep.dc_value = dc.value;
  rep.dc_rates = dc.rates;
  rep.dc_seconds = dc.seconds;

  const auto controls = rates_to_controls(model, rep.dc_rates, x0);
  rep.dc_replay_npv = evaluate_open_loop(model, controls, xs, scenario).npv;
  rep.abs_gap = std::abs(rep.dc_value - rep.mb_value);
  rep.rel_gap = relative_gap(rep.dc_value, rep.mb_value);
  return rep;
}

EquivalenceReport compare_two_tank_dc(const GasTwoTankModel& model, std::array<double, 2> x0,
                                      const Scenario& scenario,
                                      const EquivalenceOptions& options) {
  const auto& p = model.params();
  const double lo1 = min_gas_volume(p.tank1);
  const double lo2 = min_gas_volume(p.tank2);
  if (!(x0[0] > lo1) || !(x0[1] > lo2)) {
    throw ConfigError("two-tank comparison: initial gas must exceed the minimum gas volumes");
  }
  const Grid grid({Grid::uniform_axis(lo1, x0[0], options.state_nodes),
                   Grid::uniform_axis(lo2, x0[1], options.state_nodes)});

  EquivalenceReport rep;
  const DpSolution mb = solve_dp(model, grid, scenario, {options.threads, true});
  const double xs[] = {x0[0], x0[1]};
  rep.mb_value = interpolate_value(grid, mb.value_functions.front(), xs);
  const Trajectory mb_traj = simulate_policy(model, mb, xs, scenario);
  for (const auto& row : mb_traj.rows) rep.mb_rates.push_back(row.flows[0]);
  rep.mb_seconds = mb.seconds;

  const DeclineCurve curve = generate_decline_curve(model, xs, scenario.horizon);
  const DeclineSolution dc = solve_decline_dp(
      curve, scenario,
      {options.state_nodes * options.state_nodes, scenario.controls.size(), options.threads});
  rep.dc_value = dc.value;
  rep.dc_rates = dc.rates;
  rep.dc_seconds = dc.seconds;

  const auto controls = rates_to_controls(model, rep.dc_rates, x0);
  rep.dc_replay_npv = evaluate_open_loop(model, controls, xs, scenario).npv;
  rep.abs_gap = std::abs(rep.dc_value - rep.mb_value);
  rep.rel_gap = relative_gap(rep.dc_value, rep.mb_value);
  return rep;
}

}  // namespace resopt
