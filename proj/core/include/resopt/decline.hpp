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

#ifndef RESOPT_DECLINE_HPP_
#define RESOPT_DECLINE_HPP_

#include <cstddef>
#include <filesystem>
#include <span>
#include <utility>
#include <vector>

#include "resopt/dp.hpp"
#include "resopt/models.hpp"

namespace resopt {

// Maximum production rate as a function of cumulative production. Linear
// between points, flat outside; a single point gives a constant curve.
class DeclineCurve {
 public:
  DeclineCurve() = default;

  // Points are sorted by cumulative production; points sharing a cumulative
  // value collapse to one carrying the largest rate. Throws ConfigError on an
  // empty list, a non-finite value, or a negative rate or cumulative.
  static DeclineCurve from_points(std::vector<std::pair<double, double>> points);

  double max_rate(double cumulative) const;
  double operator()(double cumulative) const { return max_rate(cumulative); }

  std::size_t size() const { return cum_.size(); }
  const std::vector<double>& cumulative() const { return cum_; }
  const std::vector<double>& rates() const { return rate_; }
  double cumulative_max() const { return cum_.back(); }
  double rate_max() const;

 private:
  std::vector<double> cum_;
  std::vector<double> rate_;
};

// Two columns, header `cumulative,max_rate`.
void write_decline_curve(const std::filesystem::path& path, const DeclineCurve& curve);
DeclineCurve read_decline_curve(const std::filesystem::path& path);

// Replays `controls` from x0 and records (cumulative production, largest
// producible amount) before the first step and after every step. Throws
// InfeasibleError with the stage index on an inadmissible control.
DeclineCurve generate_deliverability_curve(const DpModel& model, std::span<const double> controls,
                                           std::span<const double> x0);

// Natural depletion: the lower end of the admissible interval (the largest
// rate) at every step.
std::vector<double> max_rate_schedule(const DpModel& model, std::span<const double> x0,
                                      std::size_t steps);

// generate_deliverability_curve along max_rate_schedule.
DeclineCurve generate_decline_curve(const DpModel& model, std::span<const double> x0,
                                    std::size_t steps);

// Curve read off a set of states of a one-dimensional model whose state is
// the producible stock: point (x0 - x, max_production(x)) for each state
// x <= x0.
DeclineCurve decline_curve_from_states(const DpModel& model, double x0,
                                       std::span<const double> states);

// Cumulative production as the state, rate as the control, admissible rates
// [0, h(cumulative)], gain r_t times rate. Observable: h(cumulative).
class DeclineModel final : public DpModel {
 public:
  explicit DeclineModel(DeclineCurve curve) : curve_(std::move(curve)) {}

  const DeclineCurve& curve() const { return curve_; }

  std::size_t dims() const override { return 1; }
  std::vector<std::string> state_names() const override { return {"cumulative"}; }
  std::vector<std::string> flow_names() const override { return {"rate"}; }
  std::vector<std::string> observable_names() const override { return {"max_rate"}; }

  ControlInterval admissible(std::span<const double> x) const override;
  Transition transition(std::span<const double> x, double u) const override;
  double gain(const Transition& tr, std::size_t t, const Scenario& sc) const override;
  void observe(std::span<const double> x, std::span<double> out) const override;
  double max_production(std::span<const double> x) const override;

 private:
  DeclineCurve curve_;
};

struct DeclineSolveOptions {
  std::size_t cumulative_nodes = 1000;
  std::size_t rate_controls = 20;  // uniform on [0, largest rate of the curve]
  std::size_t threads = 1;
};

struct DeclineSolution {
  double value = 0.0;          // J_0 at zero cumulative production
  std::vector<double> rates;   // simulated optimal schedule
  Trajectory trajectory;
  double seconds = 0.0;
};

// Maximizes sum rho^t r_t F_t subject to F_t <= h(F_0 + ... + F_{t-1}) by
// backward DP over cumulative production. The scenario's control grid is
// ignored.
DeclineSolution solve_decline_dp(const DeclineCurve& curve, const Scenario& scenario,
                                 const DeclineSolveOptions& options = {});

// Bottom-hole pressures that reproduce a rate schedule in a gas model, each
// rate capped at what the current state can deliver. Rates are matched by
// inverting the production function at the replayed state.
std::vector<double> rates_to_controls(const GasOneTankModel& model, std::span<const double> rates,
                                      double x0);
std::vector<double> rates_to_controls(const GasTwoTankModel& model, std::span<const double> rates,
                                      std::array<double, 2> x0);

struct EquivalenceOptions {
  std::size_t state_nodes = 5000;
  std::size_t threads = 1;
};

struct EquivalenceReport {
  double mb_value = 0.0;       // material-balance DP value at x0
  double dc_value = 0.0;       // decline-curve DP value
  double abs_gap = 0.0;        // |dc - mb|
  double rel_gap = 0.0;        // abs_gap / |mb| (0 when both vanish)
  double dc_replay_npv = 0.0;  // DC schedule replayed in the material-balance model
  std::vector<double> mb_rates;
  std::vector<double> dc_rates;
  double mb_seconds = 0.0;
  double dc_seconds = 0.0;
};

// Solves the one-tank gas problem both ways on matched grids: the state grid
// spans [min_gas_volume, x0], the decline curve is read off that grid, and the
// decline DP uses as many cumulative nodes and rate controls as the
// material-balance DP has state nodes and controls.
EquivalenceReport check_equivalence_1d(const GasOneTankModel& model, double x0,
                                       const Scenario& scenario,
                                       const EquivalenceOptions& options = {});

// Two-tank counterpart: the curve comes from natural depletion of the
// two-tank model and the state grid has state_nodes points per tank. The
// two values need not agree.
EquivalenceReport compare_two_tank_dc(const GasTwoTankModel& model, std::array<double, 2> x0,
                                      const Scenario& scenario,
                                      const EquivalenceOptions& options = {});

}  // namespace resopt

#endif  // RESOPT_DECLINE_HPP_
