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

#ifndef RESOPT_DP_HPP_
#define RESOPT_DP_HPP_

#include <array>
#include <cstddef>
#include <filesystem>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "resopt/grid.hpp"
#include "resopt/piecewise_linear.hpp"
#include "resopt/reduced.hpp"

namespace resopt {

// Discretized control set. Absolute values are intersected with each node's
// admissible interval; a relative grid places `count` equally spaced controls
// across the interval itself.
struct ControlGrid {
  enum class Kind { kAbsolute, kRelative };

  Kind kind = Kind::kAbsolute;
  std::vector<double> values;  // kAbsolute, ascending
  std::size_t count = 0;       // kRelative, >= 2

  static ControlGrid absolute(std::vector<double> values);
  static ControlGrid uniform(double lo, double hi, std::size_t count);
  static ControlGrid relative(std::size_t count);

  // Number of nominal controls (values.size() or count).
  std::size_t size() const;

  // Ascending, duplicate-free candidates inside `interval`. With
  // include_endpoints both ends of the interval are always added.
  std::vector<double> candidates(ControlInterval interval, bool include_endpoints) const;
};

struct Scenario {
  std::size_t horizon = 0;            // number of stages T
  double rho = 1.0;                   // per-stage discount factor, (0, 1]
  std::vector<double> prices;         // r_t, t = 0 .. T-1 at least
  std::vector<double> injection_costs;  // c_t, empty when unused
  std::optional<PiecewiseLinear> terminal_value;  // K of the aggregate state
  ControlGrid controls;

  // Throws ConfigError on a bad horizon, discount, series length or grid.
  void validate() const;

  double price(std::size_t t) const { return prices[t]; }
  double injection_cost(std::size_t t) const {
    return t < injection_costs.size() ? injection_costs[t] : 0.0;
  }
  // rho^t.
  double discount(std::size_t t) const;
  // K(aggregate), 0 without a terminal value.
  double terminal(double aggregate) const;
};

using StateVec = std::array<double, Grid::kMaxDims>;

// Result of applying one control to one state.
struct Transition {
  StateVec next{};
  std::array<double, 3> flows{};  // model-specific volumes, see flow_names()
};

// A stationary controlled system: admissible sets and dynamics do not depend
// on the stage, only the gain does (through the scenario series).
class DpModel {
 public:
  virtual ~DpModel() = default;

  virtual std::size_t dims() const = 0;
  virtual std::vector<std::string> state_names() const = 0;
  virtual std::vector<std::string> flow_names() const = 0;
  // Derived quantities reported along trajectories (pressures, saturations).
  virtual std::vector<std::string> observable_names() const = 0;

  virtual ControlInterval admissible(std::span<const double> x) const = 0;
  virtual Transition transition(std::span<const double> x, double u) const = 0;
  // Undiscounted stage gain L_t.
  virtual double gain(const Transition& tr, std::size_t t, const Scenario& sc) const = 0;
  virtual void observe(std::span<const double> x, std::span<double> out) const = 0;

  // Transitions for several controls at one state. Models override this to
  // share per-state work such as the pressure solve.
  virtual std::vector<Transition> transitions(std::span<const double> x,
                                              std::span<const double> us) const;

  // Argument of the terminal value: the sum of the state coordinates.
  virtual double aggregate(std::span<const double> x) const;

  // Commodity produced by a transition (flows[0]) and the largest amount
  // producible from x, reached at the lower end of the admissible interval.
  virtual double production(const Transition& tr) const { return tr.flows[0]; }
  virtual double max_production(std::span<const double> x) const;
};

struct ValueFunction {
  std::size_t stage = 0;
  std::vector<double> values;  // one per grid node
};

struct Policy {
  std::vector<std::vector<double>> controls;  // [stage][node]
};

struct DpSolution {
  Grid grid;
  std::vector<ValueFunction> value_functions;  // stages 0 .. T
  Policy policy;                               // stages 0 .. T-1
  double seconds = 0.0;                        // CPU time of the solve
};

struct SolveOptions {
  std::size_t threads = 1;        // 0 = hardware concurrency
  bool include_endpoints = true;  // always offer both interval ends
};

// Backward recursion J_T = rho^T K, J_t(x) = max_u rho^t L_t(x, u) +
// J_{t+1}(f(x, u)) over the discretized admissible controls, with J_{t+1}
// interpolated multilinearly (clamped to the grid box). Controls are tried in
// ascending order and a later control replaces the incumbent on ties.
//
// Throws ConfigError if a node has no candidate control and NumericError on a
// non-finite gain or value. Results do not depend on the thread count.
DpSolution solve_dp(const DpModel& model, const Grid& grid, const Scenario& scenario,
                    const SolveOptions& options = {});

double interpolate_value(const Grid& grid, const ValueFunction& vf, std::span<const double> x);

struct TrajectoryRow {
  std::size_t t = 0;
  StateVec state{};
  double control = 0.0;
  std::array<double, 3> flows{};
  std::array<double, Grid::kMaxDims> observables{};
  double discounted_gain = 0.0;
  double cumulative_gain = 0.0;
};

struct Trajectory {
  std::size_t dims = 0;
  std::vector<std::string> state_names;
  std::vector<std::string> flow_names;
  std::vector<std::string> observable_names;
  std::vector<TrajectoryRow> rows;
  StateVec final_state{};
  double terminal_value = 0.0;  // rho^T K(final state)
  double npv = 0.0;             // sum of discounted gains plus terminal value

  std::vector<double> controls() const;
};

enum class PolicyLookup {
  kNearestNode,  // control of the nearest node, clamped into the admissible set
  kReoptimize,   // one-step lookahead against the stored J_{t+1}
};

Trajectory simulate_policy(const DpModel& model, const DpSolution& solution,
                           std::span<const double> x0, const Scenario& scenario,
                           PolicyLookup lookup = PolicyLookup::kNearestNode,
                           const SolveOptions& options = {});

// Applies a fixed control sequence. Throws InfeasibleError carrying the stage
// index if a control lies outside the admissible interval (relative slack
// 1e-9).
Trajectory evaluate_open_loop(const DpModel& model, std::span<const double> controls,
                              std::span<const double> x0, const Scenario& scenario);

// Columns: stage, one per state coordinate, value, control (empty at stage T).
void write_solution_csv(const std::filesystem::path& path, const DpModel& model,
                        const DpSolution& solution);

// Columns: t, states, control, flows, observables, discounted_gain,
// cumulative_gain; a final row holds the terminal state and value.
void write_trajectory_csv(const std::filesystem::path& path, const Trajectory& trajectory);

}  // namespace resopt

#endif  // RESOPT_DP_HPP_
