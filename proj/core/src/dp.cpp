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

#include "resopt/dp.hpp"

#include <algorithm>
#include <cstdint>
#include <ctime>
#include <cmath>
#include <exception>
#include <fstream>
#include <limits>
#include <mutex>
#include <string>
#include <thread>

#include "resopt/errors.hpp"
#include "resopt/table_io.hpp"

namespace resopt {
namespace {

constexpr std::size_t kMaxStencil = std::size_t{1} << Grid::kMaxDims;

std::size_t resolve_threads(std::size_t requested, std::size_t work) {
  std::size_t n = requested;
  if (n == 0) n = std::max(1U, std::thread::hardware_concurrency());
  return std::clamp<std::size_t>(n, 1, std::max<std::size_t>(1, work / 64));
}

// Runs body(i) for i in [0, n) over contiguous chunks. The first exception
// thrown by any worker is rethrown after all workers have joined.
template <typename Body>
void parallel_for(std::size_t n, std::size_t threads, Body&& body) {
  threads = resolve_threads(threads, n);
  if (threads <= 1) {
    for (std::size_t i = 0; i < n; ++i) body(i);
    return;
  }
  std::exception_ptr error;
  std::mutex error_mutex;
  std::vector<std::thread> pool;
  pool.reserve(threads);
  const std::size_t chunk = (n + threads - 1) / threads;
  for (std::size_t w = 0; w < threads; ++w) {
    const std::size_t begin = w * chunk;
    const std::size_t end = std::min(n, begin + chunk);
    if (begin >= end) break;
    pool.emplace_back([&, begin, end] {
      try {
        for (std::size_t i = begin; i < end; ++i) body(i);
      } catch (...) {
        std::lock_guard<std::mutex> lock(error_mutex);
        if (!error) error = std::current_exception();
      }
    });
  }
  for (auto& t : pool) t.join();
  if (error) std::rethrow_exception(error);
}

// Candidate controls of one node with their transitions and the stencils of
// the next states.
struct NodeTable {
  std::vector<double> controls;
  std::vector<Transition> transitions;
  std::vector<std::size_t> index;  // kMaxStencil slots per candidate
  std::vector<double> weight;
  std::vector<std::uint8_t> count;
};

NodeTable build_node(const DpModel& model, const Grid& grid, std::span<const double> x,
                     const Scenario& sc, bool include_endpoints) {
  NodeTable nt;
  const ControlInterval adm = model.admissible(x);
  if (adm.empty()) {
    throw ConfigError("dp: empty admissible control set at state (" + format_number(x[0]) +
                      (x.size() > 1 ? ", ..." : "") + ")");
  }
  nt.controls = sc.controls.candidates(adm, include_endpoints);
  if (nt.controls.empty()) {
    throw ConfigError("dp: no discretized control inside [" + format_number(adm.lo) + ", " +
                      format_number(adm.hi) + "]");
  }
  nt.transitions = model.transitions(x, nt.controls);
  const std::size_t m = nt.controls.size();
  nt.index.resize(m * kMaxStencil);
  nt.weight.resize(m * kMaxStencil);
  nt.count.resize(m);
  for (std::size_t k = 0; k < m; ++k) {
    const auto& next = nt.transitions[k].next;
    nt.count[k] = static_cast<std::uint8_t>(grid.stencil(
        std::span<const double>(next.data(), grid.dims()),
        std::span<std::size_t>(nt.index.data() + k * kMaxStencil, kMaxStencil),
        std::span<double>(nt.weight.data() + k * kMaxStencil, kMaxStencil)));
  }
  return nt;
}

void check_finite(double v, const char* what, std::size_t t) {
  if (!std::isfinite(v)) {
    throw NumericError(std::string("dp: non-finite ") + what + " at stage " + std::to_string(t));
  }
}

Trajectory make_trajectory(const DpModel& model) {
  Trajectory tr;
  tr.dims = model.dims();
  tr.state_names = model.state_names();
  tr.flow_names = model.flow_names();
  tr.observable_names = model.observable_names();
  return tr;
}

void append_row(Trajectory& traj, const DpModel& model, std::size_t t,
                std::span<const double> x, double u, const Transition& tr, double gain) {
  TrajectoryRow row;
  row.t = t;
  std::copy(x.begin(), x.end(), row.state.begin());
  row.control = u;
  row.flows = tr.flows;
  model.observe(x, std::span<double>(row.observables.data(), traj.observable_names.size()));
  row.discounted_gain = gain;
  const double prev = traj.rows.empty() ? 0.0 : traj.rows.back().cumulative_gain;
  row.cumulative_gain = prev + gain;
  traj.rows.push_back(row);
}

void finish_trajectory(Trajectory& traj, const DpModel& model, std::span<const double> x,
                       const Scenario& sc) {
  std::copy(x.begin(), x.end(), traj.final_state.begin());
  traj.terminal_value = sc.discount(sc.horizon) * sc.terminal(model.aggregate(x));
  const double gains = traj.rows.empty() ? 0.0 : traj.rows.back().cumulative_gain;
  traj.npv = gains + traj.terminal_value;
}

}  // namespace

// ---------------------------------------------------------------------------

ControlGrid ControlGrid::absolute(std::vector<double> values) {
  ControlGrid g;
  g.kind = Kind::kAbsolute;
  std::sort(values.begin(), values.end());
  values.erase(std::unique(values.begin(), values.end()), values.end());
  g.values = std::move(values);
  return g;
}

ControlGrid ControlGrid::uniform(double lo, double hi, std::size_t count) {
  return absolute(Grid::uniform_axis(lo, hi, count));
}

ControlGrid ControlGrid::relative(std::size_t count) {
  ControlGrid g;
  g.kind = Kind::kRelative;
  g.count = count;
  return g;
}

std::size_t ControlGrid::size() const { return kind == Kind::kAbsolute ? values.size() : count; }

std::vector<double> ControlGrid::candidates(ControlInterval interval,
                                            bool include_endpoints) const {
  std::vector<double> out;
  if (interval.empty()) return out;
  if (kind == Kind::kRelative) {
    if (interval.hi == interval.lo) return {interval.lo};
    const double n = static_cast<double>(count - 1);
    for (std::size_t i = 0; i < count; ++i) {
      out.push_back(interval.lo + (interval.hi - interval.lo) * (static_cast<double>(i) / n));
    }
    out.back() = interval.hi;
    return out;
  }
  for (double u : values) {
    if (u >= interval.lo && u <= interval.hi) out.push_back(u);
  }
  if (include_endpoints) {
    out.push_back(interval.lo);
    out.push_back(interval.hi);
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
  }
  return out;
}

void Scenario::validate() const {
  if (horizon == 0) throw ConfigError("scenario: horizon must be >= 1");
  if (!(rho > 0.0 && rho <= 1.0)) throw ConfigError("scenario: rho must lie in (0, 1]");
  if (prices.size() < horizon) {
    throw ConfigError("scenario: " + std::to_string(prices.size()) +
                      " prices for a horizon of " + std::to_string(horizon));
  }
  if (!injection_costs.empty() && injection_costs.size() < horizon) {
    throw ConfigError("scenario: injection cost series shorter than the horizon");
  }
  for (double v : prices) {
    if (!std::isfinite(v)) throw ConfigError("scenario: non-finite price");
  }
  for (double v : injection_costs) {
    if (!std::isfinite(v)) throw ConfigError("scenario: non-finite injection cost");
  }
  if (controls.kind == ControlGrid::Kind::kAbsolute) {
    for (double v : controls.values) {
      if (!std::isfinite(v)) throw ConfigError("scenario: non-finite control value");
    }
  } else if (controls.count < 2) {
    throw ConfigError("scenario: a relative control grid needs at least 2 controls");
  }
}

double Scenario::discount(std::size_t t) const { return std::pow(rho, static_cast<double>(t)); }

double Scenario::terminal(double aggregate) const {
  return terminal_value ? terminal_value->eval(aggregate) : 0.0;
}

// ---------------------------------------------------------------------------

std::vector<Transition> DpModel::transitions(std::span<const double> x,
                                             std::span<const double> us) const {
  std::vector<Transition> out;
  out.reserve(us.size());
  for (double u : us) out.push_back(transition(x, u));
  return out;
}

double DpModel::aggregate(std::span<const double> x) const {
  double s = 0.0;
  for (double v : x) s += v;
  return s;
}

double DpModel::max_production(std::span<const double> x) const {
  const ControlInterval adm = admissible(x);
  if (adm.empty()) return 0.0;
  return production(transition(x, adm.lo));
}

// ---------------------------------------------------------------------------

DpSolution solve_dp(const DpModel& model, const Grid& grid, const Scenario& sc,
                    const SolveOptions& options) {
  const std::clock_t start = std::clock();  // process CPU time, all threads
  sc.validate();
  if (grid.dims() != model.dims()) {
    throw ConfigError("dp: grid has " + std::to_string(grid.dims()) + " dimensions, model " +
                      std::to_string(model.dims()));
  }
  const std::size_t n = grid.size();
  const std::size_t dims = grid.dims();
  const std::size_t T = sc.horizon;

  // The model is stationary, so candidates, transitions and stencils are
  // computed once for all stages.
  std::vector<NodeTable> nodes(n);
  parallel_for(n, options.threads, [&](std::size_t i) {
    std::array<double, Grid::kMaxDims> x{};
    grid.node(i, std::span<double>(x.data(), dims));
    nodes[i] = build_node(model, grid, std::span<const double>(x.data(), dims), sc,
                          options.include_endpoints);
  });

  DpSolution sol;
  sol.grid = grid;
  sol.value_functions.resize(T + 1);
  sol.policy.controls.assign(T, std::vector<double>(n, 0.0));
  for (std::size_t t = 0; t <= T; ++t) sol.value_functions[t].stage = t;

  auto& terminal = sol.value_functions[T].values;
  terminal.resize(n);
  const double disc_T = sc.discount(T);
  for (std::size_t i = 0; i < n; ++i) {
    std::array<double, Grid::kMaxDims> x{};
    grid.node(i, std::span<double>(x.data(), dims));
    terminal[i] = disc_T * sc.terminal(model.aggregate(std::span<const double>(x.data(), dims)));
    check_finite(terminal[i], "terminal value", T);
  }

  for (std::size_t t = T; t-- > 0;) {
    const auto& next = sol.value_functions[t + 1].values;
    auto& cur = sol.value_functions[t].values;
    auto& pol = sol.policy.controls[t];
    cur.assign(n, 0.0);
    const double disc = sc.discount(t);
    parallel_for(n, options.threads, [&](std::size_t i) {
      const NodeTable& nt = nodes[i];
      double best = -std::numeric_limits<double>::infinity();
      double arg = nt.controls.front();
      for (std::size_t k = 0; k < nt.controls.size(); ++k) {
        const double gain = model.gain(nt.transitions[k], t, sc);
        check_finite(gain, "stage gain", t);
        double future = 0.0;
        const std::size_t base = k * kMaxStencil;
        for (std::size_t j = 0; j < nt.count[k]; ++j) {
          future += nt.weight[base + j] * next[nt.index[base + j]];
        }
        const double value = disc * gain + future;
        if (value >= best) {
          best = value;
          arg = nt.controls[k];
        }
      }
      check_finite(best, "value", t);
      cur[i] = best;
      pol[i] = arg;
    });
  }
  sol.seconds = static_cast<double>(std::clock() - start) / CLOCKS_PER_SEC;
  return sol;
}

double interpolate_value(const Grid& grid, const ValueFunction& vf, std::span<const double> x) {
  return grid.interpolate(vf.values, x);
}

std::vector<double> Trajectory::controls() const {
  std::vector<double> out;
  out.reserve(rows.size());
  for (const auto& r : rows) out.push_back(r.control);
  return out;
}

Trajectory simulate_policy(const DpModel& model, const DpSolution& solution,
                           std::span<const double> x0, const Scenario& sc, PolicyLookup lookup,
                           const SolveOptions& options) {
  const std::size_t dims = model.dims();
  if (x0.size() != dims) throw ConfigError("simulate: initial state has the wrong dimension");
  if (solution.policy.controls.size() < sc.horizon) {
    throw ConfigError("simulate: policy is shorter than the horizon");
  }
  Trajectory traj = make_trajectory(model);
  StateVec x{};
  std::copy(x0.begin(), x0.end(), x.begin());
  for (std::size_t t = 0; t < sc.horizon; ++t) {
    const std::span<const double> xs(x.data(), dims);
    const ControlInterval adm = model.admissible(xs);
    if (adm.empty()) throw InfeasibleError("simulate: empty admissible set", t);
    double u = 0.0;
    Transition tr;
    if (lookup == PolicyLookup::kNearestNode) {
      u = adm.clamp(solution.policy.controls[t][solution.grid.nearest_node(xs)]);
      tr = model.transition(xs, u);
    } else {
      const auto cands = sc.controls.candidates(adm, options.include_endpoints);
      if (cands.empty()) throw InfeasibleError("simulate: no candidate control", t);
      const auto trs = model.transitions(xs, cands);
      double best = -std::numeric_limits<double>::infinity();
      for (std::size_t k = 0; k < cands.size(); ++k) {
        const double v = sc.discount(t) * model.gain(trs[k], t, sc) +
                         interpolate_value(solution.grid, solution.value_functions[t + 1],
                                           std::span<const double>(trs[k].next.data(), dims));
        if (v >= best) {
          best = v;
          u = cands[k];
          tr = trs[k];
        }
      }
    }
    const double g = sc.discount(t) * model.gain(tr, t, sc);
    append_row(traj, model, t, xs, u, tr, g);
    x = tr.next;
  }
  finish_trajectory(traj, model, std::span<const double>(x.data(), dims), sc);
  return traj;
}

Trajectory evaluate_open_loop(const DpModel& model, std::span<const double> controls,
                              std::span<const double> x0, const Scenario& sc) {
  const std::size_t dims = model.dims();
  if (x0.size() != dims) throw ConfigError("open loop: initial state has the wrong dimension");
  if (controls.size() < sc.horizon) {
    throw ConfigError("open loop: " + std::to_string(controls.size()) +
                      " controls for a horizon of " + std::to_string(sc.horizon));
  }
  Trajectory traj = make_trajectory(model);
  StateVec x{};
  std::copy(x0.begin(), x0.end(), x.begin());
  for (std::size_t t = 0; t < sc.horizon; ++t) {
    const std::span<const double> xs(x.data(), dims);
    const ControlInterval adm = model.admissible(xs);
    const double u = controls[t];
    const double slack = 1e-9 * std::max({1.0, std::abs(adm.lo), std::abs(adm.hi)});
    if (adm.empty() || !adm.contains(u, slack)) {
      throw InfeasibleError("open loop: control " + format_number(u) + " outside [" +
                                format_number(adm.lo) + ", " + format_number(adm.hi) + "]",
                            t);
    }
    const double v = adm.clamp(u);
    Transition tr;
    try {
      tr = model.transition(xs, v);
    } catch (const InfeasibleError& e) {
      throw InfeasibleError(std::string("open loop: ") + e.what(), t);
    }
    const double g = sc.discount(t) * model.gain(tr, t, sc);
    append_row(traj, model, t, xs, v, tr, g);
    x = tr.next;
  }
  finish_trajectory(traj, model, std::span<const double>(x.data(), dims), sc);
  return traj;
}

// ---------------------------------------------------------------------------

namespace {

std::ofstream open_output(const std::filesystem::path& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw ConfigError("cannot write " + path.string());
  return out;
}

}  // namespace

void write_solution_csv(const std::filesystem::path& path, const DpModel& model,
                        const DpSolution& solution) {
  auto out = open_output(path);
  const std::size_t dims = solution.grid.dims();
  out << "stage";
  for (const auto& name : model.state_names()) out << ',' << name;
  out << ",value,control\n";
  std::array<double, Grid::kMaxDims> x{};
  for (const auto& vf : solution.value_functions) {
    const bool has_policy = vf.stage < solution.policy.controls.size();
    for (std::size_t i = 0; i < solution.grid.size(); ++i) {
      solution.grid.node(i, std::span<double>(x.data(), dims));
      out << vf.stage;
      for (std::size_t d = 0; d < dims; ++d) out << ',' << format_number(x[d]);
      out << ',' << format_number(vf.values[i]) << ',';
      if (has_policy) out << format_number(solution.policy.controls[vf.stage][i]);
      out << '\n';
    }
  }
}

void write_trajectory_csv(const std::filesystem::path& path, const Trajectory& traj) {
  auto out = open_output(path);
  out << 't';
  for (const auto& n : traj.state_names) out << ',' << n;
  out << ",control";
  for (const auto& n : traj.flow_names) out << ',' << n;
  for (const auto& n : traj.observable_names) out << ',' << n;
  out << ",discounted_gain,cumulative_gain\n";
  for (const auto& r : traj.rows) {
    out << r.t;
    for (std::size_t d = 0; d < traj.dims; ++d) out << ',' << format_number(r.state[d]);
    out << ',' << format_number(r.control);
    for (std::size_t k = 0; k < traj.flow_names.size(); ++k) {
      out << ',' << format_number(r.flows[k]);
    }
    for (std::size_t k = 0; k < traj.observable_names.size(); ++k) {
      out << ',' << format_number(r.observables[k]);
    }
    out << ',' << format_number(r.discounted_gain) << ',' << format_number(r.cumulative_gain)
        << '\n';
  }
  // Terminal row: final state, empty control and flows, terminal value.
  out << traj.rows.size();
  for (std::size_t d = 0; d < traj.dims; ++d) out << ',' << format_number(traj.final_state[d]);
  out << ',';
  for (std::size_t k = 0; k < traj.flow_names.size() + traj.observable_names.size(); ++k) {
    out << ',';
  }
  out << ',' << format_number(traj.terminal_value) << ',' << format_number(traj.npv) << '\n';
}

}  // namespace resopt
