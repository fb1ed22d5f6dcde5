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

// Runs the acceptance checks of the project and prints one PASS/FAIL line per
// criterion. Exit status is the number of failed criteria.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <exception>
#include <functional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include <fmt/format.h>

#include "commands.hpp"
#include "config.hpp"
#include "example_data.hpp"
#include "random_states.hpp"
#include "resopt/decline.hpp"
#include "resopt/dp.hpp"
#include "resopt/models.hpp"
#include "resopt/reduced.hpp"
#include "resopt/tank.hpp"
#include "synthetic.hpp"
#include "test_support.hpp"
#include "toy_models.hpp"

namespace fs = std::filesystem;
using namespace resopt;

namespace {

struct Outcome {
  bool pass = false;
  std::string detail;
};

double seconds_since(std::chrono::steady_clock::time_point start) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
}

const fs::path& example_dir() {
  static const fs::path dir = [] {
    const fs::path d = testing::scratch_dir("acceptance");
    synthetic::write_example_data(d);
    return d;
  }();
  return dir;
}

// 1. Decline-curve and material-balance DP agree on one tank.
Outcome equivalence() {
  const synthetic::GasCase c = synthetic::gas_case();
  const GasOneTankModel model(c.params);
  const Scenario sc = synthetic::gas_scenario(120, 25);
  const auto start = std::chrono::steady_clock::now();
  const EquivalenceReport r = check_equivalence_1d(model, c.v_g0, sc, {.state_nodes = 5000});
  const double wall = seconds_since(start);
  return {r.rel_gap <= 5e-3 && wall <= 120.0,
          fmt::format("MB {:.6e} DC {:.6e} rel gap {:.2e} (<= 5e-3), 5000 nodes, 25 controls, "
                      "{:.2f} s (<= 120 s)",
                      r.mb_value, r.dc_value, r.rel_gap, wall)};
}

// 2. solve_dp against exhaustive enumeration on node-closed dynamics.
Outcome exactness() {
  const testing::StockModel model;
  const Scenario sc = testing::stock_scenario(4);
  const Grid grid({{0.0, 1.0, 2.0, 3.0, 4.0}});
  const auto start = std::chrono::steady_clock::now();
  const DpSolution sol = solve_dp(model, grid, sc);
  double worst = 0.0;
  for (std::size_t k = 0; k < grid.size(); ++k) {
    const double brute = testing::enumerate_best(model, sc, static_cast<double>(k));
    worst = std::max(worst, testing::rel_diff(sol.value_functions[0].values[k], brute));
    const double x0[] = {static_cast<double>(k)};
    const Trajectory tr = simulate_policy(model, sol, x0, sc);
    worst = std::max(worst, testing::rel_diff(tr.npv, brute));
  }
  const double wall = seconds_since(start);
  return {worst <= 1e-9 && wall < 1.0,
          fmt::format("T = 4, 5 nodes, 3 controls: worst relative error {:.1e} (<= 1e-9), "
                      "{:.4f} s (< 1 s)",
                      worst, wall)};
}

// 3. Fixed point, gas conservation and volume equality of the 5-D dynamics.
Outcome dynamics() {
  std::mt19937_64 rng(2024);
  const PvtModel pvt = synthetic::black_oil_pvt(1e7, 5e-5);
  double fixed = 0.0, gas = 0.0, vol = 0.0;
  for (int i = 0; i < 1000; ++i) {
    const TankState s = testing::random_tank_state(rng, pvt);
    fixed = std::max(fixed, std::abs(step_dynamics(s, {}, pvt).p - s.p));
    const Production f = testing::random_production(rng, s);
    const TankState n = step_dynamics(s, f, pvt);
    const double before = s.v_g + s.v_o * pvt.r_s(s.p) - f.f_g;
    gas = std::max(gas, testing::rel_diff(n.v_g + n.v_o * pvt.r_s(n.p), before));
    vol = std::max(vol, std::abs(volume_residual(n, pvt)) / testing::volume_tolerance(n));
  }
  return {fixed <= 1e-6 && gas <= 1e-9 && vol <= 1.0,
          fmt::format("1000 states: fixed-point residual {:.1e} Bara (<= 1e-6), gas identity "
                      "{:.1e} (<= 1e-9), volume residual {:.2f} of eps_vol (<= 1)",
                      fixed, gas, vol)};
}

// 4. Closed-form tank pressure against bisection, and its monotonicity.
Outcome psi() {
  std::mt19937_64 rng(99);
  double worst = 0.0;
  bool monotone = true;
  for (int variant = 0; variant < 3; ++variant) {
    const synthetic::GasCase c = synthetic::gas_case(1e8, 250.0, 0.25, variant);
    const GasTankParams& p = c.params;
    const double lo = min_gas_volume(p);
    std::uniform_real_distribution<double> vol(lo, 1.5 * c.v_g0);
    for (int i = 0; i < 1000; ++i) {
      const double v = vol(rng);
      const auto g = [&](double q) {
        return v * p.pvt.b_g(q) + p.v_w0 * p.pvt.b_w(q) - p.pvt.v_0 * std::exp(p.pvt.c_f * q);
      };
      worst = std::max(worst, std::abs(psi_one_tank(v, p) - testing::bisect(g, 0.0, p.p_max,
                                                                            1e-10)));
    }
    double prev = psi_one_tank(lo, p);
    for (int k = 1; k <= 10000; ++k) {
      const double q = psi_one_tank(lo + (1.5 * c.v_g0 - lo) * k / 10000.0, p);
      monotone = monotone && q >= prev;
      prev = q;
    }
  }
  return {worst <= 1e-6 && monotone,
          fmt::format("3 PVT models x 1000 volumes: worst deviation {:.1e} Bara (<= 1e-6); "
                      "10^4-point sweep {}",
                      worst, monotone ? "nondecreasing" : "NOT monotone")};
}

// 5. Grid refinement sweep on the gas-1t example.
Outcome convergence() {
  cli::RunConfig cfg = cli::load_config(example_dir() / "gas-1t.json");
  cfg.output = example_dir() / "out" / "sweep";
  const auto start = std::chrono::steady_clock::now();
  const auto rows = cli::cmd_sweep(cfg, {{100}, {1000}, {10000}});
  const double wall = seconds_since(start);
  bool nondecreasing = true;
  for (std::size_t k = 1; k < rows.size(); ++k) {
    nondecreasing = nondecreasing && rows[k].npv >= rows[k - 1].npv;
  }
  const double inc = (rows[2].npv - rows[1].npv) / std::abs(rows[1].npv);
  std::string detail = "policy NPV";
  for (const auto& r : rows) detail += fmt::format(" {}: {:.7e}", r.discretization, r.npv);
  detail += fmt::format(" ({}), last increment {:.1e} (< 5e-3), {:.1f} s (<= 300 s); J_0",
                        nondecreasing ? "nondecreasing" : "NOT nondecreasing", inc, wall);
  for (const auto& r : rows) detail += fmt::format(" {:.7e}", r.value);
  return {nondecreasing && inc < 5e-3 && wall <= 300.0, detail};
}

// 6. The one-tank plan projected onto two tanks does worse than the two-tank
// optimum.
Outcome buffer() {
  cli::RunConfig cfg = cli::load_config(example_dir() / "gas-2t.json");
  cfg.output = example_dir() / "out" / "project";
  const cli::ProjectSummary s = cli::cmd_project(cfg);  // throws if the plan is inadmissible
  const double gap = (s.two_tank_npv - s.projected_npv) / std::abs(s.two_tank_npv);
  std::size_t clamped = 0;
  for (std::size_t t = 0; t < s.input.size(); ++t) clamped += s.input[t] != s.projected[t];
  return {s.projected_npv <= s.two_tank_npv && gap >= 1e-3,
          fmt::format("projected one-tank plan {:.6e}, two-tank DP {:.6e}, gap {:.2f}% "
                      "(>= 0.1%), {} of {} controls clamped, replay admissible",
                      s.projected_npv, s.two_tank_npv, 100.0 * gap, clamped, s.input.size())};
}

// 7. Bang-bang controls and the identities of the water-injection model.
Outcome water_injection() {
  const cli::RunConfig cfg = cli::load_config(example_dir() / "water-injection.json");
  const WaterInjectionModel model(cfg.water);
  const Grid grid = cli::make_grid(cfg, cfg.grid_nodes);
  const DpSolution sol = solve_dp(model, grid, cfg.scenario);
  const double x0[] = {cfg.water_x0};
  const Trajectory tr = simulate_policy(model, sol, x0, cfg.scenario, cfg.lookup);
  const WaterInjParams& p = cfg.water;
  const double b_o = p.pvt.b_o(p.p_res), b_w = p.pvt.b_w(p.p_res);
  std::size_t interior = 0, at_lo = 0, at_hi = 0;
  double inj = 0.0, vol = 0.0;
  const auto check_volume = [&](double v_w) {
    vol = std::max(vol, std::abs(oil_volume(v_w, p) * b_o + v_w * b_w - p.v_p0) / p.v_p0);
  };
  for (const auto& row : tr.rows) {
    const ControlInterval adm = model.admissible(row.state);
    const double tol = 1e-12 * p.p_res;
    if (std::abs(row.control - adm.lo) <= tol) {
      ++at_lo;
    } else if (std::abs(row.control - adm.hi) <= tol) {
      ++at_hi;
    } else {
      ++interior;
    }
    const WaterInjFlows f = wi_productions(row.state[0], row.control, p);
    if (f.f_wi > 0.0) inj = std::max(inj, std::abs(f.f_wi - f.f_w - f.f_o * b_o / b_w) / f.f_wi);
    check_volume(row.state[0]);
  }
  check_volume(tr.final_state[0]);
  return {interior == 0 && inj <= 1e-12 && vol <= 1e-9,
          fmt::format("{} steps: {} at max rate, {} shut in, {} interior; injection identity "
                      "{:.1e} (<= 1e-12), volume identity {:.1e} (<= 1e-9)",
                      tr.rows.size(), at_lo, at_hi, interior, inj, vol)};
}

// Distinct cumulative productions seen while replaying `controls`.
std::vector<double> replayed_cumulatives(const DpModel& model, std::span<const double> controls,
                                         std::span<const double> x0, const Scenario& sc) {
  const Trajectory tr = evaluate_open_loop(model, controls, x0, sc);
  std::vector<double> out{0.0};
  double cum = 0.0;
  for (const auto& row : tr.rows) {
    cum += model.production(model.transition(row.state, row.control));
    if (cum != out.back()) out.push_back(cum);
  }
  return out;
}

// 8. Decline curves replay exactly, and decline DP schedules respect h.
Outcome decline_replay() {
  const synthetic::GasCase c = synthetic::gas_case();
  const GasOneTankModel one(c.params);
  const synthetic::TwoTankCase tc = synthetic::two_tank_case();
  const GasTwoTankModel two(tc.params);
  const Scenario sc = synthetic::gas_scenario(120, 25);
  const double x1[] = {c.v_g0};

  std::size_t curves = 0, mismatched = 0;
  const auto check = [&](const DpModel& m, std::span<const double> controls,
                         std::span<const double> x0, const DeclineCurve& curve) {
    ++curves;
    if (replayed_cumulatives(m, controls, x0, sc) != curve.cumulative()) ++mismatched;
  };
  // Natural depletion at maximum rate on both models.
  const auto sched1 = max_rate_schedule(one, x1, 120);
  const DeclineCurve curve1 = generate_decline_curve(one, x1, 120);
  check(one, sched1, x1, curve1);
  const auto sched2 = max_rate_schedule(two, tc.x0, 120);
  const DeclineCurve curve2 = generate_decline_curve(two, tc.x0, 120);
  check(two, sched2, tc.x0, curve2);
  // Deliverability curve along the optimal one-tank plan, shut-ins included.
  const Grid grid({Grid::uniform_axis(min_gas_volume(c.params), c.v_g0, 1000)});
  const DpSolution sol = solve_dp(one, grid, sc);
  const auto plan = simulate_policy(one, sol, x1, sc).controls();
  check(one, plan, x1, generate_deliverability_curve(one, plan, x1));

  std::size_t violations = 0, steps = 0;
  for (const DeclineCurve* curve : {&curve1, &curve2}) {
    const DeclineSolution dc = solve_decline_dp(*curve, sc, {.cumulative_nodes = 2000});
    double cum = 0.0;
    for (double r : dc.rates) {
      ++steps;
      if (r < 0.0 || r > curve->max_rate(cum) * (1.0 + 1e-12)) ++violations;
      cum += r;
    }
  }
  return {mismatched == 0 && violations == 0,
          fmt::format("{} curves replayed, {} with cumulative mismatches; {} decline DP steps, "
                      "{} above h",
                      curves, mismatched, steps, violations)};
}

std::string strip_last_column(const std::string& text) {
  std::istringstream in(text);
  std::string line, out;
  while (std::getline(in, line)) out += line.substr(0, line.rfind(',')) + '\n';
  return out;
}

int run_cli(std::vector<std::string> args) {
  args.insert(args.begin(), "resopt");
  std::vector<char*> argv;
  for (auto& a : args) argv.push_back(a.data());
  std::ostringstream out, err;
  const int code = cli::run(static_cast<int>(argv.size()), argv.data(), out, err);
  if (code != 0) std::fprintf(stderr, "%s", err.str().c_str());
  return code;
}

// 9. Repeated solves through the command line produce identical files.
Outcome determinism() {
  struct Case {
    const char* config;
    std::vector<std::string> extra;
  };
  const std::vector<Case> cases = {
      {"gas-1t.json", {}}, {"water-injection.json", {}}, {"gas-2t.json", {"--grid", "30x30"}}};
  std::size_t compared = 0, differing = 0;
  for (const Case& c : cases) {
    std::vector<fs::path> outs;
    for (const char* threads : {"1", "0", "1"}) {
      const fs::path out = example_dir() / "out" / "det" / c.config / threads /
                           std::to_string(outs.size());
      std::vector<std::string> args = {"--config", (example_dir() / c.config).string(), "--out",
                                       out.string(), "--threads", threads};
      args.insert(args.end(), c.extra.begin(), c.extra.end());
      args.push_back("solve");
      if (run_cli(args) != 0) return {false, fmt::format("solve failed on {}", c.config)};
      outs.push_back(out);
    }
    for (std::size_t k = 1; k < outs.size(); ++k) {
      for (const char* f : {"value_function.csv", "trajectory.csv"}) {
        ++compared;
        differing += testing::slurp(outs[0] / f) != testing::slurp(outs[k] / f);
      }
      ++compared;
      differing += strip_last_column(testing::slurp(outs[0] / "summary.csv")) !=
                   strip_last_column(testing::slurp(outs[k] / "summary.csv"));
    }
  }
  return {differing == 0,
          fmt::format("3 models x 3 runs (threads 1, all cores, 1): {} file pairs compared, "
                      "{} differ",
                      compared, differing)};
}

}  // namespace

int main() {
  const std::vector<std::pair<const char*, std::function<Outcome()>>> criteria = {
      {"one-tank decline-curve equivalence", equivalence},
      {"DP exactness against enumeration", exactness},
      {"5-D dynamics fixed point and conservation", dynamics},
      {"tank pressure closed form", psi},
      {"discretization convergence", convergence},
      {"two-tank buffer effect", buffer},
      {"water-injection structure", water_injection},
      {"decline-curve replay consistency", decline_replay},
      {"determinism", determinism},
  };
  int failed = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    Outcome o;
    try {
      o = criteria[i].second();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    failed += !o.pass;
    std::printf("criterion %zu %s: %s | %s\n", i + 1, o.pass ? "PASS" : "FAIL", criteria[i].first,
                o.detail.c_str());
    std::fflush(stdout);
  }
  return failed;
}
