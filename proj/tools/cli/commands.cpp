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

#include "commands.hpp"

#include <filesystem>
#include <fstream>
#include <ostream>

#include "CLI11.hpp"
#include "resopt/errors.hpp"
#include "resopt/models.hpp"
#include "resopt/table_io.hpp"
#include "resopt/tank.hpp"

namespace resopt::cli {
namespace {

namespace fs = std::filesystem;

std::ofstream open_output(const fs::path& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw ConfigError("cannot write " + path.string());
  return out;
}

void ensure_output_dir(const RunConfig& cfg) {
  std::error_code ec;
  fs::create_directories(cfg.output, ec);
  if (ec) throw ConfigError("cannot create output directory " + cfg.output.string());
}

std::vector<std::size_t> default_nodes(const RunConfig& cfg) {
  if (!cfg.grid_nodes.empty()) return cfg.grid_nodes;
  return cfg.kind == ModelKind::kGasTwoTank ? std::vector<std::size_t>{100, 100}
                                            : std::vector<std::size_t>{1000};
}

// Control in the admissible interval at x whose production matches `rate`.
// Production decreases along the interval, so this bisects on the control.
double control_for_production(const DpModel& model, std::span<const double> x, double rate,
                              std::size_t t) {
  const ControlInterval adm = model.admissible(x);
  if (adm.empty()) throw InfeasibleError("replay: empty admissible set", t);
  const double top = model.production(model.transition(x, adm.lo));
  if (rate > top * (1.0 + 1e-9) + 1e-9) {
    throw InfeasibleError("replay: rate " + format_number(rate) + " exceeds deliverability " +
                              format_number(top),
                          t);
  }
  if (rate >= top) return adm.lo;
  if (rate <= model.production(model.transition(x, adm.hi))) return adm.hi;
  double lo = adm.lo;
  double hi = adm.hi;
  for (int i = 0; i < 200; ++i) {
    const double mid = 0.5 * (lo + hi);
    if (mid <= lo || mid >= hi) break;
    (model.production(model.transition(x, mid)) > rate ? lo : hi) = mid;
  }
  return hi;
}

std::vector<std::vector<double>> schedule_rows(const RunConfig& cfg) {
  if (!cfg.schedule) throw ConfigError("no schedule given (--schedule or config 'schedule')");
  const NumericTable table = read_numeric_table(*cfg.schedule);
  if (table.rows.empty()) throw ConfigError(cfg.schedule->string() + ": empty schedule");
  for (std::size_t i = 0; i < table.rows.size(); ++i) {
    if (table.rows[i].empty() || table.rows[i][0] != static_cast<double>(i)) {
      throw ConfigError(cfg.schedule->string() + ": first column must count 0, 1, 2, ...");
    }
  }
  return table.rows;
}

std::vector<double> schedule_column(const RunConfig& cfg) {
  std::vector<double> out;
  for (const auto& row : schedule_rows(cfg)) {
    if (row.size() != 2) throw ConfigError(cfg.schedule->string() + ": expected two columns");
    out.push_back(row[1]);
  }
  return out;
}

Scenario horizon_scenario(const RunConfig& cfg, std::size_t steps) {
  Scenario sc = cfg.scenario;
  if (sc.horizon == 0) {
    sc.rho = 1.0;
    sc.prices.assign(steps, 0.0);
  }
  sc.horizon = steps;
  if (sc.prices.size() < steps) {
    throw ConfigError("schedule has " + std::to_string(steps) + " steps but only " +
                      std::to_string(sc.prices.size()) + " prices");
  }
  return sc;
}

void write_summary(const fs::path& path, const RunConfig& cfg,
                   const std::vector<SolveSummary>& rows) {
  auto out = open_output(path);
  out << "model,discretization,controls,horizon,value,npv,currency,cpu_seconds\n";
  for (const auto& r : rows) {
    out << model_kind_name(cfg.kind) << ',' << r.discretization << ','
        << cfg.scenario.controls.size() << ',' << cfg.scenario.horizon << ','
        << format_number(r.value) << ',' << format_number(r.npv) << ',' << cfg.currency << ','
        << format_number(r.seconds) << '\n';
  }
}

SolveSummary solve_once(const RunConfig& cfg, const std::vector<std::size_t>& nodes,
                        bool write_files) {
  const auto model = make_model(cfg);
  const Grid grid = make_grid(cfg, nodes);
  const auto x0 = initial_state(cfg);
  const DpSolution sol = solve_dp(*model, grid, cfg.scenario, {cfg.threads, true});
  const Trajectory traj = simulate_policy(*model, sol, x0, cfg.scenario, cfg.lookup,
                                          {cfg.threads, true});
  SolveSummary s;
  s.discretization = grid_label(nodes);
  s.value = interpolate_value(grid, sol.value_functions.front(), x0);
  s.npv = traj.npv;
  s.seconds = sol.seconds;
  if (write_files) {
    write_solution_csv(cfg.output / "value_function.csv", *model, sol);
    write_trajectory_csv(cfg.output / "trajectory.csv", traj);
  }
  return s;
}

// Replays (t, f_g) or (t, f_o, f_g, f_w) rows through the five-component
// dynamics and writes one row per state.
ReplaySummary replay_full(const RunConfig& cfg) {
  const auto rows = schedule_rows(cfg);
  const FullTankConfig& f = cfg.full;
  auto out = open_output(cfg.output / "trajectory.csv");
  out << "t,v_o,v_g,v_w,v_p,p,f_o,f_g,f_w\n";
  const auto write_state = [&](std::size_t t, const TankState& s) {
    out << t << ',' << format_number(s.v_o) << ',' << format_number(s.v_g) << ','
        << format_number(s.v_w) << ',' << format_number(s.v_p) << ',' << format_number(s.p);
  };
  ReplaySummary summary;
  TankState s = f.x0;
  summary.trace.push_back(s.p);
  for (std::size_t t = 0; t < rows.size(); ++t) {
    Production prod;
    if (rows[t].size() == 2) {
      prod.f_g = rows[t][1];
    } else if (rows[t].size() == 4) {
      prod = {rows[t][1], rows[t][2], rows[t][3]};
    } else {
      throw ConfigError(cfg.schedule->string() + ": expected (t, f_g) or (t, f_o, f_g, f_w)");
    }
    if (f.ipr) {
      const Production cap = well_production(s, 0.0, *f.ipr, f.pvt);
      const auto over = [](double a, double b) { return a > b * (1.0 + 1e-9) + 1e-9; };
      if (over(prod.f_o, cap.f_o) || over(prod.f_g, cap.f_g) || over(prod.f_w, cap.f_w)) {
        throw InfeasibleError("replay: production exceeds the well deliverability", t);
      }
    }
    TankState next;
    try {
      next = step_dynamics(s, prod, f.pvt);
    } catch (const InfeasibleError& e) {
      throw InfeasibleError(std::string("replay: ") + e.what(), t);
    }
    write_state(t, s);
    out << ',' << format_number(prod.f_o) << ',' << format_number(prod.f_g) << ','
        << format_number(prod.f_w) << '\n';
    s = next;
    summary.trace.push_back(s.p);
  }
  write_state(rows.size(), s);
  out << ",,,\n";
  summary.steps = rows.size();
  return summary;
}

void write_curve_summary(const fs::path& path, const std::vector<std::pair<std::string, double>>& rows) {
  auto out = open_output(path);
  out << "metric,value\n";
  for (const auto& [k, v] : rows) out << k << ',' << format_number(v) << '\n';
}

DeclineCurve curve_for(const RunConfig& cfg, const DpModel& model) {
  if (cfg.decline_curve) return read_decline_curve(*cfg.decline_curve);
  const auto x0 = initial_state(cfg);
  if (cfg.schedule) {
    const auto controls = schedule_column(cfg);
    return generate_deliverability_curve(model, controls, x0);
  }
  return generate_decline_curve(model, x0, cfg.scenario.horizon);
}

}  // namespace

// ---------------------------------------------------------------------------

std::unique_ptr<DpModel> make_model(const RunConfig& cfg) {
  switch (cfg.kind) {
    case ModelKind::kGasOneTank: return std::make_unique<GasOneTankModel>(cfg.gas);
    case ModelKind::kGasTwoTank: return std::make_unique<GasTwoTankModel>(cfg.two_tank);
    case ModelKind::kWaterInjection: return std::make_unique<WaterInjectionModel>(cfg.water);
    case ModelKind::kFull5dReplay: break;
  }
  throw ConfigError("model full-5d-replay supports only the replay command");
}

std::vector<double> initial_state(const RunConfig& cfg) {
  switch (cfg.kind) {
    case ModelKind::kGasOneTank: return {cfg.gas_x0};
    case ModelKind::kGasTwoTank: return {cfg.two_tank_x0[0], cfg.two_tank_x0[1]};
    case ModelKind::kWaterInjection: return {cfg.water_x0};
    case ModelKind::kFull5dReplay: break;
  }
  throw ConfigError("model full-5d-replay has no reduced state");
}

Grid make_grid(const RunConfig& cfg, const std::vector<std::size_t>& nodes) {
  const auto x0 = initial_state(cfg);
  std::vector<double> lo, hi;
  switch (cfg.kind) {
    case ModelKind::kGasOneTank:
      lo = {min_gas_volume(cfg.gas)};
      hi = {cfg.gas_x0};
      break;
    case ModelKind::kGasTwoTank:
      lo = {min_gas_volume(cfg.two_tank.tank1), min_gas_volume(cfg.two_tank.tank2)};
      hi = {cfg.two_tank_x0[0], cfg.two_tank_x0[1]};
      break;
    case ModelKind::kWaterInjection:
      // Water only accumulates; the tank is full of water at the top.
      lo = {cfg.water_x0};
      hi = {cfg.water.v_p0 / cfg.water.pvt.b_w(cfg.water.p_res)};
      break;
    case ModelKind::kFull5dReplay:
      throw ConfigError("model full-5d-replay has no grid");
  }
  if (!cfg.grid_lo.empty()) lo = cfg.grid_lo;
  if (!cfg.grid_hi.empty()) hi = cfg.grid_hi;
  if (nodes.size() != x0.size() || lo.size() != x0.size() || hi.size() != x0.size()) {
    throw ConfigError("grid: expected " + std::to_string(x0.size()) + " dimension(s)");
  }
  return Grid::uniform(lo, hi, nodes);
}

std::string grid_label(const std::vector<std::size_t>& nodes) {
  std::string s;
  for (std::size_t i = 0; i < nodes.size(); ++i) {
    if (i > 0) s += 'x';
    s += std::to_string(nodes[i]);
  }
  return s;
}

SolveSummary cmd_solve(const RunConfig& cfg) {
  ensure_output_dir(cfg);
  const SolveSummary s = solve_once(cfg, default_nodes(cfg), true);
  write_summary(cfg.output / "summary.csv", cfg, {s});
  return s;
}

ReplaySummary cmd_replay(const RunConfig& cfg) {
  ensure_output_dir(cfg);
  if (cfg.kind == ModelKind::kFull5dReplay) return replay_full(cfg);
  const auto model = make_model(cfg);
  const auto rates = schedule_column(cfg);
  const Scenario sc = horizon_scenario(cfg, rates.size());
  auto x = initial_state(cfg);
  std::vector<double> controls;
  for (std::size_t t = 0; t < rates.size(); ++t) {
    const double u = control_for_production(*model, x, rates[t], t);
    controls.push_back(u);
    const Transition tr = model->transition(x, u);
    std::copy(tr.next.begin(), tr.next.begin() + static_cast<std::ptrdiff_t>(x.size()), x.begin());
  }
  const Trajectory traj = evaluate_open_loop(*model, controls, initial_state(cfg), sc);
  write_trajectory_csv(cfg.output / "trajectory.csv", traj);
  ReplaySummary summary;
  summary.steps = traj.rows.size();
  for (const auto& row : traj.rows) summary.trace.push_back(row.observables[0]);
  std::vector<double> last(traj.observable_names.size());
  model->observe(std::span<const double>(traj.final_state.data(), traj.dims), last);
  summary.trace.push_back(last[0]);
  return summary;
}

void cmd_decline(const RunConfig& cfg, const std::string& mode) {
  ensure_output_dir(cfg);
  if (mode == "generate") {
    const auto model = make_model(cfg);
    write_decline_curve(cfg.output / "decline_curve.csv", curve_for(cfg, *model));
    return;
  }
  if (mode == "solve") {
    const DeclineCurve curve = cfg.decline_curve ? read_decline_curve(*cfg.decline_curve)
                                                 : curve_for(cfg, *make_model(cfg));
    const std::size_t nodes =
        cfg.decline_nodes > 0 ? cfg.decline_nodes : default_nodes(cfg).front();
    const DeclineSolution sol =
        solve_decline_dp(curve, cfg.scenario, {nodes, cfg.scenario.controls.size(), cfg.threads});
    write_trajectory_csv(cfg.output / "decline_schedule.csv", sol.trajectory);
    write_curve_summary(cfg.output / "decline_summary.csv",
                        {{"value", sol.value}, {"npv", sol.trajectory.npv},
                         {"cpu_seconds", sol.seconds}});
    return;
  }
  if (mode == "compare") {
    EquivalenceReport rep;
    if (cfg.kind == ModelKind::kGasOneTank) {
      const std::size_t nodes = default_nodes(cfg).front();
      rep = check_equivalence_1d(GasOneTankModel(cfg.gas), cfg.gas_x0, cfg.scenario,
                                 {nodes, cfg.threads});
    } else if (cfg.kind == ModelKind::kGasTwoTank) {
      const std::size_t nodes = default_nodes(cfg).front();
      rep = compare_two_tank_dc(GasTwoTankModel(cfg.two_tank), cfg.two_tank_x0, cfg.scenario,
                                {nodes, cfg.threads});
    } else {
      throw ConfigError("decline compare needs a gas-1t or gas-2t config");
    }
    write_curve_summary(cfg.output / "comparison.csv",
                        {{"mb_value", rep.mb_value},
                         {"dc_value", rep.dc_value},
                         {"abs_gap", rep.abs_gap},
                         {"rel_gap", rep.rel_gap},
                         {"dc_replay_npv", rep.dc_replay_npv},
                         {"mb_cpu_seconds", rep.mb_seconds},
                         {"dc_cpu_seconds", rep.dc_seconds}});
    auto out = open_output(cfg.output / "comparison_schedules.csv");
    out << "t,mb_rate,dc_rate\n";
    for (std::size_t t = 0; t < rep.mb_rates.size(); ++t) {
      out << t << ',' << format_number(rep.mb_rates[t]) << ','
          << format_number(t < rep.dc_rates.size() ? rep.dc_rates[t] : 0.0) << '\n';
    }
    return;
  }
  throw ConfigError("decline mode must be generate, solve or compare, not '" + mode + "'");
}

ProjectSummary cmd_project(const RunConfig& cfg) {
  if (cfg.kind != ModelKind::kGasTwoTank) throw ConfigError("project needs a gas-2t config");
  ensure_output_dir(cfg);
  ProjectSummary s;
  const GasTwoTankModel two(cfg.two_tank);
  const auto nodes = default_nodes(cfg);
  double one_tank_npv = 0.0;
  if (cfg.schedule) {
    s.input = schedule_column(cfg);
  } else {
    const GasOneTankModel one(merge_to_one_tank(cfg.two_tank));
    const double x1 = cfg.two_tank_x0[0] + cfg.two_tank_x0[1];
    const Grid g({Grid::uniform_axis(min_gas_volume(one.params()), x1, nodes.front())});
    const DpSolution sol = solve_dp(one, g, cfg.scenario, {cfg.threads, true});
    const double xs[] = {x1};
    const Trajectory traj = simulate_policy(one, sol, xs, cfg.scenario, cfg.lookup,
                                            {cfg.threads, true});
    s.input = traj.controls();
    one_tank_npv = traj.npv;
  }
  if (s.input.empty()) throw ConfigError("project: empty schedule");
  if (s.input.size() < cfg.scenario.horizon) {
    throw ConfigError("project: schedule shorter than the horizon");
  }
  s.projected = project_1t_to_2t(s.input, cfg.two_tank_x0, cfg.two_tank);
  const auto x0 = initial_state(cfg);
  const Trajectory proj = evaluate_open_loop(two, s.projected, x0, cfg.scenario);
  s.projected_npv = proj.npv;

  const Grid grid = make_grid(cfg, nodes);
  const DpSolution sol = solve_dp(two, grid, cfg.scenario, {cfg.threads, true});
  const Trajectory opt = simulate_policy(two, sol, x0, cfg.scenario, cfg.lookup,
                                         {cfg.threads, true});
  s.two_tank_npv = opt.npv;
  s.two_tank_value = interpolate_value(grid, sol.value_functions.front(), x0);

  {
    auto out = open_output(cfg.output / "projected.csv");
    out << "t,input,projected\n";
    for (std::size_t t = 0; t < s.input.size(); ++t) {
      out << t << ',' << format_number(s.input[t]) << ',' << format_number(s.projected[t]) << '\n';
    }
  }
  write_trajectory_csv(cfg.output / "projected_trajectory.csv", proj);
  write_trajectory_csv(cfg.output / "two_tank_trajectory.csv", opt);
  std::vector<std::pair<std::string, double>> rows = {{"projected_npv", s.projected_npv},
                                                      {"two_tank_npv", s.two_tank_npv},
                                                      {"two_tank_value", s.two_tank_value}};
  if (!cfg.schedule) rows.emplace_back("one_tank_npv", one_tank_npv);
  write_curve_summary(cfg.output / "project_summary.csv", rows);
  return s;
}

std::vector<SolveSummary> cmd_sweep(const RunConfig& cfg,
                                    const std::vector<std::vector<std::size_t>>& grids) {
  if (grids.empty()) throw ConfigError("sweep: no grid sizes given");
  ensure_output_dir(cfg);
  std::vector<SolveSummary> rows;
  for (const auto& nodes : grids) rows.push_back(solve_once(cfg, nodes, false));
  write_summary(cfg.output / "sweep.csv", cfg, rows);
  return rows;
}

// ---------------------------------------------------------------------------

int run(int argc, char** argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Production schedule optimization on tank reservoir models", "resopt"};
  app.require_subcommand(1);
  app.fallthrough();

  std::string config_path;
  std::string out_dir;
  std::size_t threads = 0;
  bool threads_set = false;
  std::string grid_spec;
  std::uint64_t seed = 0;
  std::string schedule;
  std::string curve;
  std::string mode;
  std::vector<std::string> grid_list;

  app.add_option("--config", config_path, "Run configuration (JSON)")->required();
  app.add_option("--out", out_dir, "Output directory (overrides the config)");
  app.add_option_function<std::size_t>(
      "--threads", [&](const std::size_t& n) { threads = n; threads_set = true; },
      "Solver threads, 0 = all cores");
  app.add_option("--grid", grid_spec, "State grid override, e.g. 5000 or 60x60");
  auto* seed_opt = app.add_option("--seed", seed, "Randomize prices with this seed");

  auto* solve = app.add_subcommand("solve", "Solve by dynamic programming and simulate");
  auto* replay = app.add_subcommand("replay", "Replay a production schedule");
  replay->add_option("--schedule", schedule, "Schedule file (t, rate ...)");
  auto* decline = app.add_subcommand("decline", "Decline-curve generation and optimization");
  decline->add_option("mode", mode, "generate, solve or compare")
      ->required()
      ->check(CLI::IsMember({"generate", "solve", "compare"}));
  decline->add_option("--schedule", schedule, "Controls to replay for the curve");
  decline->add_option("--curve", curve, "Decline curve to optimize");
  auto* project = app.add_subcommand("project", "Project a one-tank plan onto two tanks");
  project->add_option("--schedule", schedule, "Controls (t, p_bh); default: one-tank optimum");
  auto* sweep = app.add_subcommand("sweep", "Solve over several grid sizes");
  sweep->add_option("--grids", grid_list, "Grid sizes, e.g. 100 1000 10000")
      ->required()
      ->delimiter(',');

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitConfig;
  }

  try {
    RunConfig cfg = load_config(config_path);
    if (!out_dir.empty()) cfg.output = out_dir;
    if (threads_set) cfg.threads = threads;
    if (!grid_spec.empty()) cfg.grid_nodes = parse_grid_spec(grid_spec);
    if (seed_opt->count() > 0) randomize_prices(cfg.scenario, seed);
    if (!schedule.empty()) cfg.schedule = schedule;
    if (!curve.empty()) cfg.decline_curve = curve;

    if (solve->parsed()) {
      const SolveSummary s = cmd_solve(cfg);
      out << "value " << format_number(s.value) << " npv " << format_number(s.npv) << ' '
          << cfg.currency << '\n';
    } else if (replay->parsed()) {
      const ReplaySummary r = cmd_replay(cfg);
      out << "replayed " << r.steps << " steps\n";
    } else if (decline->parsed()) {
      cmd_decline(cfg, mode);
      out << "decline " << mode << " done\n";
    } else if (project->parsed()) {
      const ProjectSummary s = cmd_project(cfg);
      out << "projected npv " << format_number(s.projected_npv) << " two-tank npv "
          << format_number(s.two_tank_npv) << ' ' << cfg.currency << '\n';
    } else if (sweep->parsed()) {
      std::vector<std::vector<std::size_t>> grids;
      for (const auto& g : grid_list) grids.push_back(parse_grid_spec(g));
      for (const auto& r : cmd_sweep(cfg, grids)) {
        out << r.discretization << " value " << format_number(r.value) << " npv "
            << format_number(r.npv) << '\n';
      }
    }
  } catch (const ConfigError& e) {
    err << "config error: " << e.what() << '\n';
    return kExitConfig;
  } catch (const InfeasibleError& e) {
    err << "infeasible: " << e.what() << '\n';
    return kExitInfeasible;
  } catch (const NumericError& e) {
    err << "numeric failure: " << e.what() << '\n';
    return kExitNumeric;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return 1;
  }
  return kExitOk;
}

}  // namespace resopt::cli
