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

#ifndef RESOPT_TOOLS_COMMANDS_HPP_
#define RESOPT_TOOLS_COMMANDS_HPP_

#include <cstddef>
#include <iosfwd>
#include <memory>
#include <string>
#include <vector>

#include "config.hpp"
#include "resopt/decline.hpp"
#include "resopt/dp.hpp"

namespace resopt::cli {

// Process exit codes.
inline constexpr int kExitOk = 0;
inline constexpr int kExitConfig = 2;
inline constexpr int kExitInfeasible = 3;
inline constexpr int kExitNumeric = 4;

std::unique_ptr<DpModel> make_model(const RunConfig& cfg);
std::vector<double> initial_state(const RunConfig& cfg);
// Grid with cfg.grid_nodes (or the model default) nodes per dimension over
// the configured bounds, by default from the minimum to the initial volume.
Grid make_grid(const RunConfig& cfg, const std::vector<std::size_t>& nodes);
std::string grid_label(const std::vector<std::size_t>& nodes);

struct SolveSummary {
  std::string discretization;
  double value = 0.0;  // J_0 at the initial state
  double npv = 0.0;    // NPV of the simulated policy
  double seconds = 0.0;
};

// Solves, simulates and writes value_function.csv, trajectory.csv and
// summary.csv into cfg.output.
SolveSummary cmd_solve(const RunConfig& cfg);

struct ReplaySummary {
  std::size_t steps = 0;
  // First observable before each step and at the end: reservoir pressure for
  // the gas and five-component models, water saturation under injection.
  std::vector<double> trace;
};

// Replays a production schedule (cfg.schedule) and writes trajectory.csv.
// DP models take (t, rate) rows; the five-component model takes (t, f_g) or
// (t, f_o, f_g, f_w). Throws InfeasibleError with the stage when a rate
// exceeds what the well can deliver.
ReplaySummary cmd_replay(const RunConfig& cfg);

// mode: generate, solve or compare.
void cmd_decline(const RunConfig& cfg, const std::string& mode);

struct ProjectSummary {
  std::vector<double> input;
  std::vector<double> projected;
  double projected_npv = 0.0;
  double two_tank_npv = 0.0;
  double two_tank_value = 0.0;
};

// Projects a control schedule (cfg.schedule, or the optimal plan of the
// merged one-tank model when none is given) onto the two-tank model.
ProjectSummary cmd_project(const RunConfig& cfg);

std::vector<SolveSummary> cmd_sweep(const RunConfig& cfg,
                                    const std::vector<std::vector<std::size_t>>& grids);

// Full command-line entry point; returns the exit code.
int run(int argc, char** argv, std::ostream& out, std::ostream& err);

}  // namespace resopt::cli

#endif  // RESOPT_TOOLS_COMMANDS_HPP_
