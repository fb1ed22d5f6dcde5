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

#ifndef RESOPT_TOOLS_CONFIG_HPP_
#define RESOPT_TOOLS_CONFIG_HPP_

#include <array>
#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include "resopt/dp.hpp"
#include "resopt/reduced.hpp"
#include "resopt/tank.hpp"

namespace resopt::cli {

enum class ModelKind { kGasOneTank, kGasTwoTank, kWaterInjection, kFull5dReplay };

ModelKind parse_model_kind(const std::string& name);
std::string model_kind_name(ModelKind kind);

struct FullTankConfig {
  PvtModel pvt;
  TankState x0;
  std::optional<IprModel> ipr;
};

// Everything a run needs, with file references already resolved and loaded.
// Relative paths in the config file are taken relative to its directory.
struct RunConfig {
  ModelKind kind = ModelKind::kGasOneTank;
  std::string currency = "currency";
  Scenario scenario;

  // Model blocks; only the one matching `kind` is filled.
  GasTankParams gas;
  double gas_x0 = 0.0;
  TwoTankParams two_tank;
  std::array<double, 2> two_tank_x0{};
  WaterInjParams water;
  double water_x0 = 0.0;
  FullTankConfig full;

  // State grid: nodes per dimension, optional explicit bounds.
  std::vector<std::size_t> grid_nodes;
  std::vector<double> grid_lo;
  std::vector<double> grid_hi;

  PolicyLookup lookup = PolicyLookup::kNearestNode;
  std::size_t threads = 1;

  std::optional<std::filesystem::path> schedule;       // replay / project input
  std::optional<std::filesystem::path> decline_curve;  // decline solve input
  std::size_t decline_nodes = 0;                       // 0 = same as the state grid

  std::filesystem::path output = "out";
};

// Throws ConfigError on a missing file, unknown key value or invalid block.
RunConfig load_config(const std::filesystem::path& path);

// "5000" or "60x60": nodes per dimension. Throws ConfigError.
std::vector<std::size_t> parse_grid_spec(const std::string& spec);

// Scales every price by an independent factor drawn uniformly from
// [0.5, 1.5], reproducibly for a given seed.
void randomize_prices(Scenario& scenario, std::uint64_t seed);

}  // namespace resopt::cli

#endif  // RESOPT_TOOLS_CONFIG_HPP_
