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

#ifndef RESOPT_TOOLS_SYNTHETIC_HPP_
#define RESOPT_TOOLS_SYNTHETIC_HPP_

#include <array>
#include <cstddef>
#include <vector>

#include "resopt/dp.hpp"
#include "resopt/pvt.hpp"
#include "resopt/reduced.hpp"

// Synthetic reservoirs and price series. Field data behind the published
// studies is proprietary, so tests, benchmarks and the shipped example data
// all run on these.
namespace resopt::synthetic {

// Dry-gas PVT: B_g close to 1.2 / P, B_w = 1.02 - 4e-5 P, no oil.
// `variant` 0, 1, 2 perturbs the gas table and the compressibility.
PvtModel gas_pvt(double v_0, double c_f = 5e-5, int variant = 0);

// Live-oil PVT for the full five-component model.
PvtModel black_oil_pvt(double v_0, double c_f = 5e-5);

PiecewiseLinear gas_ipr(double scale = 1.0);

struct GasCase {
  GasTankParams params;
  double v_g0 = 0.0;  // initial free gas, Sm3
  double p0 = 0.0;    // initial pressure, Bara
};

// Tank filled to p0 with the given water saturation.
GasCase gas_case(double v_0 = 1e8, double p0 = 250.0, double s_w = 0.25, int variant = 0,
                 double ipr_scale = 4.0);

struct TwoTankCase {
  TwoTankParams params;
  std::array<double, 2> x0{};
};

// A small producing tank backed by a larger one at the same initial pressure.
TwoTankCase two_tank_case(double transmissivity = 1e6, double ipr_scale = 4.0);

struct WaterInjCase {
  WaterInjParams params;
  double v_w0 = 0.0;
};

WaterInjCase water_injection_case();

// r_t = 0.2 + 0.08 sin(2 pi t / 12) + 0.05 sin(2 pi t / 37).
std::vector<double> gas_prices(std::size_t n);

// Two regimes: `low` before `switch_at`, `high` from then on.
std::vector<double> regime_prices(std::size_t n, std::size_t switch_at, double low, double high);

// Monthly horizon of 120 steps, rho 0.99, gas prices, and `controls`
// bottom-hole pressures spread uniformly over [0, p_hi].
Scenario gas_scenario(std::size_t horizon = 120, std::size_t controls = 25, double p_hi = 250.0);

}  // namespace resopt::synthetic

#endif  // RESOPT_TOOLS_SYNTHETIC_HPP_
