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

#include "synthetic.hpp"

#include <cmath>
#include <numbers>

namespace resopt::synthetic {
namespace {

const std::vector<double> kGasPressures = {0,  1,  2,   3,   5,   8,   12,  20,  30,  45,
                                           60, 80, 100, 130, 160, 200, 250, 300, 400, 500};

}  // namespace

PvtModel gas_pvt(double v_0, double c_f, int variant) {
  // Variants bend the gas curve (a crude z-factor) and change compressibility.
  const double bend[] = {0.0, 0.15, -0.1};
  const double cf_scale[] = {1.0, 0.0, 4.0};
  const int v = ((variant % 3) + 3) % 3;
  std::vector<double> bg;
  for (double p : kGasPressures) {
    const double q = std::max(p, 1.0);
    const double z = 1.0 - bend[v] * (q / 500.0) * (1.0 - q / 500.0);
    bg.push_back(1.2 * z / q);
  }
  PvtModel pvt;
  pvt.b_g = PiecewiseLinear(kGasPressures, bg);
  pvt.b_w = PiecewiseLinear({0.0, 500.0}, {1.02, 1.02 - 4e-5 * 500.0});
  pvt.b_o = PiecewiseLinear::constant(1.2, 0.0, 500.0);
  pvt.r_s = PiecewiseLinear::constant(0.0, 0.0, 500.0);
  pvt.c_f = c_f * cf_scale[v];
  pvt.v_0 = v_0;
  return pvt;
}

PvtModel black_oil_pvt(double v_0, double c_f) {
  PvtModel pvt = gas_pvt(v_0, c_f);
  // Bubble point at 200 Bara; undersaturated oil shrinks slightly above it.
  pvt.b_o = PiecewiseLinear({0.0, 50.0, 100.0, 200.0, 500.0}, {1.05, 1.10, 1.15, 1.25, 1.22});
  pvt.r_s = PiecewiseLinear({0.0, 50.0, 100.0, 200.0, 500.0}, {0.0, 25.0, 50.0, 100.0, 100.0});
  return pvt;
}

PiecewiseLinear gas_ipr(double scale) {
  std::vector<double> q = {0.0, 2.5e5, 4.5e5, 7.5e5, 1.05e6, 1.2e6};
  for (double& v : q) v *= scale;
  return PiecewiseLinear({0.0, 25.0, 50.0, 100.0, 200.0, 300.0}, q);
}

GasCase gas_case(double v_0, double p0, double s_w, int variant, double ipr_scale) {
  GasCase c;
  c.params.pvt = gas_pvt(v_0, 5e-5, variant);
  c.params.ipr_g = gas_ipr(ipr_scale);
  c.params.p_max = 1000.0;
  const double v_p = v_0 * std::exp(c.params.pvt.c_f * p0);
  c.params.v_w0 = s_w * v_p / c.params.pvt.b_w(p0);
  c.v_g0 = (1.0 - s_w) * v_p / c.params.pvt.b_g(p0);
  c.p0 = p0;
  return c;
}

TwoTankCase two_tank_case(double transmissivity, double ipr_scale) {
  const GasCase a = gas_case(3e7, 250.0, 0.25, 0, ipr_scale);
  const GasCase b = gas_case(7e7, 250.0, 0.25, 0, ipr_scale);
  TwoTankCase c;
  c.params.tank1 = a.params;
  c.params.tank2 = b.params;
  c.params.transmissivity = transmissivity;
  c.x0 = {a.v_g0, b.v_g0};
  return c;
}

WaterInjCase water_injection_case() {
  WaterInjCase c;
  c.params.pvt = black_oil_pvt(1e7, 0.0);
  c.params.p_res = 250.0;
  c.params.v_p0 = 1e7;
  c.params.alpha = 2e3;
  c.params.wct = PiecewiseLinear({0.0, 0.2, 0.4, 0.6, 0.8, 1.0}, {0.0, 0.0, 0.2, 0.6, 1.0, 1.0});
  c.params.bounds.f_o_max = 2.5e5;
  c.params.bounds.f_w_max = 2.0e5;
  c.v_w0 = 0.2 * c.params.v_p0 / c.params.pvt.b_w(c.params.p_res);
  return c;
}

std::vector<double> gas_prices(std::size_t n) {
  std::vector<double> r(n);
  for (std::size_t t = 0; t < n; ++t) {
    const double x = 2.0 * std::numbers::pi * static_cast<double>(t);
    r[t] = 0.2 + 0.08 * std::sin(x / 12.0) + 0.05 * std::sin(x / 37.0);
  }
  return r;
}

std::vector<double> regime_prices(std::size_t n, std::size_t switch_at, double low, double high) {
  std::vector<double> r(n);
  for (std::size_t t = 0; t < n; ++t) r[t] = t < switch_at ? low : high;
  return r;
}

Scenario gas_scenario(std::size_t horizon, std::size_t controls, double p_hi) {
  Scenario sc;
  sc.horizon = horizon;
  sc.rho = 0.99;
  sc.prices = gas_prices(horizon);
  sc.controls = ControlGrid::uniform(0.0, p_hi, controls);
  return sc;
}

}  // namespace resopt::synthetic
