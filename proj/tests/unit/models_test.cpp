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

#include <gtest/gtest.h>

#include <random>

#include "resopt/errors.hpp"
#include "resopt/models.hpp"
#include "synthetic.hpp"
#include "test_support.hpp"

namespace resopt {
namespace {

TEST(StageGain, Gas) {
  const synthetic::GasCase c = synthetic::gas_case();
  Scenario sc = synthetic::gas_scenario(12, 5);
  const double p = psi_one_tank(c.v_g0, c.params);
  EXPECT_EQ(stage_gain_gas(c.v_g0, p, 3, sc, c.params), 0.0);
  EXPECT_DOUBLE_EQ(stage_gain_gas(c.v_g0, 80.0, 3, sc, c.params),
                   sc.price(3) * gas_production_1t(c.v_g0, 80.0, c.params));
  EXPECT_EQ(stage_gain_gas(1e6, 4, sc), sc.price(4) * 1e6);
  sc.prices.assign(12, 0.0);
  EXPECT_EQ(stage_gain_gas(c.v_g0, 80.0, 3, sc, c.params), 0.0);
}

TEST(StageGain, WaterInjection) {
  synthetic::WaterInjCase c = synthetic::water_injection_case();
  Scenario sc;
  sc.horizon = 4;
  sc.prices = {300.0, 300.0, 500.0, 500.0};
  sc.injection_costs = {20.0, 20.0, 20.0, 20.0};
  EXPECT_EQ(stage_gain_wi(c.v_w0, c.params.p_res, 0, sc, c.params), 0.0);

  // No cost, no water cut: the oil term alone.
  Scenario free = sc;
  free.injection_costs.clear();
  c.params.wct = PiecewiseLinear::constant(0.0);
  const double b_o = c.params.pvt.b_o(c.params.p_res);
  EXPECT_DOUBLE_EQ(stage_gain_wi(c.v_w0, 150.0, 2, free, c.params),
                   500.0 * c.params.alpha * 100.0 / b_o);

  Scenario unpaid = sc;
  unpaid.prices.assign(4, 0.0);
  const WaterInjFlows f = wi_productions(c.v_w0, 150.0, c.params);
  EXPECT_DOUBLE_EQ(stage_gain_wi(f, 1, unpaid), -20.0 * f.f_wi);
  EXPECT_LE(stage_gain_wi(f, 1, unpaid), 0.0);
}

TEST(GasOneTankModel, TransitionsAgreeWithSingleCalls) {
  const synthetic::GasCase c = synthetic::gas_case();
  const GasOneTankModel model(c.params);
  const double x[] = {0.6 * c.v_g0};
  const ControlInterval adm = model.admissible(x);
  EXPECT_EQ(adm.hi, psi_one_tank(x[0], c.params));
  const std::vector<double> us = {adm.lo, 30.0, 100.0, adm.hi};
  const auto batch = model.transitions(x, us);
  for (std::size_t i = 0; i < us.size(); ++i) {
    const Transition one = model.transition(x, us[i]);
    EXPECT_EQ(batch[i].next[0], one.next[0]);
    EXPECT_EQ(batch[i].flows[0], one.flows[0]);
    EXPECT_EQ(one.next[0], x[0] - one.flows[0]);
  }
  EXPECT_EQ(model.max_production(x), gas_production_1t(x[0], adm.lo, c.params));
  double obs[1];
  model.observe(x, obs);
  EXPECT_EQ(obs[0], adm.hi);
}

TEST(GasOneTankModel, RejectsInvalidParams) {
  synthetic::GasCase c = synthetic::gas_case();
  c.params.v_w0 = -1.0;
  EXPECT_THROW(GasOneTankModel{c.params}, ConfigError);
}

TEST(GasTwoTankModel, TransitionsMatchStepTwoTanks) {
  const synthetic::TwoTankCase c = synthetic::two_tank_case();
  const GasTwoTankModel model(c.params);
  std::mt19937_64 rng(3);
  std::uniform_real_distribution<double> frac(0.3, 1.0), uu(0.0, 1.0);
  for (int i = 0; i < 50; ++i) {
    const std::array<double, 2> y = {frac(rng) * c.x0[0], frac(rng) * c.x0[1]};
    const ControlInterval adm = model.admissible(y);
    const std::vector<double> us = {adm.lo, adm.lo + uu(rng) * (adm.hi - adm.lo), adm.hi};
    const auto batch = model.transitions(y, us);
    for (std::size_t k = 0; k < us.size(); ++k) {
      const TwoTankStep s = step_two_tanks(y, us[k], c.params);
      EXPECT_EQ(batch[k].next[0], s.next[0]);
      EXPECT_EQ(batch[k].next[1], s.next[1]);
      EXPECT_EQ(batch[k].flows[0], s.production);
      EXPECT_EQ(batch[k].flows[1], s.transfer);
    }
  }
}

TEST(WaterInjectionModel, FlowsAndObservables) {
  const synthetic::WaterInjCase c = synthetic::water_injection_case();
  const WaterInjectionModel model(c.params);
  const double x[] = {c.v_w0};
  const Transition tr = model.transition(x, 100.0);
  const WaterInjFlows f = wi_productions(c.v_w0, 100.0, c.params);
  EXPECT_EQ(tr.flows[0], f.f_o);
  EXPECT_EQ(tr.flows[1], f.f_w);
  EXPECT_EQ(tr.flows[2], f.f_wi);
  EXPECT_EQ(tr.next[0], step_water_injection(c.v_w0, 100.0, c.params));
  double obs[2];
  model.observe(x, obs);
  EXPECT_DOUBLE_EQ(obs[0], 0.2);
  EXPECT_DOUBLE_EQ(obs[1], oil_volume(c.v_w0, c.params));
}

}  // namespace
}  // namespace resopt
