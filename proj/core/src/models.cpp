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

#include "resopt/models.hpp"

#include <utility>

#include "resopt/errors.hpp"

namespace resopt {

double stage_gain_gas(double gas_produced, std::size_t t, const Scenario& sc) {
  return sc.price(t) * gas_produced;
}

double stage_gain_gas(double v_g, double p_bh, std::size_t t, const Scenario& sc,
                      const GasTankParams& params) {
  return stage_gain_gas(gas_production_1t(v_g, p_bh, params), t, sc);
}

double stage_gain_wi(const WaterInjFlows& flows, std::size_t t, const Scenario& sc) {
  return sc.price(t) * flows.f_o - sc.injection_cost(t) * flows.f_wi;
}

double stage_gain_wi(double v_w, double p_bh, std::size_t t, const Scenario& sc,
                     const WaterInjParams& params) {
  return stage_gain_wi(wi_productions(v_w, p_bh, params), t, sc);
}

// ---------------------------------------------------------------------------

GasOneTankModel::GasOneTankModel(GasTankParams params) : params_(std::move(params)) {
  validate(params_);
}

ControlInterval GasOneTankModel::admissible(std::span<const double> x) const {
  const double p = psi_one_tank(x[0], params_);
  return {min_feasible_bhp(x[0], p, params_), p};
}

Transition GasOneTankModel::transition_at(double v_g, double pressure, double u) const {
  Transition tr;
  const double f = gas_production_at(pressure, u, params_);
  tr.next[0] = v_g - f;
  tr.flows[0] = f;
  return tr;
}

Transition GasOneTankModel::transition(std::span<const double> x, double u) const {
  return transition_at(x[0], psi_one_tank(x[0], params_), u);
}

std::vector<Transition> GasOneTankModel::transitions(std::span<const double> x,
                                                     std::span<const double> us) const {
  const double p = psi_one_tank(x[0], params_);
  std::vector<Transition> out;
  out.reserve(us.size());
  for (double u : us) out.push_back(transition_at(x[0], p, u));
  return out;
}

double GasOneTankModel::gain(const Transition& tr, std::size_t t, const Scenario& sc) const {
  return stage_gain_gas(tr.flows[0], t, sc);
}

void GasOneTankModel::observe(std::span<const double> x, std::span<double> out) const {
  out[0] = psi_one_tank(x[0], params_);
}

// ---------------------------------------------------------------------------

GasTwoTankModel::GasTwoTankModel(TwoTankParams params) : params_(std::move(params)) {
  validate(params_);
}

ControlInterval GasTwoTankModel::admissible(std::span<const double> x) const {
  return admissible_controls_2t({x[0], x[1]}, params_);
}

Transition GasTwoTankModel::transition(std::span<const double> x, double u) const {
  const double us[] = {u};
  return transitions(x, us).front();
}

std::vector<Transition> GasTwoTankModel::transitions(std::span<const double> x,
                                                     std::span<const double> us) const {
  const std::array<double, 2> state{x[0], x[1]};
  const std::array<double, 2> p{psi_one_tank(x[0], params_.tank1),
                                psi_one_tank(x[1], params_.tank2)};
  std::vector<Transition> out;
  out.reserve(us.size());
  for (double u : us) {
    const TwoTankStep step = step_two_tanks_at(state, p, u, params_);
    Transition tr;
    tr.next[0] = step.next[0];
    tr.next[1] = step.next[1];
    tr.flows[0] = step.production;
    tr.flows[1] = step.transfer;
    out.push_back(tr);
  }
  return out;
}

double GasTwoTankModel::gain(const Transition& tr, std::size_t t, const Scenario& sc) const {
  return stage_gain_gas(tr.flows[0], t, sc);
}

void GasTwoTankModel::observe(std::span<const double> x, std::span<double> out) const {
  out[0] = psi_one_tank(x[0], params_.tank1);
  out[1] = psi_one_tank(x[1], params_.tank2);
}

// ---------------------------------------------------------------------------

WaterInjectionModel::WaterInjectionModel(WaterInjParams params) : params_(std::move(params)) {
  validate(params_);
}

ControlInterval WaterInjectionModel::admissible(std::span<const double> x) const {
  return admissible_controls_wi(x[0], params_);
}

Transition WaterInjectionModel::transition(std::span<const double> x, double u) const {
  const WaterInjFlows f = wi_productions(x[0], u, params_);
  Transition tr;
  tr.next[0] = step_water_injection(x[0], u, params_);
  tr.flows = {f.f_o, f.f_w, f.f_wi};
  return tr;
}

double WaterInjectionModel::gain(const Transition& tr, std::size_t t, const Scenario& sc) const {
  return stage_gain_wi(WaterInjFlows{tr.flows[0], tr.flows[1], tr.flows[2]}, t, sc);
}

void WaterInjectionModel::observe(std::span<const double> x, std::span<double> out) const {
  out[0] = water_saturation(x[0], params_);
  out[1] = oil_volume(x[0], params_);
}

}  // namespace resopt
