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

#ifndef RESOPT_MODELS_HPP_
#define RESOPT_MODELS_HPP_

#include <span>
#include <string>
#include <vector>

#include "resopt/dp.hpp"
#include "resopt/reduced.hpp"

namespace resopt {

// r_t F^g.
double stage_gain_gas(double gas_produced, std::size_t t, const Scenario& sc);
// r_t gas_production_1t(v_g, p_bh).
double stage_gain_gas(double v_g, double p_bh, std::size_t t, const Scenario& sc,
                      const GasTankParams& params);

// r_t f_o - c_t f_wi.
double stage_gain_wi(const WaterInjFlows& flows, std::size_t t, const Scenario& sc);
double stage_gain_wi(double v_w, double p_bh, std::size_t t, const Scenario& sc,
                     const WaterInjParams& params);

// One gas tank. State: free gas (Sm3). Control: bottom-hole pressure.
// Flows: gas produced. Observable: reservoir pressure.
class GasOneTankModel final : public DpModel {
 public:
  explicit GasOneTankModel(GasTankParams params);

  const GasTankParams& params() const { return params_; }

  std::size_t dims() const override { return 1; }
  std::vector<std::string> state_names() const override { return {"v_g"}; }
  std::vector<std::string> flow_names() const override { return {"gas"}; }
  std::vector<std::string> observable_names() const override { return {"pressure"}; }

  ControlInterval admissible(std::span<const double> x) const override;
  Transition transition(std::span<const double> x, double u) const override;
  std::vector<Transition> transitions(std::span<const double> x,
                                      std::span<const double> us) const override;
  double gain(const Transition& tr, std::size_t t, const Scenario& sc) const override;
  void observe(std::span<const double> x, std::span<double> out) const override;

 private:
  Transition transition_at(double v_g, double pressure, double u) const;

  GasTankParams params_;
};

// Two gas tanks, the well in tank 1. State: (v_g1, v_g2). Control:
// bottom-hole pressure. Flows: gas produced, transfer into tank 1.
class GasTwoTankModel final : public DpModel {
 public:
  explicit GasTwoTankModel(TwoTankParams params);

  const TwoTankParams& params() const { return params_; }

  std::size_t dims() const override { return 2; }
  std::vector<std::string> state_names() const override { return {"v_g1", "v_g2"}; }
  std::vector<std::string> flow_names() const override { return {"gas", "transfer"}; }
  std::vector<std::string> observable_names() const override {
    return {"pressure1", "pressure2"};
  }

  ControlInterval admissible(std::span<const double> x) const override;
  Transition transition(std::span<const double> x, double u) const override;
  std::vector<Transition> transitions(std::span<const double> x,
                                      std::span<const double> us) const override;
  double gain(const Transition& tr, std::size_t t, const Scenario& sc) const override;
  void observe(std::span<const double> x, std::span<double> out) const override;

 private:
  TwoTankParams params_;
};

// Oil under water injection at constant pressure. State: water (Sm3).
// Control: bottom-hole pressure. Flows: oil, water produced, water injected.
// Observables: water saturation, oil in place.
class WaterInjectionModel final : public DpModel {
 public:
  explicit WaterInjectionModel(WaterInjParams params);

  const WaterInjParams& params() const { return params_; }

  std::size_t dims() const override { return 1; }
  std::vector<std::string> state_names() const override { return {"v_w"}; }
  std::vector<std::string> flow_names() const override {
    return {"oil", "water", "water_injected"};
  }
  std::vector<std::string> observable_names() const override { return {"s_w", "v_o"}; }

  ControlInterval admissible(std::span<const double> x) const override;
  Transition transition(std::span<const double> x, double u) const override;
  double gain(const Transition& tr, std::size_t t, const Scenario& sc) const override;
  void observe(std::span<const double> x, std::span<double> out) const override;

 private:
  WaterInjParams params_;
};

}  // namespace resopt

#endif  // RESOPT_MODELS_HPP_
