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

#ifndef RESOPT_TESTS_TOY_MODELS_HPP_
#define RESOPT_TESTS_TOY_MODELS_HPP_

#include <algorithm>
#include <cmath>
#include <functional>
#include <limits>
#include <vector>

#include "resopt/dp.hpp"

namespace resopt::testing {

// Integer stock on nodes 0 .. n-1; a control u takes u units out, so every
// transition from a node with an integer control lands on a node.
class StockModel final : public DpModel {
 public:
  std::size_t dims() const override { return 1; }
  std::vector<std::string> state_names() const override { return {"stock"}; }
  std::vector<std::string> flow_names() const override { return {"sold"}; }
  std::vector<std::string> observable_names() const override { return {"stock"}; }

  ControlInterval admissible(std::span<const double> x) const override { return {0.0, x[0]}; }
  Transition transition(std::span<const double> x, double u) const override {
    Transition tr;
    tr.next[0] = x[0] - u;
    tr.flows[0] = u;
    tr.flows[1] = x[0];
    return tr;
  }
  // Selling is worth more with a larger stock, with decreasing returns in u.
  double gain(const Transition& tr, std::size_t t, const Scenario& sc) const override {
    const double u = tr.flows[0];
    return sc.price(t) * u * (1.0 + 0.1 * tr.flows[1]) - 0.3 * u * u;
  }
  void observe(std::span<const double> x, std::span<double> out) const override { out[0] = x[0]; }
};

// Exhaustive search over every admissible control sequence, with the same
// candidate sets the solver sees.
inline double enumerate_best(const DpModel& model, const Scenario& sc, double x0,
                             bool include_endpoints = true) {
  std::function<double(std::size_t, double)> best = [&](std::size_t t, double x) -> double {
    const double xs[1] = {x};
    if (t == sc.horizon) return sc.discount(t) * sc.terminal(model.aggregate(xs));
    double out = -std::numeric_limits<double>::infinity();
    for (double u : sc.controls.candidates(model.admissible(xs), include_endpoints)) {
      const Transition tr = model.transition(xs, u);
      out = std::max(out, sc.discount(t) * model.gain(tr, t, sc) + best(t + 1, tr.next[0]));
    }
    return out;
  };
  return best(0, x0);
}

inline Scenario stock_scenario(std::size_t horizon) {
  Scenario sc;
  sc.horizon = horizon;
  sc.rho = 0.9;
  sc.prices = {1.0, 0.4, 1.7, 0.9, 1.2, 0.3, 2.0, 1.1};
  sc.prices.resize(horizon);
  sc.terminal_value = PiecewiseLinear({0.0, 4.0}, {0.0, 1.5});
  sc.controls = ControlGrid::absolute({0.0, 1.0, 2.0});
  return sc;
}

}  // namespace resopt::testing

#endif  // RESOPT_TESTS_TOY_MODELS_HPP_
