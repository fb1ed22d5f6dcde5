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

#include "example_data.hpp"

#include <fstream>
#include <string>
#include <vector>

#include <fmt/format.h>
#include <fmt/os.h>

#include "json.hpp"
#include "synthetic.hpp"

namespace fs = std::filesystem;
using nlohmann::json;

namespace resopt::synthetic {
namespace {

void write_pvt(const fs::path& path, const PvtModel& pvt) {
  auto out = fmt::output_file(path.string());
  out.print("pressure,b_o,b_g,b_w,r_s\n");
  for (double p : pvt.breakpoints()) {
    out.print("{},{},{},{},{}\n", p, pvt.b_o(p), pvt.b_g(p), pvt.b_w(p), pvt.r_s(p));
  }
}

void write_curve(const fs::path& path, const char* header, const PiecewiseLinear& f) {
  auto out = fmt::output_file(path.string());
  out.print("{}\n", header);
  for (std::size_t i = 0; i < f.size(); ++i) out.print("{},{}\n", f.xs()[i], f.ys()[i]);
}

void write_series(const fs::path& path, const char* header, const std::vector<double>& v) {
  auto out = fmt::output_file(path.string());
  out.print("t,{}\n", header);
  for (std::size_t t = 0; t < v.size(); ++t) out.print("{},{}\n", t, v[t]);
}

void write_json(const fs::path& path, const json& j) {
  std::ofstream out(path, std::ios::binary);
  out << j.dump(2) << '\n';
}

json gas_tank_json(const synthetic::GasCase& c) {
  return {{"pvt", {{"table", "gas_pvt.csv"}, {"c_f", c.params.pvt.c_f}, {"v_0", c.params.pvt.v_0}}},
          {"ipr", "gas_ipr.csv"},
          {"p0", c.p0},
          {"s_w", 0.25}};
}

json gas_scenario_json() {
  return {{"horizon", 120},
          {"rho", 0.99},
          {"prices", "gas_prices.csv"},
          {"controls", {{"count", 25}, {"lo", 0.0}, {"hi", 250.0}}}};
}

}  // namespace

void write_example_data(const fs::path& dir) {
  fs::create_directories(dir);

  const GasCase gas = gas_case();
  write_pvt(dir / "gas_pvt.csv", gas.params.pvt);
  write_curve(dir / "gas_ipr.csv", "drawdown,rate", gas.params.ipr_g);
  write_series(dir / "gas_prices.csv", "price", gas_prices(120));

  write_json(dir / "gas-1t.json", {{"model", "gas-1t"},
                                   {"currency", "MEUR"},
                                   {"output", "out/gas-1t"},
                                   {"scenario", gas_scenario_json()},
                                   {"gas", gas_tank_json(gas)},
                                   {"grid", {{"nodes", 1000}}}});

  const TwoTankCase two = two_tank_case();
  json tank1 = gas_tank_json(gas);
  tank1["pvt"]["v_0"] = two.params.tank1.pvt.v_0;
  json tank2 = gas_tank_json(gas);
  tank2["pvt"]["v_0"] = two.params.tank2.pvt.v_0;
  write_json(dir / "gas-2t.json",
             {{"model", "gas-2t"},
              {"currency", "MEUR"},
              {"output", "out/gas-2t"},
              {"scenario", gas_scenario_json()},
              {"two_tank",
               {{"tank1", tank1}, {"tank2", tank2}, {"transmissivity", two.params.transmissivity}}},
              {"grid", {{"nodes", "60x60"}}},
              {"solve", {{"lookup", "reoptimize"}}}});

  const WaterInjCase wi = water_injection_case();
  write_pvt(dir / "black_oil_pvt.csv", wi.params.pvt);
  write_series(dir / "oil_prices.csv", "price", regime_prices(60, 30, 300.0, 500.0));
  write_series(dir / "injection_costs.csv", "cost", std::vector<double>(60, 20.0));
  json wct = json::array();
  for (std::size_t i = 0; i < wi.params.wct.size(); ++i) {
    wct.push_back({wi.params.wct.xs()[i], wi.params.wct.ys()[i]});
  }
  write_json(dir / "water-injection.json",
             {{"model", "water-injection"},
              {"currency", "EUR"},
              {"output", "out/water-injection"},
              {"scenario",
               {{"horizon", 60},
                {"rho", 0.99},
                {"prices", "oil_prices.csv"},
                {"injection_costs", "injection_costs.csv"},
                {"controls", {{"count", 10}, {"lo", 0.0}, {"hi", wi.params.p_res}}}}},
              {"water_injection",
               {{"pvt", {{"table", "black_oil_pvt.csv"}, {"c_f", 0.0}, {"v_0", wi.params.v_p0}}},
                {"p_res", wi.params.p_res},
                {"v_p0", wi.params.v_p0},
                {"alpha", wi.params.alpha},
                {"wct", wct},
                {"bounds",
                 {{"f_o_max", wi.params.bounds.f_o_max}, {"f_w_max", wi.params.bounds.f_w_max}}},
                {"s_w0", 0.2}}},
              {"grid", {{"nodes", 1000}}},
              {"solve", {{"lookup", "reoptimize"}}}});

  // Black-oil tank below the bubble point, replayed under a fixed schedule.
  {
    auto out = fmt::output_file((dir / "black_oil_schedule.csv").string());
    out.print("t,f_o,f_g,f_w\n");
    for (int t = 0; t < 36; ++t) out.print("{},{},{},{}\n", t, 2e4, 1e6, 1e3);
  }
  write_json(dir / "full-5d.json",
             {{"model", "full-5d-replay"},
              {"output", "out/full-5d"},
              {"full_tank",
               {{"pvt", {{"table", "black_oil_pvt.csv"}, {"c_f", 5e-5}, {"v_0", 1e7}}},
                {"state", {{"p", 150.0}, {"s_w", 0.2}, {"s_g", 0.1}}}}},
              {"schedule", "black_oil_schedule.csv"}});

  {
    auto out = fmt::output_file((dir / "gas_schedule.csv").string());
    out.print("t,rate\n");
    for (int t = 0; t < 24; ++t) out.print("{},{}\n", t, 1e8);
  }
}

}  // namespace resopt::synthetic
