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

#include "config.hpp"

#include <cmath>
#include <fstream>
#include <random>
#include <sstream>

#include "json.hpp"
#include "resopt/errors.hpp"
#include "resopt/pvt.hpp"
#include "resopt/table_io.hpp"

namespace resopt::cli {
namespace {

using nlohmann::json;
namespace fs = std::filesystem;

const json& require(const json& j, const char* key, const std::string& where) {
  if (!j.is_object() || !j.contains(key)) {
    throw ConfigError(where + ": missing key '" + key + "'");
  }
  return j.at(key);
}

double number(const json& j, const char* key, const std::string& where) {
  const json& v = require(j, key, where);
  if (!v.is_number()) throw ConfigError(where + "." + key + ": expected a number");
  return v.get<double>();
}

double number_or(const json& j, const char* key, double fallback, const std::string& where) {
  return j.contains(key) ? number(j, key, where) : fallback;
}

std::size_t count(const json& j, const char* key, const std::string& where) {
  const json& v = require(j, key, where);
  if (!v.is_number_unsigned()) {
    throw ConfigError(where + "." + key + ": expected a nonnegative integer");
  }
  return v.get<std::size_t>();
}

fs::path resolve(const fs::path& base, const std::string& p) {
  const fs::path path(p);
  return path.is_absolute() ? path : base / path;
}

// [[x, y], ...] inline, or a path to a two-column table.
PiecewiseLinear curve(const json& v, const fs::path& base, const std::string& where) {
  std::vector<double> xs, ys;
  if (v.is_string()) {
    const auto table = read_numeric_table(resolve(base, v.get<std::string>()));
    for (const auto& row : table.rows) {
      if (row.size() != 2) throw ConfigError(where + ": curve files need two columns");
      xs.push_back(row[0]);
      ys.push_back(row[1]);
    }
  } else if (v.is_array()) {
    for (const auto& p : v) {
      if (!p.is_array() || p.size() != 2 || !p[0].is_number() || !p[1].is_number()) {
        throw ConfigError(where + ": expected [x, y] pairs");
      }
      xs.push_back(p[0].get<double>());
      ys.push_back(p[1].get<double>());
    }
  } else {
    throw ConfigError(where + ": expected a file name or a list of [x, y] pairs");
  }
  try {
    return PiecewiseLinear(std::move(xs), std::move(ys));
  } catch (const ConfigError& e) {
    throw ConfigError(where + ": " + e.what());
  }
}

std::vector<double> series(const json& v, const fs::path& base, const std::string& where) {
  if (v.is_string()) return read_series(resolve(base, v.get<std::string>()));
  if (v.is_array()) {
    std::vector<double> out;
    for (const auto& x : v) {
      if (!x.is_number()) throw ConfigError(where + ": expected numbers");
      out.push_back(x.get<double>());
    }
    return out;
  }
  throw ConfigError(where + ": expected a file name or a list of numbers");
}

PvtModel pvt_block(const json& j, const fs::path& base, const std::string& where) {
  const double c_f = number_or(j, "c_f", 0.0, where);
  const double v_0 = number(j, "v_0", where);
  if (j.contains("table")) {
    const json& t = j.at("table");
    if (!t.is_string()) throw ConfigError(where + ".table: expected a file name");
    return load_pvt_table(resolve(base, t.get<std::string>()), c_f, v_0);
  }
  PvtModel pvt;
  pvt.b_o = curve(require(j, "b_o", where), base, where + ".b_o");
  pvt.b_g = curve(require(j, "b_g", where), base, where + ".b_g");
  pvt.b_w = curve(require(j, "b_w", where), base, where + ".b_w");
  pvt.r_s = curve(require(j, "r_s", where), base, where + ".r_s");
  pvt.c_f = c_f;
  pvt.v_0 = v_0;
  validate(pvt);
  return pvt;
}

// Gas tank; the initial content is either given (v_g0, v_w0) or derived from
// an initial pressure p0 and water saturation s_w.
void gas_block(const json& j, const fs::path& base, const std::string& where,
               GasTankParams& params, double& x0) {
  params.pvt = pvt_block(require(j, "pvt", where), base, where + ".pvt");
  params.ipr_g = curve(require(j, "ipr", where), base, where + ".ipr");
  params.p_max = number_or(j, "p_max", 1000.0, where);
  if (j.contains("p0")) {
    const double p0 = number(j, "p0", where);
    const double s_w = number_or(j, "s_w", 0.0, where);
    if (s_w < 0.0 || s_w >= 1.0) throw ConfigError(where + ".s_w: must lie in [0, 1)");
    const double v_p = pore_volume_exact(params.pvt, p0);
    params.v_w0 = s_w * v_p / params.pvt.b_w(p0);
    x0 = (1.0 - s_w) * v_p / params.pvt.b_g(p0);
  } else {
    params.v_w0 = number(j, "v_w0", where);
    x0 = number(j, "v_g0", where);
  }
  validate(params);
}

ControlGrid controls_block(const json& j, const std::string& where) {
  if (j.contains("values")) {
    std::vector<double> v;
    for (const auto& x : j.at("values")) {
      if (!x.is_number()) throw ConfigError(where + ".values: expected numbers");
      v.push_back(x.get<double>());
    }
    if (v.empty()) throw ConfigError(where + ".values: empty");
    return ControlGrid::absolute(std::move(v));
  }
  if (j.contains("relative")) return ControlGrid::relative(count(j, "relative", where));
  const std::size_t n = count(j, "count", where);
  if (n < 2) throw ConfigError(where + ".count: at least 2 controls");
  return ControlGrid::uniform(number(j, "lo", where), number(j, "hi", where), n);
}

void scenario_block(const json& j, const fs::path& base, Scenario& sc) {
  const std::string where = "scenario";
  sc.horizon = count(j, "horizon", where);
  sc.rho = number_or(j, "rho", 1.0, where);
  sc.prices = series(require(j, "prices", where), base, where + ".prices");
  if (j.contains("injection_costs")) {
    sc.injection_costs = series(j.at("injection_costs"), base, where + ".injection_costs");
  }
  if (j.contains("terminal_value")) {
    sc.terminal_value = curve(j.at("terminal_value"), base, where + ".terminal_value");
  }
  sc.controls = controls_block(require(j, "controls", where), where + ".controls");
  sc.validate();
}

void water_block(const json& j, const fs::path& base, WaterInjParams& p, double& x0) {
  const std::string where = "water_injection";
  p.pvt = pvt_block(require(j, "pvt", where), base, where + ".pvt");
  p.p_res = number(j, "p_res", where);
  p.v_p0 = number(j, "v_p0", where);
  p.alpha = number(j, "alpha", where);
  p.wct = curve(require(j, "wct", where), base, where + ".wct");
  if (j.contains("bounds")) {
    const json& b = j.at("bounds");
    p.bounds.f_o_min = number_or(b, "f_o_min", p.bounds.f_o_min, where + ".bounds");
    p.bounds.f_o_max = number_or(b, "f_o_max", p.bounds.f_o_max, where + ".bounds");
    p.bounds.f_w_min = number_or(b, "f_w_min", p.bounds.f_w_min, where + ".bounds");
    p.bounds.f_w_max = number_or(b, "f_w_max", p.bounds.f_w_max, where + ".bounds");
  }
  validate(p);
  if (j.contains("s_w0")) {
    x0 = number(j, "s_w0", where) * p.v_p0 / p.pvt.b_w(p.p_res);
  } else {
    x0 = number(j, "v_w0", where);
  }
}

void full_block(const json& j, const fs::path& base, FullTankConfig& f) {
  const std::string where = "full_tank";
  f.pvt = pvt_block(require(j, "pvt", where), base, where + ".pvt");
  const json& s = require(j, "state", where);
  if (s.contains("v_o")) {
    f.x0 = {number(s, "v_o", where + ".state"), number(s, "v_g", where + ".state"),
            number(s, "v_w", where + ".state"), number(s, "v_p", where + ".state"),
            number(s, "p", where + ".state")};
  } else {
    const double p = number(s, "p", where + ".state");
    const double s_w = number_or(s, "s_w", 0.0, where + ".state");
    const double s_g = number_or(s, "s_g", 0.0, where + ".state");
    const double v_p = number_or(s, "v_p", pore_volume_exact(f.pvt, p), where + ".state");
    f.x0 = make_consistent_state(f.pvt, p, v_p, {1.0 - s_w - s_g, s_g, s_w});
  }
  if (j.contains("ipr")) {
    const json& ipr = j.at("ipr");
    if (ipr.contains("total")) {
      f.ipr = IprModel::fractional_flow(curve(ipr.at("total"), base, where + ".ipr.total"));
    } else {
      const auto opt = [&](const char* key) -> std::optional<PiecewiseLinear> {
        if (!ipr.contains(key)) return std::nullopt;
        return curve(ipr.at(key), base, where + ".ipr." + key);
      };
      f.ipr = IprModel::per_fluid(opt("oil"), opt("gas"), opt("water"));
    }
  }
}

}  // namespace

ModelKind parse_model_kind(const std::string& name) {
  if (name == "gas-1t") return ModelKind::kGasOneTank;
  if (name == "gas-2t") return ModelKind::kGasTwoTank;
  if (name == "water-injection") return ModelKind::kWaterInjection;
  if (name == "full-5d-replay") return ModelKind::kFull5dReplay;
  throw ConfigError("unknown model kind '" + name +
                    "' (expected gas-1t, gas-2t, water-injection or full-5d-replay)");
}

std::string model_kind_name(ModelKind kind) {
  switch (kind) {
    case ModelKind::kGasOneTank: return "gas-1t";
    case ModelKind::kGasTwoTank: return "gas-2t";
    case ModelKind::kWaterInjection: return "water-injection";
    case ModelKind::kFull5dReplay: return "full-5d-replay";
  }
  return "?";
}

std::vector<std::size_t> parse_grid_spec(const std::string& spec) {
  std::vector<std::size_t> out;
  if (spec.empty() || spec.back() == 'x') {
    throw ConfigError("grid spec '" + spec + "': expected node counts >= 2 such as 500 or 60x60");
  }
  std::stringstream ss(spec);
  std::string part;
  while (std::getline(ss, part, 'x')) {
    std::size_t used = 0;
    unsigned long long n = 0;
    try {
      n = std::stoull(part, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (used == 0 || used != part.size() || n < 2) {
      throw ConfigError("grid spec '" + spec + "': expected node counts >= 2 such as 500 or 60x60");
    }
    out.push_back(static_cast<std::size_t>(n));
  }
  if (out.empty()) throw ConfigError("empty grid spec");
  return out;
}

void randomize_prices(Scenario& scenario, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> factor(0.5, 1.5);
  for (double& r : scenario.prices) r *= factor(rng);
}

RunConfig load_config(const fs::path& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot open config " + path.string());
  json j;
  try {
    j = json::parse(in, nullptr, true, true);
  } catch (const json::exception& e) {
    throw ConfigError(path.string() + ": " + e.what());
  }
  const fs::path base = path.parent_path();
  RunConfig cfg;
  try {
    const json& model = require(j, "model", "config");
    if (!model.is_string()) throw ConfigError("config.model: expected a string");
    cfg.kind = parse_model_kind(model.get<std::string>());
    if (j.contains("currency")) cfg.currency = j.at("currency").get<std::string>();
    if (j.contains("output")) cfg.output = resolve(base, j.at("output").get<std::string>());

    if (cfg.kind != ModelKind::kFull5dReplay || j.contains("scenario")) {
      scenario_block(require(j, "scenario", "config"), base, cfg.scenario);
    }
    switch (cfg.kind) {
      case ModelKind::kGasOneTank:
        gas_block(require(j, "gas", "config"), base, "gas", cfg.gas, cfg.gas_x0);
        break;
      case ModelKind::kGasTwoTank: {
        const json& t = require(j, "two_tank", "config");
        double x1 = 0.0, x2 = 0.0;
        gas_block(require(t, "tank1", "two_tank"), base, "two_tank.tank1", cfg.two_tank.tank1, x1);
        gas_block(require(t, "tank2", "two_tank"), base, "two_tank.tank2", cfg.two_tank.tank2, x2);
        cfg.two_tank.transmissivity = number(t, "transmissivity", "two_tank");
        cfg.two_tank_x0 = {x1, x2};
        validate(cfg.two_tank);
        break;
      }
      case ModelKind::kWaterInjection:
        water_block(require(j, "water_injection", "config"), base, cfg.water, cfg.water_x0);
        break;
      case ModelKind::kFull5dReplay:
        full_block(require(j, "full_tank", "config"), base, cfg.full);
        break;
    }

    if (j.contains("grid")) {
      const json& g = j.at("grid");
      const json& nodes = require(g, "nodes", "grid");
      if (nodes.is_string()) {
        cfg.grid_nodes = parse_grid_spec(nodes.get<std::string>());
      } else if (nodes.is_array()) {
        for (const auto& n : nodes) cfg.grid_nodes.push_back(n.get<std::size_t>());
      } else {
        cfg.grid_nodes = {nodes.get<std::size_t>()};
      }
      if (g.contains("lo")) cfg.grid_lo = g.at("lo").get<std::vector<double>>();
      if (g.contains("hi")) cfg.grid_hi = g.at("hi").get<std::vector<double>>();
    }
    if (j.contains("solve")) {
      const json& s = j.at("solve");
      if (s.contains("lookup")) {
        const auto name = s.at("lookup").get<std::string>();
        if (name == "nearest") {
          cfg.lookup = PolicyLookup::kNearestNode;
        } else if (name == "reoptimize") {
          cfg.lookup = PolicyLookup::kReoptimize;
        } else {
          throw ConfigError("solve.lookup: expected 'nearest' or 'reoptimize'");
        }
      }
      if (s.contains("threads")) cfg.threads = s.at("threads").get<std::size_t>();
    }
    if (j.contains("schedule")) cfg.schedule = resolve(base, j.at("schedule").get<std::string>());
    if (j.contains("decline")) {
      const json& d = j.at("decline");
      if (d.contains("curve")) cfg.decline_curve = resolve(base, d.at("curve").get<std::string>());
      if (d.contains("nodes")) cfg.decline_nodes = d.at("nodes").get<std::size_t>();
    }
  } catch (const json::exception& e) {
    throw ConfigError(path.string() + ": " + e.what());
  }
  return cfg;
}

}  // namespace resopt::cli
