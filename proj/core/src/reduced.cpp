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

#include "resopt/reduced.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

#include "resopt/errors.hpp"
#include "resopt/lambert_w.hpp"
#include "resopt/table_io.hpp"
#include "resopt/tank.hpp"

namespace resopt {
namespace {

// Filled-pore balance of a gas tank: fluids minus pores, decreasing in P.
struct GasBalance {
  const GasTankParams& params;
  double v_g;

  double lhs(double p) const {
    return v_g * params.pvt.b_g(p) + params.v_w0 * params.pvt.b_w(p);
  }
  double operator()(double p) const {
    return lhs(p) - params.pvt.v_0 * std::exp(params.pvt.c_f * p);
  }
};

double bisect_balance(const GasBalance& g, double lo, double hi) {
  for (int i = 0; i < 200; ++i) {
    const double mid = 0.5 * (lo + hi);
    if (mid <= lo || mid >= hi) break;
    if (g(mid) >= 0.0) {
      lo = mid;
    } else {
      hi = mid;
    }
  }
  return 0.5 * (lo + hi);
}

// Root of A + B p = V0 exp(c p) through the principal Lambert branch; NaN when
// the closed form does not apply on this segment.
double lambert_segment_root(double A, double B, double v0, double c) {
  if (c == 0.0) {
    if (B == 0.0) return std::nan("");
    return (v0 - A) / B;
  }
  if (B == 0.0) {
    if (!(A > 0.0)) return std::nan("");
    return std::log(A / v0) / c;
  }
  if (B > 0.0) return std::nan("");
  // With y = A + B p and z = -c y / B:  z e^z = -(c V0 / B) exp(-c A / B) > 0.
  const double log_arg = std::log(c * v0 / -B) - c * A / B;
  const double z = lambert_w0_of_exp(log_arg);
  return -A / B - z / c;
}

std::vector<double> psi_knots(const GasTankParams& params) {
  std::vector<double> knots{0.0};
  for (const PiecewiseLinear* f : {&params.pvt.b_g, &params.pvt.b_w}) {
    for (double x : f->xs()) {
      if (x > 0.0 && x < params.p_max) knots.push_back(x);
    }
  }
  knots.push_back(params.p_max);
  std::sort(knots.begin(), knots.end());
  knots.erase(std::unique(knots.begin(), knots.end()), knots.end());
  return knots;
}

}  // namespace

void validate(const GasTankParams& params) {
  validate(params.pvt);
  validate_ipr(params.ipr_g, "gas IPR");
  if (!(params.v_w0 >= 0.0)) throw ConfigError("gas tank: water volume must be >= 0");
  if (!(params.p_max > 0.0)) throw ConfigError("gas tank: p_max must be > 0");
}

double min_gas_volume(const GasTankParams& params) {
  const double deficit = params.pvt.v_0 - params.v_w0 * params.pvt.b_w(0.0);
  return std::max(0.0, deficit / params.pvt.b_g(0.0));
}

namespace {

// Gas volume at which the tank reaches p_max.
double max_gas_volume(const GasTankParams& params) {
  const double p = params.p_max;
  const double room =
      params.pvt.v_0 * std::exp(params.pvt.c_f * p) - params.v_w0 * params.pvt.b_w(p);
  return std::max(0.0, room / params.pvt.b_g(p));
}

}  // namespace

double psi_one_tank(double v_g, const GasTankParams& params, PsiMethod method) {
  if (v_g < 0.0) throw DomainError("psi: negative gas volume " + format_number(v_g));
  const GasBalance g{params, v_g};
  const double g0 = g(0.0);
  if (g0 < 0.0) {
    // Within rounding of the minimum gas volume the root sits at zero.
    if (g0 >= -1e-12 * params.pvt.v_0) return 0.0;
    throw NumericError("psi: " + format_number(v_g) +
                       " Sm3 of gas cannot fill the tank at any pressure >= 0");
  }
  if (g(params.p_max) > 0.0) {
    throw NumericError("psi: tank pressure for " + format_number(v_g) + " Sm3 exceeds p_max = " +
                       format_number(params.p_max) + " Bara");
  }
  if (method == PsiMethod::kBisection) return bisect_balance(g, 0.0, params.p_max);

  // Find the segment with g(a) >= 0 > g(b).
  const auto knots = psi_knots(params);
  std::size_t lo = 0;
  std::size_t hi = knots.size() - 1;
  while (hi - lo > 1) {
    const std::size_t mid = (lo + hi) / 2;
    if (g(knots[mid]) >= 0.0) {
      lo = mid;
    } else {
      hi = mid;
    }
  }
  const double a = knots[lo];
  const double b = knots[hi];
  const double mid = 0.5 * (a + b);
  const double slope = v_g * params.pvt.b_g.slope(mid) + params.v_w0 * params.pvt.b_w.slope(mid);
  const double intercept = g.lhs(a) - slope * a;
  const double p = lambert_segment_root(intercept, slope, params.pvt.v_0, params.pvt.c_f);
  const double slack = 1e-9 * std::max(1.0, b);
  if (std::isfinite(p) && p >= a - slack && p <= b + slack) return std::clamp(p, a, b);
  return bisect_balance(g, a, b);
}

double gas_production_at(double pressure, double p_bh, const GasTankParams& params) {
  if (p_bh < 0.0 || p_bh > pressure) {
    throw InfeasibleError("bottom-hole pressure " + format_number(p_bh) + " Bara outside [0, " +
                          format_number(pressure) + "]");
  }
  return params.ipr_g(pressure - p_bh) / params.pvt.b_g(pressure);
}

double gas_production_1t(double v_g, double p_bh, const GasTankParams& params) {
  return gas_production_at(psi_one_tank(v_g, params), p_bh, params);
}

ControlInterval admissible_controls_1t(double v_g, const GasTankParams& params) {
  return {0.0, psi_one_tank(v_g, params)};
}

double bhp_for_gas_rate(double pressure, double rate, const GasTankParams& params) {
  if (rate < 0.0) throw InfeasibleError("negative gas rate " + format_number(rate));
  const double target = rate * params.pvt.b_g(pressure);
  const double deliverable = params.ipr_g(pressure);
  if (target > deliverable * (1.0 + 1e-12)) {
    throw InfeasibleError("gas rate " + format_number(rate) + " Sm3 exceeds deliverability " +
                          format_number(deliverable / params.pvt.b_g(pressure)) + " Sm3");
  }
  const double drawdown = std::min(params.ipr_g.inverse_nondecreasing(target), pressure);
  return std::max(0.0, pressure - drawdown);
}

double min_feasible_bhp(double v_g, double pressure, const GasTankParams& params) {
  const double room = v_g - min_gas_volume(params);
  if (room <= 0.0) return pressure;
  if (gas_production_at(pressure, 0.0, params) <= room) return 0.0;
  return bhp_for_gas_rate(pressure, room, params);
}

// ---------------------------------------------------------------------------

void validate(const TwoTankParams& params) {
  validate(params.tank1);
  validate(params.tank2);
  if (!(params.transmissivity >= 0.0) || !std::isfinite(params.transmissivity)) {
    throw ConfigError("two tanks: transmissivity must be finite and >= 0");
  }
}

double inter_tank_transfer(double v1_after_production, double v2, double p1, double p2,
                           const TwoTankParams& params) {
  double q = params.transmissivity * (p2 - p1);
  if (q == 0.0) return 0.0;
  // Neither tank may be drained below its minimum or filled beyond p_max.
  const double lo = std::max(-(v1_after_production - min_gas_volume(params.tank1)),
                             v2 - max_gas_volume(params.tank2));
  const double hi = std::min(v2 - min_gas_volume(params.tank2),
                             max_gas_volume(params.tank1) - v1_after_production);
  q = std::clamp(q, std::min(lo, 0.0), std::max(hi, 0.0));

  // d(q) = P2 - P1 after a transfer q; decreasing in q. The flow never pushes
  // the pressures past each other.
  const auto d = [&](double t) {
    return psi_one_tank(v2 - t, params.tank2) - psi_one_tank(v1_after_production + t, params.tank1);
  };
  if (q > 0.0 && d(q) < 0.0) {
    if (d(0.0) <= 0.0) return 0.0;
    double a = 0.0;
    double b = q;
    for (int i = 0; i < 100 && b - a > 1e-12 * q; ++i) {
      const double m = 0.5 * (a + b);
      (d(m) >= 0.0 ? a : b) = m;
    }
    return a;
  }
  if (q < 0.0 && d(q) > 0.0) {
    if (d(0.0) >= 0.0) return 0.0;
    double a = q;
    double b = 0.0;
    for (int i = 0; i < 100 && b - a > -1e-12 * q; ++i) {
      const double m = 0.5 * (a + b);
      (d(m) > 0.0 ? a : b) = m;
    }
    return b;
  }
  return q;
}

ControlInterval admissible_controls_2t(std::array<double, 2> x, const TwoTankParams& params) {
  const double p1 = psi_one_tank(x[0], params.tank1);
  return {min_feasible_bhp(x[0], p1, params.tank1), p1};
}

TwoTankStep step_two_tanks_at(std::array<double, 2> x, std::array<double, 2> pressures,
                              double p_bh, const TwoTankParams& params) {
  const double p1 = pressures[0];
  const double p2 = pressures[1];
  TwoTankStep out;
  out.production = gas_production_at(p1, p_bh, params.tank1);
  const double v1a = x[0] - out.production;
  out.transfer = inter_tank_transfer(v1a, x[1], p1, p2, params);
  out.next = {v1a + out.transfer, x[1] - out.transfer};
  return out;
}

TwoTankStep step_two_tanks(std::array<double, 2> x, double p_bh, const TwoTankParams& params) {
  const double p1 = psi_one_tank(x[0], params.tank1);
  const double p2 = psi_one_tank(x[1], params.tank2);
  const ControlInterval adm{min_feasible_bhp(x[0], p1, params.tank1), p1};
  if (!adm.contains(p_bh)) {
    throw InfeasibleError("two tanks: bottom-hole pressure " + format_number(p_bh) +
                          " Bara outside [" + format_number(adm.lo) + ", " +
                          format_number(adm.hi) + "]");
  }
  return step_two_tanks_at(x, {p1, p2}, p_bh, params);
}

std::vector<double> project_1t_to_2t(std::span<const double> controls, std::array<double, 2> x0,
                                     const TwoTankParams& params) {
  std::vector<double> out;
  out.reserve(controls.size());
  std::array<double, 2> x = x0;
  for (double u : controls) {
    const ControlInterval adm = admissible_controls_2t(x, params);
    const double v = adm.clamp(u);
    out.push_back(v);
    x = step_two_tanks(x, v, params).next;
  }
  return out;
}

GasTankParams merge_to_one_tank(const TwoTankParams& params) {
  GasTankParams merged = params.tank1;
  merged.pvt.v_0 = params.tank1.pvt.v_0 + params.tank2.pvt.v_0;
  merged.v_w0 = params.tank1.v_w0 + params.tank2.v_w0;
  merged.p_max = std::max(params.tank1.p_max, params.tank2.p_max);
  return merged;
}

// ---------------------------------------------------------------------------

void validate(const WaterInjParams& params) {
  validate(params.pvt);
  if (!(params.p_res > 0.0)) throw ConfigError("water injection: p_res must be > 0");
  if (!(params.v_p0 > 0.0)) throw ConfigError("water injection: v_p0 must be > 0");
  if (!(params.alpha > 0.0)) throw ConfigError("water injection: alpha must be > 0");
  for (double y : params.wct.ys()) {
    if (y < 0.0 || y > 1.0) throw ConfigError("water injection: water cut must lie in [0, 1]");
  }
  if (!params.wct.is_nondecreasing()) {
    throw ConfigError("water injection: water cut must be nondecreasing in saturation");
  }
  const auto& b = params.bounds;
  if (b.f_w_min > b.f_w_max || b.f_o_min > b.f_o_max) {
    throw ConfigError("water injection: production bounds must satisfy min <= max");
  }
}

double water_saturation(double v_w, const WaterInjParams& params) {
  return v_w * params.pvt.b_w(params.p_res) / params.v_p0;
}

double oil_volume(double v_w, const WaterInjParams& params) {
  return (params.v_p0 - v_w * params.pvt.b_w(params.p_res)) / params.pvt.b_o(params.p_res);
}

WaterInjFlows wi_productions(double v_w, double p_bh, const WaterInjParams& params) {
  if (p_bh < 0.0 || p_bh > params.p_res) {
    throw InfeasibleError("water injection: bottom-hole pressure " + format_number(p_bh) +
                          " Bara outside [0, " + format_number(params.p_res) + "]");
  }
  const double dp = params.p_res - p_bh;
  const double b_w = params.pvt.b_w(params.p_res);
  const double b_o = params.pvt.b_o(params.p_res);
  const double wct = params.wct(water_saturation(v_w, params));
  const double liquid = params.alpha * dp;
  return {liquid * (1.0 - wct) / b_o, liquid * wct / b_w, liquid / b_w};
}

double step_water_injection(double v_w, double p_bh, const WaterInjParams& params) {
  if (p_bh < 0.0 || p_bh > params.p_res) {
    throw InfeasibleError("water injection: bottom-hole pressure " + format_number(p_bh) +
                          " Bara outside [0, " + format_number(params.p_res) + "]");
  }
  const double dp = params.p_res - p_bh;
  const double b_w = params.pvt.b_w(params.p_res);
  const double wct = params.wct(water_saturation(v_w, params));
  const double next = v_w - params.alpha * dp * (wct - 1.0) / b_w;
  const double oil = oil_volume(next, params);
  if (oil < -1e-9 * params.v_p0) {
    throw InfeasibleError("water injection: production exceeds the oil in place");
  }
  return next;
}

ControlInterval admissible_controls_wi(double v_w, const WaterInjParams& params) {
  const double b_w = params.pvt.b_w(params.p_res);
  const double b_o = params.pvt.b_o(params.p_res);
  const double wct = params.wct(water_saturation(v_w, params));
  const double k_o = params.alpha * (1.0 - wct) / b_o;  // oil per Bara of drawdown
  const double k_w = params.alpha * wct / b_w;          // water per Bara of drawdown

  double dlo = 0.0;
  double dhi = params.p_res;
  const auto apply = [&](double k, double fmin, double fmax) {
    if (k > 0.0) {
      dlo = std::max(dlo, fmin / k);
      dhi = std::min(dhi, fmax / k);
    } else if (fmin > 0.0) {
      dlo = std::numeric_limits<double>::infinity();
    }
  };
  apply(k_o, params.bounds.f_o_min, params.bounds.f_o_max);
  apply(k_w, params.bounds.f_w_min, params.bounds.f_w_max);
  if (k_o > 0.0) dhi = std::min(dhi, std::max(0.0, oil_volume(v_w, params)) / k_o);
  if (dlo > dhi) return {1.0, 0.0};
  return {params.p_res - dhi, params.p_res - dlo};
}

}  // namespace resopt
