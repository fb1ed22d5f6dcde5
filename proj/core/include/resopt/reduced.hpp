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

#ifndef RESOPT_REDUCED_HPP_
#define RESOPT_REDUCED_HPP_

#include <array>
#include <span>
#include <vector>

#include "resopt/piecewise_linear.hpp"
#include "resopt/pvt.hpp"

namespace resopt {

// Closed control interval; empty when lo > hi.
struct ControlInterval {
  double lo = 0.0;
  double hi = 0.0;

  bool empty() const { return lo > hi; }
  bool contains(double u, double slack = 0.0) const { return u >= lo - slack && u <= hi + slack; }
  double clamp(double u) const { return u < lo ? lo : (u > hi ? hi : u); }
};

// ---------------------------------------------------------------------------
// Gas tank with constant water, state = free gas volume.

struct GasTankParams {
  PvtModel pvt;
  double v_w0 = 0.0;      // water in place, Sm3 (constant)
  PiecewiseLinear ipr_g;  // reservoir m3 per step vs drawdown in Bara
  double p_max = 1000.0;  // upper end of the pressure search, Bara
};

// Throws ConfigError on invalid PVT, IPR, or water volume.
void validate(const GasTankParams& params);

enum class PsiMethod {
  kLambertW,   // per-segment closed form through W0, bisection fallback
  kBisection,  // plain bisection on [0, p_max]
};

// Reservoir pressure of a gas tank holding v_g Sm3 of free gas: the root of
// v_g B_g(P) + V_w0 B_w(P) = V_0 exp(c_f P) on [0, p_max]. Throws
// NumericError if there is none (v_g below min_gas_volume, or the tank would
// exceed p_max).
double psi_one_tank(double v_g, const GasTankParams& params,
                    PsiMethod method = PsiMethod::kLambertW);

// Smallest gas volume for which the tank is filled at zero pressure, i.e. the
// volume at which psi_one_tank returns 0.
double min_gas_volume(const GasTankParams& params);

// F = IPR(P - p_bh) / B_g(P) with P = psi_one_tank(v_g). Throws
// InfeasibleError unless 0 <= p_bh <= P.
double gas_production_1t(double v_g, double p_bh, const GasTankParams& params);

// Same as gas_production_1t with the tank pressure already known.
double gas_production_at(double pressure, double p_bh, const GasTankParams& params);

// [0, psi_one_tank(v_g)].
ControlInterval admissible_controls_1t(double v_g, const GasTankParams& params);

// Bottom-hole pressure producing `rate` Sm3 from a tank at `pressure`; the
// inverse of gas_production_at in p_bh. Throws InfeasibleError if the rate
// exceeds the deliverability at p_bh = 0.
double bhp_for_gas_rate(double pressure, double rate, const GasTankParams& params);

// Lowest bottom-hole pressure that keeps the tank at or above its minimum gas
// volume after one step (0 unless the well could empty the tank in one step).
double min_feasible_bhp(double v_g, double pressure, const GasTankParams& params);

// ---------------------------------------------------------------------------
// Two gas tanks joined by a connection; only tank 1 holds the well.

struct TwoTankParams {
  GasTankParams tank1;
  GasTankParams tank2;
  double transmissivity = 0.0;  // Sm3 per Bara of pressure difference per step
};

void validate(const TwoTankParams& params);

struct TwoTankStep {
  std::array<double, 2> next{};
  double production = 0.0;  // gas produced from tank 1, Sm3
  double transfer = 0.0;    // gas moved from tank 2 into tank 1, Sm3
};

// Transfer between tanks given their pressures and the production already
// taken from tank 1: tau (P2 - P1), clamped so neither tank drops below its
// minimum gas volume and the pressures do not cross.
double inter_tank_transfer(double v1_after_production, double v2, double p1, double p2,
                           const TwoTankParams& params);

// One two-tank step: produce from tank 1, then transfer. Throws
// InfeasibleError unless p_bh lies in admissible_controls_2t(x).
TwoTankStep step_two_tanks(std::array<double, 2> x, double p_bh, const TwoTankParams& params);

// step_two_tanks with both tank pressures already known and no admissibility
// check beyond 0 <= p_bh <= pressures[0].
TwoTankStep step_two_tanks_at(std::array<double, 2> x, std::array<double, 2> pressures,
                              double p_bh, const TwoTankParams& params);

// [min_feasible_bhp, psi(tank 1)].
ControlInterval admissible_controls_2t(std::array<double, 2> x, const TwoTankParams& params);

// Makes a control sequence admissible for the two-tank model: each control is
// clamped into the admissible interval of the state reached by the already
// projected prefix.
std::vector<double> project_1t_to_2t(std::span<const double> controls, std::array<double, 2> x0,
                                     const TwoTankParams& params);

// Single tank with the combined pore and water volumes of both tanks, using
// tank 1's PVT and IPR.
GasTankParams merge_to_one_tank(const TwoTankParams& params);

// ---------------------------------------------------------------------------
// Oil reservoir under pressure maintenance by water injection, state = water.

struct WaterInjBounds {
  double f_w_min = 0.0;
  double f_w_max = 1e300;
  double f_o_min = 0.0;
  double f_o_max = 1e300;
};

struct WaterInjParams {
  PvtModel pvt;
  double p_res = 0.0;    // maintained reservoir pressure, Bara
  double v_p0 = 0.0;     // constant pore volume, m3
  double alpha = 0.0;    // productivity index, m3 per Bara per step
  PiecewiseLinear wct;   // water cut vs water saturation
  WaterInjBounds bounds;
};

void validate(const WaterInjParams& params);

struct WaterInjFlows {
  double f_o = 0.0;   // oil produced, Sm3
  double f_w = 0.0;   // water produced, Sm3
  double f_wi = 0.0;  // water injected, Sm3
};

double water_saturation(double v_w, const WaterInjParams& params);

// Oil in place implied by the volume equality at the maintained pressure.
double oil_volume(double v_w, const WaterInjParams& params);

// Throws InfeasibleError unless 0 <= p_bh <= p_res.
WaterInjFlows wi_productions(double v_w, double p_bh, const WaterInjParams& params);

// v_w - alpha dP (WCT(S_w) - 1) / B_w. Throws InfeasibleError if the oil in
// place would become negative.
double step_water_injection(double v_w, double p_bh, const WaterInjParams& params);

// Bottom-hole pressures in [0, p_res] whose oil and water rates satisfy the
// bounds and do not produce more oil than is in place. May be empty.
ControlInterval admissible_controls_wi(double v_w, const WaterInjParams& params);

}  // namespace resopt

#endif  // RESOPT_REDUCED_HPP_
